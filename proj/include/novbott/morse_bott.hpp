#ifndef NOVBOTT_MORSE_BOTT_HPP
#define NOVBOTT_MORSE_BOTT_HPP

#include <string>
#include <vector>

#include "novbott/int_polynomial.hpp"

namespace novbott {

// One connected critical component: its index and the coefficients of its
// twisted Poincare polynomial.
struct CriticalComponent {
    std::string name;
    std::size_t index = 0;
    std::vector<std::size_t> poincare;  // coefficient i = dim H^i of the component
};

struct MorseData {
    std::vector<CriticalComponent> components;
    std::size_t fiber_dim = 1;
};

// Counting polynomial: sum over components of lambda^index * P_Z(lambda).
IntPolynomial morse_polynomial(const MorseData& md);

// Polynomial with the given coefficients.
IntPolynomial novikov_polynomial(const std::vector<std::size_t>& betti);

struct FactorizationCertificate {
    IntPolynomial difference;  // M - N
    IntPolynomial quotient;    // Q with M - N = (1+lambda) Q + remainder
    BigInt remainder;
    bool holds = false;  // remainder 0 and every Q coefficient >= 0
};

// Factorization certificate for M - N = (1+lambda) Q with Q >= 0. A failed
// certificate is a result, not an error.
FactorizationCertificate check_main_theorem(const IntPolynomial& m,
                                            const IntPolynomial& n);

// Alternating partial-sum inequalities, compared exactly over rationals:
// for each p, sum_i (-1)^i m_{p-i} >= (1/d) sum_i (-1)^i beta_{p-i}.
std::vector<bool> check_strong_inequalities(const std::vector<std::size_t>& m_counts,
                                            const std::vector<std::size_t>& betti,
                                            std::size_t d);

struct StrongInequalityRow {
    std::size_t p = 0;
    Rational lhs;        // alternating partial sum of counting coefficients
    Rational rhs;        // alternating partial sum of the Betti numbers
    bool holds = false;  // lhs >= rhs
};

// Per-degree inequality table for a counting polynomial against Betti
// numbers at the same fiber scale (both sides carry the factor d, so no
// division appears).
std::vector<StrongInequalityRow> strong_inequality_table(
    const IntPolynomial& m, const std::vector<std::size_t>& betti);

// True iff the counting polynomial at -1 equals d * Euler characteristic.
bool euler_poincare_check(const MorseData& md, long long chi_times_d);

// Euler characteristic of one component, recovered as P_Z(-1)/d;
// non-divisibility is a data-consistency error.
long long component_euler(const CriticalComponent& z, std::size_t d);

}  // namespace novbott

#endif
