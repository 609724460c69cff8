#ifndef NOVBOTT_LAURENT_HPP
#define NOVBOTT_LAURENT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "novbott/rational.hpp"

namespace novbott {

// Exponent vector of a Laurent monomial; length = number of variables.
using ExpVec = std::vector<std::int64_t>;

// Checked exponent arithmetic; throws std::overflow_error on wrap.
ExpVec exp_add(const ExpVec& a, const ExpVec& b);
ExpVec exp_sub(const ExpVec& a, const ExpVec& b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// Generalized binomial coefficient C(n, j) for integer n (possibly negative)
// and j >= 0; always an integer.
BigInt binomial_integer(std::int64_t n, std::uint64_t j);

// Arithmetic mod a prime p. Products are taken through 128-bit intermediates,
// so p may be any prime below 2^63.
std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p);
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p);
// x^e mod p for signed e; e < 0 goes through the inverse, so x must be
// nonzero mod p.
std::uint64_t mod_pow_signed(std::uint64_t base, std::int64_t exp, std::uint64_t p);
// Image of a rational in Z/p. Throws invalid_input when p divides the
// denominator; callers should retry with a different prime.
std::uint64_t mod_reduce(const Rational& value, std::uint64_t p);

// Multivariate Laurent polynomial over the rationals. Terms sit in a map
// keyed by exponent vector (lexicographic order) with no stored zeros, so
// equal polynomials have identical representations.
class LaurentPoly {
public:
    LaurentPoly() : num_vars_(0) {}
    explicit LaurentPoly(std::size_t num_vars) : num_vars_(num_vars) {}

    static LaurentPoly constant(std::size_t num_vars, const Rational& c);
    static LaurentPoly monomial(ExpVec exponents, const Rational& coeff);
    static LaurentPoly variable(std::size_t num_vars, std::size_t index);

    std::size_t num_vars() const { return num_vars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<ExpVec, Rational>& terms() const { return terms_; }

    bool is_constant() const;
    // Constant term (zero when absent).
    Rational constant_coeff() const;

    void add_term(const ExpVec& exponents, const Rational& coeff);

    LaurentPoly operator+(const LaurentPoly& rhs) const;
    LaurentPoly operator-(const LaurentPoly& rhs) const;
    LaurentPoly operator*(const LaurentPoly& rhs) const;
    LaurentPoly operator-() const;
    LaurentPoly scaled(const Rational& c) const;
    LaurentPoly shifted(const ExpVec& shift) const;  // multiply by x^shift

    bool operator==(const LaurentPoly& rhs) const;
    bool operator!=(const LaurentPoly& rhs) const { return !(*this == rhs); }

    // Value at a point of the torus; every coordinate must be nonzero.
    Rational evaluate(const std::vector<Rational>& point) const;
    // Value at a point of (Z/p)^l; coordinates must be nonzero mod p.
    std::uint64_t evaluate_mod(const std::vector<std::uint64_t>& point,
                               std::uint64_t p) const;

    // Coordinate-wise minimum exponent over all terms (zeros when empty).
    // x^{-min} * this has only nonnegative exponents.
    ExpVec min_exponents() const;
    // Max over terms of sum_j (k_j - shift_j); -1 for the zero polynomial.
    std::int64_t total_degree_after_shift(const ExpVec& shift) const;

    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    std::size_t num_vars_;
    std::map<ExpVec, Rational> terms_;

    void check_arity(const LaurentPoly& rhs) const;
};

}  // namespace novbott

#endif
