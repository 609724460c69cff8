#include "novbott/morse_bott.hpp"

#include <algorithm>

#include "novbott/errors.hpp"

namespace novbott {

namespace {

IntPolynomial from_counts(const std::vector<std::size_t>& counts) {
    std::vector<BigInt> coeffs;
    coeffs.reserve(counts.size());
    for (std::size_t c : counts) coeffs.emplace_back(static_cast<unsigned long>(c));
    return IntPolynomial(std::move(coeffs));
}

}  // namespace

IntPolynomial morse_polynomial(const MorseData& md) {
    if (md.fiber_dim == 0) throw invalid_input("fiber dimension must be positive");
    IntPolynomial acc;
    for (const CriticalComponent& z : md.components) {
        acc = acc + from_counts(z.poincare).shifted(z.index);
    }
    return acc;
}

IntPolynomial novikov_polynomial(const std::vector<std::size_t>& betti) {
    return from_counts(betti);
}

FactorizationCertificate check_main_theorem(const IntPolynomial& m,
                                            const IntPolynomial& n) {
    FactorizationCertificate cert;
    cert.difference = m - n;
    auto [quotient, remainder] = divide_by_one_plus_lambda(cert.difference);
    cert.quotient = std::move(quotient);
    cert.remainder = remainder;
    cert.holds = remainder == 0 && cert.quotient.has_nonnegative_coeffs();
    return cert;
}

std::vector<bool> check_strong_inequalities(const std::vector<std::size_t>& m_counts,
                                            const std::vector<std::size_t>& betti,
                                            std::size_t d) {
    if (d == 0) throw invalid_input("fiber dimension must be positive");
    const std::size_t len = std::max(m_counts.size(), betti.size());
    std::vector<bool> holds(len, true);
    for (std::size_t p = 0; p < len; ++p) {
        Rational lhs(0);
        Rational rhs(0);
        for (std::size_t i = 0; p >= i; ++i) {
            const std::size_t k = p - i;
            const long sign = (i % 2 == 0) ? 1 : -1;
            if (k < m_counts.size()) {
                lhs += Rational(sign * static_cast<long>(m_counts[k]));
            }
            if (k < betti.size()) {
                rhs += Rational(sign * static_cast<long>(betti[k]));
            }
        }
        rhs /= Rational(static_cast<long>(d));
        holds[p] = lhs >= rhs;
    }
    return holds;
}

std::vector<StrongInequalityRow> strong_inequality_table(
    const IntPolynomial& m, const std::vector<std::size_t>& betti) {
    const std::size_t len =
        std::max<std::size_t>(m.degree() < 0 ? 0 : static_cast<std::size_t>(m.degree()) + 1,
                              betti.size());
    std::vector<StrongInequalityRow> rows;
    rows.reserve(len);
    for (std::size_t p = 0; p < len; ++p) {
        StrongInequalityRow row;
        row.p = p;
        row.lhs = Rational(0);
        row.rhs = Rational(0);
        for (std::size_t i = 0; p >= i; ++i) {
            const std::size_t k = p - i;
            const long sign = (i % 2 == 0) ? 1 : -1;
            row.lhs += Rational(m.coeff(k) * sign);
            if (k < betti.size()) {
                row.rhs += Rational(sign * static_cast<long>(betti[k]));
            }
        }
        row.holds = row.lhs >= row.rhs;
        rows.push_back(std::move(row));
    }
    return rows;
}

bool euler_poincare_check(const MorseData& md, long long chi_times_d) {
    return morse_polynomial(md).evaluate(BigInt(-1)) == BigInt(static_cast<long>(chi_times_d));
}

long long component_euler(const CriticalComponent& z, std::size_t d) {
    if (d == 0) throw invalid_input("fiber dimension must be positive");
    CriticalComponent flat = z;
    flat.index = 0;
    const BigInt value = morse_polynomial({{flat}, d}).evaluate(BigInt(-1));
    const BigInt div(static_cast<unsigned long>(d));
    if (value % div != 0) {
        throw invalid_input("component '" + z.name +
                            "' has Euler number not divisible by the fiber dimension");
    }
    const BigInt chi = value / div;
    if (!chi.fits_slong_p()) throw invalid_input("component Euler number overflows");
    return chi.get_si();
}

}  // namespace novbott
