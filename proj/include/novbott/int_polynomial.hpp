#ifndef NOVBOTT_INT_POLYNOMIAL_HPP
#define NOVBOTT_INT_POLYNOMIAL_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "novbott/rational.hpp"

namespace novbott {

// Polynomial in one variable with arbitrary-precision integer coefficients;
// index = power. The top stored coefficient is nonzero unless the
// polynomial is zero.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);

    static IntPolynomial monomial(std::size_t power, BigInt c = BigInt(1));

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    std::int64_t degree() const {
        return static_cast<std::int64_t>(coeffs_.size()) - 1;
    }
    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    BigInt coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : BigInt(0);
    }

    IntPolynomial operator+(const IntPolynomial& rhs) const;
    IntPolynomial operator-(const IntPolynomial& rhs) const;
    IntPolynomial operator*(const IntPolynomial& rhs) const;
    IntPolynomial shifted(std::size_t power) const;  // multiply by lambda^power

    bool operator==(const IntPolynomial& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const IntPolynomial& rhs) const { return !(*this == rhs); }

    BigInt evaluate(const BigInt& x) const;
    bool has_nonnegative_coeffs() const;

    std::string to_string(const std::string& var = "λ") const;

private:
    std::vector<BigInt> coeffs_;

    void trim();
};

// p = (1+λ)·quotient + remainder with remainder = p(-1).
std::pair<IntPolynomial, BigInt> divide_by_one_plus_lambda(const IntPolynomial& p);

}  // namespace novbott

#endif
