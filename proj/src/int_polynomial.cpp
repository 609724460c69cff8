#include "novbott/int_polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace novbott {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::monomial(std::size_t power, BigInt c) {
    if (c == 0) return IntPolynomial();
    std::vector<BigInt> coeffs(power + 1, BigInt(0));
    coeffs[power] = std::move(c);
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& rhs) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), rhs.coeffs_.size()), BigInt(0));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = coeff(k) + rhs.coeff(k);
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), rhs.coeffs_.size()), BigInt(0));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = coeff(k) - rhs.coeff(k);
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return IntPolynomial();
    std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::shifted(std::size_t power) const {
    if (is_zero()) return IntPolynomial();
    std::vector<BigInt> out(coeffs_.size() + power, BigInt(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k + power] = coeffs_[k];
    return IntPolynomial(std::move(out));
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
    BigInt acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

bool IntPolynomial::has_nonnegative_coeffs() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const BigInt& c) { return c >= 0; });
}

std::string IntPolynomial::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        BigInt mag = coeffs_[k] < 0 ? BigInt(-coeffs_[k]) : coeffs_[k];
        if (first) {
            if (coeffs_[k] < 0) os << "-";
        } else {
            os << (coeffs_[k] < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::pair<IntPolynomial, BigInt> divide_by_one_plus_lambda(const IntPolynomial& p) {
    if (p.is_zero()) return {IntPolynomial(), BigInt(0)};
    const auto& a = p.coefficients();
    const std::size_t n = a.size() - 1;
    if (n == 0) return {IntPolynomial(), a[0]};
    // Synthetic division at the root -1: b_{n-1} = a_n, b_{k-1} = a_k - b_k.
    std::vector<BigInt> b(n, BigInt(0));
    b[n - 1] = a[n];
    for (std::size_t k = n - 1; k >= 1; --k) b[k - 1] = a[k] - b[k];
    const BigInt rem = a[0] - b[0];
    return {IntPolynomial(std::move(b)), rem};
}

}  // namespace novbott
