#include "novbott/laurent.hpp"

#include <sstream>
#include <stdexcept>

#include "novbott/errors.hpp"

namespace novbott {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) {
        throw std::overflow_error("exponent addition overflows int64");
    }
    return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw std::overflow_error("exponent multiplication overflows int64");
    }
    return out;
}

ExpVec exp_add(const ExpVec& a, const ExpVec& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("exponent vectors differ in length");
    }
    ExpVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_add(a[i], b[i]);
    return out;
}

ExpVec exp_sub(const ExpVec& a, const ExpVec& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("exponent vectors differ in length");
    }
    ExpVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t neg;
        if (__builtin_sub_overflow(static_cast<std::int64_t>(0), b[i], &neg)) {
            throw std::overflow_error("exponent negation overflows int64");
        }
        out[i] = checked_add(a[i], neg);
    }
    return out;
}

BigInt binomial_integer(std::int64_t n, std::uint64_t j) {
    // C(n, j) = n (n-1) ... (n-j+1) / j!; exact integer for any integer n.
    BigInt num = 1;
    BigInt den = 1;
    for (std::uint64_t i = 0; i < j; ++i) {
        num *= BigInt(n) - BigInt(static_cast<unsigned long>(i));
        den *= BigInt(static_cast<unsigned long>(i + 1));
    }
    return num / den;
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % p);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) acc = mod_mul(acc, base, p);
        base = mod_mul(base, base, p);
        exp >>= 1;
    }
    return acc;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) throw std::domain_error("no inverse of 0 mod p");
    return mod_pow(a, p - 2, p);
}

std::uint64_t mod_pow_signed(std::uint64_t base, std::int64_t exp, std::uint64_t p) {
    if (exp >= 0) return mod_pow(base, static_cast<std::uint64_t>(exp), p);
    const std::uint64_t mag =
        exp == INT64_MIN ? (static_cast<std::uint64_t>(INT64_MAX) + 1)
                         : static_cast<std::uint64_t>(-exp);
    return mod_inv(mod_pow(base, mag, p), p);
}

std::uint64_t mod_reduce(const Rational& value, std::uint64_t p) {
    const BigInt num = value.get_num();
    const BigInt den = value.get_den();
    BigInt pz(static_cast<unsigned long>(p));
    BigInt num_mod = num % pz;
    if (num_mod < 0) num_mod += pz;
    BigInt den_mod = den % pz;
    if (den_mod == 0) {
        throw invalid_input("prime divides a coefficient denominator; choose another prime");
    }
    const std::uint64_t n = num_mod.get_ui();
    const std::uint64_t d = den_mod.get_ui();
    return mod_mul(n, mod_inv(d, p), p);
}

LaurentPoly LaurentPoly::constant(std::size_t num_vars, const Rational& c) {
    LaurentPoly out(num_vars);
    out.add_term(ExpVec(num_vars, 0), c);
    return out;
}

LaurentPoly LaurentPoly::monomial(ExpVec exponents, const Rational& coeff) {
    LaurentPoly out(exponents.size());
    out.add_term(exponents, coeff);
    return out;
}

LaurentPoly LaurentPoly::variable(std::size_t num_vars, std::size_t index) {
    if (index >= num_vars) throw std::out_of_range("variable index");
    ExpVec e(num_vars, 0);
    e[index] = 1;
    return monomial(std::move(e), Rational(1));
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    return terms_.begin()->first == ExpVec(num_vars_, 0);
}

Rational LaurentPoly::constant_coeff() const {
    auto it = terms_.find(ExpVec(num_vars_, 0));
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const ExpVec& exponents, const Rational& coeff) {
    if (exponents.size() != num_vars_) {
        throw std::invalid_argument("exponent vector length mismatch");
    }
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exponents, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

void LaurentPoly::check_arity(const LaurentPoly& rhs) const {
    if (num_vars_ != rhs.num_vars_) {
        throw std::invalid_argument("operands over different variable sets");
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
    check_arity(rhs);
    LaurentPoly out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
    check_arity(rhs);
    LaurentPoly out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, -c);
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
    check_arity(rhs);
    LaurentPoly out(num_vars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            out.add_term(exp_add(ea, eb), ca * cb);
        }
    }
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(num_vars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    LaurentPoly out(num_vars_);
    if (c == 0) return out;
    for (const auto& [e, coeff] : terms_) out.terms_.emplace(e, c * coeff);
    return out;
}

LaurentPoly LaurentPoly::shifted(const ExpVec& shift) const {
    LaurentPoly out(num_vars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(exp_add(e, shift), c);
    return out;
}

bool LaurentPoly::operator==(const LaurentPoly& rhs) const {
    return num_vars_ == rhs.num_vars_ && terms_ == rhs.terms_;
}

Rational LaurentPoly::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != num_vars_) {
        throw invalid_input("evaluation point has wrong dimension");
    }
    for (const Rational& x : point) {
        if (x == 0) {
            throw invalid_input("evaluation point must have nonzero coordinates");
        }
    }
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t j = 0; j < num_vars_; ++j) {
            if (e[j] != 0) term *= rational_pow(point[j], e[j]);
        }
        acc += term;
    }
    return acc;
}

std::uint64_t LaurentPoly::evaluate_mod(const std::vector<std::uint64_t>& point,
                                        std::uint64_t p) const {
    if (point.size() != num_vars_) {
        throw invalid_input("evaluation point has wrong dimension");
    }
    std::uint64_t acc = 0;
    for (const auto& [e, c] : terms_) {
        std::uint64_t term = mod_reduce(c, p);
        for (std::size_t j = 0; j < num_vars_; ++j) {
            if (e[j] != 0) term = mod_mul(term, mod_pow_signed(point[j], e[j], p), p);
        }
        acc = (acc + term) % p;
    }
    return acc;
}

ExpVec LaurentPoly::min_exponents() const {
    ExpVec out(num_vars_, 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        (void)c;
        if (first) {
            out = e;
            first = false;
        } else {
            for (std::size_t j = 0; j < num_vars_; ++j) {
                if (e[j] < out[j]) out[j] = e[j];
            }
        }
    }
    return out;
}

std::int64_t LaurentPoly::total_degree_after_shift(const ExpVec& shift) const {
    if (terms_.empty()) return -1;
    std::int64_t best = INT64_MIN;
    for (const auto& [e, c] : terms_) {
        (void)c;
        std::int64_t sum = 0;
        for (std::size_t j = 0; j < num_vars_; ++j) {
            sum = checked_add(sum, checked_add(e[j], -shift[j]));
        }
        if (sum > best) best = sum;
    }
    return best;
}

std::string LaurentPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool has_vars = false;
        for (std::int64_t k : e) has_vars = has_vars || k != 0;
        if (!has_vars || mag != 1) {
            os << rational_to_string(mag);
            if (has_vars) os << "*";
        }
        bool first_var = true;
        for (std::size_t j = 0; j < num_vars_; ++j) {
            if (e[j] == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            if (j < names.size()) {
                os << names[j];
            } else {
                os << "x" << (j + 1);
            }
            if (e[j] != 1) os << "^" << e[j];
        }
    }
    return os.str();
}

}  // namespace novbott
