#include "novbott/rational.hpp"

#include <cctype>

#include "novbott/errors.hpp"

namespace novbott {

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const std::size_t slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(text)) throw invalid_input("bad rational literal: '" + text + "'");
        return Rational(mpz_class(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den) || den[0] == '-')
        throw invalid_input("bad rational literal: '" + text + "'");
    mpz_class d(den);
    if (d == 0) throw invalid_input("zero denominator in rational literal: '" + text + "'");
    Rational r(mpz_class(num), d);
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rational& value) {
    return value.get_str();
}

Rational rational_pow(const Rational& base, long exponent) {
    if (exponent == 0) return Rational(1);
    if (base == 0 && exponent < 0) throw invalid_input("zero raised to a negative power");
    Rational result;
    const unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
    mpz_pow_ui(result.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(result.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
    if (exponent < 0) {
        mpq_inv(result.get_mpq_t(), result.get_mpq_t());
    }
    result.canonicalize();
    return result;
}

}  // namespace novbott
