#include "stratexp/rational.hpp"

#include <stdexcept>

#include "stratexp/errors.hpp"

namespace stratexp {

BigInt factorial(unsigned n) {
    BigInt out = 1;
    for (unsigned k = 2; k <= n; ++k) out *= k;
    return out;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    if (den < 0) return Rational(-num, -den);
    return Rational(num, den);
}

Rational rational_pow(const Rational& base, unsigned exp) {
    using boost::multiprecision::pow;
    if (exp == 0) return Rational(1);
    // numerator and denominator are coprime, so their powers are too.
    return Rational(pow(numerator(base), exp), pow(denominator(base), exp));
}

Rational parse_rational(const std::string& text) {
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t start = (s[0] == '-') ? 1 : 0;
        if (start == s.size()) return false;
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    std::size_t slash = text.find('/');
    std::string num = text.substr(0, slash);
    if (!is_int(num))
        throw parse_error("rational: bad numerator in '" + text + "'");
    if (slash == std::string::npos) return Rational(BigInt(num));
    std::string den = text.substr(slash + 1);
    if (!is_int(den) || den[0] == '-')
        throw parse_error("rational: bad denominator in '" + text + "'");
    BigInt d(den);
    if (d == 0) throw parse_error("rational: zero denominator in '" + text + "'");
    return Rational(BigInt(num), d);
}

std::string render_rational(const Rational& r) {
    std::string out = numerator(r).str();
    if (denominator(r) != 1) out += "/" + denominator(r).str();
    return out;
}

Rational monomial_eval(const Monomial& m, const Rational& t) {
    if (m.is_zero()) return Rational(0);
    return m.coeff() * rational_pow(t, m.power());
}

std::string render_monomial(const Monomial& m) {
    if (m.is_zero()) return "0";
    if (m.power() == 0) return render_rational(m.coeff());
    return render_rational(m.coeff()) + " * t^" + std::to_string(m.power());
}

}  // namespace stratexp
