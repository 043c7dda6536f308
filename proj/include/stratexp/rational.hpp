#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace stratexp {

using BigInt = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision rational. Always in lowest terms with positive
/// denominator; zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(unsigned n);

/// num/den in lowest terms with a positive denominator; throws
/// std::domain_error when den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

/// base^exp, exact.
Rational rational_pow(const Rational& base, unsigned exp);

/// Accepts "n" or "n/d" with optional leading '-'; throws parse_error on
/// anything else (including d == 0).
Rational parse_rational(const std::string& text);

/// "num/den", with "/den" omitted when den == 1.
std::string render_rational(const Rational& r);

/// The function t -> coeff * t^power. Canonical zero: coeff == 0 forces
/// power == 0.
class Monomial {
public:
    Monomial() = default;
    Monomial(Rational coeff, unsigned power)
        : coeff_(std::move(coeff)), power_(coeff_ == 0 ? 0u : power) {}

    const Rational& coeff() const { return coeff_; }
    unsigned power() const { return power_; }
    bool is_zero() const { return coeff_ == 0; }

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    Rational coeff_ = 0;
    unsigned power_ = 0;
};

Rational monomial_eval(const Monomial& m, const Rational& t);

/// "<coeff> * t^<power>"; "0" when zero, bare coefficient when power == 0.
std::string render_monomial(const Monomial& m);

}  // namespace stratexp
