#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdlib>
#include <string>
#include <utility>

#include "abel/errors.hpp"

namespace abel {

using Int = mpz_class;

// Exact rational scalar. Always stored canonical: gcd(|num|, den) = 1,
// den > 0, zero is 0/1. Equality is therefore structural.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // NOLINT: implicit by design
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den) {
        if (sgn(den) == 0) throw input_error("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    // Accepts "123", "-4/6" (reduced on construction), with optional spaces.
    static Rational from_string(const std::string& s);

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw input_error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const {
        if (is_zero()) throw input_error("inverse of zero");
        return Rational(mpq_class(1 / v_));
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    std::string to_string() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

  private:
    mpq_class v_;
};

inline Rational pow(const Rational& x, unsigned e) {
    Rational r(1);
    Rational b = x;
    for (; e; e >>= 1) {
        if (e & 1) r *= b;
        if (e > 1) b *= b;
    }
    return r;
}

inline Rational gcd(const Rational& a, const Rational& b) {
    // gcd(a/b, c/d) = gcd(a*d, c*b) / (b*d), canonicalized; nonnegative.
    if (a.is_zero()) return b.abs();
    if (b.is_zero()) return a.abs();
    Int g;
    mpz_gcd(g.get_mpz_t(), Int(a.num() * b.den()).get_mpz_t(), Int(b.num() * a.den()).get_mpz_t());
    return Rational(g, a.den() * b.den());
}

inline Rational Rational_from_cstr(const char* s); // fwd only for from_string

inline Rational Rational::from_string(const std::string& s) {
    std::string trimmed;
    trimmed.reserve(s.size());
    for (char c : s)
        if (c != ' ' && c != '\t') trimmed.push_back(c);
    if (trimmed.empty()) throw input_error("empty rational literal");
    auto slash = trimmed.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(trimmed));
        return Rational(Int(trimmed.substr(0, slash)), Int(trimmed.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw input_error("bad rational literal: " + s);
    }
}

} // namespace abel
