#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abel/rational.hpp"

namespace abel {

// Exact element a + b*sqrt(d) of a quadratic extension Q(sqrt(d)).
// Invariants: d squarefree (negative d allowed, complex value); b == 0
// implies d == 1, so a plain rational is always stored with d = 1 and
// equality is structural. Mixing two different non-trivial radicals in one
// operation is rejected (unrepresentable_error); only a single sqrt per
// value is supported.
class QuadExt {
  public:
    QuadExt() : a_(0), b_(0), d_(1) {}
    QuadExt(Rational a) : a_(std::move(a)), b_(0), d_(1) {} // NOLINT: implicit
    QuadExt(long a) : a_(a), b_(0), d_(1) {}                // NOLINT: implicit
    QuadExt(Rational a, Rational b, Int d);

    const Rational& rational_part() const { return a_; }
    const Rational& radical_part() const { return b_; }
    const Int& radicand() const { return d_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return b_.is_zero() && a_.is_one(); }
    bool is_rational() const { return b_.is_zero(); }

    QuadExt conj() const { return QuadExt(a_, -b_, d_); }
    Rational norm() const { return a_ * a_ - b_ * b_ * Rational(d_); }

    QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }
    QuadExt inverse() const;

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y);
    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
    QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    // Total order for deterministic sorting: numeric for comparable values
    // (shared real radicand), representation order otherwise.
    static int cmp(const QuadExt& x, const QuadExt& y);
    friend bool operator<(const QuadExt& x, const QuadExt& y) { return cmp(x, y) < 0; }

    // sqrt of a rational: always representable (possibly with a new
    // radicand). sqrt of a proper a+b*sqrt(d): representable only if it
    // stays inside Q(sqrt(d)); nullopt otherwise.
    static QuadExt sqrt_rational(const Rational& x);
    std::optional<QuadExt> sqrt() const;

    std::string to_string() const;

  private:
    Rational a_, b_;
    Int d_;
};

// Merged radicand of two operands, or throws on a genuine mix.
Int common_radicand(const QuadExt& x, const QuadExt& y);

// Exact roots of a*g^2 + b*g + c = 0 over Q, as QuadExt values (one entry
// for a double root, per set semantics). Linear when a = 0. Throws
// input_error when all three coefficients vanish.
std::vector<QuadExt> quad_roots(const Rational& a, const Rational& b, const Rational& c);

// Same over Q(sqrt(d)) coefficients; nullopt when a root would need a
// second radical on top of d.
std::optional<std::vector<QuadExt>> quad_roots_ext(const QuadExt& a, const QuadExt& b,
                                                   const QuadExt& c);

} // namespace abel
