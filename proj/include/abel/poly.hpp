#pragma once

#include <cassert>
#include <optional>
#include <utility>
#include <vector>

#include "abel/errors.hpp"
#include "abel/quadext.hpp"
#include "abel/rational.hpp"

namespace abel {

// Degree with an explicit minus-infinity sentinel for the zero polynomial,
// so degree arithmetic never leans on a magic -1.
class Degree {
  public:
    static Degree neg_inf() { return Degree(); }
    static Degree of(int v) {
        Degree d;
        d.finite_ = true;
        d.v_ = v;
        return d;
    }
    bool is_neg_inf() const { return !finite_; }
    int value() const {
        assert(finite_);
        return v_;
    }
    int value_or(int fallback) const { return finite_ ? v_ : fallback; }

    friend bool operator==(const Degree& a, const Degree& b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.v_ == b.v_);
    }
    friend bool operator<(const Degree& a, const Degree& b) {
        if (!a.finite_) return b.finite_;
        if (!b.finite_) return false;
        return a.v_ < b.v_;
    }
    friend bool operator<=(const Degree& a, const Degree& b) { return a < b || a == b; }
    friend bool operator<=(const Degree& a, int b) { return a <= Degree::of(b); }
    friend bool operator>(const Degree& a, int b) { return Degree::of(b) < a; }

  private:
    Degree() = default;
    bool finite_ = false;
    int v_ = 0;
};

// Dense univariate polynomial over an exact field K (Rational or QuadExt).
// Coefficients ascending by power, never a trailing zero; the zero
// polynomial is the empty sequence.
template <class K>
class DensePoly {
  public:
    DensePoly() = default;
    explicit DensePoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static DensePoly zero() { return DensePoly(); }
    static DensePoly constant(K v) { return DensePoly(std::vector<K>{std::move(v)}); }
    static DensePoly variable() { return monomial(1, K(1)); }
    static DensePoly monomial(unsigned k, K coeff) {
        std::vector<K> c(k + 1, K(0));
        c[k] = std::move(coeff);
        return DensePoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    // Degree of a nonzero polynomial; use deg() where a zero may flow through.
    int degree() const {
        assert(!c_.empty());
        return int(c_.size()) - 1;
    }
    Degree deg() const { return c_.empty() ? Degree::neg_inf() : Degree::of(int(c_.size()) - 1); }

    const std::vector<K>& coeffs() const { return c_; }
    K coeff(std::size_t k) const { return k < c_.size() ? c_[k] : K(0); }
    const K& lead() const {
        assert(!c_.empty());
        return c_.back();
    }

    friend DensePoly operator+(const DensePoly& f, const DensePoly& g) {
        std::vector<K> c(std::max(f.c_.size(), g.c_.size()), K(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.coeff(i) + g.coeff(i);
        return DensePoly(std::move(c));
    }
    friend DensePoly operator-(const DensePoly& f, const DensePoly& g) {
        std::vector<K> c(std::max(f.c_.size(), g.c_.size()), K(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.coeff(i) - g.coeff(i);
        return DensePoly(std::move(c));
    }
    DensePoly operator-() const {
        std::vector<K> c(c_);
        for (auto& x : c) x = -x;
        return DensePoly(std::move(c));
    }
    friend DensePoly operator*(const DensePoly& f, const DensePoly& g) {
        if (f.is_zero() || g.is_zero()) return DensePoly();
        std::vector<K> c(f.c_.size() + g.c_.size() - 1, K(0));
        for (std::size_t i = 0; i < f.c_.size(); ++i)
            for (std::size_t j = 0; j < g.c_.size(); ++j) c[i + j] += f.c_[i] * g.c_[j];
        return DensePoly(std::move(c));
    }
    friend DensePoly operator*(const K& a, const DensePoly& f) {
        std::vector<K> c(f.c_);
        for (auto& x : c) x = a * x;
        return DensePoly(std::move(c));
    }
    friend DensePoly operator*(const DensePoly& f, const K& a) { return a * f; }
    DensePoly& operator+=(const DensePoly& g) { return *this = *this + g; }
    DensePoly& operator-=(const DensePoly& g) { return *this = *this - g; }
    DensePoly& operator*=(const DensePoly& g) { return *this = *this * g; }

    friend bool operator==(const DensePoly& f, const DensePoly& g) { return f.c_ == g.c_; }
    friend bool operator!=(const DensePoly& f, const DensePoly& g) { return !(f == g); }

    // f = q*g + r with deg r < deg g. g must be nonzero.
    static std::pair<DensePoly, DensePoly> divmod(const DensePoly& f, const DensePoly& g) {
        if (g.is_zero()) throw input_error("polynomial division by zero");
        if (f.is_zero() || f.c_.size() < g.c_.size()) return {DensePoly(), f};
        std::vector<K> rem = f.c_;
        std::vector<K> quo(f.c_.size() - g.c_.size() + 1, K(0));
        const K& glead = g.lead();
        const std::size_t dg = g.c_.size() - 1;
        for (std::size_t k = rem.size() - 1;; --k) {
            K factor = rem[k] / glead;
            if (!(factor == K(0))) {
                quo[k - dg] = factor;
                for (std::size_t i = 0; i <= dg; ++i) rem[k - dg + i] -= factor * g.c_[i];
            }
            if (k == dg) break;
        }
        rem.resize(dg);
        return {DensePoly(std::move(quo)), DensePoly(std::move(rem))};
    }

    DensePoly exact_div(const DensePoly& g) const {
        auto [q, r] = divmod(*this, g);
        if (!r.is_zero()) throw structure_error("exact_div left a remainder");
        return q;
    }
    bool divisible_by(const DensePoly& g) const { return divmod(*this, g).second.is_zero(); }

    // monic gcd; gcd(f, 0) = monic(f); both zero is an error.
    static DensePoly gcd(DensePoly a, DensePoly b) {
        if (a.is_zero() && b.is_zero()) throw input_error("gcd(0, 0)");
        while (!b.is_zero()) {
            auto r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    DensePoly monic() const {
        if (is_zero()) return *this;
        return *this * lead().inverse();
    }

    DensePoly derivative() const {
        if (c_.size() <= 1) return DensePoly();
        std::vector<K> c(c_.size() - 1, K(0));
        for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * K(long(i));
        return DensePoly(std::move(c));
    }

    // antiderivative with zero constant term
    DensePoly integral() const {
        if (is_zero()) return DensePoly();
        std::vector<K> c(c_.size() + 1, K(0));
        for (std::size_t i = 0; i < c_.size(); ++i) c[i + 1] = c_[i] / K(long(i + 1));
        return DensePoly(std::move(c));
    }

    K eval(const K& x) const {
        K acc(0);
        for (std::size_t i = c_.size(); i--;) acc = acc * x + c_[i];
        return acc;
    }

    DensePoly pow(unsigned e) const {
        DensePoly r = constant(K(1));
        DensePoly b = *this;
        for (; e; e >>= 1) {
            if (e & 1) r *= b;
            if (e > 1) b *= b;
        }
        return r;
    }

    // p(t + a)
    DensePoly shifted(const K& a) const {
        DensePoly res;
        DensePoly lin(std::vector<K>{a, K(1)});
        for (std::size_t i = c_.size(); i--;) res = res * lin + constant(c_[i]);
        return res;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == K(0)) c_.pop_back();
    }
    std::vector<K> c_;
};

using Poly = DensePoly<Rational>;
using QPoly = DensePoly<QuadExt>;

inline QPoly to_qpoly(const Poly& p) {
    std::vector<QuadExt> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) c.emplace_back(x);
    return QPoly(std::move(c));
}

inline std::optional<Poly> to_rational_poly(const QPoly& p) {
    std::vector<Rational> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) {
        if (!x.is_rational()) return std::nullopt;
        c.push_back(x.rational_part());
    }
    return Poly(std::move(c));
}

// content (nonnegative rational) and monic-friendly helpers for Q[t]
inline Rational content(const Poly& p) {
    Rational c(0);
    for (const auto& x : p.coeffs()) c = gcd(c, x);
    return c;
}

// lexicographic comparison of coefficient sequences (degree first, then
// coefficients from the leading one down); total, deterministic
int compare_polys(const QPoly& a, const QPoly& b);
int compare_polys(const Poly& a, const Poly& b);

} // namespace abel
