#pragma once

#include <map>
#include <string>
#include <vector>

#include "abel/poly.hpp"

namespace abel {

// exponent tuple over x0..x_{nvars-1}
using Mono = std::vector<unsigned>;

// lex with the highest-indexed variable most significant (x0 lowest), so a
// lex Groebner basis is triangular from an eliminant in x0 upward
struct MonoLex {
    bool operator()(const Mono& a, const Mono& b) const {
        for (std::size_t i = a.size(); i--;)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

Mono mono_mul(const Mono& a, const Mono& b);
Mono mono_lcm(const Mono& a, const Mono& b);
bool mono_divides(const Mono& a, const Mono& b); // a | b
Mono mono_div(const Mono& b, const Mono& a);     // b / a
bool mono_coprime(const Mono& a, const Mono& b);

// Sparse multivariate polynomial over Q with a fixed variable arity.
// No zero coefficients are stored.
class MultiPoly {
  public:
    explicit MultiPoly(int nvars) : nvars_(nvars) {}

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Mono, Rational, MonoLex>& terms() const { return terms_; }

    const Mono& lead_mono() const { return terms_.rbegin()->first; }
    const Rational& lead_coeff() const { return terms_.rbegin()->second; }

    void add_term(const Mono& m, const Rational& c);

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& f, const MultiPoly& g);
    friend MultiPoly operator-(const MultiPoly& f, const MultiPoly& g);
    friend MultiPoly operator*(const MultiPoly& f, const MultiPoly& g);
    MultiPoly& operator+=(const MultiPoly& g) { return *this = *this + g; }
    MultiPoly& operator-=(const MultiPoly& g) { return *this = *this - g; }
    friend bool operator==(const MultiPoly& f, const MultiPoly& g) {
        return f.nvars_ == g.nvars_ && f.terms_ == g.terms_;
    }

    MultiPoly term_times(const Mono& m, const Rational& c) const;
    MultiPoly monic() const;

    int max_var() const; // highest variable index that occurs, -1 for constants

    // evaluate x0..x_{k-1} at the given values; the result must involve only
    // x_k and is returned as a univariate polynomial in x_k
    QPoly eval_prefix(const std::vector<QuadExt>& values, int var) const;

    // deterministic display: terms in descending order, monomial variables
    // in ascending index order, e.g. "3*x0*x3-24*x2+12"
    std::string to_string() const;

  private:
    int nvars_;
    std::map<Mono, Rational, MonoLex> terms_;
};

} // namespace abel
