#pragma once

#include <string>
#include <vector>

#include "abel/groebner.hpp"
#include "abel/invariant.hpp"

namespace abel {

// Coefficient ideal of p p' + A - B p with p = x_m t^m + ... + x0: one
// generator per power of t (identically-zero coefficients skipped). Each
// generator has total degree <= 2 in the x_i.
IdealBasis build_condinv_system(const AbelEquation& eq, int m);

// Singular script `ring <name>=0,(x0,...,xm),lp; ideal I=f0,...,fn;` with
// byte-stable deterministic printing. Uses the reduced Groebner basis when
// present, else the raw generators.
std::string emit_singular(const IdealBasis& basis, const std::string& ringname);

struct ZeroDimSolution {
    std::vector<std::vector<QuadExt>> points; // each of length nvars, x0..xm
    bool complete;                            // all branches enumerated
    std::size_t missed_branches = 0;          // root slots needing degree >= 3
    std::string complete_over;                // human description of the field
};

// Back-substitution through the triangular lex basis, extracting rational
// and quadratic-irrational roots level by level. Requires basis.groebner.
// Throws positive_dimensional_error if some variable has no pure-power
// lead term in the basis.
ZeroDimSolution solve_zero_dim(const IdealBasis& basis);

// Curves of degree exactly <= m recovered from the ideal backend: one per
// solution point, p = sum x_i t^i (the zero polynomial never occurs).
std::vector<QPoly> points_to_curves(const ZeroDimSolution& sol);

} // namespace abel
