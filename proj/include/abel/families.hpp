#pragma once

#include <map>
#include <string>
#include <vector>

#include "abel/invariant.hpp"

namespace abel {

// Generator parameters for the two-curve family: q monic non-constant,
// C != 0, gamma aligned with q's irreducible factors in factor_poly order.
struct FamilySpec {
    Poly q;
    Poly s2;
    Rational C;
    std::vector<unsigned> gamma;
};

struct GeneratedPair {
    AbelEquation eq;
    Poly p1, p2;
    Poly s1, s; // the derived pieces, for callers that want them
};

// Builds s1 = s2 + C*prod q_i^gamma_i, the cofactor divisor s, and
// A = q s1 s2 s, B = (q s1)' + s2 s. Both returned curves are verified
// invariant before returning; degenerate A = 0 is an input_error.
GeneratedPair generate_pair(const FamilySpec& spec);

// A = K p' p, B = (K+1) p'. K outside {0, 1}, p non-constant.
AbelEquation proportional_family(const Poly& p, const Rational& K);

// Named instances from the worked examples. Parameter names are part of
// the CLI contract; values are exact rationals.
//
//   example-4.4                (no parameters)
//   example-4.7    c1, C, z    paper's compatibility table, 14 combinations
//   example-4.8    z1, z2      requires z1 = z2+2 or z1 = z2-9
//   remark-2.6     n >= 2
//   remark-2.14    m >= 2
//   prop-4.2-case1 qc, c1, s0, C         q = t+qc, s1 = c1*t+s0
//   prop-4.2-case2 qc, c1, s0, C        (C != c1)
//   n5-case-1a     c1, C, z              q = t^2-1, s1 = c1(t-z)
//   n5-case-1b     c1, C, z, pm (+-1)    difference C*(t+pm), C != c1
//   n5-case-2a     c1, C, z              q = t^2
//   n5-case-2b     c1, C, z              difference C*t, C != c1
//   n5-case-3a     c1, C, z, w           q = t-z, s1 = c1(t^2+w), w in {-1,0}
//   n5-case-3b     c1, C, z, w
//   n5-case-3c     c1, C, z, w           C != c1
AbelEquation named_instance(const std::string& id, const std::map<std::string, Rational>& params);

std::vector<std::string> named_instance_ids();

enum class CubicVariant {
    ConstantDifference, // s1 - s2 = C
    QMultipleDifference // s1 - s2 = C*q
};

// Closed-form curve count for deg(A) = 3 with two degree-2 generators,
// cross-checked against the divisor solver on the generated instance.
//
// With E = c1*q(0) - s1(0), the constant-difference family has curves
// {q s1, q s2, s1 s2 / c1} plus p1/2 iff C = -E/2, p2/2 iff C = E,
// p3/2 iff C = -2E, with p3 collapsing onto p1 when C = -E and onto p2
// when E = 0 (counts drop to 2 in those degenerate cases). The
// q-multiple-difference family has {q s1, q s2}, extended by
// {s1 s2/c1, 2 q s1} iff C = -c1 and by {2 q s2, 2 s1 s2/c1} iff
// C = c1/2. (Derived from the invariance condition; each witness is
// re-verified by residual, and `agrees` asserts equality with the solver.)
struct CubicClassification {
    AbelEquation eq;
    std::vector<Poly> witnesses; // predicted curves, deduplicated
    std::vector<std::string> collision_notes;
    std::size_t predicted_count;
    std::vector<Poly> solver_curves;
    bool agrees;
};

CubicClassification classify_cubic(const Poly& q, const Poly& s1, const Rational& C,
                                   CubicVariant variant);

} // namespace abel
