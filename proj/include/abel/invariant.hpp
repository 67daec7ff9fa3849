#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "abel/factor.hpp"
#include "abel/poly.hpp"

namespace abel {

// x' = A(t) x^3 + B(t) x^2 with A != 0.
struct AbelEquation {
    Poly A;
    Poly B;

    AbelEquation(Poly a, Poly b) : A(std::move(a)), B(std::move(b)) {
        if (A.is_zero()) throw input_error("A must be nonzero");
    }
    int n() const { return A.degree(); }
};

// p*p' - p*B + A; the curve 1 + p(t)x = 0 is invariant iff this is the
// zero polynomial. p != 0.
Poly condinv_residual(const AbelEquation& eq, const Poly& p);
QPoly condinv_residual(const AbelEquation& eq, const QPoly& p);

bool is_invariant(const AbelEquation& eq, const Poly& p);
bool is_invariant(const AbelEquation& eq, const QPoly& p);

// Candidate degrees m for an invariant p by Lemma "deg(B) <= max(m-1, n-m)",
// with m = (n+1)/2 struck out when deg(B) > (n-1)/2.
struct AdmissibleDegrees {
    std::set<int> degrees;
    std::optional<int> excluded_half; // (n+1)/2, when it was struck out
};
AdmissibleDegrees admissible_degrees(const AbelEquation& eq);

// Irreducible factor base of A; divisor candidates are built from it.
FactoredPoly factor_base(const Poly& A);

struct DivisorEnumeration {
    std::vector<QPoly> divisors; // monic, each within a single Q(sqrt(D))
    bool complete;               // false when an opaque block limits the walk
    std::vector<std::string> notes;
};

struct EnumerationOptions {
    bool split_quadratics = true;
    std::size_t divisor_cap = 200000;
};

// All monic divisors over the split field with degree in `filter`
// (exponent sub-tuples of the factor base; conjugate-unbalanced powers of a
// split quadratic yield Q(sqrt(D)) divisors). Divisors that would need two
// distinct radicals are skipped: no scalar multiple of such a divisor lies
// in any single Q(sqrt(D)), so nothing representable is lost.
DivisorEnumeration enumerate_divisors(const FactoredPoly& f, const std::set<int>& filter,
                                      const EnumerationOptions& opt = {});

struct ScalarSolutions {
    std::vector<QuadExt> gammas; // nonzero, exact
    bool representable;          // false: some gamma needs a second radical
};

// With A = d*r, the nonzero scalars g with g^2 d' - g B + r == 0 as a
// polynomial identity: the roots of the gcd over K[g] of the per-coefficient
// quadratics (K the coefficient field of d). d monic, d | A.
ScalarSolutions solve_scalar(const QPoly& d, const AbelEquation& eq);
ScalarSolutions solve_scalar(const Poly& d, const AbelEquation& eq);

struct InvariantCurve {
    QPoly p;                // 1 + p(t)x = 0, normalized c = 1
    std::string provenance; // "divisor" or "ideal"
    bool separable = false; // deg p = 0: equation reduces to separated form

    bool is_rational() const { return to_rational_poly(p).has_value(); }
    Int radicand() const;
};

struct CurveSet {
    std::vector<InvariantCurve> curves; // sorted by degree, then coeff order
    bool complete;                      // relative to Q(sqrt(D)) coefficients
    std::vector<std::string> notes;
};

// Divisor-enumeration backend: every invariant curve 1 + p x = 0 of eq with
// p over Q or Q(sqrt(D)), including constant-p separable curves (A = g B).
CurveSet find_invariant_curves(const AbelEquation& eq, const EnumerationOptions& opt = {});

// Prop "two invariant curves" decomposition: p1 = q s1, p2 = q s2,
// gcd(s1,s2) = 1, s1 - s2 = C * prod q_i^gamma_i over q's irreducible
// factors, A = q s1 s2 s, s = gcd(q,q') * sum (delta_i+gamma_i) q_i'
// prod_{j != i} q_j. Throws structure_error when the guaranteed shape
// fails (that would be a solver bug, per the underlying proposition).
struct PairStructure {
    Poly q;
    Poly s1, s2;
    Rational C;
    std::vector<Poly> q_factors;      // distinct monic irreducible factors of q
    std::vector<unsigned> delta;      // multiplicities of q_factors in q
    std::vector<unsigned> gamma;      // multiplicities of q_factors in (s1-s2)/C
    Poly s;                           // cofactor divisor A/(q s1 s2)
};
PairStructure pair_structure(const Poly& p1, const Poly& p2, const AbelEquation& eq);

// Prop "A = K p' p": detects the two-proportional-curves shape. For K = -1
// (B = 0) also carries the rational first integral 1/x^2 - p(t)^2.
struct ProportionalPair {
    QPoly p;
    QuadExt K;
    bool has_rational_first_integral = false; // K = -1 branch
};
std::optional<ProportionalPair> detect_proportional(const AbelEquation& eq);

} // namespace abel
