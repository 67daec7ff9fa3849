#pragma once

#include <vector>

#include "abel/poly.hpp"

namespace abel {

struct SquarefreePart {
    Poly factor; // monic, squarefree
    unsigned multiplicity;
};

struct SquarefreeDecomposition {
    Rational content; // leading coefficient: content * prod factor^mult == f
    std::vector<SquarefreePart> parts;
};

// Yun's algorithm. f != 0. Parts pairwise coprime and squarefree.
SquarefreeDecomposition squarefree_factor(const Poly& f);

struct RationalRoot {
    Rational root;
    unsigned multiplicity;
};

// Every rational root with exact multiplicity (rational-root bound on the
// primitive integer form, then deflation). f != 0.
std::vector<RationalRoot> rational_roots(const Poly& f);

enum class FactorKind {
    Linear,
    Quadratic, // irreducible over Q; splits over Q(sqrt(disc_radicand))
    Opaque,    // degree >= 3 irreducible over Q (or unsplit by policy)
};

struct IrreducibleFactor {
    Poly poly; // monic
    unsigned multiplicity;
    FactorKind kind;
    Int disc_radicand; // Quadratic only: D with roots in Q(sqrt(D))
};

struct FactoredPoly {
    Rational content; // content * prod poly^mult == original
    std::vector<IrreducibleFactor> factors;
    bool has_opaque() const {
        for (const auto& f : factors)
            if (f.kind == FactorKind::Opaque) return true;
        return false;
    }
};

// Factorization into monic irreducible-over-Q polynomials, complete through
// degree 4 (linear extraction via rational roots, quadratics by
// discriminant, quartics by the u^2-resolvent). Squarefree blocks of degree
// >= 5 without rational roots are kept whole and marked Opaque (they may in
// principle be reducible; callers treat Opaque conservatively).
FactoredPoly factor_poly(const Poly& f);

} // namespace abel
