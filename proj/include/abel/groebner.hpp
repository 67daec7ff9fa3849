#pragma once

#include <optional>
#include <vector>

#include "abel/multipoly.hpp"

namespace abel {

// Generators of an ideal of Q[x0..xm] under the lex order of MonoLex,
// optionally together with its reduced Groebner basis.
struct IdealBasis {
    int nvars = 0;
    std::vector<MultiPoly> generators;
    std::optional<std::vector<MultiPoly>> groebner; // reduced, monic, sorted
                                                    // by descending lead term
};

struct BuchbergerOptions {
    std::size_t spair_budget = 10000;
};

struct BuchbergerStats {
    std::size_t spairs_reduced = 0;
    std::size_t basis_size = 0;
};

// Full normal form of f modulo G (lead reduction then tail reduction).
MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& G);

// Buchberger with normal selection, the coprime-lead-term criterion and the
// chain criterion; output is the reduced basis (auto-reduced, monic,
// pairwise non-divisible lead terms). Idempotent. Each input generator is
// re-verified to reduce to zero modulo the output. Throws resource_error
// when the S-pair budget runs out.
IdealBasis buchberger(IdealBasis basis, const BuchbergerOptions& opt = {},
                      BuchbergerStats* stats = nullptr);

} // namespace abel
