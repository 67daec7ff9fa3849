#include "abel/groebner.hpp"

#include <algorithm>
#include <set>

#include "abel/errors.hpp"

namespace abel {

MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& G)
{
    MultiPoly r(f.nvars());
    MultiPoly h = f;
    while (!h.is_zero()) {
        bool reduced = false;
        for (const auto& g : G) {
            if (g.is_zero()) continue;
            if (mono_divides(g.lead_mono(), h.lead_mono())) {
                Mono q = mono_div(h.lead_mono(), g.lead_mono());
                h -= g.term_times(q, h.lead_coeff() / g.lead_coeff());
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            r.add_term(h.lead_mono(), h.lead_coeff());
            h.add_term(h.lead_mono(), -h.lead_coeff());
        }
    }
    return r;
}

namespace {

MultiPoly s_poly(const MultiPoly& f, const MultiPoly& g)
{
    Mono l = mono_lcm(f.lead_mono(), g.lead_mono());
    MultiPoly a = f.term_times(mono_div(l, f.lead_mono()), f.lead_coeff().inverse());
    MultiPoly b = g.term_times(mono_div(l, g.lead_mono()), g.lead_coeff().inverse());
    return a - b;
}

struct Pair {
    std::size_t i, j; // i < j
    Mono lcm;
};

std::vector<MultiPoly> reduce_basis(std::vector<MultiPoly> G)
{
    // minimalize: drop members whose lead term another member divides
    std::vector<MultiPoly> minimal;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < G.size() && keep; ++j) {
            if (i == j) continue;
            if (!mono_divides(G[j].lead_mono(), G[i].lead_mono())) continue;
            // on equal lead terms keep the earlier one
            if (G[j].lead_mono() == G[i].lead_mono() && j > i) continue;
            keep = false;
        }
        if (keep) minimal.push_back(G[i]);
    }
    // tail-reduce each member against the others until stable
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<MultiPoly> others;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            MultiPoly nf = normal_form(minimal[i], others);
            if (!(nf == minimal[i])) {
                changed = true;
                if (nf.is_zero()) {
                    minimal.erase(minimal.begin() + long(i));
                    --i;
                } else {
                    minimal[i] = nf.monic();
                }
            }
        }
    }
    for (auto& g : minimal) g = g.monic();
    std::sort(minimal.begin(), minimal.end(), [](const MultiPoly& a, const MultiPoly& b) {
        return MonoLex{}(b.lead_mono(), a.lead_mono()); // descending
    });
    return minimal;
}

} // namespace

IdealBasis buchberger(IdealBasis basis, const BuchbergerOptions& opt, BuchbergerStats* stats)
{
    std::vector<MultiPoly> G;
    for (const auto& g : basis.generators)
        if (!g.is_zero()) G.push_back(g.monic());

    std::vector<Pair> pending;
    std::set<std::pair<std::size_t, std::size_t>> handled;
    auto push_pairs_for = [&](std::size_t n) {
        for (std::size_t i = 0; i < n; ++i)
            pending.push_back({i, n, mono_lcm(G[i].lead_mono(), G[n].lead_mono())});
    };
    for (std::size_t n = 1; n < G.size(); ++n) push_pairs_for(n);

    std::size_t processed = 0;
    while (!pending.empty()) {
        // normal selection: smallest lcm in the monomial order
        auto it = std::min_element(pending.begin(), pending.end(), [](const Pair& a, const Pair& b) {
            return MonoLex{}(a.lcm, b.lcm);
        });
        Pair p = *it;
        pending.erase(it);
        handled.insert({p.i, p.j});

        if (mono_coprime(G[p.i].lead_mono(), G[p.j].lead_mono())) continue;
        // chain criterion: some k with LT(k) | lcm(i,j) and both (i,k), (j,k)
        // already handled
        bool skip = false;
        for (std::size_t k = 0; k < G.size() && !skip; ++k) {
            if (k == p.i || k == p.j) continue;
            if (!mono_divides(G[k].lead_mono(), p.lcm)) continue;
            auto key_ik = std::minmax(p.i, k);
            auto key_jk = std::minmax(p.j, k);
            if (handled.count({key_ik.first, key_ik.second}) && handled.count({key_jk.first, key_jk.second}))
                skip = true;
        }
        if (skip) continue;

        if (++processed > opt.spair_budget)
            throw resource_error("S-pair budget exceeded (" + std::to_string(opt.spair_budget) + ")");
        MultiPoly r = normal_form(s_poly(G[p.i], G[p.j]), G);
        if (!r.is_zero()) {
            G.push_back(r.monic());
            push_pairs_for(G.size() - 1);
        }
    }

    basis.groebner = reduce_basis(std::move(G));
    for (const auto& g : basis.generators)
        if (!normal_form(g, *basis.groebner).is_zero())
            throw structure_error("input generator does not reduce to zero modulo the output basis");
    if (stats) {
        stats->spairs_reduced = processed;
        stats->basis_size = basis.groebner->size();
    }
    return basis;
}

} // namespace abel
