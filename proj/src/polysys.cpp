#include "abel/polysys.hpp"

#include <algorithm>
#include <set>

#include "abel/factor.hpp"

namespace abel {

IdealBasis build_condinv_system(const AbelEquation& eq, int m)
{
    if (m < 0) throw input_error("m must be nonnegative");
    const int nvars = m + 1;
    const int degB = eq.B.deg().value_or(-1);
    const int top = std::max({2 * m - 1, eq.n(), m + degB});

    IdealBasis basis;
    basis.nvars = nvars;
    for (int k = 0; k <= top; ++k) {
        MultiPoly f(nvars);
        // p p': sum over i + j - 1 = k of j * x_i x_j
        for (int i = 0; i <= m; ++i) {
            int j = k + 1 - i;
            if (j < 1 || j > m) continue;
            Mono mono(std::size_t(nvars), 0);
            mono[std::size_t(i)] += 1;
            mono[std::size_t(j)] += 1;
            f.add_term(mono, Rational(long(j)));
        }
        // + A_k
        Mono one(std::size_t(nvars), 0);
        f.add_term(one, eq.A.coeff(std::size_t(k)));
        // - (B p)_k
        for (int i = 0; i <= m; ++i) {
            int l = k - i;
            if (l < 0 || l > degB) continue;
            Mono mono(std::size_t(nvars), 0);
            mono[std::size_t(i)] += 1;
            f.add_term(mono, -eq.B.coeff(std::size_t(l)));
        }
        if (!f.is_zero()) basis.generators.push_back(std::move(f));
    }
    return basis;
}

std::string emit_singular(const IdealBasis& basis, const std::string& ringname)
{
    std::string vars;
    for (int i = 0; i < basis.nvars; ++i) {
        if (i) vars += ",";
        vars += "x" + std::to_string(i);
    }
    const std::vector<MultiPoly>& gens = basis.groebner ? *basis.groebner : basis.generators;
    std::string ideal;
    if (gens.empty()) {
        ideal = "0";
    } else {
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (i) ideal += ",";
            ideal += gens[i].to_string();
        }
    }
    return "ring " + ringname + "=0,(" + vars + "),lp; ideal I=" + ideal + ";\n";
}

namespace {

struct RootSet {
    std::vector<QuadExt> roots;
    std::size_t missed = 0; // branches needing an unavailable extension
};

// distinct roots of a rational polynomial that lie in Q or a Q(sqrt(D));
// when `ctx` is a nontrivial radicand, only roots inside that same field
// are representable
RootSet roots_of_rational(const Poly& f, const Int& ctx)
{
    RootSet out;
    FactoredPoly fp = factor_poly(f);
    for (const auto& fac : fp.factors) {
        if (fac.kind == FactorKind::Linear) {
            out.roots.emplace_back(-fac.poly.coeff(0));
        } else if (fac.kind == FactorKind::Quadratic) {
            if (ctx != 1 && fac.disc_radicand != ctx) {
                out.missed += 2;
                continue;
            }
            for (const auto& r : quad_roots(fac.poly.coeff(2), fac.poly.coeff(1), fac.poly.coeff(0)))
                out.roots.push_back(r);
        } else {
            out.missed += std::size_t(fac.poly.degree());
        }
    }
    return out;
}

QPoly conj_poly(const QPoly& p)
{
    std::vector<QuadExt> c;
    for (const auto& x : p.coeffs()) c.push_back(x.conj());
    return QPoly(std::move(c));
}

// roots of a univariate over Q(sqrt(d)) that stay in Q(sqrt(d)); candidates
// come from the rational norm polynomial f * conj(f)
RootSet roots_of_qpoly(const QPoly& f, const Int& ctx)
{
    if (auto rat = to_rational_poly(f)) return roots_of_rational(*rat, ctx);
    RootSet out;
    if (f.degree() == 1) {
        out.roots.push_back(-f.coeff(0) / f.coeff(1));
        return out;
    }
    if (f.degree() == 2) {
        auto rs = quad_roots_ext(f.coeff(2), f.coeff(1), f.coeff(0));
        if (!rs) {
            out.missed += 2;
            return out;
        }
        out.roots = *rs;
        return out;
    }
    auto norm = to_rational_poly(f * conj_poly(f));
    RootSet cand = roots_of_rational(*norm, ctx);
    out.missed = cand.missed; // conservative: unresolved candidates counted once
    for (const auto& r : cand.roots)
        if (f.eval(r).is_zero()) out.roots.push_back(r);
    return out;
}

} // namespace

ZeroDimSolution solve_zero_dim(const IdealBasis& basis)
{
    if (!basis.groebner) throw input_error("solve_zero_dim requires a computed Groebner basis");
    const auto& G = *basis.groebner;
    const int nvars = basis.nvars;

    ZeroDimSolution out;
    out.complete = true;

    // inconsistent system: basis == {1}
    if (G.size() == 1 && G[0].max_var() == -1) {
        out.complete_over = "empty variety";
        return out;
    }

    // zero-dimensionality: every variable needs a pure-power lead term
    for (int v = 0; v < nvars; ++v) {
        bool found = false;
        for (const auto& g : G) {
            const Mono& lm = g.lead_mono();
            if (lm[std::size_t(v)] == 0) continue;
            bool pure = true;
            for (int u = 0; u < nvars; ++u)
                if (u != v && lm[std::size_t(u)] > 0) pure = false;
            if (pure) {
                found = true;
                break;
            }
        }
        if (!found)
            throw positive_dimensional_error("ideal is not zero-dimensional: no pure power of x" +
                                             std::to_string(v) + " among the lead terms");
    }

    std::set<Int> radicands;
    std::vector<std::vector<QuadExt>> partial{{}};
    for (int v = 0; v < nvars; ++v) {
        std::vector<std::vector<QuadExt>> next;
        for (const auto& point : partial) {
            // gcd of every basis member that lives in x0..xv after substitution
            QPoly elim;
            bool dead = false;
            for (const auto& g : G) {
                if (g.max_var() > v) continue;
                QPoly sub = g.eval_prefix(point, v);
                if (sub.is_zero()) continue;
                if (sub.is_constant()) {
                    dead = true; // the partial point violates this member
                    break;
                }
                elim = elim.is_zero() ? sub.monic() : QPoly::gcd(elim, sub);
                if (elim.is_constant()) {
                    dead = true;
                    break;
                }
            }
            if (dead) continue;
            if (elim.is_zero())
                throw structure_error("no eliminant at level " + std::to_string(v) +
                                      " despite the zero-dimensionality check");
            Int ctx = 1;
            for (const auto& c : point)
                if (!c.is_rational()) ctx = c.radicand();
            for (const auto& c : elim.coeffs())
                if (!c.is_rational()) ctx = c.radicand();
            RootSet rs = roots_of_qpoly(elim, ctx);
            if (rs.missed) {
                out.complete = false;
                out.missed_branches += rs.missed;
            }
            for (const auto& r : rs.roots) {
                auto ext = point;
                ext.push_back(r);
                if (!r.is_rational()) radicands.insert(r.radicand());
                next.push_back(std::move(ext));
            }
        }
        partial = std::move(next);
    }

    out.points = std::move(partial);
    std::sort(out.points.begin(), out.points.end(),
              [](const std::vector<QuadExt>& a, const std::vector<QuadExt>& b) {
                  for (std::size_t i = 0; i < a.size(); ++i) {
                      int c = QuadExt::cmp(a[i], b[i]);
                      if (c != 0) return c < 0;
                  }
                  return false;
              });

    std::string field = "Q";
    for (const auto& d : radicands) field += ", Q(sqrt(" + d.get_str() + "))";
    out.complete_over = out.complete
                            ? field
                            : field + "; " + std::to_string(out.missed_branches) +
                                  " branch(es) need extensions of degree >= 3 and were counted, not enumerated";
    return out;
}

std::vector<QPoly> points_to_curves(const ZeroDimSolution& sol)
{
    std::vector<QPoly> out;
    for (const auto& pt : sol.points) {
        QPoly p{std::vector<QuadExt>(pt)};
        if (!p.is_zero()) out.push_back(p);
    }
    return out;
}

} // namespace abel
