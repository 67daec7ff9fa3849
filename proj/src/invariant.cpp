#include "abel/invariant.hpp"

#include <algorithm>

namespace abel {

Poly condinv_residual(const AbelEquation& eq, const Poly& p)
{
    if (p.is_zero()) throw input_error("candidate curve polynomial is zero");
    return p * p.derivative() - p * eq.B + eq.A;
}

QPoly condinv_residual(const AbelEquation& eq, const QPoly& p)
{
    if (p.is_zero()) throw input_error("candidate curve polynomial is zero");
    return p * p.derivative() - p * to_qpoly(eq.B) + to_qpoly(eq.A);
}

bool is_invariant(const AbelEquation& eq, const Poly& p) { return condinv_residual(eq, p).is_zero(); }
bool is_invariant(const AbelEquation& eq, const QPoly& p) { return condinv_residual(eq, p).is_zero(); }

AdmissibleDegrees admissible_degrees(const AbelEquation& eq)
{
    AdmissibleDegrees out;
    const int n = eq.n();
    const Degree degB = eq.B.deg();
    for (int m = 0; m <= n; ++m) {
        if (degB <= std::max(m - 1, n - m)) out.degrees.insert(m);
    }
    if (n % 2 == 1 && !degB.is_neg_inf() && 2 * degB.value() > n - 1) {
        out.excluded_half = (n + 1) / 2;
        out.degrees.erase((n + 1) / 2);
    }
    return out;
}

FactoredPoly factor_base(const Poly& A) { return factor_poly(A); }

namespace {

// one enumeration axis: the list of (poly, degree) powers a factor offers
struct Axis {
    std::vector<QPoly> choices;
    std::vector<Int> radicands; // radicand used by each choice (1 = rational)
};

QPoly conjugate_poly(const QPoly& p)
{
    std::vector<QuadExt> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) c.push_back(x.conj());
    return QPoly(std::move(c));
}

} // namespace

DivisorEnumeration enumerate_divisors(const FactoredPoly& f, const std::set<int>& filter,
                                      const EnumerationOptions& opt)
{
    DivisorEnumeration out;
    out.complete = true;

    std::vector<Axis> axes;
    for (const auto& fac : f.factors) {
        Axis ax;
        if (fac.kind == FactorKind::Quadratic && opt.split_quadratics) {
            // q = lam * conj(lam) over Q(sqrt(D)); exponent pairs (i, j)
            Rational u = fac.poly.coeff(1), v = fac.poly.coeff(0);
            QuadExt disc_sqrt = QuadExt::sqrt_rational(u * u - Rational(4) * v);
            QuadExt root_plus = (QuadExt(-u) + disc_sqrt) / QuadExt(2);
            QPoly lam(std::vector<QuadExt>{-root_plus, QuadExt(1)});
            QPoly lam_conj = conjugate_poly(lam);
            for (unsigned i = 0; i <= fac.multiplicity; ++i)
                for (unsigned j = 0; j <= fac.multiplicity; ++j) {
                    ax.choices.push_back(lam.pow(i) * lam_conj.pow(j));
                    ax.radicands.push_back(i == j ? Int(1) : fac.disc_radicand);
                }
        } else {
            if (fac.kind == FactorKind::Opaque) {
                out.complete = false;
                out.notes.push_back("opaque factor " + std::to_string(fac.poly.degree()) +
                                    ": divisors inside it are not enumerated");
            }
            if (fac.kind == FactorKind::Quadratic && !opt.split_quadratics) {
                out.complete = false;
                out.notes.push_back("quadratic splitting disabled");
            }
            QPoly base = to_qpoly(fac.poly);
            for (unsigned e = 0; e <= fac.multiplicity; ++e) ax.choices.push_back(base.pow(e));
            ax.radicands.assign(ax.choices.size(), Int(1));
        }
        axes.push_back(std::move(ax));
    }

    bool skipped_mixed = false;
    std::vector<std::size_t> idx(axes.size(), 0);
    for (;;) {
        QPoly d = QPoly::constant(QuadExt(1));
        Int radicand = 1;
        bool mixed = false;
        for (std::size_t k = 0; k < axes.size() && !mixed; ++k) {
            const Int& r = axes[k].radicands[idx[k]];
            if (r != 1) {
                if (radicand != 1 && radicand != r) {
                    mixed = true;
                    break;
                }
                radicand = r;
            }
            d = d * axes[k].choices[idx[k]];
        }
        if (mixed) {
            skipped_mixed = true;
        } else if (filter.count(d.degree())) {
            out.divisors.push_back(d);
            if (out.divisors.size() > opt.divisor_cap) throw resource_error("divisor cap exceeded");
        }

        std::size_t k = 0;
        for (; k < axes.size(); ++k) {
            if (++idx[k] < axes[k].choices.size()) break;
            idx[k] = 0;
        }
        if (k == axes.size()) break;
    }
    if (skipped_mixed)
        out.notes.push_back("divisors mixing two radicals skipped (not representable over a single Q(sqrt(D)))");

    std::sort(out.divisors.begin(), out.divisors.end(),
              [](const QPoly& a, const QPoly& b) { return compare_polys(a, b) < 0; });
    out.divisors.erase(std::unique(out.divisors.begin(), out.divisors.end()), out.divisors.end());
    return out;
}

ScalarSolutions solve_scalar(const QPoly& d, const AbelEquation& eq)
{
    if (d.is_zero()) throw input_error("divisor must be nonzero");
    QPoly A = to_qpoly(eq.A);
    auto [r, rem] = QPoly::divmod(A, d);
    if (!rem.is_zero()) throw input_error("divisor does not divide A");

    QPoly dprime = d.derivative();
    QPoly B = to_qpoly(eq.B);
    std::size_t terms = std::max({dprime.coeffs().size(), B.coeffs().size(), r.coeffs().size()});

    // gcd over K[g] of the per-t-coefficient quadratics a g^2 + b g + c
    QPoly acc; // polynomial in g
    for (std::size_t i = 0; i < terms; ++i) {
        QPoly gi(std::vector<QuadExt>{r.coeff(i), -B.coeff(i), dprime.coeff(i)});
        if (gi.is_zero()) continue;
        acc = acc.is_zero() ? gi.monic() : QPoly::gcd(acc, gi);
        if (acc.is_constant()) return {{}, true};
    }
    // r != 0 guarantees some nonzero quadratic above
    ScalarSolutions out{{}, true};
    if (acc.degree() == 1) {
        QuadExt g = -acc.coeff(0) / acc.coeff(1);
        if (!g.is_zero()) out.gammas.push_back(g);
        return out;
    }
    auto roots = quad_roots_ext(acc.coeff(2), acc.coeff(1), acc.coeff(0));
    if (!roots) {
        out.representable = false;
        return out;
    }
    for (const auto& g : *roots)
        if (!g.is_zero()) out.gammas.push_back(g);
    return out;
}

ScalarSolutions solve_scalar(const Poly& d, const AbelEquation& eq) { return solve_scalar(to_qpoly(d), eq); }

Int InvariantCurve::radicand() const
{
    for (const auto& c : p.coeffs())
        if (!c.is_rational()) return c.radicand();
    return 1;
}

CurveSet find_invariant_curves(const AbelEquation& eq, const EnumerationOptions& opt)
{
    CurveSet out;
    FactoredPoly fb = factor_base(eq.A);
    AdmissibleDegrees degs = admissible_degrees(eq);
    DivisorEnumeration en = enumerate_divisors(fb, degs.degrees, opt);
    out.complete = en.complete;
    out.notes = en.notes;

    for (const auto& d : en.divisors) {
        ScalarSolutions sols = solve_scalar(d, eq);
        if (!sols.representable) {
            out.complete = false;
            out.notes.push_back("scalar for divisor " + std::to_string(d.degree()) +
                                " needs a second radical; its curves are not representable");
        }
        for (const auto& g : sols.gammas) {
            InvariantCurve c;
            c.p = d * g;
            c.provenance = "divisor";
            c.separable = d.is_constant();
            out.curves.push_back(std::move(c));
        }
    }

    std::sort(out.curves.begin(), out.curves.end(),
              [](const InvariantCurve& a, const InvariantCurve& b) { return compare_polys(a.p, b.p) < 0; });
    out.curves.erase(std::unique(out.curves.begin(), out.curves.end(),
                                 [](const InvariantCurve& a, const InvariantCurve& b) { return a.p == b.p; }),
                     out.curves.end());
    return out;
}

PairStructure pair_structure(const Poly& p1, const Poly& p2, const AbelEquation& eq)
{
    if (p1.is_zero() || p2.is_zero()) throw input_error("curve polynomials must be nonzero");
    if (p1 == p2) throw input_error("pair_structure needs two distinct curves");
    if (!is_invariant(eq, p1) || !is_invariant(eq, p2))
        throw input_error("pair_structure inputs must be invariant curves of eq");

    PairStructure ps;
    ps.q = Poly::gcd(p1, p2);
    if (ps.q.is_constant())
        throw structure_error("invariant pair with coprime polynomials (contradicts non-coprimality lemma)");
    ps.s1 = p1.exact_div(ps.q);
    ps.s2 = p2.exact_div(ps.q);
    if (!Poly::gcd(ps.s1, ps.s2).is_constant())
        throw structure_error("gcd(s1, s2) != 1 after removing q");

    FactoredPoly qf = factor_poly(ps.q);
    Poly w = ps.s1 - ps.s2; // = C * prod q_i^gamma_i
    if (w.is_zero()) throw structure_error("s1 == s2 for distinct curves");
    Poly wmonic = Poly::constant(Rational(1));
    for (const auto& fac : qf.factors) {
        ps.q_factors.push_back(fac.poly);
        ps.delta.push_back(fac.multiplicity);
        unsigned mult = 0;
        Poly rest = w;
        for (;;) {
            auto [quo, rem] = Poly::divmod(rest, fac.poly);
            if (!rem.is_zero()) break;
            rest = quo;
            ++mult;
        }
        ps.gamma.push_back(mult);
        wmonic *= fac.poly.pow(mult);
    }
    Poly cpoly = w.exact_div(wmonic);
    if (!cpoly.is_constant() || cpoly.is_zero())
        throw structure_error("s1 - s2 is not C times a product of q's irreducible factors");
    ps.C = cpoly.coeff(0);

    Poly qs1s2 = ps.q * ps.s1 * ps.s2;
    auto [s, rem] = Poly::divmod(eq.A, qs1s2);
    if (!rem.is_zero()) throw structure_error("A is not divisible by q*s1*s2");
    ps.s = s;

    // the displayed identity for s, rebuilt from the factor data
    Poly gcd_qq = Poly::gcd(ps.q, ps.q.derivative());
    Poly sum = Poly::zero();
    for (std::size_t i = 0; i < ps.q_factors.size(); ++i) {
        Poly term = Poly::constant(Rational(long(ps.delta[i] + ps.gamma[i]))) * ps.q_factors[i].derivative();
        for (std::size_t j = 0; j < ps.q_factors.size(); ++j)
            if (j != i) term *= ps.q_factors[j];
        sum += term;
    }
    if (ps.s != gcd_qq * sum) throw structure_error("cofactor divisor fails the displayed s identity");
    if (!(ps.s.deg() == Degree::of(ps.q.degree() - 1)))
        throw structure_error("deg(s) != deg(q) - 1");
    return ps;
}

namespace {

// polynomial square root of F (+ free constant term) over Q or Q(sqrt(D)):
// p with p^2 - F constant, p of degree m = deg(F)/2
std::optional<QPoly> poly_sqrt_up_to_constant(const Poly& F)
{
    if (F.is_zero() || F.degree() % 2 != 0 || F.degree() == 0) return std::nullopt;
    const int m = F.degree() / 2;
    QuadExt lead = QuadExt::sqrt_rational(F.lead());
    std::vector<QuadExt> p(std::size_t(m) + 1, QuadExt(0));
    p[m] = lead;
    QPoly Fq = to_qpoly(F);
    for (int k = m - 1; k >= 0; --k) {
        // coefficient of t^(m+k) in p^2 is 2 p_m p_k + sum over k < i,j < m
        QuadExt acc(0);
        for (int i = k + 1; i < m; ++i) acc += p[std::size_t(i)] * p[std::size_t(m + k - i)];
        p[std::size_t(k)] = (Fq.coeff(std::size_t(m + k)) - acc) / (QuadExt(2) * lead);
    }
    return QPoly(std::move(p));
}

} // namespace

std::optional<ProportionalPair> detect_proportional(const AbelEquation& eq)
{
    if (eq.B.is_zero()) {
        // K = -1: A = -p p', so p^2 = -2 * int(A) + const
        Poly F = -(Rational(2) * eq.A.integral());
        auto p = poly_sqrt_up_to_constant(F);
        if (!p) return std::nullopt;
        if (!(*p * p->derivative() + to_qpoly(eq.A)).is_zero()) return std::nullopt;
        QPoly cand = *p;
        const QuadExt& l = cand.lead();
        int reprsign = l.rational_part().is_zero() ? l.radical_part().sign() : l.rational_part().sign();
        if (reprsign < 0) cand = -cand; // canonical sign for the p <-> -p ambiguity
        return ProportionalPair{cand, QuadExt(Rational(-1)), true};
    }
    // K != -1: p = ((K+1)/K) A/B and B = mu u' with u = A/B, mu = (K+1)^2/K
    auto [u, rem] = Poly::divmod(eq.A, eq.B);
    if (!rem.is_zero() || u.is_constant()) return std::nullopt;
    Poly uprime = u.derivative();
    Rational mu = eq.B.lead() / uprime.lead();
    if (eq.B != Poly::constant(mu) * uprime) return std::nullopt;

    std::vector<QuadExt> ks = quad_roots(Rational(1), Rational(2) - mu, Rational(1));
    std::sort(ks.begin(), ks.end(), [](const QuadExt& a, const QuadExt& b) { return QuadExt::cmp(b, a) < 0; });
    QPoly uq = to_qpoly(u);
    for (const auto& K : ks) {
        if (K.is_zero() || K.is_one()) continue;
        QPoly p = uq * ((K + QuadExt(1)) / K);
        if ((p * p.derivative() * K - to_qpoly(eq.A)).is_zero() &&
            (p.derivative() * (K + QuadExt(1)) - to_qpoly(eq.B)).is_zero())
            return ProportionalPair{p, K, false};
    }
    return std::nullopt;
}

} // namespace abel
