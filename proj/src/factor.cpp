#include "abel/factor.hpp"

#include <algorithm>

#include "abel/intfactor.hpp"

namespace abel {

SquarefreeDecomposition squarefree_factor(const Poly& f)
{
    if (f.is_zero()) throw input_error("squarefree_factor(0)");
    SquarefreeDecomposition out;
    out.content = f.lead();
    Poly p = f.monic();
    if (p.is_constant()) return out;

    // Yun: a1 = p/gcd(p,p'), then peel one multiplicity level per round.
    Poly g = Poly::gcd(p, p.derivative());
    Poly b = p.exact_div(g);
    Poly c = p.derivative().exact_div(g);
    Poly d = c - b.derivative();
    for (unsigned i = 1; !b.is_constant(); ++i) {
        Poly a = Poly::gcd(b, d);
        if (!a.is_constant()) out.parts.push_back({a.monic(), i});
        b = b.exact_div(a);
        c = d.exact_div(a);
        d = c - b.derivative();
    }
    return out;
}

namespace {

// integer-coefficient primitive form: f * (lcm of denominators) / gcd
std::vector<Int> primitive_integer_coeffs(const Poly& f)
{
    Int lcm = 1;
    for (const auto& c : f.coeffs()) {
        Int d = c.den();
        Int g;
        mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
        lcm = lcm / g * d;
    }
    std::vector<Int> v;
    v.reserve(f.coeffs().size());
    Int content = 0;
    for (const auto& c : f.coeffs()) {
        Int x = c.num() * (lcm / c.den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
        v.push_back(x);
    }
    if (content > 1)
        for (auto& x : v) x /= content;
    return v;
}

} // namespace

std::vector<RationalRoot> rational_roots(const Poly& f)
{
    if (f.is_zero()) throw input_error("rational_roots(0)");
    std::vector<RationalRoot> out;
    Poly p = f;

    // factor out t^v first
    unsigned val = 0;
    while (!p.is_zero() && p.coeff(0).is_zero()) {
        p = p.exact_div(Poly::variable());
        ++val;
    }
    if (val) out.push_back({Rational(0), val});
    if (p.is_constant()) return out;

    auto ic = primitive_integer_coeffs(p);
    std::vector<Int> nums = positive_divisors(ic.front());
    std::vector<Int> dens = positive_divisors(ic.back());
    std::vector<Rational> candidates;
    for (const auto& n : nums)
        for (const auto& d : dens) {
            candidates.emplace_back(n, d);
            candidates.emplace_back(-n, d);
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (const auto& r : candidates) {
        if (!p.eval(r).is_zero()) continue;
        Poly lin(std::vector<Rational>{-r, Rational(1)});
        unsigned mult = 0;
        for (;;) {
            auto [q, rem] = Poly::divmod(p, lin);
            if (!rem.is_zero()) break;
            p = q;
            ++mult;
        }
        out.push_back({r, mult});
        if (p.is_constant()) break;
    }
    std::sort(out.begin(), out.end(), [](const RationalRoot& a, const RationalRoot& b) { return a.root < b.root; });
    return out;
}

namespace {

// Split a monic squarefree quartic with no rational roots into two monic
// rational quadratics if possible. Depress to t^4+P t^2+Q t+R via t -> t-s,
// then (t^2+ut+v)(t^2-ut+w): u^2 is a rational-square root of
// U^3 + 2P U^2 + (P^2-4R) U - Q^2.
std::optional<std::pair<Poly, Poly>> split_quartic(const Poly& f)
{
    Rational shift = f.coeff(3) / Rational(4);
    Poly dep = f.shifted(-shift); // roots moved by +shift
    Rational P = dep.coeff(2), Q = dep.coeff(1), R = dep.coeff(0);

    auto assemble = [&](const Rational& u, const Rational& v, const Rational& w) {
        Poly q1(std::vector<Rational>{v, u, Rational(1)});
        Poly q2(std::vector<Rational>{w, -u, Rational(1)});
        return std::make_pair(q1.shifted(shift), q2.shifted(shift));
    };

    if (Q.is_zero()) {
        // biquadratic: (t^2+v)(t^2+w), v+w = P, vw = R
        auto roots = quad_roots(Rational(1), -P, R);
        for (const auto& r : roots) {
            if (!r.is_rational()) continue;
            Rational v = r.rational_part();
            return assemble(Rational(0), v, P - v);
        }
        // fall through: may still split with u != 0 below
    }
    Poly res(std::vector<Rational>{-Q * Q, P * P - Rational(4) * R, Rational(2) * P, Rational(1)});
    for (const auto& rr : rational_roots(res)) {
        if (rr.root.sign() <= 0) continue;
        QuadExt u2 = QuadExt::sqrt_rational(rr.root);
        if (!u2.is_rational()) continue;
        Rational u = u2.rational_part();
        // v+w = P+u^2, w-v = Q/u
        Rational w = (P + u * u + Q / u) / Rational(2);
        Rational v = (P + u * u - Q / u) / Rational(2);
        return assemble(u, v, w);
    }
    return std::nullopt;
}

void push_factor(FactoredPoly& out, const Poly& p, unsigned mult)
{
    if (p.degree() == 1) {
        out.factors.push_back({p, mult, FactorKind::Linear, 1});
        return;
    }
    if (p.degree() == 2) {
        Rational disc = p.coeff(1) * p.coeff(1) - Rational(4) * p.coeff(2) * p.coeff(0);
        QuadExt s = QuadExt::sqrt_rational(disc);
        // irreducible over Q, so disc is not a rational square here
        out.factors.push_back({p, mult, FactorKind::Quadratic, s.radicand()});
        return;
    }
    out.factors.push_back({p, mult, FactorKind::Opaque, 1});
}

// monic squarefree block, no rational roots, degree >= 2
void factor_block(FactoredPoly& out, const Poly& block, unsigned mult)
{
    if (block.degree() == 2 || block.degree() == 3) {
        push_factor(out, block, mult); // no rational root => irreducible
        return;
    }
    if (block.degree() == 4) {
        if (auto split = split_quartic(block)) {
            push_factor(out, split->first.monic(), mult);
            push_factor(out, split->second.monic(), mult);
        } else {
            push_factor(out, block, mult);
        }
        return;
    }
    push_factor(out, block, mult);
}

} // namespace

FactoredPoly factor_poly(const Poly& f)
{
    if (f.is_zero()) throw input_error("factor_poly(0)");
    FactoredPoly out;
    auto sq = squarefree_factor(f);
    out.content = sq.content;
    for (const auto& part : sq.parts) {
        Poly rest = part.factor;
        for (const auto& rr : rational_roots(rest)) {
            Poly lin(std::vector<Rational>{-rr.root, Rational(1)});
            out.factors.push_back({lin, part.multiplicity, FactorKind::Linear, 1});
            rest = rest.exact_div(lin); // squarefree: each root once
        }
        if (!rest.is_constant()) factor_block(out, rest.monic(), part.multiplicity);
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const IrreducibleFactor& a, const IrreducibleFactor& b) {
        return compare_polys(a.poly, b.poly) < 0;
    });
    return out;
}

} // namespace abel
