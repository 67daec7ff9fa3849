#include "abel/families.hpp"

#include <algorithm>

namespace abel {

namespace {

Poly lin(const Rational& c0, const Rational& c1) { return Poly(std::vector<Rational>{c0, c1}); }

Poly cofactor_divisor(const FactoredPoly& qf, const std::vector<unsigned>& gamma)
{
    // s = gcd(q, q') * sum (delta_i + gamma_i) q_i' prod_{j != i} q_j
    Poly q = Poly::constant(Rational(1));
    for (const auto& f : qf.factors) q *= f.poly.pow(f.multiplicity);
    Poly gcd_qq = q.is_constant() ? Poly::constant(Rational(1)) : Poly::gcd(q, q.derivative());
    Poly sum;
    for (std::size_t i = 0; i < qf.factors.size(); ++i) {
        Poly term = Poly::constant(Rational(long(qf.factors[i].multiplicity + gamma[i]))) *
                    qf.factors[i].poly.derivative();
        for (std::size_t j = 0; j < qf.factors.size(); ++j)
            if (j != i) term *= qf.factors[j].poly;
        sum += term;
    }
    return gcd_qq * sum;
}

} // namespace

GeneratedPair generate_pair(const FamilySpec& spec)
{
    if (spec.q.is_constant()) throw input_error("q must be non-constant");
    if (spec.q.lead() != Rational(1)) throw input_error("q must be monic");
    if (spec.C.is_zero()) throw input_error("C must be nonzero");

    FactoredPoly qf = factor_poly(spec.q);
    if (spec.gamma.size() != qf.factors.size())
        throw input_error("gamma length must match the number of distinct irreducible factors of q (" +
                          std::to_string(qf.factors.size()) + ")");

    Poly tilde_q = Poly::constant(Rational(1));
    for (std::size_t i = 0; i < qf.factors.size(); ++i) tilde_q *= qf.factors[i].poly.pow(spec.gamma[i]);

    Poly s1 = spec.s2 + Poly::constant(spec.C) * tilde_q;
    Poly s = cofactor_divisor(qf, spec.gamma);
    Poly A = spec.q * s1 * spec.s2 * s;
    if (A.is_zero()) throw input_error("degenerate family: A = 0 (is s2 zero, or s1 forced to zero?)");
    Poly B = (spec.q * s1).derivative() + spec.s2 * s;

    GeneratedPair out{AbelEquation(A, B), spec.q * s1, spec.q * spec.s2, s1, s};
    if (!is_invariant(out.eq, out.p1) || !is_invariant(out.eq, out.p2))
        throw structure_error("generated pair fails the invariance residual");
    return out;
}

AbelEquation proportional_family(const Poly& p, const Rational& K)
{
    if (p.is_constant()) throw input_error("p must be non-constant");
    if (K.is_zero() || K.is_one()) throw input_error("K must lie outside {0, 1}");
    Poly A = Poly::constant(K) * p.derivative() * p;
    Poly B = Poly::constant(K + Rational(1)) * p.derivative();
    AbelEquation eq(A, B);
    if (!is_invariant(eq, p) || !is_invariant(eq, Poly::constant(K) * p))
        throw structure_error("proportional pair fails the invariance residual");
    return eq;
}

namespace {

Rational need(const std::map<std::string, Rational>& params, const std::string& key)
{
    auto it = params.find(key);
    if (it == params.end()) throw input_error("missing parameter '" + key + "'");
    return it->second;
}

long need_integer(const std::map<std::string, Rational>& params, const std::string& key, long lo)
{
    Rational v = need(params, key);
    if (!v.is_integer() || !v.num().fits_slong_p() || v.num().get_si() < lo)
        throw input_error("parameter '" + key + "' must be an integer >= " + std::to_string(lo));
    return v.num().get_si();
}

AbelEquation example_4_4()
{
    Poly A = Poly::constant(Rational(4)) * lin(-1, 1) * Poly::variable() * lin(1, 1) * lin(-1, 3) * lin(2, 3);
    Poly B = Poly::constant(Rational(6)) * Poly(std::vector<Rational>{-1, 1, 4});
    return AbelEquation(A, B);
}

AbelEquation example_4_7(const std::map<std::string, Rational>& params)
{
    Rational c1 = need(params, "c1"), C = need(params, "C"), z = need(params, "z");
    if (c1.is_zero()) throw input_error("example-4.7 requires c1 != 0");
    // compatible (C/c1, z) combinations from the paper's elimination table
    static const std::vector<std::pair<Rational, std::vector<Rational>>> table = {
        {Rational(1, 3), {Rational(-5, 3), Rational(-7, 9), Rational(0), Rational(1, 3)}},
        {Rational(-2), {Rational(0), Rational(1, 3), Rational(3)}},
        {Rational(-1, 2), {Rational(-3), Rational(-1, 2), Rational(-5, 3), Rational(0)}},
        {Rational(2, 3), {Rational(5, 3), Rational(7, 9), Rational(2, 3)}},
    };
    Rational kappa = C / c1;
    bool ok = false;
    for (const auto& [k, zs] : table)
        if (k == kappa) ok = std::find(zs.begin(), zs.end(), z) != zs.end();
    if (!ok)
        throw input_error("example-4.7: (C, z) outside the paper's 14 compatible combinations "
                          "(C/c1 in {1/3, -2, -1/2, 2/3} with its listed z values)");

    Poly A = Poly::constant(-c1) * lin(-1, 1) * lin(1, 1) * lin(1, 3) * lin(-z, 1) *
             lin(c1 * z - C, C - c1);
    Poly B(std::vector<Rational>{-c1 * z - c1 + C, c1 + Rational(2) * C - Rational(5) * c1 * z,
                                 Rational(6) * c1 - Rational(3) * C});
    return AbelEquation(A, B);
}

AbelEquation example_4_8(const std::map<std::string, Rational>& params)
{
    Rational z1 = need(params, "z1"), z2 = need(params, "z2");
    if (z1 != z2 + Rational(2) && z1 != z2 - Rational(9))
        throw input_error("example-4.8 requires z1 = z2+2 or z1 = z2-9");
    Poly A = lin(-z1, 1) * lin(-z2, 1) * lin(-z2 + Rational(3), 1) * lin(-z2 + Rational(6), 1) *
             lin(-z2 + Rational(8), 1) * lin(-z2 + Rational(18), 1) *
             lin(-z2 - Rational(2) * z1 + Rational(18), 3);
    Rational b3(7);
    Rational b2 = -(Rational(16) * z2 + Rational(5) * z1 - Rational(123));
    Rational b1 = Rational(11) * z2 * z2 + Rational(10) * z1 * z2 - Rational(176) * z2 -
                  Rational(70) * z1 + Rational(504);
    Rational b0 = -Rational(2) * z2 * z2 * z2 - Rational(5) * z1 * z2 * z2 + Rational(53) * z2 * z2 +
                  Rational(70) * z1 * z2 - Rational(324) * z2 - Rational(180) * z1 + Rational(324);
    return AbelEquation(A, Poly(std::vector<Rational>{b0, b1, b2, b3}));
}

AbelEquation n5_case(const std::string& id, const std::map<std::string, Rational>& params)
{
    Rational c1 = need(params, "c1"), C = need(params, "C");
    if (c1.is_zero()) throw input_error(id + " requires c1 != 0");
    if (C.is_zero()) throw input_error(id + " requires C != 0");
    const char variant = id.back(); // a, b, c
    const char grp = id[id.size() - 2]; // 1, 2, 3

    if (grp == '1' || grp == '2') {
        Rational z = need(params, "z");
        Poly q = grp == '1' ? Poly(std::vector<Rational>{-1, 0, 1}) : Poly(std::vector<Rational>{0, 0, 1});
        Poly s1 = Poly::constant(c1) * lin(-z, 1);
        FamilySpec spec;
        spec.q = q;
        spec.C = C;
        if (variant == 'a') {
            spec.s2 = s1 - Poly::constant(C);
            spec.gamma.assign(grp == '1' ? 2 : 1, 0);
        } else {
            if (C == c1) throw input_error(id + " requires C != c1");
            if (grp == '1') {
                // difference C*(t+pm); factor order in t^2-1 is (t-1), (t+1)
                Rational pm = need(params, "pm");
                if (pm != Rational(1) && pm != Rational(-1)) throw input_error("pm must be +1 or -1");
                spec.s2 = s1 - Poly::constant(C) * lin(pm, 1);
                spec.gamma = pm == Rational(1) ? std::vector<unsigned>{0, 1} : std::vector<unsigned>{1, 0};
            } else {
                spec.s2 = s1 - Poly::constant(C) * Poly::variable();
                spec.gamma = {1};
            }
        }
        return generate_pair(spec).eq;
    }

    // group 3: q = t - z, s1 = c1 (t^2 + w)
    Rational z = need(params, "z"), w = need(params, "w");
    if (w != Rational(-1) && w != Rational(0)) throw input_error("w must be -1 (s1 = c1(t^2-1)) or 0 (s1 = c1 t^2)");
    Poly q = lin(-z, 1);
    Poly s1 = Poly::constant(c1) * Poly(std::vector<Rational>{w, 0, 1});
    unsigned gamma = variant == 'a' ? 0u : variant == 'b' ? 1u : 2u;
    if (variant == 'c' && C == c1) throw input_error(id + " requires C != c1");
    FamilySpec spec;
    spec.q = q;
    spec.s2 = s1 - Poly::constant(C) * q.pow(gamma);
    spec.C = C;
    spec.gamma = {gamma};
    return generate_pair(spec).eq;
}

} // namespace

std::vector<std::string> named_instance_ids()
{
    return {"example-4.4",    "example-4.7",    "example-4.8",    "remark-2.6",  "remark-2.14",
            "prop-4.2-case1", "prop-4.2-case2", "n5-case-1a",     "n5-case-1b",  "n5-case-2a",
            "n5-case-2b",     "n5-case-3a",     "n5-case-3b",     "n5-case-3c"};
}

AbelEquation named_instance(const std::string& id, const std::map<std::string, Rational>& params)
{
    if (id == "example-4.4") return example_4_4();
    if (id == "example-4.7") return example_4_7(params);
    if (id == "example-4.8") return example_4_8(params);
    if (id == "remark-2.6") {
        long n = need_integer(params, "n", 2);
        FamilySpec spec;
        spec.q = Poly::variable();
        spec.s2 = Poly::constant(Rational(1)) - Poly::monomial(unsigned(n - 1), Rational(1));
        spec.C = Rational(1);
        spec.gamma = {unsigned(n - 1)};
        return generate_pair(spec).eq;
    }
    if (id == "remark-2.14") {
        long m = need_integer(params, "m", 2);
        FamilySpec spec;
        spec.q = Poly::variable();
        spec.s2 = Poly::constant(Rational(1)) - Poly::monomial(unsigned(m - 1), Rational(1)) -
                  Poly::monomial(unsigned(m + 1), Rational(1));
        spec.C = Rational(1);
        spec.gamma = {unsigned(m + 1)};
        return generate_pair(spec).eq;
    }
    if (id == "prop-4.2-case1" || id == "prop-4.2-case2") {
        Rational qc = need(params, "qc"), c1 = need(params, "c1"), s0 = need(params, "s0"),
                 C = need(params, "C");
        if (c1.is_zero()) throw input_error(id + " requires c1 != 0");
        Poly q = lin(qc, 1), s1 = lin(s0, c1);
        CubicVariant v =
            id == "prop-4.2-case1" ? CubicVariant::ConstantDifference : CubicVariant::QMultipleDifference;
        return classify_cubic(q, s1, C, v).eq;
    }
    if (id.rfind("n5-case-", 0) == 0) return n5_case(id, params);
    throw input_error("unknown instance id '" + id + "'");
}

CubicClassification classify_cubic(const Poly& q, const Poly& s1, const Rational& C, CubicVariant variant)
{
    if (q.is_zero() || q.deg() != Degree::of(1) || q.lead() != Rational(1))
        throw input_error("q must be monic of degree 1");
    if (s1.is_zero() || s1.deg() != Degree::of(1)) throw input_error("s1 must have degree 1");
    if (C.is_zero()) throw input_error("C must be nonzero");
    const Rational c1 = s1.lead();
    if (variant == CubicVariant::QMultipleDifference && C == c1)
        throw input_error("q-multiple variant requires C != c1");

    Poly s2 = variant == CubicVariant::ConstantDifference ? s1 - Poly::constant(C)
                                                          : s1 - Poly::constant(C) * q;
    FamilySpec spec;
    spec.q = q;
    spec.s2 = s2;
    spec.C = C;
    spec.gamma = variant == CubicVariant::ConstantDifference ? std::vector<unsigned>{0}
                                                             : std::vector<unsigned>{1};
    GeneratedPair gen = generate_pair(spec);

    CubicClassification out{gen.eq, {}, {}, 0, {}, false};
    Poly p1 = gen.p1, p2 = gen.p2;
    std::vector<Poly> ws{p1, p2};
    const Rational half(1, 2);

    if (variant == CubicVariant::ConstantDifference) {
        Poly p3 = s1 * (s1 - Poly::constant(C)) * Poly::constant(c1.inverse());
        Rational E = c1 * q.coeff(0) - s1.coeff(0);
        if (E.is_zero()) {
            out.collision_notes.push_back("p3 coincides with p2 (s1 is proportional to q)");
        } else if (C == -E) {
            out.collision_notes.push_back("p3 coincides with p1 (s1 - C = c1 q)");
        } else {
            ws.push_back(p3);
            if (C == -E * half) ws.push_back(p1 * half);
            else if (C == E) ws.push_back(p2 * half);
            else if (C == Rational(-2) * E) ws.push_back(p3 * half);
        }
    } else {
        if (C == -c1) {
            ws.push_back(s1 * s2 * Poly::constant(c1.inverse()));
            ws.push_back(Poly::constant(Rational(2)) * q * s1);
        } else if (C == c1 * half) {
            ws.push_back(Poly::constant(Rational(2)) * q * s2);
            ws.push_back(Poly::constant(Rational(2)) * s1 * s2 * Poly::constant(c1.inverse()));
        }
    }

    std::sort(ws.begin(), ws.end(), [](const Poly& a, const Poly& b) { return compare_polys(a, b) < 0; });
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
    for (const auto& w : ws)
        if (!is_invariant(out.eq, w)) throw structure_error("predicted witness fails the residual");
    out.witnesses = ws;
    out.predicted_count = ws.size();

    CurveSet cs = find_invariant_curves(out.eq);
    for (const auto& c : cs.curves) {
        auto rp = to_rational_poly(c.p);
        if (rp) out.solver_curves.push_back(*rp);
    }
    out.agrees = cs.curves.size() == out.predicted_count && out.solver_curves.size() == out.predicted_count &&
                 std::equal(ws.begin(), ws.end(), out.solver_curves.begin());
    return out;
}

} // namespace abel
