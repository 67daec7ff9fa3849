#include "abel/report.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include <json.hpp>

#include "abel/parse.hpp"

namespace abel {

std::vector<QPoly> ideal_backend_curves(const AbelEquation& eq, std::size_t spair_budget, bool* complete,
                                        std::vector<std::string>* notes)
{
    bool ok = true;
    std::vector<QPoly> all;
    BuchbergerOptions bopt;
    bopt.spair_budget = spair_budget;
    for (int m : admissible_degrees(eq).degrees) {
        IdealBasis basis = buchberger(build_condinv_system(eq, m), bopt);
        ZeroDimSolution sol = solve_zero_dim(basis);
        if (!sol.complete) {
            ok = false;
            if (notes)
                notes->push_back("ideal backend at m = " + std::to_string(m) + ": " + sol.complete_over);
        }
        for (auto& p : points_to_curves(sol)) all.push_back(std::move(p));
    }
    std::sort(all.begin(), all.end(), [](const QPoly& a, const QPoly& b) { return compare_polys(a, b) < 0; });
    all.erase(std::unique(all.begin(), all.end()), all.end());
    if (complete) *complete = ok;
    return all;
}

SolveReport solve_report(const AbelEquation& eq, const SolveOptions& opt)
{
    auto t0 = std::chrono::steady_clock::now();

    SolveReport rep;
    rep.A = eq.A;
    rep.B = eq.B;
    rep.n = eq.n();
    rep.degB = eq.B.deg().value_or(-1);

    AdmissibleDegrees adm = admissible_degrees(eq);
    rep.admissible.assign(adm.degrees.begin(), adm.degrees.end());
    rep.excluded_half = adm.excluded_half;
    rep.bound = max_curve_bound(rep.n, rep.degB);

    std::vector<QPoly> curve_polys;
    if (opt.backend == Backend::Divisor || opt.backend == Backend::Both) {
        CurveSet cs = find_invariant_curves(eq);
        rep.complete = cs.complete;
        rep.notes = cs.notes;
        for (const auto& c : cs.curves) {
            rep.curves.push_back({c.p, c.provenance, c.separable});
            curve_polys.push_back(c.p);
        }
    }
    if (opt.backend == Backend::Ideal || opt.backend == Backend::Both) {
        bool complete = true;
        std::vector<std::string> notes;
        std::vector<QPoly> ideal_curves = ideal_backend_curves(eq, opt.spair_budget, &complete, &notes);
        if (opt.backend == Backend::Ideal) {
            rep.complete = complete;
            rep.notes = std::move(notes);
            for (const auto& p : ideal_curves) {
                rep.curves.push_back({p, "ideal", p.is_constant()});
                curve_polys.push_back(p);
            }
        } else {
            if (ideal_curves != curve_polys)
                throw mismatch_error("divisor and ideal backends disagree: " +
                                     std::to_string(curve_polys.size()) + " vs " +
                                     std::to_string(ideal_curves.size()) + " curves");
            for (auto& c : rep.curves) c.provenance = "both";
        }
    }

    if (Int(long(rep.curves.size())) > rep.bound)
        throw structure_error("curve count exceeds the Theorem A bound");

    if (!curve_polys.empty()) {
        try {
            auto basis = darboux_exponents(eq, curve_polys);
            rep.darboux_dimension = basis.size();
            for (const auto& b : basis) {
                rep.darboux_basis.push_back({b.alphas(), b.alpha0()});
                rep.darboux_verified = rep.darboux_verified && verify_first_integral(eq, b);
            }
            if (!basis.empty()) {
                auto disp = smallest_support_integral(eq, curve_polys);
                if (disp) rep.display_integral = DarbouxEntry{disp->alphas(), disp->alpha0()};
            }
        } catch (const unrepresentable_error& e) {
            rep.notes.push_back(std::string("darboux analysis skipped: ") + e.what());
        }
    }
    rep.theorem_c_ok = theorem_c_check(eq, rep.curves.size(), rep.darboux_dimension > 0);
    if (!rep.theorem_c_ok && rep.complete)
        throw structure_error("Theorem C violated: too many curves with no Darboux integral");

    rep.proportional = detect_proportional(eq);
    if (rep.proportional && rep.proportional->has_rational_first_integral)
        rep.rational_first_integral = "1/x^2 - (" + format_qpoly(rep.proportional->p) + ")^2";

    rep.timing_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

namespace {

nlohmann::json quadext_json(const QuadExt& x)
{
    if (x.is_rational()) return x.rational_part().to_string();
    return nlohmann::json{{"a", x.rational_part().to_string()},
                          {"b", x.radical_part().to_string()},
                          {"D", x.radicand().get_str()}};
}

nlohmann::json curve_json(const CurveEntry& c)
{
    nlohmann::json j;
    auto rat = to_rational_poly(c.p);
    j["degree"] = c.p.is_zero() ? -1 : c.p.degree();
    if (rat) {
        j["p"] = format_poly(*rat);
        j["field"] = "Q";
        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto& x : rat->coeffs()) coeffs.push_back(x.to_string());
        j["coefficients"] = coeffs;
    } else {
        Int d = 1;
        std::vector<Rational> pa, pb;
        for (const auto& x : c.p.coeffs()) {
            pa.push_back(x.rational_part());
            pb.push_back(x.radical_part());
            if (!x.is_rational()) d = x.radicand();
        }
        j["p"] = format_qpoly(c.p);
        j["p_a"] = format_poly(Poly(std::move(pa)));
        j["p_b"] = format_poly(Poly(std::move(pb)));
        j["field"] = "Q(sqrt(" + d.get_str() + "))";
        j["D"] = d.get_str();
        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto& x : c.p.coeffs()) coeffs.push_back(quadext_json(x));
        j["coefficients"] = coeffs;
    }
    j["provenance"] = c.provenance;
    j["separable"] = c.separable;
    return j;
}

nlohmann::json darboux_json(const DarbouxEntry& e)
{
    nlohmann::json alphas = nlohmann::json::array();
    for (const auto& a : e.alphas) alphas.push_back(quadext_json(a));
    return nlohmann::json{{"alphas", alphas}, {"alpha0", quadext_json(e.alpha0)}};
}

std::string render_integral(const SolveReport& rep, const DarbouxEntry& e)
{
    std::ostringstream os;
    os << "x^(" << e.alpha0.to_string() << ")";
    for (std::size_t i = 0; i < e.alphas.size(); ++i) {
        if (e.alphas[i].is_zero()) continue;
        os << " * (1+(" << format_qpoly(rep.curves[i].p) << ")*x)^(" << e.alphas[i].to_string() << ")";
    }
    return os.str();
}

} // namespace

std::string report_to_json(const SolveReport& rep)
{
    nlohmann::json j;
    j["schema"] = 1;
    j["equation"] = {{"A", format_poly(rep.A)},
                     {"B", format_poly(rep.B)},
                     {"n", rep.n},
                     {"degB", rep.degB}};
    nlohmann::json curves = nlohmann::json::array();
    for (const auto& c : rep.curves) curves.push_back(curve_json(c));
    j["curves"] = curves;
    j["curve_count"] = rep.curves.size();
    j["complete"] = rep.complete;
    j["notes"] = rep.notes;

    nlohmann::json darboux;
    darboux["dimension"] = rep.darboux_dimension;
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& b : rep.darboux_basis) basis.push_back(darboux_json(b));
    darboux["basis"] = basis;
    darboux["verified"] = rep.darboux_verified;
    if (rep.display_integral) {
        darboux["display"] = darboux_json(*rep.display_integral);
        darboux["integral"] = render_integral(rep, *rep.display_integral);
    }
    j["darboux"] = darboux;

    j["bound"] = {{"theorem_a", rep.bound.get_str()},
                  {"admissible_degrees", rep.admissible}};
    if (rep.excluded_half) j["bound"]["excluded_half"] = *rep.excluded_half;
    j["theorem_c_ok"] = rep.theorem_c_ok;

    if (rep.proportional) {
        nlohmann::json p;
        p["p"] = format_qpoly(rep.proportional->p);
        p["K"] = quadext_json(rep.proportional->K);
        if (!rep.rational_first_integral.empty()) p["rational_first_integral"] = rep.rational_first_integral;
        j["proportional"] = p;
    }
    j["timing_ms"] = rep.timing_ms;
    return j.dump() + "\n";
}

std::string report_to_text(const SolveReport& rep)
{
    std::ostringstream os;
    os << "equation: x' = (" << format_poly(rep.A) << ")*x^3 + (" << format_poly(rep.B) << ")*x^2\n";
    os << "n = " << rep.n << ", deg B = " << (rep.degB < 0 ? std::string("-inf") : std::to_string(rep.degB))
       << ", Theorem A bound = " << rep.bound.get_str() << "\n";
    os << "admissible curve degrees:";
    for (int d : rep.admissible) os << " " << d;
    if (rep.excluded_half) os << "  (degree " << *rep.excluded_half << " excluded)";
    os << "\n";
    os << "invariant curves (" << rep.curves.size() << (rep.complete ? ", complete" : ", possibly incomplete")
       << "):\n";
    for (const auto& c : rep.curves) {
        os << "  1 + (" << format_qpoly(c.p) << ")*x = 0";
        if (c.separable) os << "   [separable: constant p]";
        os << "\n";
    }
    for (const auto& n : rep.notes) os << "  note: " << n << "\n";
    os << "darboux: nullspace dimension " << rep.darboux_dimension;
    if (rep.darboux_dimension > 0) {
        os << (rep.darboux_verified ? " (all basis integrals verified)" : " (VERIFICATION FAILED)") << "\n";
        if (rep.display_integral) os << "  first integral: " << render_integral(rep, *rep.display_integral) << "\n";
    } else {
        os << " (no Darboux first integral of the product form over these curves)\n";
    }
    if (rep.proportional) {
        os << "proportional pair: p = " << format_qpoly(rep.proportional->p)
           << ", K = " << rep.proportional->K.to_string() << "\n";
        if (!rep.rational_first_integral.empty())
            os << "  rational first integral: " << rep.rational_first_integral << "\n";
    }
    os << "theorem C check: " << (rep.theorem_c_ok ? "ok" : "VIOLATED") << "\n";
    os << "time: " << rep.timing_ms << " ms\n";
    return os.str();
}

} // namespace abel
