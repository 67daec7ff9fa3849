#include "abel/cli.hpp"

#include <map>
#include <ostream>

#include <CLI11.hpp>

#include "abel/parse.hpp"
#include "abel/report.hpp"

namespace abel {

namespace {

AbelEquation parse_equation(const std::string& a, const std::string& b)
{
    Poly A = parse_poly(a);
    Poly B = parse_poly(b);
    return AbelEquation(A, B); // throws input_error when A = 0
}

std::map<std::string, Rational> parse_params(const std::vector<std::string>& kvs)
{
    std::map<std::string, Rational> params;
    for (const auto& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw input_error("--param expects key=value, got '" + kv + "'");
        params[kv.substr(0, eq)] = Rational::from_string(kv.substr(eq + 1));
    }
    return params;
}

Backend parse_backend(const std::string& name)
{
    if (name == "divisor") return Backend::Divisor;
    if (name == "ideal") return Backend::Ideal;
    if (name == "both") return Backend::Both;
    throw input_error("unknown backend '" + name + "' (divisor|ideal|both)");
}

void emit_report(const SolveReport& rep, bool json, std::ostream& out)
{
    out << (json ? report_to_json(rep) : report_to_text(rep));
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"exact rational solutions x = -1/p(t) of x' = A(t)x^3 + B(t)x^2"};
    app.require_subcommand(1);

    std::string a_expr, b_expr, p_expr, backend = "divisor", instance_id, ringname = "r";
    std::vector<std::string> params;
    bool json = false, singular = false;
    int n = 0, degB = 0, m = -1;
    std::size_t budget = 10000;

    auto* solve = app.add_subcommand("solve", "find all invariant curves and analyze integrability");
    solve->add_option("--A", a_expr, "cubic coefficient A(t)")->required();
    solve->add_option("--B", b_expr, "quadratic coefficient B(t)")->required();
    solve->add_option("--backend", backend, "divisor|ideal|both (default divisor)");
    solve->add_option("--spair-budget", budget, "S-pair budget for the ideal backend");
    solve->add_flag("--json", json, "machine-readable output");

    auto* check = app.add_subcommand("check", "test one candidate curve 1 + p x = 0");
    check->add_option("--A", a_expr)->required();
    check->add_option("--B", b_expr)->required();
    check->add_option("--p", p_expr)->required();

    auto* bound = app.add_subcommand("bound", "Theorem A bound on the number of curves");
    bound->add_option("--n", n, "deg A")->required();
    bound->add_option("--degB", degB, "deg B (negative for B = 0)")->required();

    auto* family = app.add_subcommand("family", "instantiate a named instance and solve it");
    family->add_option("--id", instance_id, "instance id (see README)")->required();
    family->add_option("--param", params, "key=value, repeatable");
    family->add_option("--backend", backend, "divisor|ideal|both");
    family->add_flag("--json", json);

    auto* ideal = app.add_subcommand("ideal", "coefficient ideal of p p' + A - B p");
    ideal->add_option("--A", a_expr)->required();
    ideal->add_option("--B", b_expr)->required();
    ideal->add_option("--m", m, "degree of the generic p (default (n+1)/2 for odd n)");
    ideal->add_flag("--emit-singular", singular, "print a Singular script instead of the listing");
    ideal->add_option("--ring", ringname, "ring name for the Singular script");

    try {
        std::vector<std::string> argv(args);
        app.parse(argv.empty() ? std::vector<std::string>{"--help"} : argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (solve->parsed()) {
            SolveOptions opt;
            opt.backend = parse_backend(backend);
            opt.spair_budget = budget;
            emit_report(solve_report(parse_equation(a_expr, b_expr), opt), json, out);
            return 0;
        }
        if (check->parsed()) {
            AbelEquation eq = parse_equation(a_expr, b_expr);
            Poly p = parse_poly(p_expr);
            Poly res = condinv_residual(eq, p);
            out << "residual: " << format_poly(res) << "\n";
            out << "verdict: " << (res.is_zero() ? "invariant" : "not invariant") << "\n";
            return 0;
        }
        if (bound->parsed()) {
            out << max_curve_bound(n, degB).get_str() << "\n";
            return 0;
        }
        if (family->parsed()) {
            AbelEquation eq = named_instance(instance_id, parse_params(params));
            out << "A = " << format_poly(eq.A) << "\n";
            out << "B = " << format_poly(eq.B) << "\n";
            SolveOptions opt;
            opt.backend = parse_backend(backend);
            emit_report(solve_report(eq, opt), json, out);
            return 0;
        }
        if (ideal->parsed()) {
            AbelEquation eq = parse_equation(a_expr, b_expr);
            if (m < 0) {
                if (eq.n() % 2 == 0)
                    throw input_error("--m is required when deg A is even");
                m = (eq.n() + 1) / 2;
            }
            IdealBasis basis = build_condinv_system(eq, m);
            if (singular) {
                out << emit_singular(basis, ringname);
            } else {
                for (std::size_t i = 0; i < basis.generators.size(); ++i)
                    out << "f" << i << " = " << basis.generators[i].to_string() << "\n";
            }
            return 0;
        }
    } catch (const parse_error& e) {
        err << "parse error at line " << e.line << ", column " << e.column << ": " << e.what() << "\n";
        return 2;
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const mismatch_error& e) {
        err << "backend mismatch: " << e.what() << "\n";
        return 3;
    } catch (const resource_error& e) {
        err << "resource budget exceeded: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace abel
