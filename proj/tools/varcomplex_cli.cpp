// varcomplex command line: derivations and symmetry checks for the built-in
// and user-supplied scenarios. Exit codes: 0 ok / check passed, 1 check
// failed, 2 usage or parse error, 3 resource bound exceeded.

#include <CLI11.hpp>
#include <iostream>

#include "varcomplex/calculus.hpp"
#include "varcomplex/render.hpp"
#include "varcomplex/scenario.hpp"
#include "varcomplex/selfcheck.hpp"
#include "varcomplex/system.hpp"

using namespace varcomplex;

namespace {

Style parse_style(const std::string& s) {
    if (s == "plain") return Style::Plain;
    if (s == "latex") return Style::Latex;
    if (s == "ast") return Style::Ast;
    throw StructuralError("unknown format '" + s + "' (plain|latex|ast)");
}

struct Options {
    std::string format = "plain";
    std::string scenario_file;
    int dim = 0;
    std::size_t max_terms = 500000;
};

Scenario load(const Options& opt, const std::string& name) {
    set_term_limit(opt.max_terms);
    if (!opt.scenario_file.empty()) return load_scenario(opt.scenario_file, opt.dim);
    return load_scenario(name, opt.dim);
}

const KillingField& killing_of(const Scenario& sc, const std::string& name) {
    const auto& ks = sc.scalar().killings;
    auto it = ks.find(name);
    if (it == ks.end())
        throw StructuralError("unknown killing field '" + name + "' in scenario " + sc.name);
    return it->second;
}

int print_check(const CheckResult& r, const NameContext& ctx, Style style, const char* what) {
    if (r.ok) {
        std::cout << what << ": verified\n";
        return 0;
    }
    std::cout << what << ": FAILED\nresidual = " << render_form(r.residual, ctx, style) << "\n";
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"varcomplex: covariant variational bicomplex engine"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "output format: plain|latex|ast");
    app.add_option("--scenario-file", opt.scenario_file, "load the scenario from a file");
    app.add_option("--dim", opt.dim, "dimension for parametric scenarios");
    app.add_option("--max-terms", opt.max_terms, "term-count safety bound");

    std::string scenario, killing, killing2, quantity = "el";

    auto* derive = app.add_subcommand("derive-el", "derive the Euler-Lagrange form");
    derive->add_option("scenario", scenario)->required();

    auto* sympl = app.add_subcommand("symplectic", "derive the subsymplectic density");
    sympl->add_option("scenario", scenario)->required();

    auto* mom = app.add_subcommand("momentum", "derive a momentum map");
    mom->add_option("scenario", scenario)->required();
    mom->add_option("killing", killing)->required();

    auto* inv = app.add_subcommand("check-invariance", "check Lie_X L = 0");
    inv->add_option("scenario", scenario)->required();
    inv->add_option("killing", killing)->required();

    auto* noe = app.add_subcommand("check-noether", "check Lie_A J_B = 0");
    noe->add_option("scenario", scenario)->required();
    noe->add_option("killingA", killing)->required();
    noe->add_option("killingB", killing2)->required();

    auto* ham = app.add_subcommand("check-hamilton", "check X|omega + DH = -(X|E)");
    ham->add_option("scenario", scenario)->required();
    ham->add_option("killing", killing)->required();

    auto* comp = app.add_subcommand("components", "Hamiltonian vector field component equations");
    comp->add_option("scenario", scenario)->required();
    comp->add_option("killing", killing)->required();

    auto* rend = app.add_subcommand("render", "render a derived quantity");
    rend->add_option("scenario", scenario)->required();
    rend->add_option("quantity", quantity,
                     "lagrangian|theta|total|el|omega|momentum:<killing>|scenario");

    auto* self = app.add_subcommand("selftest", "run the property suites");
    int iterations = 1000;
    self->add_option("--iterations", iterations, "iterations per suite");

    auto* list = app.add_subcommand("list", "list built-in scenarios");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (list->parsed()) {
            for (const auto& n : scenario_names()) std::cout << n << "\n";
            return 0;
        }
        if (self->parsed()) {
            auto results = run_property_suites(iterations);
            bool all = true;
            for (const auto& r : results) {
                std::cout << (r.ok ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.iterations
                          << " iterations)";
                if (!r.ok) std::cout << " -- " << r.detail;
                std::cout << "\n";
                all = all && r.ok;
            }
            return all ? 0 : 1;
        }

        Scenario sc = load(opt, scenario);
        NameContext ctx = sc.names();
        Style style = parse_style(opt.format);

        if (sc.is_matrix()) {
            const MatrixScenario& ms = sc.matrix();
            GaugeKilling X(ms.sys.dim);
            if (derive->parsed()) {
                TraceExpr el = trace(mf_vertical_diff(ms.sys.L) + mf_horizontal_diff(ms.sys.theta));
                std::cout << render_trace(el, ctx, style) << "\n";
                return 0;
            }
            if (sympl->parsed()) {
                TraceExpr w = trace(mf_vertical_diff(ms.sys.theta));
                std::cout << render_trace(w, ctx, style) << "\n";
                return 0;
            }
            if (mom->parsed()) {
                if (ms.killings.empty() ||
                    std::find(ms.killings.begin(), ms.killings.end(), killing) ==
                        ms.killings.end())
                    throw StructuralError("unknown killing field '" + killing + "'");
                TraceExpr j = trace(X.contract(ms.sys.total()));
                std::cout << render_trace(j, ctx, style) << "\n";
                return 0;
            }
            if (inv->parsed()) {
                TraceExpr r = trace(mf_lie_total(X, ms.sys.total()));
                if (r.is_zero()) {
                    std::cout << "invariance: verified\n";
                    return 0;
                }
                std::cout << "invariance: FAILED\nresidual = " << render_trace(r, ctx, style)
                          << "\n";
                return 1;
            }
            if (rend->parsed()) {
                if (quantity == "scenario") {
                    std::cout << render_scenario(sc);
                    return 0;
                }
                TraceExpr out(ms.sys.dim);
                if (quantity == "lagrangian") {
                    out = trace(ms.sys.L);
                } else if (quantity == "theta") {
                    out = trace(ms.sys.theta);
                } else if (quantity == "total") {
                    out = trace(ms.sys.total());
                } else if (quantity == "el") {
                    out = trace(mf_vertical_diff(ms.sys.L) + mf_horizontal_diff(ms.sys.theta));
                } else if (quantity == "omega") {
                    out = trace(mf_vertical_diff(ms.sys.theta));
                } else if (quantity.rfind("momentum:", 0) == 0) {
                    out = trace(X.contract(ms.sys.total()));
                } else {
                    throw StructuralError("unknown quantity '" + quantity + "'");
                }
                std::cout << render_trace(out, ctx, style) << "\n";
                return 0;
            }
            throw StructuralError("this check is not available for matrix scenarios");
        }

        const LagrangianSystem& sys = sc.scalar().sys;
        if (derive->parsed()) {
            std::cout << render_form(euler_lagrange(sys), ctx, style) << "\n";
            return 0;
        }
        if (sympl->parsed()) {
            std::cout << render_form(symplectic_density(sys), ctx, style) << "\n";
            return 0;
        }
        if (mom->parsed()) {
            Form j = momentum_map(sys, killing_of(sc, killing));
            CheckResult invr = invariance_check(sys, killing_of(sc, killing));
            if (!invr.ok)
                std::cerr << "warning: " << killing << " is not a symmetry of " << sc.name << "\n";
            std::cout << render_form(j, ctx, style) << "\n";
            return 0;
        }
        if (inv->parsed())
            return print_check(invariance_check(sys, killing_of(sc, killing)), ctx, style,
                               "invariance");
        if (noe->parsed())
            return print_check(
                noether_check(sys, killing_of(sc, killing), killing_of(sc, killing2)), ctx, style,
                "noether");
        if (ham->parsed()) {
            HamiltonReport rep = hamilton_identity(sys, killing_of(sc, killing));
            for (const auto& [b, f] : rep.components)
                std::cout << "component (" << b.p << "," << b.q
                          << "): " << render_form(f, ctx, style) << "\n";
            if (rep.ok) {
                std::cout << "hamilton identity: verified\n";
                return 0;
            }
            std::cout << "hamilton identity: FAILED\nlhs = " << render_form(rep.lhs, ctx, style)
                      << "\nrhs = " << render_form(rep.rhs, ctx, style) << "\n";
            return 1;
        }
        if (comp->parsed()) {
            const KillingField& X = killing_of(sc, killing);
            DynamicalSymplectic W = total_symplectic(sys);
            Form alpha = momentum_map(sys, X);
            auto cs = hamiltonian_vf_components(W, X, alpha);
            const char* labels[4] = {"(a) (X|E)^{0,n} + d a^{0,n-1}",
                                     "(b) (X|E)^{1,n-1} + (X|w)^{1,n-1} + d a^{1,n-2} + del a^{0,n-1}",
                                     "(c) (X|w)^{2,n-2} + d a^{2,n-3} + del a^{1,n-2}",
                                     "(d) del a^{2,n-3}"};
            bool all = true;
            for (int k = 0; k < 4; ++k) {
                std::cout << labels[k] << " = " << render_form(cs[k], ctx, style) << "\n";
                all = all && cs[k].is_zero();
            }
            std::cout << (all ? "hamiltonian vector field: verified\n"
                              : "hamiltonian vector field: FAILED\n");
            return all ? 0 : 1;
        }
        if (rend->parsed()) {
            if (quantity == "scenario") {
                std::cout << render_scenario(sc);
                return 0;
            }
            Form out(sys.dim);
            if (quantity == "lagrangian") {
                out = sys.L;
            } else if (quantity == "theta") {
                out = sys.theta;
            } else if (quantity == "total") {
                out = sys.total_lagrangian();
            } else if (quantity == "el") {
                out = euler_lagrange(sys);
            } else if (quantity == "omega") {
                out = symplectic_density(sys);
            } else if (quantity.rfind("momentum:", 0) == 0) {
                out = momentum_map(sys, killing_of(sc, quantity.substr(9)));
            } else {
                throw StructuralError("unknown quantity '" + quantity + "'");
            }
            std::cout << render_form(out, ctx, style) << "\n";
            return 0;
        }
        throw StructuralError("no subcommand handled");
    } catch (const ResourceError& e) {
        std::cerr << "resource bound exceeded: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
