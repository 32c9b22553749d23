// Acceptance suite: runs every acceptance criterion and prints one
// PASS/FAIL line per criterion. Exit code = number of failed criteria.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "varcomplex/calculus.hpp"
#include "varcomplex/render.hpp"
#include "varcomplex/scenario.hpp"
#include "varcomplex/selfcheck.hpp"
#include "varcomplex/system.hpp"

using namespace varcomplex;

namespace {

int failures = 0;

void criterion(int number, const std::string& what, const std::function<void()>& body) {
    try {
        body();
        std::printf("[PASS] criterion %d: %s\n", number, what.c_str());
    } catch (const std::exception& e) {
        ++failures;
        std::printf("[FAIL] criterion %d: %s -- %s\n", number, what.c_str(), e.what());
    }
    std::fflush(stdout);
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::runtime_error(msg);
}

ScalarExpr S(const Symbol& s) { return ScalarExpr::sym(s); }
ScalarExpr half() { return ScalarExpr::constant(CRat::frac(1, 2)); }

const Symbol phi0 = Symbol::jet("phi", {});
const Symbol phibar0 = Symbol::jet("phibar", {});

std::map<Symbol, ScalarExpr> kg_onshell() {
    ScalarExpr mu2 = S(Symbol::constant("mu")).pow(2);
    return {{Symbol::jet("phi", {0, 0}), S(Symbol::jet("phi", {1, 1})) - mu2 * S(phi0)},
            {Symbol::jet("phibar", {0, 0}),
             S(Symbol::jet("phibar", {1, 1})) - mu2 * S(phibar0)}};
}

std::string run_cli(const std::string& cli, const std::string& args, int* exit_code) {
    std::string cmd = cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("cannot spawn the CLI");
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int rc = pclose(pipe);
    if (exit_code) *exit_code = WEXITSTATUS(rc);
    return out;
}

} // namespace

int main() {
    criterion(1, "mechanics Euler-Lagrange form for a symbolic L(q, qdot, t)", [] {
        Scenario sc = load_scenario("mechanics", 0);
        Form el = euler_lagrange(sc.scalar().sys);
        Symbol q = Symbol::jet("q", {});
        Symbol qdot = Symbol::jet("q", {0});
        Symbol L = Symbol::func("L", {q, qdot, Symbol::coord(0, "t")});
        ScalarExpr coeff =
            total_derivative(partial_wrt_jet(S(L), qdot), 0) - partial_wrt_jet(S(L), q);
        Form expect = scale(coeff, wedge(Form::dx(1, 0), Form::contact(1, q)));
        require(el == expect, "canonical AST mismatch");
    });

    criterion(2, "Klein-Gordon Euler-Lagrange form with mixed-derivative cancellation", [] {
        for (int n : {2, 3, 4}) {
            Scenario sc = load_scenario("kg-abstract", n);
            const LagrangianSystem& sys = sc.scalar().sys;
            Form el = euler_lagrange(sys);
            ScalarExpr mu2 = S(Symbol::constant("mu")).pow(2);
            Form phibar = Form::scalar(n, S(phibar0));
            Form phi = Form::scalar(n, S(phi0));
            Form b1 = horizontal_diff(star(horizontal_diff(phibar), sys.hodge)) +
                      star(Form::scalar(n, mu2 * S(phibar0)), sys.hodge);
            Form b2 = horizontal_diff(star(horizontal_diff(phi), sys.hodge)) +
                      star(Form::scalar(n, mu2 * S(phi0)), sys.hodge);
            Form expect = scale(
                -half(), wedge(Form::contact(n, phi0), b1) + wedge(Form::contact(n, phibar0), b2));
            require(el == expect, "canonical AST mismatch at n=" + std::to_string(n));

            auto has_first_jet_contact = [](const Form& f) {
                for (const auto& [factors, c] : f.terms())
                    for (const auto& g : factors)
                        if (g.kind == Generator::Vertical && g.jet.index.size() == 1) return true;
                return false;
            };
            Form dL = vertical_diff(sys.L);
            Form dth = horizontal_diff(sys.theta);
            require(has_first_jet_contact(dL) && has_first_jet_contact(dth),
                    "mixed-derivative pair missing from the intermediates");
            require(!has_first_jet_contact(dL + dth), "mixed-derivative pair did not cancel");
        }
    });

    criterion(3, "Klein-Gordon symplectic density", [] {
        for (int n : {2, 4}) {
            Scenario sc = load_scenario("kg-abstract", n);
            const LagrangianSystem& sys = sc.scalar().sys;
            Form omega = symplectic_density(sys);
            Form ddphi = vertical_diff(horizontal_diff(Form::scalar(n, S(phi0))));
            Form ddphibar = vertical_diff(horizontal_diff(Form::scalar(n, S(phibar0))));
            Form expect =
                scale(-half(), wedge(Form::contact(n, phi0), star(ddphibar, sys.hodge)) +
                                   wedge(Form::contact(n, phibar0), star(ddphi, sys.hodge)));
            require(omega == expect, "canonical AST mismatch at n=" + std::to_string(n));
        }
    });

    criterion(4, "translation momentum map display, Hamilton identity, on-shell reduction", [] {
        Scenario sc = load_scenario("kg2d", 0);
        const LagrangianSystem& sys = sc.scalar().sys;
        const KillingField& X = sc.scalar().killings.at("translation");
        Form J2 = scale(ScalarExpr::constant(CRat(2)), momentum_map(sys, X));

        auto jet = [](const char* f, std::vector<int> idx) {
            return S(Symbol::jet(f, std::move(idx)));
        };
        ScalarExpr pt = jet("phi", {0}), px = jet("phi", {1});
        ScalarExpr bt = jet("phibar", {0}), bx = jet("phibar", {1});
        ScalarExpr p = jet("phi", {}), b = jet("phibar", {});
        ScalarExpr mu2 = S(Symbol::constant("mu")).pow(2);
        Form dt = Form::dx(2, 0), dx = Form::dx(2, 1);
        Form delphi = Form::contact(2, phi0), delphibar = Form::contact(2, phibar0);
        Form blockT = scale(pt * bt + px * bx + mu2 * p * b, dx) +
                      scale(px * bt + pt * bx, dt) + scale(px, delphibar) + scale(bx, delphi);
        Form blockX = scale(pt * bt + px * bx - mu2 * p * b, dt) +
                      scale(px * bt + pt * bx, dx) + scale(pt, delphibar) + scale(bt, delphi);
        Form expect = scale(S(Symbol::constant("At")), blockT) +
                      scale(S(Symbol::constant("Ax")), blockX);
        require(J2 == expect, "2J does not match the reference display");

        const KillingField& AH = sc.scalar().killings.at("ttrans");
        HamiltonReport rep = hamilton_identity(sys, AH);
        require(rep.ok, "Hamilton identity failed");
        auto eq = kg_onshell();
        require(on_shell_reduce(rep.lhs, eq).is_zero(), "lhs not annihilated on shell");
        require(on_shell_reduce(rep.rhs, eq).is_zero(), "rhs not annihilated on shell");
        for (const auto& [bd, comp] : rep.components)
            require(on_shell_reduce(comp, eq).is_zero(), "a component survived on shell");
    });

    criterion(5, "U(1) momentum map", [] {
        for (int n : {0, 4}) {
            Scenario sc = n == 0 ? load_scenario("kg2d", 0) : load_scenario("kg-abstract", n);
            const LagrangianSystem& sys = sc.scalar().sys;
            Form J = momentum_map(sys, sc.scalar().killings.at("u1"));
            ScalarExpr ia2 =
                ScalarExpr::constant(CRat::i()) * S(Symbol::constant("alpha")) * half();
            Form expect =
                scale(ia2 * S(phi0),
                      star(horizontal_diff(Form::scalar(sys.dim, S(phibar0))), sys.hodge)) -
                scale(ia2 * S(phibar0),
                      star(horizontal_diff(Form::scalar(sys.dim, S(phi0))), sys.hodge));
            require(J == expect, "J_alpha mismatch");
        }
    });

    criterion(6, "yang-mills Euler-Lagrange form, momentum map, gauge invariance", [] {
        for (int n : {3, 4}) {
            MatrixSystem sys = ym_system(n);
            MatrixForm A = MatrixForm::atom(n, MAtom::ConnA);
            MatrixForm varA = MatrixForm::atom(n, MAtom::VarA);
            MatrixForm sF = mf_star(curvature(n));
            TraceExpr el = trace(mf_vertical_diff(sys.L) + mf_horizontal_diff(sys.theta));
            MatrixForm bracket = nc_wedge(A, sF) -
                                 nc_scale(CRat(parity_sign(n)), nc_wedge(sF, A)) +
                                 mf_horizontal_diff(sF);
            require(el == trace(nc_scale(CRat(-1), nc_wedge(varA, bracket))),
                    "E mismatch vs the bracket display");
            require(el == trace(nc_scale(CRat(-1), nc_wedge(varA, covariant_derivative(sF)))),
                    "E mismatch vs -Tr(dA-var ^ D_A *F)");
            GaugeKilling X(n);
            require(X.contract(sys.L).is_zero(), "Xi -| L must vanish");
            TraceExpr J = trace(X.contract(sys.total()));
            require(J == trace(nc_wedge(covariant_derivative(MatrixForm::atom(n, MAtom::Xi)), sF)),
                    "J mismatch vs Tr(nabla Xi ^ *F)");
            require(trace(mf_lie_total(X, sys.total())).is_zero(), "gauge invariance failed");
        }
    });

    criterion(7, "randomized property suites (1000 iterations, pinned seeds)", [] {
        for (const auto& r : run_property_suites(1000))
            require(r.ok, r.name + " -- " + r.detail);
    });

    criterion(8, "gauge algebra suites: trace normal form, Bianchi, D_A D_A Xi", [] {
        const int n = 4;
        // exhaustive rotation check over short words
        std::vector<MAtom> pool{MAtom::ConnA, MAtom::DConnA, MAtom::VarA,
                                MAtom::DVarA, MAtom::Xi,     MAtom::DXi};
        for (MAtom a : pool)
            for (MAtom b : pool)
                for (MAtom c : pool) {
                    std::vector<MAtom> w{a, b, c};
                    std::vector<char> mask(3, 0);
                    TraceExpr t0 = trace_term(n, w, mask, 0, CRat(1));
                    for (int r = 1; r < 3; ++r) {
                        std::vector<MAtom> rot;
                        std::vector<char> rm(3, 0);
                        for (int i = 0; i < 3; ++i) rot.push_back(w[(r + i) % 3]);
                        int moved = 0, rest = 0;
                        for (int i = 0; i < r; ++i) moved += matom_degree(w[i]).total();
                        for (int i = r; i < 3; ++i) rest += matom_degree(w[i]).total();
                        TraceExpr tr =
                            trace_term(n, rot, rm, 0,
                                       CRat(parity_sign(static_cast<long>(moved) * rest)));
                        require(tr == t0, "trace normal form not unique on an orbit");
                    }
                }
        require(covariant_derivative(curvature(n)).is_zero(), "Bianchi identity failed");
        MatrixForm Xi = MatrixForm::atom(n, MAtom::Xi);
        MatrixForm F = curvature(n);
        require(covariant_derivative(covariant_derivative(Xi)) ==
                    nc_wedge(F, Xi) - nc_wedge(Xi, F),
                "D_A D_A Xi != [F, Xi]");
    });

    criterion(9, "Noether conservation for all pairs on kg2d", [] {
        Scenario sc = load_scenario("kg2d", 0);
        const LagrangianSystem& sys = sc.scalar().sys;
        const char* names[3] = {"ttrans", "xtrans", "u1"};
        for (const char* a : names)
            for (const char* b : names) {
                CheckResult r =
                    noether_check(sys, sc.scalar().killings.at(a), sc.scalar().killings.at(b));
                require(r.ok, std::string("Lie_") + a + " J_" + b + " != 0");
            }
    });

    criterion(10, "frontend round trip and byte-identical CLI goldens", [] {
        for (const auto& name : scenario_names()) {
            Scenario s1 = load_scenario(name, 0);
            std::string text = render_scenario(s1);
            Scenario s2 = parse_scenario(text);
            require(render_scenario(s2) == text, "scenario round trip not a fixed point");
        }
        const char* cli_env = std::getenv("VARCOMPLEX_CLI");
        require(cli_env != nullptr, "VARCOMPLEX_CLI not set");
        std::string cli(cli_env);
        std::vector<std::string> goldens{
            "derive-el mechanics",
            "derive-el kg2d",
            "derive-el kg-abstract",
            "derive-el yangmills",
            "symplectic kg2d",
            "symplectic yangmills",
            "momentum kg2d translation",
            "momentum kg-abstract u1",
            "momentum yangmills gauge",
            "check-invariance kg2d u1",
            "check-invariance yangmills gauge",
            "check-noether kg2d ttrans u1",
            "check-hamilton kg2d ttrans",
            "components kg2d translation",
            "render kg2d el --format=latex",
            "render kg2d momentum:u1 --format=ast",
            "render mechanics scenario",
        };
        for (const auto& g : goldens) {
            int rc1 = 0, rc2 = 0;
            std::string out1 = run_cli(cli, g, &rc1);
            std::string out2 = run_cli(cli, g, &rc2);
            require(rc1 == 0, "CLI failed: " + g);
            require(rc1 == rc2 && out1 == out2 && !out1.empty(),
                    "CLI output not byte-identical: " + g);
        }
        int rc = 0;
        run_cli(cli, "derive-el nonsense", &rc);
        require(rc == 2, "unknown scenario must exit 2");
        run_cli(cli, "check-invariance kg2d translation", &rc);
        require(rc == 0, "invariance check must exit 0");
        run_cli(cli, "--max-terms=2 derive-el kg2d", &rc);
        require(rc == 3, "resource bound must exit 3");
        {
            std::string path = "acceptance_nonsym.vc";
            std::string src = builtin_scenario_source("u1", 0);
            auto pos = src.find("killing u1");
            src = src.substr(0, pos);
            src += "killing halfu1\n  del(phi) -> i*alpha*phi\nend\n";
            FILE* f = std::fopen(path.c_str(), "w");
            require(f != nullptr, "cannot write the temporary scenario");
            std::fwrite(src.data(), 1, src.size(), f);
            std::fclose(f);
            run_cli(cli, "check-invariance " + path + " halfu1", &rc);
            std::remove(path.c_str());
            require(rc == 1, "failed check must exit 1");
        }
    });

    if (failures == 0) std::printf("all acceptance criteria passed\n");
    return failures;
}
