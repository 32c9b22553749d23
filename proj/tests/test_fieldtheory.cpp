#include <doctest.h>

#include "varcomplex/scenario.hpp"
#include "varcomplex/selfcheck.hpp"

using namespace varcomplex;

namespace {

ScalarExpr S(const Symbol& s) { return ScalarExpr::sym(s); }
ScalarExpr half() { return ScalarExpr::constant(CRat::frac(1, 2)); }

const Symbol phi0 = Symbol::jet("phi", {});
const Symbol phibar0 = Symbol::jet("phibar", {});

Form kg_el_expected(const LagrangianSystem& sys) {
    // -1/2 ( del phi ^ (d*d phibar + * mu^2 phibar) + conj )
    const int n = sys.dim;
    Form phibar = Form::scalar(n, S(phibar0));
    Form phi = Form::scalar(n, S(phi0));
    ScalarExpr mu2 = S(Symbol::constant("mu")).pow(2);
    Form b1 = horizontal_diff(star(horizontal_diff(phibar), sys.hodge)) +
              star(Form::scalar(n, mu2 * S(phibar0)), sys.hodge);
    Form b2 = horizontal_diff(star(horizontal_diff(phi), sys.hodge)) +
              star(Form::scalar(n, mu2 * S(phi0)), sys.hodge);
    Form out = wedge(Form::contact(n, phi0), b1) + wedge(Form::contact(n, phibar0), b2);
    return scale(-half(), out);
}

Form kg_omega_expected(const LagrangianSystem& sys) {
    const int n = sys.dim;
    Form ddphi = vertical_diff(horizontal_diff(Form::scalar(n, S(phi0))));
    Form ddphibar = vertical_diff(horizontal_diff(Form::scalar(n, S(phibar0))));
    Form out = wedge(Form::contact(n, phi0), star(ddphibar, sys.hodge)) +
               wedge(Form::contact(n, phibar0), star(ddphi, sys.hodge));
    return scale(-half(), out);
}

std::map<Symbol, ScalarExpr> kg_onshell() {
    ScalarExpr mu2 = S(Symbol::constant("mu")).pow(2);
    return {{Symbol::jet("phi", {0, 0}), S(Symbol::jet("phi", {1, 1})) - mu2 * S(phi0)},
            {Symbol::jet("phibar", {0, 0}),
             S(Symbol::jet("phibar", {1, 1})) - mu2 * S(phibar0)}};
}

} // namespace

TEST_CASE("mechanics Euler-Lagrange form matches the worked derivation") {
    Scenario sc = load_scenario("mechanics", 0);
    const LagrangianSystem& sys = sc.scalar().sys;
    Form el = euler_lagrange(sys);

    Symbol q = Symbol::jet("q", {});
    Symbol qdot = Symbol::jet("q", {0});
    Symbol L = Symbol::func("L", {q, qdot, Symbol::coord(0, "t")});
    ScalarExpr dLdqdot = partial_wrt_jet(S(L), qdot);
    ScalarExpr coeff = total_derivative(dLdqdot, 0) - partial_wrt_jet(S(L), q);
    Form expect = scale(coeff, wedge(Form::dx(1, 0), Form::contact(1, q)));
    CHECK(el == expect);
    CHECK(*el.homogeneous_bidegree() == Bidegree{1, 1});
}

TEST_CASE("mechanics symplectic density is the canonical delta theta") {
    Scenario sc = load_scenario("mechanics", 0);
    const LagrangianSystem& sys = sc.scalar().sys;
    Form omega = symplectic_density(sys);
    Symbol q = Symbol::jet("q", {});
    Symbol qdot = Symbol::jet("q", {0});
    Symbol L = Symbol::func("L", {q, qdot, Symbol::coord(0, "t")});
    // delta(dL/dqdot ^ del q): the qdot-qdot second derivative survives, the
    // del q ^ del q term collapses to zero (a symmetric-coefficient display keeps
    // the symmetric-coefficient term; canonically it vanishes)
    ScalarExpr l_qd_qd = partial_wrt_jet(partial_wrt_jet(S(L), qdot), qdot);
    Form expect =
        scale(l_qd_qd, wedge(Form::contact(1, qdot), Form::contact(1, q)));
    CHECK(omega == expect);
}

TEST_CASE("Klein-Gordon Euler-Lagrange form in abstract mode") {
    for (int n : {2, 3, 4}) {
        Scenario sc = load_scenario("kg-abstract", n);
        const LagrangianSystem& sys = sc.scalar().sys;
        Form el = euler_lagrange(sys);
        CHECK(el == kg_el_expected(sys));
        CHECK(*el.homogeneous_bidegree() == Bidegree{1, n});

        // the mixed-derivative pair is present in delta L and d theta and
        // cancels in the sum: first-order contact factors disappear
        auto has_first_jet_contact = [](const Form& f) {
            for (const auto& [factors, c] : f.terms())
                for (const auto& g : factors)
                    if (g.kind == Generator::Vertical && g.jet.index.size() == 1) return true;
            return false;
        };
        Form dL = vertical_diff(sys.L);
        Form dtheta = horizontal_diff(sys.theta);
        CHECK(has_first_jet_contact(dL));
        CHECK(has_first_jet_contact(dtheta));
        CHECK_FALSE(has_first_jet_contact(dL + dtheta));
    }
}

TEST_CASE("Klein-Gordon Euler-Lagrange form in table mode") {
    Scenario sc = load_scenario("kg2d", 0);
    const LagrangianSystem& sys = sc.scalar().sys;
    CHECK(euler_lagrange(sys) == kg_el_expected(sys));
    // on-shell the Euler-Lagrange coefficients are the Klein-Gordon equation
    CHECK(on_shell_reduce(euler_lagrange(sys), kg_onshell()).is_zero());
}

TEST_CASE("Klein-Gordon intermediate differentials expand as displayed") {
    Scenario sc = load_scenario("kg-abstract", 4);
    const LagrangianSystem& sys = sc.scalar().sys;
    const int n = 4;
    Form phi = Form::scalar(n, S(phi0));
    Form phibar = Form::scalar(n, S(phibar0));
    Form dphi = horizontal_diff(phi), dphibar = horizontal_diff(phibar);
    Form delphi = Form::contact(n, phi0), delphibar = Form::contact(n, phibar0);
    ScalarExpr mu2h = S(Symbol::constant("mu")).pow(2) * half();

    // delta L = 1/2 (delta d phibar ^ *d phi - d phibar ^ *delta d phi)
    //           - mu^2/2 (del phibar ^ *phi + del phi ^ *phibar)
    Form deltaL = scale(half(), wedge(vertical_diff(dphibar), star(dphi, sys.hodge)) -
                                    wedge(dphibar, star(vertical_diff(dphi), sys.hodge))) -
                  scale(mu2h, wedge(delphibar, star(phi, sys.hodge)) +
                                  wedge(delphi, star(phibar, sys.hodge)));
    CHECK(vertical_diff(sys.L) == deltaL);

    // d theta = 1/2 (d del phi ^ *d phibar - del phi ^ d*d phibar
    //               + d del phibar ^ *d phi - del phibar ^ d*d phi)
    Form dtheta =
        scale(half(), wedge(horizontal_diff(delphi), star(dphibar, sys.hodge)) -
                          wedge(delphi, horizontal_diff(star(dphibar, sys.hodge))) +
                          wedge(horizontal_diff(delphibar), star(dphi, sys.hodge)) -
                          wedge(delphibar, horizontal_diff(star(dphi, sys.hodge))));
    CHECK(horizontal_diff(sys.theta) == dtheta);
}

TEST_CASE("translation momentum map expands by the four-term contraction line") {
    Scenario sc = load_scenario("kg2d", 0);
    const LagrangianSystem& sys = sc.scalar().sys;
    const KillingField& X = sc.scalar().killings.at("translation");
    Form phi = Form::scalar(2, S(phi0));
    Form phibar = Form::scalar(2, S(phibar0));

    // translations leave the evaluation map invariant: X -| D(ev) = 0
    CHECK(interior(X, total_diff(phi)).is_zero());
    CHECK(interior(X, total_diff(phibar)).is_zero());

    // 2J = -D phibar ^ (X -| *d phi) - X -| *mu^2 phi phibar
    //      + (X -| del phi) *d phibar - (X -| *d phibar) del phi
    Form star_dphi = star(horizontal_diff(phi), sys.hodge);
    Form star_dphibar = star(horizontal_diff(phibar), sys.hodge);
    ScalarExpr mu2 = S(Symbol::constant("mu")).pow(2);
    Form mass = star(Form::scalar(2, mu2 * S(phi0) * S(phibar0)), sys.hodge);
    Form rhs = -wedge(total_diff(phibar), interior(X, star_dphi)) - interior(X, mass) +
               wedge(interior(X, Form::contact(2, phi0)), star_dphibar) -
               wedge(interior(X, star_dphibar), Form::contact(2, phi0));
    Form J2 = scale(ScalarExpr::constant(CRat(2)), momentum_map(sys, X));
    CHECK(J2 == rhs);
}

TEST_CASE("Klein-Gordon symplectic density") {
    for (int n : {2, 4}) {
        Scenario sc = load_scenario(n == 2 ? "kg2d" : "kg-abstract", n == 2 ? 0 : n);
        const LagrangianSystem& sys = sc.scalar().sys;
        Form omega = symplectic_density(sys);
        CHECK(omega == kg_omega_expected(sys));
        CHECK(*omega.homogeneous_bidegree() == Bidegree{2, n - 1});
    }
    Scenario sc = load_scenario("kg2d", 0);
    LagrangianSystem empty = sc.scalar().sys;
    empty.theta = Form::zero(2);
    CHECK(symplectic_density(empty).is_zero());
}

TEST_CASE("the empty system derives to zero") {
    LagrangianSystem sys;
    sys.dim = 2;
    sys.coords = {"t", "x"};
    sys.hodge = HodgeMode::abstract_mode(2);
    sys.L = Form::zero(2);
    sys.theta = Form::zero(2);
    sys.validate();
    CHECK(euler_lagrange(sys).is_zero());
    CHECK(symplectic_density(sys).is_zero());
    CHECK(total_symplectic(sys).Omega.is_zero());
}

TEST_CASE("total symplectic structure decomposes and is D-closed") {
    auto check_one = [](const Scenario& sc) {
        const LagrangianSystem& sys = sc.scalar().sys;
        DynamicalSymplectic W = total_symplectic(sys);
        CHECK(W.Omega == W.omega + W.E);
        CHECK(W.omega == symplectic_density(sys));
        CHECK(W.E == euler_lagrange(sys));
        CHECK(total_diff(W.Omega).is_zero());
        CHECK(W.Omega.project(0, sys.dim + 1).is_zero());
    };
    for (const char* name : {"mechanics", "kg2d"}) check_one(load_scenario(name, 0));
    for (int n : {2, 3, 4}) check_one(load_scenario("kg-abstract", n));
}

TEST_CASE("lagrangian shift absorbs the indeterminacy of L into theta") {
    Scenario sc = load_scenario("mechanics", 0);
    const LagrangianSystem& sys = sc.scalar().sys;
    CHECK(lagrangian_shift(sys, Form::zero(1)).L == sys.L);
    CHECK(lagrangian_shift(sys, Form::zero(1)).theta == sys.theta);

    // lambda = q: L gains qdot dt, theta gains del q, E unchanged
    Symbol q = Symbol::jet("q", {});
    LagrangianSystem shifted = lagrangian_shift(sys, Form::scalar(1, S(q)));
    CHECK(shifted.L == sys.L + scale(S(Symbol::jet("q", {0})), Form::dx(1, 0)));
    CHECK(shifted.theta == sys.theta + Form::contact(1, q));
    CHECK(euler_lagrange(shifted) == euler_lagrange(sys));
    CHECK(total_symplectic(shifted).Omega == total_symplectic(sys).Omega);

    CHECK_THROWS_AS(lagrangian_shift(sys, Form::dx(1, 0)), StructuralError);
}

TEST_CASE("translation momentum map reproduces the reference display") {
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
    ScalarExpr At = S(Symbol::constant("At")), Ax = S(Symbol::constant("Ax"));
    Form dt = Form::dx(2, 0), dx = Form::dx(2, 1);
    Form delphi = Form::contact(2, phi0), delphibar = Form::contact(2, phibar0);

    Form blockT = scale(pt * bt + px * bx + mu2 * p * b, dx) +
                  scale(px * bt + pt * bx, dt) + scale(px, delphibar) + scale(bx, delphi);
    Form blockX = scale(pt * bt + px * bx - mu2 * p * b, dt) +
                  scale(px * bt + pt * bx, dx) + scale(pt, delphibar) + scale(bt, delphi);
    Form expect = scale(At, blockT) + scale(Ax, blockX);
    CHECK(J2 == expect);

    KillingField zero("zero", 2);
    CHECK(momentum_map(sys, zero).is_zero());
}

TEST_CASE("U(1) momentum map in both modes") {
    for (int n : {0, 2, 4}) {
        Scenario sc = n == 0 ? load_scenario("kg2d", 0) : load_scenario("kg-abstract", n);
        const LagrangianSystem& sys = sc.scalar().sys;
        const KillingField& X = sc.scalar().killings.at("u1");
        Form J = momentum_map(sys, X);
        ScalarExpr ia2 = ScalarExpr::constant(CRat::i()) * S(Symbol::constant("alpha")) * half();
        Form phibar = Form::scalar(sys.dim, S(phibar0));
        Form phi = Form::scalar(sys.dim, S(phi0));
        Form expect = scale(ia2 * S(phi0), star(horizontal_diff(phibar), sys.hodge)) -
                      scale(ia2 * S(phibar0), star(horizontal_diff(phi), sys.hodge));
        CHECK(J == expect);
    }
}

TEST_CASE("invariance checks") {
    Scenario sc = load_scenario("kg2d", 0);
    const LagrangianSystem& sys = sc.scalar().sys;
    for (const char* k : {"translation", "ttrans", "xtrans", "u1"})
        CHECK(invariance_check(sys, sc.scalar().killings.at(k)).ok);

    // phase acting on phi alone is not a symmetry; the mass term survives
    KillingField half_u1("halfu1", 2);
    half_u1.set_vertical("phi", Form::scalar(2, ScalarExpr::constant(CRat::i()) *
                                                    S(Symbol::constant("alpha")) * S(phi0)));
    CheckResult r = invariance_check(sys, half_u1);
    CHECK_FALSE(r.ok);
    bool mass_term_present = false;
    for (const auto& [f, c] : r.residual.terms())
        for (const auto& [m, cc] : c.terms())
            for (const auto& [s, e] : m)
                if (s.kind == SymKind::Const && s.name == "mu") mass_term_present = true;
    CHECK(mass_term_present);
}

TEST_CASE("momentum maps satisfy the defining identity") {
    Scenario sc = load_scenario("kg2d", 0);
    const LagrangianSystem& sys = sc.scalar().sys;
    for (const char* k : {"translation", "ttrans", "xtrans", "u1"})
        CHECK(momentum_defining_check(sys, sc.scalar().killings.at(k)).ok);
    for (int n : {2, 3, 4}) {
        Scenario ab = load_scenario("kg-abstract", n);
        CHECK(invariance_check(ab.scalar().sys, ab.scalar().killings.at("u1")).ok);
        CHECK(momentum_defining_check(ab.scalar().sys, ab.scalar().killings.at("u1")).ok);
    }

    // a non-symmetry fails with residual Lie_X L
    KillingField half_u1("halfu1", 2);
    half_u1.set_vertical("phi", Form::scalar(2, ScalarExpr::constant(CRat::i()) *
                                                    S(Symbol::constant("alpha")) * S(phi0)));
    CheckResult r = momentum_defining_check(sys, half_u1);
    CHECK_FALSE(r.ok);
    CHECK(r.residual == lie_total(half_u1, sys.total_lagrangian()));
}

TEST_CASE("Hamilton identity and its component report") {
    Scenario sc = load_scenario("kg2d", 0);
    const LagrangianSystem& sys = sc.scalar().sys;
    const KillingField& X = sc.scalar().killings.at("ttrans");
    HamiltonReport rep = hamilton_identity(sys, X);
    CHECK(rep.ok);
    CHECK(rep.lhs == rep.rhs);
    // every component equals the matching component of -(X -| E)
    for (const auto& [b, f] : rep.components) CHECK(f == rep.rhs.project(b.p, b.q));
    // on-shell both sides vanish identically
    CHECK(on_shell_reduce(rep.lhs, kg_onshell()).is_zero());
    CHECK(on_shell_reduce(rep.rhs, kg_onshell()).is_zero());

    KillingField zero("zero", 2);
    HamiltonReport triv = hamilton_identity(sys, zero);
    CHECK(triv.ok);
    CHECK(triv.lhs.is_zero());
}

TEST_CASE("mechanics with time translation reduces to the one-dimensional case") {
    // autonomous single-field system: L = 1/2 qdot^2 - 1/2 q^2
    std::string src = "scenario osc\n"
                      "dim 1\n"
                      "coords t\n"
                      "field q real\n"
                      "hodge abstract\n"
                      "lagrangian = (1/2 * q_{t}*q_{t} - 1/2 * q*q) * dx[t]\n"
                      "theta = q_{t} * del(q)\n"
                      "killing ttrans\n"
                      "  dx[t] -> 1\n"
                      "  del(q) -> -q_{t}\n"
                      "end\n";
    Scenario sc = parse_scenario(src);
    const LagrangianSystem& sys = sc.scalar().sys;
    const KillingField& X = sc.scalar().killings.at("ttrans");
    CHECK(invariance_check(sys, X).ok);
    HamiltonReport rep = hamilton_identity(sys, X);
    CHECK(rep.ok);
    DynamicalSymplectic W = total_symplectic(sys);
    Form J = momentum_map(sys, X);
    auto cs = hamiltonian_vf_components(W, X, J);
    // n = 1: components (c) and (d) are vacuous, (a) and (b) hold
    for (const auto& f : cs) CHECK(f.is_zero());
    // on-shell reduction with the oscillator equation kills the residual E
    std::map<Symbol, ScalarExpr> eq{{Symbol::jet("q", {0, 0}), -S(Symbol::jet("q", {}))}};
    CHECK(on_shell_reduce(W.E, eq).is_zero());
    CHECK(on_shell_reduce(euler_lagrange(sys), {}) == euler_lagrange(sys));
}

TEST_CASE("free particle on-shell reduction") {
    std::string src = "scenario free\n"
                      "dim 1\n"
                      "coords t\n"
                      "field q real\n"
                      "hodge abstract\n"
                      "lagrangian = 1/2 * q_{t}*q_{t} * dx[t]\n"
                      "theta = q_{t} * del(q)\n";
    Scenario sc = parse_scenario(src);
    Form E = euler_lagrange(sc.scalar().sys);
    std::map<Symbol, ScalarExpr> eq{{Symbol::jet("q", {0, 0}), ScalarExpr::zero()}};
    CHECK(on_shell_reduce(E, eq).is_zero());
}

TEST_CASE("Noether conservation for all symmetry pairs") {
    Scenario sc = load_scenario("kg2d", 0);
    const LagrangianSystem& sys = sc.scalar().sys;
    const char* names[3] = {"ttrans", "xtrans", "u1"};
    for (const char* a : names)
        for (const char* b : names)
            CHECK(noether_check(sys, sc.scalar().killings.at(a), sc.scalar().killings.at(b)).ok);
}

TEST_CASE("Hamiltonian vector field components") {
    Scenario sc = load_scenario("kg2d", 0);
    const LagrangianSystem& sys = sc.scalar().sys;
    DynamicalSymplectic W = total_symplectic(sys);
    for (const char* k : {"translation", "u1"}) {
        const KillingField& X = sc.scalar().killings.at(k);
        Form J = momentum_map(sys, X);
        auto cs = hamiltonian_vf_components(W, X, J);
        for (const auto& f : cs) CHECK(f.is_zero());
    }
    // alpha with a (2,n-3) part is vacuous in n=2 and component (d) is zero
    KillingField zero("zero", 2);
    auto cs = hamiltonian_vf_components(W, zero, Form::zero(2));
    for (const auto& f : cs) CHECK(f.is_zero());
}
