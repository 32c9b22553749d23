#include "varcomplex/selfcheck.hpp"

#include "varcomplex/calculus.hpp"
#include "varcomplex/gauge.hpp"
#include "varcomplex/render.hpp"
#include "varcomplex/scenario.hpp"
#include "varcomplex/system.hpp"

namespace varcomplex {

FieldSet selfcheck_fields() {
    FieldSet fs;
    fs.declare_pair("phi", "phibar");
    return fs;
}

namespace {

Symbol random_jet(Rng& rng, int dim) {
    std::string field = rng.range(0, 1) ? "phi" : "phibar";
    int order = rng.range(0, 2);
    std::vector<int> idx;
    for (int k = 0; k < order; ++k) idx.push_back(rng.range(0, dim - 1));
    return Symbol::jet(field, std::move(idx));
}

CRat random_coeff(Rng& rng) {
    static const CRat pool[] = {CRat(1),          CRat(-1), CRat(2),
                                CRat::frac(1, 2), CRat::i(), CRat(Rational(0), Rational(-1)),
                                CRat(3),          CRat::frac(-3, 2)};
    return pool[rng.range(0, 7)];
}

} // namespace

ScalarExpr random_scalar(Rng& rng, int max_terms) {
    ScalarExpr out;
    int terms = rng.range(1, max_terms);
    for (int t = 0; t < terms; ++t) {
        ScalarExpr mono = ScalarExpr::constant(random_coeff(rng));
        int factors = rng.range(0, 2);
        for (int k = 0; k < factors; ++k) {
            switch (rng.range(0, 3)) {
            case 0:
                mono = mono * ScalarExpr::sym(Symbol::constant("mu"));
                break;
            case 1:
                mono = mono * ScalarExpr::sym(Symbol::coord(0, "t"));
                break;
            default:
                mono = mono * ScalarExpr::sym(random_jet(rng, 2));
            }
        }
        out = out + mono;
    }
    return out;
}

Form random_form(Rng& rng, int dim, bool with_atoms, int max_terms) {
    Form out(dim);
    int terms = rng.range(1, max_terms);
    for (int t = 0; t < terms; ++t) {
        Factors f;
        int nf = rng.range(0, 3);
        bool used_atom = false;
        for (int k = 0; k < nf; ++k) {
            int pick = rng.range(0, with_atoms && !used_atom ? 2 : 1);
            if (pick == 0) {
                f.push_back(Generator::dx(rng.range(0, dim - 1)));
            } else if (pick == 1) {
                f.push_back(Generator::contact(random_jet(rng, dim)));
            } else {
                used_atom = true;
                int wlen = rng.range(0, dim);
                std::vector<int> word;
                for (int d = 0; d < dim && static_cast<int>(word.size()) < wlen; ++d)
                    if (rng.range(0, 1)) word.push_back(d);
                f.push_back(Generator::atom(StarBody{std::move(word), rng.range(0, 1)}));
            }
        }
        out.add_term(f, random_scalar(rng, 2));
    }
    return out;
}

Form random_homogeneous_form(Rng& rng, int dim, bool with_atoms) {
    for (int attempt = 0; attempt < 32; ++attempt) {
        Form f = random_form(rng, dim, with_atoms);
        auto bs = f.bidegrees();
        if (bs.empty()) continue;
        int pick = rng.range(0, static_cast<int>(bs.size()) - 1);
        auto it = bs.begin();
        std::advance(it, pick);
        Form p = f.project(it->p, it->q);
        if (!p.is_zero()) return p;
    }
    return Form::scalar(dim, ScalarExpr::one());
}

namespace {

using Check = std::function<std::string(Rng&)>; // empty string = pass

SuiteResult run_suite(const std::string& name, std::uint64_t seed, int iterations,
                      const Check& check) {
    SuiteResult r;
    r.name = name;
    r.iterations = iterations;
    Rng rng(seed);
    for (int i = 0; i < iterations; ++i) {
        std::string err = check(rng);
        if (!err.empty()) {
            r.ok = false;
            r.detail = "iteration " + std::to_string(i) + ": " + err;
            return r;
        }
    }
    r.ok = true;
    return r;
}

std::string check_zero(const Form& f, const char* what) {
    if (!f.is_zero()) return std::string(what) + " violated";
    return {};
}

KillingField random_killing(Rng& rng, int dim) {
    int kind = rng.range(0, 2);
    KillingField X("rand", dim);
    if (kind == 0) { // translation-like
        X.set_horizontal(0, ScalarExpr::sym(Symbol::constant("At")));
        if (dim > 1) X.set_horizontal(1, ScalarExpr::sym(Symbol::constant("Ax")));
        for (const char* f : {"phi", "phibar"}) {
            ScalarExpr v;
            v = v - ScalarExpr::sym(Symbol::constant("At")) *
                        ScalarExpr::sym(Symbol::jet(f, {0}));
            if (dim > 1)
                v = v - ScalarExpr::sym(Symbol::constant("Ax")) *
                            ScalarExpr::sym(Symbol::jet(f, {1}));
            X.set_vertical(f, Form::scalar(dim, v));
        }
    } else if (kind == 1) { // u(1)-like
        ScalarExpr ia = ScalarExpr::constant(CRat::i()) * ScalarExpr::sym(Symbol::constant("alpha"));
        X.set_vertical("phi", Form::scalar(dim, ia * ScalarExpr::sym(Symbol::jet("phi", {}))));
        X.set_vertical("phibar",
                       Form::scalar(dim, -(ia * ScalarExpr::sym(Symbol::jet("phibar", {})))));
    } else { // generic vertical rule
        X.set_vertical("phi", Form::scalar(dim, random_scalar(rng, 2)));
        X.set_vertical("phibar", Form::scalar(dim, random_scalar(rng, 2)));
    }
    return X;
}

} // namespace

std::vector<SuiteResult> run_property_suites(int iterations) {
    std::vector<SuiteResult> out;
    const int dim = 2;

    out.push_back(run_suite("delta^2 = 0", 11, iterations, [&](Rng& rng) {
        Form a = random_form(rng, dim, true);
        return check_zero(vertical_diff(vertical_diff(a)), "delta^2");
    }));
    out.push_back(run_suite("d^2 = 0", 12, iterations, [&](Rng& rng) {
        Form a = random_form(rng, dim, true);
        return check_zero(horizontal_diff(horizontal_diff(a)), "d^2");
    }));
    out.push_back(run_suite("d delta + delta d = 0", 13, iterations, [&](Rng& rng) {
        Form a = random_form(rng, dim, true);
        return check_zero(horizontal_diff(vertical_diff(a)) + vertical_diff(horizontal_diff(a)),
                          "anticommutation");
    }));
    out.push_back(run_suite("D^2 = 0", 14, iterations, [&](Rng& rng) {
        Form a = random_form(rng, dim, true);
        return check_zero(total_diff(total_diff(a)), "D^2");
    }));

    out.push_back(run_suite("graded Leibniz for delta", 15, iterations, [&](Rng& rng) {
        Form a = random_homogeneous_form(rng, dim, true);
        Form b = random_form(rng, dim, true);
        int k = a.homogeneous_bidegree()->total();
        Form lhs = vertical_diff(wedge(a, b));
        Form rhs = wedge(vertical_diff(a), b) +
                   scale(ScalarExpr::constant(CRat(parity_sign(k))), wedge(a, vertical_diff(b)));
        return lhs == rhs ? std::string{} : "delta Leibniz violated";
    }));
    out.push_back(run_suite("graded Leibniz for d", 16, iterations, [&](Rng& rng) {
        Form a = random_homogeneous_form(rng, dim, true);
        Form b = random_form(rng, dim, true);
        int k = a.homogeneous_bidegree()->total();
        Form lhs = horizontal_diff(wedge(a, b));
        Form rhs = wedge(horizontal_diff(a), b) +
                   scale(ScalarExpr::constant(CRat(parity_sign(k))), wedge(a, horizontal_diff(b)));
        return lhs == rhs ? std::string{} : "d Leibniz violated";
    }));
    out.push_back(run_suite("interior product is an anti-derivation", 17, iterations,
                            [&](Rng& rng) {
        KillingField X = random_killing(rng, dim);
        Form a = random_homogeneous_form(rng, dim, false);
        Form b = random_form(rng, dim, false);
        int k = a.homogeneous_bidegree()->total();
        Form lhs = interior(X, wedge(a, b));
        Form rhs = wedge(interior(X, a), b) +
                   scale(ScalarExpr::constant(CRat(parity_sign(k))), wedge(a, interior(X, b)));
        return lhs == rhs ? std::string{} : "contraction Leibniz violated";
    }));

    out.push_back(run_suite("graded commutativity of the wedge", 18, iterations, [&](Rng& rng) {
        Form a = random_homogeneous_form(rng, dim, true);
        Form b = random_homogeneous_form(rng, dim, true);
        int ka = a.homogeneous_bidegree()->total();
        int kb = b.homogeneous_bidegree()->total();
        Form lhs = wedge(a, b);
        Form rhs = scale(ScalarExpr::constant(CRat(parity_sign(ka * kb))), wedge(b, a));
        return lhs == rhs ? std::string{} : "graded commutativity violated";
    }));
    out.push_back(run_suite("associativity of the wedge", 19, iterations, [&](Rng& rng) {
        Form a = random_form(rng, dim, true, 2);
        Form b = random_form(rng, dim, true, 2);
        Form c = random_form(rng, dim, true, 2);
        return wedge(wedge(a, b), c) == wedge(a, wedge(b, c)) ? std::string{}
                                                              : "associativity violated";
    }));

    out.push_back(run_suite("Cartan: Lie_X commutes with D", 20, iterations, [&](Rng& rng) {
        KillingField X = random_killing(rng, dim);
        Form a = random_form(rng, dim, false);
        Form lhs = lie_total(X, total_diff(a));
        Form rhs = total_diff(lie_total(X, a));
        return lhs == rhs ? std::string{} : "Cartan consistency violated";
    }));
    out.push_back(run_suite("partial Lie derivatives sum to the total one", 21, iterations,
                            [&](Rng& rng) {
        KillingField X = random_killing(rng, dim);
        Form a = random_form(rng, dim, false);
        Form lhs = lie_vertical(X, a) + lie_horizontal(X, a);
        return lhs == lie_total(X, a) ? std::string{} : "partial Lie split violated";
    }));

    out.push_back(run_suite("contact identity du_I = D u_I - u_{I mu} dx^mu", 22, iterations,
                            [&](Rng& rng) {
        Symbol u = random_jet(rng, dim);
        Form lhs = Form::contact(dim, u);
        Form rhs = total_diff(Form::scalar(dim, ScalarExpr::sym(u)));
        for (int mu = 0; mu < dim; ++mu)
            rhs = rhs - wedge(Form::scalar(dim, ScalarExpr::sym(u.extended(mu))),
                              Form::dx(dim, mu));
        return lhs == rhs ? std::string{} : "contact identity violated";
    }));

    out.push_back(run_suite("star pairing sign identity in table mode", 23, iterations, [&](Rng& rng) {
        HodgeMode table = HodgeMode::table_mode(HodgeTable::minkowski2d());
        Form a = random_homogeneous_form(rng, dim, false);
        Form b = random_homogeneous_form(rng, dim, false);
        Bidegree ba = *a.homogeneous_bidegree();
        Bidegree bb = *b.homogeneous_bidegree();
        if (ba.q != bb.q) return std::string{}; // identity needs equal M-degrees
        long e = static_cast<long>(ba.total()) * bb.total() - static_cast<long>(ba.q) * bb.q;
        Form lhs = wedge(a, star(b, table));
        Form rhs = scale(ScalarExpr::constant(CRat(parity_sign(e))), wedge(b, star(a, table)));
        return lhs == rhs ? std::string{} : "star pairing identity violated in table mode";
    }));

    out.push_back(run_suite("lagrangian shift leaves Omega invariant", 24, iterations,
                            [&](Rng& rng) {
        Scenario sc = load_scenario("kg2d", 0);
        const LagrangianSystem& sys = sc.scalar().sys;
        Form lambda(dim);
        // random (0, n-1) form
        for (int t = 0; t < 2; ++t)
            lambda.add_term(Factors{Generator::dx(rng.range(0, dim - 1))}, random_scalar(rng, 2));
        LagrangianSystem shifted = lagrangian_shift(sys, lambda);
        DynamicalSymplectic w0 = total_symplectic(sys);
        DynamicalSymplectic w1 = total_symplectic(shifted);
        if (w0.Omega != w1.Omega) return std::string("Omega changed under the shift");
        if (euler_lagrange(shifted) != euler_lagrange(sys))
            return std::string("Euler-Lagrange form changed under the shift");
        return std::string{};
    }));

    out.push_back(run_suite("atom expansion commutes with the calculus", 27, iterations,
                            [&](Rng& rng) {
        HodgeTable table = HodgeTable::minkowski2d();
        Form a = random_form(rng, dim, true, 2);
        Form b = random_form(rng, dim, true, 2);
        if (expand_atoms(horizontal_diff(a), table) != horizontal_diff(expand_atoms(a, table)))
            return std::string("expansion does not commute with d");
        if (expand_atoms(vertical_diff(a), table) != vertical_diff(expand_atoms(a, table)))
            return std::string("expansion does not commute with delta");
        if (expand_atoms(wedge(a, b), table) !=
            wedge(expand_atoms(a, table), expand_atoms(b, table)))
            return std::string("expansion does not commute with the wedge");
        return std::string{};
    }));

    out.push_back(run_suite("matrix bicomplex: delta^2, d^2, anticommutation", 25, iterations,
                            [&](Rng& rng) {
        const int n = 4;
        MatrixForm m(n);
        MWord w;
        int len = rng.range(1, 3);
        for (int k = 0; k < len; ++k)
            w.push_back(MUnit::atom(static_cast<MAtom>(rng.range(0, 5))));
        if (rng.range(0, 1)) {
            std::vector<MAtom> inner;
            int il = rng.range(1, 2);
            for (int k = 0; k < il; ++k) inner.push_back(static_cast<MAtom>(rng.range(0, 5)));
            w.push_back(MUnit::star(std::move(inner), 0));
        }
        m.add_term(w, random_coeff(rng));
        if (!mf_vertical_diff(mf_vertical_diff(m)).is_zero())
            return std::string("matrix delta^2 violated");
        if (!mf_horizontal_diff(mf_horizontal_diff(m)).is_zero())
            return std::string("matrix d^2 violated");
        MatrixForm mixed =
            mf_horizontal_diff(mf_vertical_diff(m)) + mf_vertical_diff(mf_horizontal_diff(m));
        if (!mixed.is_zero()) return std::string("matrix anticommutation violated");
        return std::string{};
    }));

    out.push_back(run_suite("graded cyclic trace normal form is rotation-stable", 26, iterations,
                            [&](Rng& rng) {
        const int n = 4;
        int len = rng.range(1, 4);
        std::vector<MAtom> atoms;
        for (int k = 0; k < len; ++k) atoms.push_back(static_cast<MAtom>(rng.range(0, 5)));
        std::vector<char> mask(atoms.size(), 0);
        bool masked = rng.range(0, 1) != 0;
        if (masked) mask[rng.range(0, len - 1)] = 1;
        TraceExpr base = trace_term(n, atoms, mask, 0, CRat(1));
        for (int r = 1; r < len; ++r) {
            std::vector<MAtom> rot;
            std::vector<char> rmask;
            for (int i = 0; i < len; ++i) {
                rot.push_back(atoms[(r + i) % len]);
                rmask.push_back(mask[(r + i) % len]);
            }
            if (!masked) {
                int moved = 0, rest = 0;
                for (int i = 0; i < r; ++i) moved += matom_degree(atoms[i]).total();
                for (int i = r; i < len; ++i) rest += matom_degree(atoms[i]).total();
                int sign = parity_sign(static_cast<long>(moved) * rest);
                TraceExpr rotated = trace_term(n, rot, rmask, 0, CRat(sign));
                if (!(rotated == base))
                    return std::string("cyclic normal form not rotation-stable");
            } else {
                // Same orbit: the representative must coincide (sign handled
                // internally); both may also collapse to zero together.
                TraceExpr rotated = trace_term(n, rot, rmask, 0, CRat(1));
                if (base.is_zero() != rotated.is_zero())
                    return std::string("orbit zero-collapse disagrees across rotations");
                if (!base.is_zero() &&
                    !(base.terms().begin()->first == rotated.terms().begin()->first))
                    return std::string("orbit representative differs across rotations");
            }
        }
        return std::string{};
    }));

    return out;
}

} // namespace varcomplex
