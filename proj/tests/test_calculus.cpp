#include <doctest.h>

#include "varcomplex/calculus.hpp"
#include "varcomplex/selfcheck.hpp"

using namespace varcomplex;

namespace {

ScalarExpr S(const Symbol& s) { return ScalarExpr::sym(s); }

Form scalar2(const ScalarExpr& e) { return Form::scalar(2, e); }

KillingField translation2d() {
    KillingField X("translation", 2);
    X.set_horizontal(0, S(Symbol::constant("At")));
    X.set_horizontal(1, S(Symbol::constant("Ax")));
    for (const char* f : {"phi", "phibar"}) {
        ScalarExpr v = -(S(Symbol::constant("At")) * S(Symbol::jet(f, {0})) +
                         S(Symbol::constant("Ax")) * S(Symbol::jet(f, {1})));
        X.set_vertical(f, Form::scalar(2, v));
    }
    return X;
}

KillingField u1_2d() {
    KillingField X("u1", 2);
    ScalarExpr ia = ScalarExpr::constant(CRat::i()) * S(Symbol::constant("alpha"));
    X.set_vertical("phi", scalar2(ia * S(Symbol::jet("phi", {}))));
    X.set_vertical("phibar", scalar2(-(ia * S(Symbol::jet("phibar", {})))));
    return X;
}

} // namespace

TEST_CASE("vertical differential on coefficients") {
    CHECK(vertical_diff(scalar2(S(Symbol::coord(0, "t")))).is_zero());
    Form lhs = vertical_diff(scalar2(S(Symbol::jet("phi", {})) * S(Symbol::jet("phibar", {}))));
    Form rhs = scale(S(Symbol::jet("phibar", {})), Form::contact(2, Symbol::jet("phi", {}))) +
               scale(S(Symbol::jet("phi", {})), Form::contact(2, Symbol::jet("phibar", {})));
    CHECK(lhs == rhs);
    CHECK(vertical_diff(Form::contact(2, Symbol::jet("q", {}))).is_zero());
}

TEST_CASE("horizontal differential: mechanics shapes") {
    // one-dimensional scenario, coordinates (t)
    Form delq = Form::contact(1, Symbol::jet("q", {}));
    Form lhs = horizontal_diff(delq);
    Form rhs = wedge(Form::dx(1, 0), Form::contact(1, Symbol::jet("q", {0})));
    CHECK(lhs == rhs);
    CHECK(horizontal_diff(Form::dx(1, 0)).is_zero());
    Form q2 = Form::scalar(1, S(Symbol::jet("q", {})) * S(Symbol::jet("q", {})));
    Form dq2 = horizontal_diff(q2);
    Form expect = scale(ScalarExpr::constant(CRat(2)) * S(Symbol::jet("q", {})) *
                            S(Symbol::jet("q", {0})),
                        Form::dx(1, 0));
    CHECK(dq2 == expect);
}

TEST_CASE("total differential basics") {
    Form t = scalar2(S(Symbol::coord(0, "t")));
    CHECK(total_diff(t) == Form::dx(2, 0));
    Form q = Form::scalar(1, S(Symbol::jet("q", {})));
    Form Dq = total_diff(q);
    Form expect = scale(S(Symbol::jet("q", {0})), Form::dx(1, 0)) +
                  Form::contact(1, Symbol::jet("q", {}));
    CHECK(Dq == expect);
    Rng rng(420);
    for (int i = 0; i < 200; ++i) {
        Form f = random_form(rng, 2, true);
        CHECK(total_diff(total_diff(f)).is_zero());
    }
}

TEST_CASE("interior product uses the contraction tables") {
    KillingField X = translation2d();
    CHECK(interior(X, Form::dx(2, 0)) == scalar2(S(Symbol::constant("At"))));
    CHECK(interior(X, Form::dx(2, 1)) == scalar2(S(Symbol::constant("Ax"))));
    KillingField U = u1_2d();
    Form lhs = interior(U, Form::contact(2, Symbol::jet("phi", {})));
    CHECK(lhs == scalar2(ScalarExpr::constant(CRat::i()) * S(Symbol::constant("alpha")) *
                         S(Symbol::jet("phi", {}))));
    CHECK(interior(X, scalar2(ScalarExpr::one())).is_zero());
}

TEST_CASE("jet prolongation of the contraction tables") {
    KillingField X = translation2d();
    // X -| del(phi_{x}) = -(At phi_{t,x} + Ax phi_{x,x})
    Form lhs = interior(X, Form::contact(2, Symbol::jet("phi", {1})));
    ScalarExpr expect = -(S(Symbol::constant("At")) * S(Symbol::jet("phi", {0, 1})) +
                          S(Symbol::constant("Ax")) * S(Symbol::jet("phi", {1, 1})));
    CHECK(lhs == scalar2(expect));
    // the declared relation X -| del(u) = -(X -| d(u)) persists on jets
    for (auto idx : {std::vector<int>{}, {0}, {1}, {0, 1}, {1, 1}}) {
        Symbol u = Symbol::jet("phi", idx);
        Form du = horizontal_diff(scalar2(S(u)));
        CHECK(interior(X, Form::contact(2, u)) == -interior(X, du));
    }
    // u1 acts diagonally on every jet
    KillingField U = u1_2d();
    ScalarExpr ia = ScalarExpr::constant(CRat::i()) * S(Symbol::constant("alpha"));
    for (auto idx : {std::vector<int>{}, {0}, {0, 1}}) {
        Symbol u = Symbol::jet("phi", idx);
        CHECK(interior(U, Form::contact(2, u)) == scalar2(ia * S(u)));
    }
}

TEST_CASE("contraction values must be constant in the horizontal table") {
    KillingField X("bad", 2);
    CHECK_THROWS_AS(X.set_horizontal(0, S(Symbol::jet("phi", {}))), StructuralError);
    CHECK_THROWS_AS(X.set_horizontal(0, S(Symbol::coord(0, "t"))), StructuralError);
}

TEST_CASE("partial Lie derivatives") {
    KillingField U = u1_2d();
    // f depends only on phi undifferentiated and U has no horizontal
    // contractions: both pieces of the horizontal Lie derivative die
    Form f = scalar2(S(Symbol::jet("phi", {})));
    CHECK(lie_horizontal(U, f).is_zero());

    KillingField X = translation2d();
    Form dxf = Form::dx(2, 0);
    // delta kills dx and the contraction value is constant, so both parts die
    CHECK(lie_vertical(X, dxf).is_zero());

    Rng rng(421);
    for (int i = 0; i < 200; ++i) {
        Form a = random_form(rng, 2, false);
        CHECK(lie_vertical(X, a) + lie_horizontal(X, a) == lie_total(X, a));
        CHECK(lie_total(X, Form::zero(2)).is_zero());
    }
}

TEST_CASE("lie_horizontal of an undifferentiated invariant combination vanishes") {
    // f = phi phibar is U(1)-neutral; with zero horizontal contractions the
    // horizontal Lie derivative expands to X -| d f, whose two chain-rule
    // pieces cancel between phi and phibar.
    KillingField U = u1_2d();
    Form f = scalar2(S(Symbol::jet("phi", {})) * S(Symbol::jet("phibar", {})));
    CHECK(lie_horizontal(U, f).is_zero());
}

TEST_CASE("contact identity holds as a computed form identity") {
    for (auto idx : {std::vector<int>{}, {0}, {1}, {0, 0}}) {
        Symbol u = Symbol::jet("phi", idx);
        Form lhs = Form::contact(2, u);
        Form rhs = total_diff(scalar2(S(u)));
        for (int mu = 0; mu < 2; ++mu)
            rhs = rhs - scale(S(u.extended(mu)), Form::dx(2, mu));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("horizontal contraction through an abstract star atom is refused") {
    Form atom(2);
    atom.add_term({Generator::atom(StarBody{{0}, 0})}, ScalarExpr::one());
    KillingField X = translation2d();
    CHECK_THROWS_AS(interior(X, atom), UnsupportedError);
    KillingField U = u1_2d();
    CHECK(interior(U, atom).is_zero()); // vertical-only on a horizontal atom
}
