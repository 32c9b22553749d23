#include <doctest.h>

#include <fstream>

#include "varcomplex/expr_parse.hpp"
#include "varcomplex/render.hpp"
#include "varcomplex/scenario.hpp"
#include "varcomplex/selfcheck.hpp"
#include "varcomplex/system.hpp"

using namespace varcomplex;

TEST_CASE("registry contains exactly the documented scenarios") {
    std::vector<std::string> expect{"kg-abstract", "kg2d", "mechanics", "translation2d", "u1",
                                    "yangmills"};
    CHECK(scenario_names() == expect);
    for (const auto& name : expect) CHECK_NOTHROW(load_scenario(name, 0));
    CHECK_THROWS(load_scenario("nonsense", 0));
}

TEST_CASE("positioned diagnostics for malformed input") {
    std::string bad = "scenario broken\n"
                      "dim 2\n"
                      "coords t x\n"
                      "field phi conjugate phibar\n"
                      "hodge abstract\n"
                      "lagrangian = d(phi) ^ ^ d(phibar)\n";
    try {
        parse_scenario(bad);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 6);
        CHECK(std::string(e.what()).find("atom") != std::string::npos);
    }

    std::string unknown = "scenario broken\ndim 1\ncoords t\nhodge abstract\n"
                          "lagrangian = zeta * dx[t]\n";
    CHECK_THROWS_AS(parse_scenario(unknown), ParseError);

    // theta with the wrong bidegree
    std::string badtheta = "scenario broken\ndim 2\ncoords t x\nfield phi conjugate phibar\n"
                           "hodge abstract\n"
                           "lagrangian = star(phi*phibar)\n"
                           "theta = phi * dx[t]^dx[x]\n";
    CHECK_THROWS_AS(parse_scenario(badtheta), StructuralError);

    // incomplete hodge table
    std::string badtable = "scenario broken\ndim 2\ncoords t x\nfield q real\n"
                           "hodge table\n"
                           "  1 -> -1 dt^dx\n"
                           "end\n"
                           "lagrangian = q * dx[t]^dx[x]\n";
    CHECK_THROWS_AS(parse_scenario(badtable), StructuralError);
}

TEST_CASE("expression grammar corners") {
    Scenario sc = load_scenario("kg2d", 0);
    ExprContext ctx;
    ctx.dim = 2;
    ctx.coord_dirs = {{"t", 0}, {"x", 1}};
    ctx.fields = &sc.scalar().sys.fields;
    ctx.constants["mu"] = true;
    ctx.hodge = &sc.scalar().sys.hodge;

    Form half_phi = parse_form_expr("1/2 * phi", ctx);
    CHECK(half_phi == Form::scalar(2, ScalarExpr::constant(CRat::frac(1, 2)) *
                                          ScalarExpr::sym(Symbol::jet("phi", {}))));
    Form p = parse_form_expr("pow(mu,2) * dx[0] ^ dx[x]", ctx);
    Form expect = scale(ScalarExpr::sym(Symbol::constant("mu")).pow(2),
                        wedge(Form::dx(2, 0), Form::dx(2, 1)));
    CHECK(p == expect);
    CHECK(parse_form_expr("i*i + 1", ctx).is_zero());
    CHECK(parse_form_expr("del(phi) ^ del(phi)", ctx).is_zero());
    CHECK(parse_form_expr("conj(i * phi)", ctx) ==
          Form::scalar(2, ScalarExpr::constant(-CRat::i()) *
                              ScalarExpr::sym(Symbol::jet("phibar", {}))));
    CHECK_THROWS_AS(parse_form_expr("dx[z]", ctx), ParseError);
}

TEST_CASE("scenario round trip is a fixed point") {
    for (const auto& name : scenario_names()) {
        Scenario s1 = load_scenario(name, 0);
        std::string text = render_scenario(s1);
        Scenario s2 = parse_scenario(text);
        CHECK(render_scenario(s2) == text);
        if (!s1.is_matrix()) {
            CHECK(s2.scalar().sys.L == s1.scalar().sys.L);
            CHECK(s2.scalar().sys.theta == s1.scalar().sys.theta);
            CHECK(s2.scalar().killings.size() == s1.scalar().killings.size());
            for (const auto& [k, X] : s1.scalar().killings) {
                const KillingField& Y = s2.scalar().killings.at(k);
                CHECK(Y.horizontal_table() == X.horizontal_table());
                CHECK(Y.vertical_table() == X.vertical_table());
            }
            CHECK(euler_lagrange(s2.scalar().sys) == euler_lagrange(s1.scalar().sys));
        } else {
            CHECK(s2.matrix().sys.L == s1.matrix().sys.L);
            CHECK(s2.matrix().sys.theta == s1.matrix().sys.theta);
        }
    }
}

TEST_CASE("ast rendering round trips and is machine readable") {
    Rng rng(440);
    NameContext ctx;
    ctx.coords = {"t", "x"};
    for (int i = 0; i < 50; ++i) {
        Form f = random_form(rng, 2, true);
        Form back = form_from_ast(form_to_ast(f, ctx));
        CHECK(back == f);
        // stability of the serialized text itself
        CHECK(form_to_ast(back, ctx) == form_to_ast(f, ctx));
    }
    Scenario sc = load_scenario("mechanics", 0);
    Form el = euler_lagrange(sc.scalar().sys);
    CHECK(form_from_ast(form_to_ast(el, sc.names())) == el);
}

TEST_CASE("renderers are deterministic and cover the worked displays") {
    Scenario sc = load_scenario("mechanics", 0);
    Form el = euler_lagrange(sc.scalar().sys);
    NameContext ctx = sc.names();
    std::string a = render_form(el, ctx, Style::Plain);
    std::string b = render_form(el, ctx, Style::Plain);
    CHECK(a == b);
    CHECK(a == "(pd(L,q_{t},t) - pd(L,q) + pd(L,q_{t},q_{t})*q_{t,t} + pd(L,q,q_{t})*q_{t}) "
               "dt^del(q)");
    CHECK(render_form(Form::zero(1), ctx, Style::Plain) == "0");
    std::string latex = render_form(el, ctx, Style::Latex);
    CHECK(latex ==
          "(L_{q_{t} t} - L_{q} + L_{q_{t} q_{t}} q_{t t} + L_{q q_{t}} q_{t}) \\, "
          "\\mathrm{d}t \\wedge \\delta q");

    Scenario kg = load_scenario("kg2d", 0);
    Form j = momentum_map(kg.scalar().sys, kg.scalar().killings.at("u1"));
    std::string splain = render_form(j, kg.names(), Style::Plain);
    CHECK(splain == render_form(j, kg.names(), Style::Plain));
    CHECK(splain.find("alpha") != std::string::npos);
}

TEST_CASE("scenario files load from disk paths") {
    std::string src = builtin_scenario_source("u1", 0);
    std::string path = "frontend_u1_copy.vc";
    {
        std::ofstream out(path);
        out << src;
    }
    Scenario from_file = load_scenario(path, 0);
    std::remove(path.c_str());
    Scenario builtin = load_scenario("u1", 0);
    CHECK(from_file.scalar().sys.L == builtin.scalar().sys.L);
    CHECK(from_file.scalar().sys.theta == builtin.scalar().sys.theta);
    CHECK_THROWS_AS(load_scenario("no/such/file.vc", 0), StructuralError);
}

TEST_CASE("property suites pass at a reduced iteration count") {
    for (const auto& r : run_property_suites(60)) {
        INFO(r.name << ": " << r.detail);
        CHECK(r.ok);
    }
}
