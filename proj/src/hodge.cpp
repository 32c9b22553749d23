#include "varcomplex/hodge.hpp"

#include <algorithm>

#include "varcomplex/calculus.hpp"
#include "varcomplex/errors.hpp"

namespace varcomplex {

void HodgeTable::set(std::vector<int> from, Rational sign, std::vector<int> to) {
    std::sort(from.begin(), from.end());
    std::sort(to.begin(), to.end());
    table[std::move(from)] = {std::move(sign), std::move(to)};
}

void HodgeTable::validate() const {
    std::size_t expected = std::size_t(1) << dim;
    if (table.size() != expected)
        throw StructuralError("hodge table must cover all " + std::to_string(expected) +
                              " basis monomials");
    for (const auto& [from, to] : table) {
        for (int d : from)
            if (d < 0 || d >= dim) throw StructuralError("hodge table direction out of range");
        if (static_cast<int>(to.second.size()) != dim - static_cast<int>(from.size()))
            throw StructuralError("hodge table image has wrong degree");
        if (to.first == 0) throw StructuralError("hodge table sign must be nonzero");
    }
}

HodgeTable HodgeTable::minkowski2d() {
    HodgeTable t;
    t.dim = 2;
    t.signature = "minkowski(+,-)";
    t.set({}, Rational(-1), {0, 1});
    t.set({0}, Rational(-1), {1});
    t.set({1}, Rational(-1), {0});
    t.set({0, 1}, Rational(1), {});
    t.validate();
    return t;
}

namespace {

struct SplitTerm {
    std::vector<int> hword;
    Factors verticals;
    int p = 0;
};

SplitTerm split_term(const Factors& f) {
    SplitTerm s;
    for (const auto& g : f) {
        switch (g.kind) {
        case Generator::Horizontal:
            s.hword.push_back(g.dir);
            break;
        case Generator::Vertical:
            s.verticals.push_back(g);
            s.p += 1;
            break;
        case Generator::Star:
            throw UnsupportedError("star of a star atom: no such axiom is available");
        }
    }
    return s;
}

} // namespace

Form star(const Form& a, const HodgeMode& mode) {
    if (a.dim() != mode.dim) throw StructuralError("ambient dimension mismatch in star");
    const int n = a.dim();
    Form out(n);
    for (const auto& [f, c] : a.terms()) {
        SplitTerm s = split_term(f);
        // star(H ^ V) = (-1)^{|H| |V|} V ^ star(H); the F-component passes over.
        int sgn = parity_sign(static_cast<long>(s.hword.size()) * s.p);
        if (mode.kind == HodgeMode::Abstract) {
            Factors w = s.verticals;
            w.push_back(Generator::atom(StarBody{s.hword, 0}));
            ScalarExpr coeff = sgn < 0 ? ScalarExpr(-c) : c;
            out.add_term(w, coeff);
        } else {
            const auto it = mode.table->table.find(s.hword);
            if (it == mode.table->table.end())
                throw StructuralError("hodge table is missing a basis monomial");
            Factors w = s.verticals;
            for (int d : it->second.second) w.push_back(Generator::dx(d));
            CRat factor(it->second.first * sgn);
            out.add_term(w, c * ScalarExpr::constant(factor));
        }
    }
    return out;
}

namespace {

Form renormalize(const Form& a) {
    Form out(a.dim());
    for (const auto& [f, c] : a.terms()) out.add_term(f, c);
    return out;
}

} // namespace

Form star_pair_normalize(const Form& a) { return renormalize(a); }

Form star_delta_commute(const Form& a) { return renormalize(a); }

Form expand_atoms(const Form& a, const HodgeTable& table) {
    const int n = a.dim();
    if (table.dim != n) throw StructuralError("ambient dimension mismatch in atom expansion");
    HodgeMode tm = HodgeMode::table_mode(table);
    Form out(n);
    for (const auto& [f, c] : a.terms()) {
        Form acc = Form::scalar(n, c);
        for (const auto& g : f) {
            if (g.kind != Generator::Star) {
                Form single(n);
                single.add_term(Factors{g}, ScalarExpr::one());
                acc = wedge(acc, single);
                continue;
            }
            Form inner(n);
            Factors hw;
            for (int d : g.star.word) hw.push_back(Generator::dx(d));
            inner.add_term(hw, ScalarExpr::one());
            Form expanded = star(inner, tm);
            for (int k = 0; k < g.star.d; ++k) expanded = horizontal_diff(expanded);
            acc = wedge(acc, expanded);
        }
        out = out + acc;
    }
    return out;
}

} // namespace varcomplex
