#include "varcomplex/calculus.hpp"

#include "varcomplex/errors.hpp"

namespace varcomplex {

namespace {

/// Applies a degree +1/-1 operator theta through a term by the graded
/// Leibniz rule: theta(g1 ^ ... ^ gk) = sum_i (+-) g1 ... theta(gi) ... gk.
/// `image` maps one generator to a Form; `coeff_part` contributes the action
/// on the scalar coefficient (may be a zero form).
template <typename CoeffPart, typename GenImage>
Form anti_derivation(const Form& a, CoeffPart&& coeff_part, GenImage&& image) {
    const int n = a.dim();
    Form out(n);
    for (const auto& [f, c] : a.terms()) {
        {
            Form head = coeff_part(c);
            if (!head.is_zero()) {
                Form tail(n);
                tail.add_term(f, ScalarExpr::one());
                out = out + wedge(head, tail);
            }
        }
        int sign = 1;
        for (size_t i = 0; i < f.size(); ++i) {
            Form gi = image(f[i]);
            if (!gi.is_zero()) {
                Form prefix(n);
                prefix.add_term(Factors(f.begin(), f.begin() + i),
                                sign < 0 ? -c : c);
                Form suffix(n);
                suffix.add_term(Factors(f.begin() + i + 1, f.end()), ScalarExpr::one());
                out = out + wedge(wedge(prefix, gi), suffix);
            }
            if (f[i].degree(n).total() % 2 != 0) sign = -sign;
        }
    }
    return out;
}

} // namespace

Form vertical_diff(const Form& a) {
    const int n = a.dim();
    auto coeff_part = [&](const ScalarExpr& c) {
        Form out(n);
        for (const Symbol& u : c.jets()) {
            ScalarExpr pc = partial_wrt_jet(c, u);
            if (!pc.is_zero()) out.add_term(Factors{Generator::contact(u)}, pc);
        }
        return out;
    };
    auto image = [&](const Generator& g) {
        // delta kills dx and du; the star atom's inner is horizontal, so
        // delta passes through to zero as well.
        (void)g;
        return Form::zero(n);
    };
    return anti_derivation(a, coeff_part, image);
}

Form horizontal_diff(const Form& a) {
    const int n = a.dim();
    auto coeff_part = [&](const ScalarExpr& c) {
        Form out(n);
        for (int mu = 0; mu < n; ++mu) {
            ScalarExpr dc = total_derivative(c, mu);
            if (!dc.is_zero()) out.add_term(Factors{Generator::dx(mu)}, dc);
        }
        return out;
    };
    auto image = [&](const Generator& g) {
        Form out(n);
        switch (g.kind) {
        case Generator::Horizontal:
            break;
        case Generator::Vertical:
            // d(du_I) = dx^mu ^ du_{I mu}, forced by d delta = -delta d.
            for (int mu = 0; mu < n; ++mu)
                out.add_term(Factors{Generator::dx(mu), Generator::contact(g.jet.extended(mu))},
                             ScalarExpr::one());
            break;
        case Generator::Star:
            if (g.star.d == 0)
                out.add_term(Factors{Generator::atom(StarBody{g.star.word, 1})},
                             ScalarExpr::one());
            break;
        }
        return out;
    };
    return anti_derivation(a, coeff_part, image);
}

Form total_diff(const Form& a) { return vertical_diff(a) + horizontal_diff(a); }

Form interior(const KillingField& X, const Form& a) {
    if (X.dim() != a.dim()) throw StructuralError("ambient dimension mismatch in contraction");
    const int n = a.dim();
    const bool vonly = X.vertical_only();
    auto coeff_part = [&](const ScalarExpr&) { return Form::zero(n); };
    auto image = [&](const Generator& g) -> Form {
        switch (g.kind) {
        case Generator::Horizontal:
            return Form::scalar(n, X.horizontal(g.dir));
        case Generator::Vertical:
            return X.vertical(g.jet);
        case Generator::Star:
            if (!vonly)
                throw UnsupportedError(
                    "contraction of a star atom with a horizontally acting field needs table mode");
            // Vertical-only fields annihilate the purely horizontal atom.
            return Form::zero(n);
        }
        return Form::zero(n);
    };
    return anti_derivation(a, coeff_part, image);
}

Form lie_total(const KillingField& X, const Form& a) {
    return total_diff(interior(X, a)) + interior(X, total_diff(a));
}

Form lie_vertical(const KillingField& X, const Form& a) {
    return vertical_diff(interior(X, a)) + interior(X, vertical_diff(a));
}

Form lie_horizontal(const KillingField& X, const Form& a) {
    return horizontal_diff(interior(X, a)) + interior(X, horizontal_diff(a));
}

} // namespace varcomplex
