#include "varcomplex/form.hpp"

#include <algorithm>
#include <atomic>

#include "varcomplex/errors.hpp"

namespace varcomplex {

namespace {
std::atomic<std::size_t> g_term_limit{500000};
} // namespace

void set_term_limit(std::size_t limit) { g_term_limit.store(limit); }
std::size_t term_limit() { return g_term_limit.load(); }

Form Form::scalar(int dim, ScalarExpr c) {
    Form f(dim);
    f.add_term(Factors{}, std::move(c));
    return f;
}

Form Form::dx(int dim, int dir) {
    if (dir < 0 || dir >= dim) throw StructuralError("direction out of range");
    Form f(dim);
    f.add_term(Factors{Generator::dx(dir)}, ScalarExpr::one());
    return f;
}

Form Form::contact(int dim, const Symbol& jetSym) {
    if (jetSym.kind != SymKind::Jet) throw StructuralError("contact generator needs a jet symbol");
    Form f(dim);
    f.add_term(Factors{Generator::contact(jetSym)}, ScalarExpr::one());
    return f;
}

Bidegree Form::term_bidegree(const Factors& f) const {
    Bidegree b;
    for (const auto& g : f) {
        Bidegree d = g.degree(n_);
        b.p += d.p;
        b.q += d.q;
    }
    return b;
}

std::set<Bidegree> Form::bidegrees() const {
    std::set<Bidegree> out;
    for (const auto& [f, c] : t_) out.insert(term_bidegree(f));
    return out;
}

std::optional<Bidegree> Form::homogeneous_bidegree() const {
    auto bs = bidegrees();
    if (bs.size() > 1) return std::nullopt;
    if (bs.empty()) return Bidegree{0, 0};
    return *bs.begin();
}

Form Form::project(int p, int q) const {
    Form out(n_);
    for (const auto& [f, c] : t_)
        if (term_bidegree(f) == Bidegree{p, q}) out.t_[f] = c;
    return out;
}

Form operator+(const Form& a, const Form& b) {
    if (a.n_ != b.n_) throw StructuralError("ambient dimension mismatch in form addition");
    Form out = a;
    for (const auto& [f, c] : b.t_) {
        auto it = out.t_.find(f);
        if (it == out.t_.end()) {
            out.t_.emplace(f, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) out.t_.erase(it);
        }
    }
    return out;
}

Form operator-(const Form& a, const Form& b) { return a + (-b); }

Form Form::operator-() const {
    Form out(n_);
    for (const auto& [f, c] : t_) out.t_[f] = -c;
    return out;
}

void Form::add_term(const Factors& f, const ScalarExpr& coeff) {
    if (coeff.is_zero()) return;

    // Sort the factor word, folding each graded transposition into the sign.
    Factors w = f;
    int sign = 1;
    for (size_t i = 1; i < w.size(); ++i) {
        for (size_t j = i; j > 0 && w[j] < w[j - 1]; --j) {
            int da = w[j - 1].degree(n_).total();
            int db = w[j].degree(n_).total();
            if ((da * db) % 2 != 0) sign = -sign;
            std::swap(w[j], w[j - 1]);
        }
    }
    // A repeated generator of odd total degree kills the term; even star
    // atoms square to nonzero forms and must survive (the differentials do
    // not respect the stricter quotient).
    for (size_t i = 1; i < w.size(); ++i)
        if (w[i] == w[i - 1] && w[i].degree(n_).total() % 2 != 0) return;

    // Top-degree truncation.
    Bidegree b = term_bidegree(w);
    if (b.q > n_) return;

    // Star-pairing reorientation: with exactly one d-free star atom whose inner
    // monomial has the same horizontal degree as the term's dx block, the
    // pairing is symmetric; keep the smaller key inside the star.
    size_t nstars = 0, star_at = 0;
    for (size_t i = 0; i < w.size(); ++i)
        if (w[i].kind == Generator::Star) {
            ++nstars;
            star_at = i;
        }
    if (nstars == 1 && w[star_at].star.d == 0) {
        std::vector<int> hblock;
        for (const auto& g : w)
            if (g.kind == Generator::Horizontal) hblock.push_back(g.dir);
        const std::vector<int>& inner = w[star_at].star.word;
        if (!hblock.empty() && hblock.size() == inner.size() && inner > hblock) {
            Factors nw;
            nw.reserve(w.size());
            for (int d : inner) nw.push_back(Generator::dx(d));
            nw.push_back(Generator::atom(StarBody{hblock, 0}));
            for (const auto& g : w)
                if (g.kind == Generator::Vertical) nw.push_back(g);
            w = std::move(nw);
        }
    }

    ScalarExpr c = sign < 0 ? -coeff : coeff;
    auto it = t_.find(w);
    if (it == t_.end()) {
        t_.emplace(std::move(w), std::move(c));
        if (t_.size() > term_limit())
            throw ResourceError("form exceeded the configured term bound");
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

Form wedge(const Form& a, const Form& b) {
    if (a.dim() != b.dim()) throw StructuralError("ambient dimension mismatch in wedge");
    Form out(a.dim());
    for (const auto& [fa, ca] : a.terms()) {
        for (const auto& [fb, cb] : b.terms()) {
            Factors f = fa;
            f.insert(f.end(), fb.begin(), fb.end());
            out.add_term(f, ca * cb);
        }
    }
    return out;
}

Form scale(const ScalarExpr& c, const Form& a) {
    Form out(a.dim());
    for (const auto& [f, cf] : a.terms()) out.add_term(f, c * cf);
    return out;
}

Form substitute_coefficients(const Form& a, const std::map<Symbol, ScalarExpr>& bindings) {
    Form out(a.dim());
    for (const auto& [f, c] : a.terms()) out.add_term(f, substitute(c, bindings));
    return out;
}

} // namespace varcomplex
