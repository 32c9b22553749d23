#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "varcomplex/scalar.hpp"

namespace varcomplex {

struct Bidegree {
    int p = 0;
    int q = 0;
    friend bool operator==(const Bidegree& a, const Bidegree& b) { return a.p == b.p && a.q == b.q; }
    friend bool operator!=(const Bidegree& a, const Bidegree& b) { return !(a == b); }
    friend bool operator<(const Bidegree& a, const Bidegree& b) {
        if (a.p != b.p) return a.p < b.p;
        return a.q < b.q;
    }
    int total() const { return p + q; }
};

/// Abstract Hodge atom: d^k(star(w)) for a horizontal basis monomial w.
/// Vertical factors and scalar coefficients always live outside the atom;
/// Appendix-B's pairing moves them over the star by definition.
struct StarBody {
    std::vector<int> word; // sorted distinct direction indices
    int d = 0;             // 0 or 1 (d^2 = 0 collapses anything higher)

    int cmp(const StarBody& o) const {
        if (word != o.word) return word < o.word ? -1 : 1;
        if (d != o.d) return d < o.d ? -1 : 1;
        return 0;
    }
};

/// One wedge factor of a term: dx^mu, a star atom, or a contact form du_I.
/// Canonical order: horizontal factors, then star atoms, then verticals.
struct Generator {
    enum Kind : int { Horizontal = 0, Star = 1, Vertical = 2 };
    Kind kind = Horizontal;
    int dir = -1;    // Horizontal
    StarBody star;   // Star
    Symbol jet;      // Vertical

    static Generator dx(int direction) {
        Generator g;
        g.kind = Horizontal;
        g.dir = direction;
        return g;
    }
    static Generator contact(Symbol jetSym) {
        Generator g;
        g.kind = Vertical;
        g.jet = std::move(jetSym);
        return g;
    }
    static Generator atom(StarBody b) {
        Generator g;
        g.kind = Star;
        g.star = std::move(b);
        return g;
    }

    Bidegree degree(int dim) const {
        switch (kind) {
        case Horizontal: return {0, 1};
        case Star: return {0, dim - static_cast<int>(star.word.size()) + star.d};
        case Vertical: return {1, 0};
        }
        return {0, 0};
    }

    int cmp(const Generator& o) const {
        if (kind != o.kind) return kind < o.kind ? -1 : 1;
        switch (kind) {
        case Horizontal:
            if (dir != o.dir) return dir < o.dir ? -1 : 1;
            return 0;
        case Star: return star.cmp(o.star);
        case Vertical: return jet.cmp(o.jet);
        }
        return 0;
    }
    friend bool operator==(const Generator& a, const Generator& b) { return a.cmp(b) == 0; }
    friend bool operator<(const Generator& a, const Generator& b) { return a.cmp(b) < 0; }
};

using Factors = std::vector<Generator>;

/// Safety bound on expression growth; exceeding it throws ResourceError.
void set_term_limit(std::size_t limit);
std::size_t term_limit();

/// Normalized sum of bigraded terms, each a scalar coefficient times an
/// ordered wedge of generators. Equality is identity of the canonical
/// representation; the ambient spacetime dimension is fixed per form.
class Form {
public:
    using Terms = std::map<Factors, ScalarExpr>;

    explicit Form(int dim) : n_(dim) {}

    static Form zero(int dim) { return Form(dim); }
    static Form scalar(int dim, ScalarExpr c);
    static Form dx(int dim, int dir);
    static Form contact(int dim, const Symbol& jetSym);

    int dim() const { return n_; }
    bool is_zero() const { return t_.empty(); }
    const Terms& terms() const { return t_; }

    Bidegree term_bidegree(const Factors& f) const;
    std::set<Bidegree> bidegrees() const;
    /// The unique bidegree if homogeneous (zero counts as any degree).
    std::optional<Bidegree> homogeneous_bidegree() const;

    Form project(int p, int q) const;

    friend Form operator+(const Form& a, const Form& b);
    friend Form operator-(const Form& a, const Form& b);
    Form operator-() const;
    friend bool operator==(const Form& a, const Form& b) { return a.n_ == b.n_ && a.t_ == b.t_; }
    friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

    /// Adds coeff * (f in the given order); sorts with graded signs,
    /// truncates above top horizontal degree, applies the star-pairing
    /// reorientation, merges.
    void add_term(const Factors& f, const ScalarExpr& coeff);

private:
    int n_;
    Terms t_;
};

Form wedge(const Form& a, const Form& b);
Form scale(const ScalarExpr& c, const Form& a);
inline Form project_bidegree(const Form& a, int p, int q) { return a.project(p, q); }

/// Substitution applied to every coefficient (on-shell reduction plumbing).
Form substitute_coefficients(const Form& a, const std::map<Symbol, ScalarExpr>& bindings);

} // namespace varcomplex
