#pragma once

#include <map>
#include <set>
#include <vector>

#include "varcomplex/rational.hpp"
#include "varcomplex/symbols.hpp"

namespace varcomplex {

/// Product of symbol powers, sorted by symbol. The canonical monomial.
using Monomial = std::vector<std::pair<Symbol, int>>;

/// Graded lexicographic order: total degree first, then symbol-wise.
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Exact commutative coefficient: a canonical sum of monomials over jet
/// coordinates, constants, coordinate symbols and opaque function symbols,
/// with complex-rational coefficients. Two expressions are equal iff their
/// canonical forms are identical; zero is the empty sum.
class ScalarExpr {
public:
    using Terms = std::map<Monomial, CRat, MonomialLess>;

    ScalarExpr() = default;

    static ScalarExpr zero() { return {}; }
    static ScalarExpr one() { return constant(CRat(1)); }
    static ScalarExpr constant(const CRat& c);
    static ScalarExpr sym(const Symbol& s);

    bool is_zero() const { return t_.empty(); }
    /// True when no jet, coordinate or function symbol occurs (named
    /// constants allowed).
    bool is_constant() const;
    /// The coefficient if the expression is a bare number, else nullopt.
    std::optional<CRat> as_number() const;

    const Terms& terms() const { return t_; }

    ScalarExpr operator-() const;
    friend ScalarExpr operator+(const ScalarExpr& a, const ScalarExpr& b);
    friend ScalarExpr operator-(const ScalarExpr& a, const ScalarExpr& b);
    friend ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b);
    ScalarExpr pow(int e) const;

    friend bool operator==(const ScalarExpr& a, const ScalarExpr& b) { return a.t_ == b.t_; }
    friend bool operator!=(const ScalarExpr& a, const ScalarExpr& b) { return !(a == b); }
    friend bool operator<(const ScalarExpr& a, const ScalarExpr& b);

    /// Jet coordinates this expression depends on, including the arguments
    /// of opaque function symbols.
    std::set<Symbol> jets() const;
    /// Every constant name that occurs.
    std::set<std::string> constants() const;

    void add_term(Monomial m, CRat c);

private:
    Terms t_;
};

/// Formal partial derivative treating each jet coordinate as independent.
ScalarExpr partial_wrt_jet(const ScalarExpr& f, const Symbol& jet);

/// Total derivative D_mu: prolongation on jets, delta on coordinates, chain
/// rule through opaque function symbols.
ScalarExpr total_derivative(const ScalarExpr& f, int dir);

/// Simultaneous substitution of jet coordinates, then canonicalization.
ScalarExpr substitute(const ScalarExpr& f, const std::map<Symbol, ScalarExpr>& bindings);

/// Complex conjugation: conjugates numeric coefficients and swaps each field
/// with its declared partner. Errors on unpaired complex fields.
ScalarExpr conjugate(const ScalarExpr& f, const FieldSet& fields);

} // namespace varcomplex
