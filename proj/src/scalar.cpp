#include "varcomplex/scalar.hpp"

#include <algorithm>

namespace varcomplex {

namespace {

int monomial_degree(const Monomial& m) {
    int d = 0;
    for (const auto& [s, e] : m) d += e;
    return d;
}

Monomial merge_monomials(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        int c = a[i].first.cmp(b[j].first);
        if (c < 0) {
            out.push_back(a[i++]);
        } else if (c > 0) {
            out.push_back(b[j++]);
        } else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return out;
}

} // namespace

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
    int da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da < db;
    size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        int c = a[i].first.cmp(b[i].first);
        if (c != 0) return c < 0;
        if (a[i].second != b[i].second) return a[i].second < b[i].second;
    }
    return a.size() < b.size();
}

ScalarExpr ScalarExpr::constant(const CRat& c) {
    ScalarExpr e;
    if (!c.is_zero()) e.t_[Monomial{}] = c;
    return e;
}

ScalarExpr ScalarExpr::sym(const Symbol& s) {
    ScalarExpr e;
    e.t_[Monomial{{s, 1}}] = CRat(1);
    return e;
}

bool ScalarExpr::is_constant() const {
    for (const auto& [m, c] : t_)
        for (const auto& [s, e] : m)
            if (s.kind != SymKind::Const) return false;
    return true;
}

std::optional<CRat> ScalarExpr::as_number() const {
    if (t_.empty()) return CRat(0);
    if (t_.size() == 1 && t_.begin()->first.empty()) return t_.begin()->second;
    return std::nullopt;
}

void ScalarExpr::add_term(Monomial m, CRat c) {
    if (c.is_zero()) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(std::move(m), std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

ScalarExpr ScalarExpr::operator-() const {
    ScalarExpr out;
    for (const auto& [m, c] : t_) out.t_[m] = -c;
    return out;
}

ScalarExpr operator+(const ScalarExpr& a, const ScalarExpr& b) {
    ScalarExpr out = a;
    for (const auto& [m, c] : b.t_) out.add_term(m, c);
    return out;
}

ScalarExpr operator-(const ScalarExpr& a, const ScalarExpr& b) {
    ScalarExpr out = a;
    for (const auto& [m, c] : b.t_) out.add_term(m, -c);
    return out;
}

ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b) {
    ScalarExpr out;
    for (const auto& [ma, ca] : a.t_)
        for (const auto& [mb, cb] : b.t_) out.add_term(merge_monomials(ma, mb), ca * cb);
    return out;
}

ScalarExpr ScalarExpr::pow(int e) const {
    if (e < 0) throw StructuralError("negative power of a scalar expression");
    ScalarExpr out = one();
    for (int k = 0; k < e; ++k) out = out * *this;
    return out;
}

bool operator<(const ScalarExpr& a, const ScalarExpr& b) {
    return std::lexicographical_compare(
        a.t_.begin(), a.t_.end(), b.t_.begin(), b.t_.end(), [](const auto& x, const auto& y) {
            MonomialLess less;
            if (less(x.first, y.first)) return true;
            if (less(y.first, x.first)) return false;
            return x.second < y.second;
        });
}

std::set<Symbol> ScalarExpr::jets() const {
    std::set<Symbol> out;
    for (const auto& [m, c] : t_) {
        for (const auto& [s, e] : m) {
            if (s.kind == SymKind::Jet) out.insert(s);
            if (s.kind == SymKind::Func)
                for (const auto& a : s.args)
                    if (a.kind == SymKind::Jet) out.insert(a);
        }
    }
    return out;
}

std::set<std::string> ScalarExpr::constants() const {
    std::set<std::string> out;
    for (const auto& [m, c] : t_)
        for (const auto& [s, e] : m)
            if (s.kind == SymKind::Const) out.insert(s.name);
    return out;
}

namespace {

/// d(sym)/d(jet) as an expression; zero for symbols not depending on it.
ScalarExpr symbol_partial(const Symbol& s, const Symbol& jet) {
    switch (s.kind) {
    case SymKind::Jet:
    case SymKind::Coord:
        return s == jet ? ScalarExpr::one() : ScalarExpr::zero();
    case SymKind::Func: {
        ScalarExpr out;
        for (size_t i = 0; i < s.args.size(); ++i) {
            if (s.args[i] == jet) {
                Symbol d = s;
                d.derivs[i] += 1;
                out = out + ScalarExpr::sym(d);
            }
        }
        return out;
    }
    default:
        return ScalarExpr::zero();
    }
}

/// D_mu(sym) for a single symbol.
ScalarExpr symbol_total(const Symbol& s, int dir) {
    switch (s.kind) {
    case SymKind::Jet:
        return ScalarExpr::sym(s.extended(dir));
    case SymKind::Coord:
        return s.dir == dir ? ScalarExpr::one() : ScalarExpr::zero();
    case SymKind::Func: {
        ScalarExpr out;
        for (size_t i = 0; i < s.args.size(); ++i) {
            ScalarExpr darg = symbol_total(s.args[i], dir);
            if (darg.is_zero()) continue;
            Symbol d = s;
            d.derivs[i] += 1;
            out = out + darg * ScalarExpr::sym(d);
        }
        return out;
    }
    default:
        return ScalarExpr::zero();
    }
}

/// Leibniz rule over the factors of each monomial, with per-symbol images.
template <typename SymImage>
ScalarExpr derive_monomials(const ScalarExpr& f, SymImage&& image) {
    ScalarExpr out;
    for (const auto& [m, c] : f.terms()) {
        for (size_t i = 0; i < m.size(); ++i) {
            ScalarExpr ds = image(m[i].first);
            if (ds.is_zero()) continue;
            Monomial rest;
            rest.reserve(m.size());
            for (size_t j = 0; j < m.size(); ++j) {
                int e = m[j].second - (j == i ? 1 : 0);
                if (e > 0) rest.emplace_back(m[j].first, e);
            }
            ScalarExpr restExpr;
            restExpr.add_term(std::move(rest), c * CRat(m[i].second));
            out = out + restExpr * ds;
        }
    }
    return out;
}

} // namespace

ScalarExpr partial_wrt_jet(const ScalarExpr& f, const Symbol& jet) {
    return derive_monomials(f, [&](const Symbol& s) { return symbol_partial(s, jet); });
}

ScalarExpr total_derivative(const ScalarExpr& f, int dir) {
    return derive_monomials(f, [&](const Symbol& s) { return symbol_total(s, dir); });
}

ScalarExpr substitute(const ScalarExpr& f, const std::map<Symbol, ScalarExpr>& bindings) {
    ScalarExpr out;
    for (const auto& [m, c] : f.terms()) {
        ScalarExpr term = ScalarExpr::constant(c);
        for (const auto& [s, e] : m) {
            if (s.kind == SymKind::Func) {
                for (const auto& a : s.args)
                    if (bindings.count(a))
                        throw UnsupportedError(
                            "substitution into an opaque function argument is not supported");
            }
            auto it = s.kind == SymKind::Jet ? bindings.find(s) : bindings.end();
            if (it != bindings.end()) {
                term = term * it->second.pow(e);
            } else {
                Monomial one{{s, e}};
                ScalarExpr factor;
                factor.add_term(std::move(one), CRat(1));
                term = term * factor;
            }
        }
        out = out + term;
    }
    return out;
}

ScalarExpr conjugate(const ScalarExpr& f, const FieldSet& fields) {
    ScalarExpr out;
    for (const auto& [m, c] : f.terms()) {
        Monomial cm;
        cm.reserve(m.size());
        for (const auto& [s, e] : m) {
            Symbol cs = s;
            if (s.kind == SymKind::Jet) {
                cs.name = fields.conj_of(s.name);
            } else if (s.kind == SymKind::Func) {
                for (auto& a : cs.args)
                    if (a.kind == SymKind::Jet) a.name = fields.conj_of(a.name);
            }
            cm.emplace_back(std::move(cs), e);
        }
        std::sort(cm.begin(), cm.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        out.add_term(std::move(cm), c.conj());
    }
    return out;
}

} // namespace varcomplex
