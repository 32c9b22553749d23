#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "varcomplex/errors.hpp"

namespace varcomplex {

/// The atoms of the coefficient algebra.
///   Coord     - an explicit spacetime coordinate symbol x^mu
///   Const     - a named symbolic constant (mu, At, Ax, alpha, ...)
///   Func      - an opaque real function symbol with fixed arguments and a
///               record of formal partial derivatives per argument slot
///               (only what the symbolic mechanics Lagrangian needs)
///   Jet       - u_I: the I-th derivative of a field, an independent variable
enum class SymKind : int { Coord = 0, Const = 1, Func = 2, Jet = 3 };

struct Symbol {
    SymKind kind = SymKind::Const;
    std::string name;            // field / constant / function / coordinate name
    int dir = -1;                // Coord only
    std::vector<int> index;      // Jet only: sorted multi-index of directions
    std::vector<Symbol> args;    // Func only
    std::vector<int> derivs;     // Func only, same length as args

    static Symbol coord(int direction, std::string nm) {
        Symbol s;
        s.kind = SymKind::Coord;
        s.dir = direction;
        s.name = std::move(nm);
        return s;
    }
    static Symbol constant(std::string nm) {
        Symbol s;
        s.kind = SymKind::Const;
        s.name = std::move(nm);
        return s;
    }
    static Symbol jet(std::string field, std::vector<int> idx) {
        Symbol s;
        s.kind = SymKind::Jet;
        s.name = std::move(field);
        std::sort(idx.begin(), idx.end());
        s.index = std::move(idx);
        return s;
    }
    static Symbol func(std::string nm, std::vector<Symbol> arguments) {
        Symbol s;
        s.kind = SymKind::Func;
        s.name = std::move(nm);
        s.derivs.assign(arguments.size(), 0);
        s.args = std::move(arguments);
        return s;
    }

    /// Jet with one more derivative in the given direction.
    Symbol extended(int direction) const {
        Symbol s = *this;
        s.index.push_back(direction);
        std::sort(s.index.begin(), s.index.end());
        return s;
    }

    int cmp(const Symbol& o) const {
        if (kind != o.kind) return kind < o.kind ? -1 : 1;
        if (name != o.name) return name < o.name ? -1 : 1;
        if (dir != o.dir) return dir < o.dir ? -1 : 1;
        if (index != o.index) return index < o.index ? -1 : 1;
        if (derivs != o.derivs) return derivs < o.derivs ? -1 : 1;
        if (args.size() != o.args.size()) return args.size() < o.args.size() ? -1 : 1;
        for (size_t i = 0; i < args.size(); ++i) {
            int c = args[i].cmp(o.args[i]);
            if (c != 0) return c;
        }
        return 0;
    }
    friend bool operator<(const Symbol& a, const Symbol& b) { return a.cmp(b) < 0; }
    friend bool operator==(const Symbol& a, const Symbol& b) { return a.cmp(b) == 0; }
    friend bool operator!=(const Symbol& a, const Symbol& b) { return a.cmp(b) != 0; }
};

struct FieldInfo {
    std::string conj;            // partner name; equals own name for real fields
    bool unpaired_complex = false;
};

/// Declared field symbols of a scenario with their conjugation pairing.
/// Conjugation is an involution by construction.
class FieldSet {
public:
    void declare_real(const std::string& name) {
        check_fresh(name);
        fields_[name] = FieldInfo{name, false};
    }
    void declare_pair(const std::string& name, const std::string& conj) {
        check_fresh(name);
        check_fresh(conj);
        fields_[name] = FieldInfo{conj, false};
        fields_[conj] = FieldInfo{name, false};
    }
    /// A complex field with no declared partner; conjugating it is an error.
    void declare_unpaired(const std::string& name) {
        check_fresh(name);
        fields_[name] = FieldInfo{"", true};
    }

    bool has(const std::string& name) const { return fields_.count(name) != 0; }

    std::string conj_of(const std::string& name) const {
        auto it = fields_.find(name);
        if (it == fields_.end()) throw StructuralError("unknown field: " + name);
        if (it->second.unpaired_complex)
            throw StructuralError("field '" + name + "' has no declared conjugate partner");
        return it->second.conj;
    }

    const std::map<std::string, FieldInfo>& all() const { return fields_; }

private:
    void check_fresh(const std::string& name) const {
        if (fields_.count(name))
            throw StructuralError("duplicate field name: " + name);
    }
    std::map<std::string, FieldInfo> fields_;
};

} // namespace varcomplex
