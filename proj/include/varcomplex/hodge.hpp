#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "varcomplex/form.hpp"

namespace varcomplex {

/// Explicit Hodge action on horizontal basis monomials: a total mapping
/// on all 2^n of them, each image a signed basis monomial of complementary
/// degree.
struct HodgeTable {
    int dim = 0;
    std::string signature;
    std::map<std::vector<int>, std::pair<Rational, std::vector<int>>> table;

    void set(std::vector<int> from, Rational sign, std::vector<int> to);
    void validate() const;

    /// The 2D Minkowski table consistent with the worked Klein-Gordon
    /// derivations: vol = dx ^ dt, signature (+,-).
    static HodgeTable minkowski2d();
};

struct HodgeMode {
    enum Kind { Table, Abstract } kind = Abstract;
    int dim = 0;
    std::optional<HodgeTable> table;

    static HodgeMode abstract_mode(int n) { return HodgeMode{Abstract, n, std::nullopt}; }
    static HodgeMode table_mode(HodgeTable t) {
        int n = t.dim;
        return HodgeMode{Table, n, std::move(t)};
    }
};

/// Hodge star on the product manifold: acts on the horizontal block of each
/// term, passing vertical factors and scalar coefficients over. Table mode
/// substitutes the image monomial; abstract mode wraps the horizontal block
/// in a star atom. Star of a star is deliberately undefined.
Form star(const Form& a, const HodgeMode& mode);

/// Replaces every abstract star atom d^k(star(w)) by its table expansion.
Form expand_atoms(const Form& a, const HodgeTable& table);

/// Symmetric-pairing reorientation of star pairs. Canonical forms already carry it (the
/// normalizer reorients eligible gamma ^ star(beta) products so the smaller
/// key sits inside the atom); this entry point re-normalizes explicitly.
Form star_pair_normalize(const Form& a);

/// delta passes through the star: delta(star(beta)) = star(delta(beta)).
/// Atoms store the pass-through shape already (their inner is purely
/// horizontal after the F-components move over), so this re-normalizes.
Form star_delta_commute(const Form& a);

} // namespace varcomplex
