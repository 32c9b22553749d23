#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "varcomplex/form.hpp"

namespace varcomplex {

struct SuiteResult {
    std::string name;
    bool ok = false;
    int iterations = 0;
    std::string detail; // first failure description
};

/// Deterministic generator state for the randomized property suites.
/// Uses a pinned xorshift so results are identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : s_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    std::uint64_t next() {
        s_ ^= s_ << 13;
        s_ ^= s_ >> 7;
        s_ ^= s_ << 17;
        return s_;
    }
    int range(int lo, int hi) { // inclusive bounds
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t s_;
};

/// Random scalar coefficients and forms over the two-field (phi, phibar)
/// jet algebra in two dimensions, with or without abstract star atoms.
ScalarExpr random_scalar(Rng& rng, int max_terms = 3);
Form random_form(Rng& rng, int dim, bool with_atoms, int max_terms = 3);
Form random_homogeneous_form(Rng& rng, int dim, bool with_atoms);
FieldSet selfcheck_fields();

/// Runs every property suite (the acceptance criterion batteries) at the
/// given iteration count with pinned seeds.
std::vector<SuiteResult> run_property_suites(int iterations);

} // namespace varcomplex
