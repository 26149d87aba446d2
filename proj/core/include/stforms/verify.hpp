#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace stforms {

struct VerifyConfig {
    std::uint64_t seed = 42;
    int trials = 100;
    bool allow_unknown = false;  // downgrade unknown classifications to warnings
    bool tamper = false;         // negative control: corrupt one catalog matrix
};

struct VerifyGroupResult {
    std::string name;
    int checks = 0;
    int failures = 0;
    int warnings = 0;
};

struct VerifyReport {
    std::vector<VerifyGroupResult> groups;
    std::string first_counterexample;  // JSON, empty when everything passed

    bool ok() const {
        for (const auto& g : groups)
            if (g.failures > 0) return false;
        return true;
    }
};

/// Seeded randomized verification sweep: equivariance of every cataloged
/// operator, d/pullback commutation, composition identities, invariant
/// subspaces, solver-vs-catalog classification, and the stored negative
/// witness. Deterministic for a fixed config.
VerifyReport run_verification(const VerifyConfig& cfg);

}  // namespace stforms
