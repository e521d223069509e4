#pragma once

#include "gia/enumerate.hpp"
#include "gia/law.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gia {

/// "Does every model of <base> satisfy <law>?" checked by exhaustive
/// enumeration size by size. Named conjectures:
///   G35-in-G40              G'35 over G4_0 (open question)
///   DG-implies-printed-G27  G27-as-printed over DG0
/// plus the generic form "<law-id>-in-<system-id>".
struct Conjecture {
    std::string id;
    std::string base_system;
    std::optional<int> base_param;
    std::string law_id;
};

Conjecture parse_conjecture(const std::string& id);

struct ConjectureReport {
    Conjecture conjecture;
    int max_size = 0;
    struct PerSize {
        int size;
        std::uint64_t models;
    };
    std::vector<PerSize> sizes; // sizes actually enumerated
    std::optional<FiniteAlgebra> counterexample;
    std::optional<Witness> counterexample_witness;

    bool holds() const { return !counterexample.has_value(); }
};

/// Deterministic: models are scanned in canonical enumeration order and the
/// first violating model (at the smallest violating size) is returned with
/// its lexicographically first witness.
ConjectureReport check_conjecture(const std::string& conjecture_id, int max_size,
                                  std::uint64_t node_budget = 1'000'000'000, int jobs = 1);

} // namespace gia
