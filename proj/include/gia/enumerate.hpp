#pragma once

#include "gia/algebra.hpp"
#include "gia/catalog.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gia {

struct EnumerationTask {
    std::string system_id;
    std::optional<int> param;
    int size = 1;
    bool canonical_only = true;
    std::uint64_t node_budget = 1'000'000'000;
    int jobs = 1;
};

struct EnumerationStats {
    std::uint64_t nodes = 0;          // branch assignments explored
    std::uint64_t completed = 0;      // fully assigned tables reaching final checks
    std::uint64_t canon_rejected = 0; // completed models rejected as non-canonical
    std::map<std::string, std::uint64_t> prunes; // per law id

    void merge(const EnumerationStats& o);
};

struct EnumerationResult {
    std::vector<FiniteAlgebra> models; // canonical, sorted by flat table
    EnumerationStats stats;
};

/// Depth-first table filling with constant pinning (one at n-1; zero at 0
/// when present), cell forcing, and ground-instance pruning of identity
/// laws; quasi-identities are checked on completed tables. Emits one model
/// per isomorphism class (lexicographically least flat table over
/// constant-fixing permutations), sorted. Deterministic; `jobs` partitions
/// the root branching without changing the result.
EnumerationResult enumerate_models(const EnumerationTask& task);
EnumerationResult enumerate_models(const ResolvedSystem& sys, const EnumerationTask& opts);

/// Oracle enumerator: generates every table over the pinned constants,
/// filters by all laws, canonicalizes. Only viable at small sizes; the
/// budget guards the blowup.
EnumerationResult enumerate_models_naive(const EnumerationTask& task);
EnumerationResult enumerate_models_naive(const ResolvedSystem& sys, const EnumerationTask& opts);

/// Concatenation of all operation tables (symbols in sorted order) plus
/// constant indices; the comparison key for canonical forms.
std::vector<int> flat_tables(const FiniteAlgebra& alg);

/// Lexicographically least relabelling over permutations that fix the
/// bound constants (after normalizing one to n-1 and zero to 0).
FiniteAlgebra canonical_form(const FiniteAlgebra& alg);
bool is_canonical(const FiniteAlgebra& alg);

} // namespace gia
