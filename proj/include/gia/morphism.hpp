#pragma once

#include "gia/algebra.hpp"

#include <optional>
#include <vector>

namespace gia {

/// True iff the two algebras bind the same symbols with the same arities.
bool same_signature(const FiniteAlgebra& a, const FiniteAlgebra& b);

/// True iff map (length src.size, entries into dst) commutes with every
/// operation table and preserves constants. Throws Error on signature
/// mismatch or an ill-shaped map.
bool check_homomorphism(const FiniteAlgebra& src, const FiniteAlgebra& dst,
                        std::span<const int> map);

/// First constant-preserving bijection, in lexicographic permutation order,
/// that is a homomorphism both ways; nullopt if none (immediately when the
/// sizes differ).
std::optional<std::vector<int>> find_isomorphism(const FiniteAlgebra& a,
                                                 const FiniteAlgebra& b);

/// All homomorphisms src -> dst, found by backtracking over element images
/// in index order (deterministic). node_budget caps the search tree.
std::vector<std::vector<int>> enumerate_homomorphisms(const FiniteAlgebra& src,
                                                      const FiniteAlgebra& dst,
                                                      std::uint64_t node_budget = 100'000'000);

} // namespace gia
