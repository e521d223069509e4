#pragma once

#include "gia/algebra.hpp"
#include "gia/law.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gia {

/// Order induced by succ: rel[i][j] iff (i succ j) = 1.
struct DerivedOrder {
    int n = 0;
    std::vector<std::uint8_t> rel; // n*n, row-major
    bool poset = false;
    std::string violation; // which poset axiom fails, with elements

    bool le(int i, int j) const { return rel[static_cast<std::size_t>(i) * n + j] != 0; }
};

/// Requires succ and one; the verdict reports the first failing poset axiom
/// for arbitrary succ-algebras.
DerivedOrder derive_order(const FiniteAlgebra& alg);

struct Bounds {
    std::optional<int> least;
    std::optional<int> greatest;
};

Bounds derive_bounds(const DerivedOrder& order);

enum class ImplKind { Supset, Arrow, Mapsto, Succ };

ImplKind impl_kind_from_name(const std::string& name);
std::string impl_kind_name(ImplKind k);

/// Evaluates the defining composite (M10..M13) in an algebra binding
/// join, meet, neg, nabla, one.
int implication(const FiniteAlgebra& alg, ImplKind which, int x, int y);

/// x =>_0 y = y; x =>_{k+1} y = x succ (x =>_k y). Requires succ.
int iterate_implication(const FiniteAlgebra& alg, int i, int x, int y);

/// Checks (x =>_n y) v x = 1 with the join expanded via G16.
LawResult valued_check(const FiniteAlgebra& alg, int n);

/// Everything derivable from the signature. For succ-algebras: order,
/// join, bounds, and (when a least element exists) negation, meet, nabla,
/// delta. For M4-signature algebras: delta and the four implication
/// tables. Tables are computed even when the algebra fails the underlying
/// laws; `violations` flags what fails.
struct DerivedStructure {
    std::string algebra_name;
    int n = 0;

    std::optional<DerivedOrder> order;
    Bounds bounds;
    std::optional<std::vector<int>> join; // (x succ y) succ y
    std::optional<int> zero;              // explicit binding or derived least
    std::string zero_note;
    std::optional<std::vector<int>> neg;   // x succ 0
    std::optional<std::vector<int>> meet;  // the G24 composite
    std::optional<std::vector<int>> nabla; // ~x succ x
    std::optional<std::vector<int>> delta; // ~ nabla ~ x

    std::optional<std::vector<int>> impl_supset; // M10..M13, M4 signature only
    std::optional<std::vector<int>> impl_arrow;
    std::optional<std::vector<int>> impl_mapsto;
    std::optional<std::vector<int>> impl_succ;

    std::vector<std::string> violations;
};

DerivedStructure derive_structure(const FiniteAlgebra& alg);

} // namespace gia
