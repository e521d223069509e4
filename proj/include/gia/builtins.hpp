#pragma once

#include "gia/algebra.hpp"

#include <optional>

namespace gia {

/// The worked example algebras.
///   T4          <{0,a,b,1}, succ, neg, one>      diamond order
///   T4_modal    <{0,a,b,1}, join, meet, neg, nabla, one>
///   chain       C_{n+1} = {0, 1/n, ..., 1}, succ(i,j) = min(n, n-i+j)
///   example_2_7 the 5-element algebra with three incomparable atoms
///   boolean2    two-element Boolean algebra (succ = classical implication)
FiniteAlgebra make_builtin(const std::string& which, std::optional<int> param = std::nullopt);

/// Names accepted by make_builtin, in a stable order.
const std::vector<std::string>& builtin_names();

} // namespace gia
