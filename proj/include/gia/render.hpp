#pragma once

#include "gia/algebra.hpp"
#include "gia/derive.hpp"

#include <string>
#include <vector>

namespace gia {

/// Binary table in the row-label layout:  sym | col labels / rows.
std::string render_binary_table(const std::string& sym, const std::vector<std::string>& labels,
                                const std::vector<int>& cells);

/// Unary table as a two-column listing.
std::string render_unary_table(const std::string& sym, const std::vector<std::string>& labels,
                               const std::vector<int>& cells);

/// Covering pairs ("x < y" lines) plus bounds.
std::string render_order(const DerivedOrder& order, const std::vector<std::string>& labels);

} // namespace gia
