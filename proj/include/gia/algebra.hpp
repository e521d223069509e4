#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gia {

/// Error thrown for malformed inputs (bad tables, unknown symbols, arity
/// mismatches, invalid parameters). The CLI maps it to exit code 2.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when a search exceeds its node budget. Distinct from "no result";
/// the CLI maps it to exit code 3.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One finitary operation: flat row-major table, last argument fastest.
struct OpTable {
    int arity = 0;
    std::vector<int> cells;

    int apply1(int a) const { return cells[static_cast<std::size_t>(a)]; }
    int apply2(int n, int a, int b) const {
        return cells[static_cast<std::size_t>(a) * n + b];
    }
};

/// A finite algebra: universe {0..n-1} with labels, named constants and
/// operation tables. Values are immutable after construction in practice;
/// all checking operations treat them as read-only.
struct FiniteAlgebra {
    std::string name;
    int size = 0;
    std::vector<std::string> labels;
    std::map<std::string, int> constants;
    std::map<std::string, OpTable> tables;

    bool binds_constant(const std::string& sym) const { return constants.count(sym) != 0; }
    bool binds_op(const std::string& sym) const { return tables.count(sym) != 0; }

    int constant(const std::string& sym) const;
    const OpTable& table(const std::string& sym) const;

    /// Index of a label, or -1.
    int label_index(const std::string& lbl) const;
    const std::string& label(int i) const { return labels[static_cast<std::size_t>(i)]; }

    /// Throws Error unless sizes, labels, constants and table shapes are
    /// consistent (entries in range, length n^arity, distinct labels).
    void validate() const;
};

std::size_t table_length(int size, int arity);

/// Componentwise direct product; both factors must bind the same symbols.
/// Element (i, j) gets index i * b.size + j and label "(li,lj)".
FiniteAlgebra direct_product(const FiniteAlgebra& a, const FiniteAlgebra& b);

/// k-fold direct power.
FiniteAlgebra direct_power(const FiniteAlgebra& a, int k);

/// Copy with elements relabelled by perm: element i becomes perm[i].
FiniteAlgebra apply_permutation(const FiniteAlgebra& a, std::span<const int> perm);

} // namespace gia
