#include "gia/algebra.hpp"

#include <algorithm>
#include <set>

namespace gia {

int FiniteAlgebra::constant(const std::string& sym) const {
    auto it = constants.find(sym);
    if (it == constants.end()) throw Error(name + ": unbound constant '" + sym + "'");
    return it->second;
}

const OpTable& FiniteAlgebra::table(const std::string& sym) const {
    auto it = tables.find(sym);
    if (it == tables.end()) throw Error(name + ": unbound operation '" + sym + "'");
    return it->second;
}

int FiniteAlgebra::label_index(const std::string& lbl) const {
    for (int i = 0; i < size; ++i)
        if (labels[static_cast<std::size_t>(i)] == lbl) return i;
    return -1;
}

std::size_t table_length(int size, int arity) {
    std::size_t len = 1;
    for (int i = 0; i < arity; ++i) len *= static_cast<std::size_t>(size);
    return len;
}

void FiniteAlgebra::validate() const {
    if (size <= 0) throw Error(name + ": size must be positive");
    if (static_cast<int>(labels.size()) != size)
        throw Error(name + ": expected " + std::to_string(size) + " element labels");
    std::set<std::string> seen(labels.begin(), labels.end());
    if (static_cast<int>(seen.size()) != size) throw Error(name + ": duplicate element labels");
    for (const auto& [sym, idx] : constants) {
        if (idx < 0 || idx >= size)
            throw Error(name + ": constant '" + sym + "' out of range");
        if (tables.count(sym)) throw Error(name + ": '" + sym + "' bound as both constant and operation");
    }
    for (const auto& [sym, op] : tables) {
        if (op.arity < 1) throw Error(name + ": operation '" + sym + "' must have arity >= 1");
        if (op.cells.size() != table_length(size, op.arity))
            throw Error(name + ": table for '" + sym + "' has " + std::to_string(op.cells.size()) +
                        " entries, expected " + std::to_string(table_length(size, op.arity)));
        for (int v : op.cells)
            if (v < 0 || v >= size)
                throw Error(name + ": table entry out of range in '" + sym + "'");
    }
}

FiniteAlgebra direct_product(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    if (a.constants.size() != b.constants.size() || a.tables.size() != b.tables.size())
        throw Error("direct_product: signature mismatch between " + a.name + " and " + b.name);
    for (const auto& [sym, _] : a.constants)
        if (!b.binds_constant(sym)) throw Error("direct_product: '" + sym + "' missing in " + b.name);
    for (const auto& [sym, op] : a.tables) {
        if (!b.binds_op(sym) || b.table(sym).arity != op.arity)
            throw Error("direct_product: '" + sym + "' missing or arity mismatch in " + b.name);
    }

    FiniteAlgebra p;
    p.name = "(" + a.name + "x" + b.name + ")";
    p.size = a.size * b.size;
    p.labels.reserve(static_cast<std::size_t>(p.size));
    for (int i = 0; i < a.size; ++i)
        for (int j = 0; j < b.size; ++j)
            p.labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");
    for (const auto& [sym, idx] : a.constants)
        p.constants[sym] = idx * b.size + b.constant(sym);

    for (const auto& [sym, opa] : a.tables) {
        const OpTable& opb = b.table(sym);
        OpTable op;
        op.arity = opa.arity;
        std::size_t len = table_length(p.size, op.arity);
        op.cells.resize(len);
        std::vector<int> tup(static_cast<std::size_t>(op.arity), 0);
        std::vector<int> ta(tup.size()), tb(tup.size());
        for (std::size_t flat = 0; flat < len; ++flat) {
            std::size_t rest = flat;
            for (int k = op.arity - 1; k >= 0; --k) {
                tup[static_cast<std::size_t>(k)] = static_cast<int>(rest % static_cast<std::size_t>(p.size));
                rest /= static_cast<std::size_t>(p.size);
            }
            std::size_t fa = 0, fb = 0;
            for (int k = 0; k < op.arity; ++k) {
                ta[static_cast<std::size_t>(k)] = tup[static_cast<std::size_t>(k)] / b.size;
                tb[static_cast<std::size_t>(k)] = tup[static_cast<std::size_t>(k)] % b.size;
                fa = fa * static_cast<std::size_t>(a.size) + static_cast<std::size_t>(ta[static_cast<std::size_t>(k)]);
                fb = fb * static_cast<std::size_t>(b.size) + static_cast<std::size_t>(tb[static_cast<std::size_t>(k)]);
            }
            op.cells[flat] = opa.cells[fa] * b.size + opb.cells[fb];
        }
        p.tables[sym] = std::move(op);
    }
    return p;
}

FiniteAlgebra direct_power(const FiniteAlgebra& a, int k) {
    if (k < 1) throw Error("direct_power: k must be >= 1");
    FiniteAlgebra p = a;
    for (int i = 1; i < k; ++i) p = direct_product(p, a);
    return p;
}

FiniteAlgebra apply_permutation(const FiniteAlgebra& a, std::span<const int> perm) {
    FiniteAlgebra r;
    r.name = a.name;
    r.size = a.size;
    r.labels.resize(static_cast<std::size_t>(a.size));
    for (int i = 0; i < a.size; ++i) r.labels[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = a.label(i);
    for (const auto& [sym, idx] : a.constants) r.constants[sym] = perm[static_cast<std::size_t>(idx)];
    for (const auto& [sym, op] : a.tables) {
        OpTable t;
        t.arity = op.arity;
        t.cells.resize(op.cells.size());
        std::size_t len = op.cells.size();
        std::vector<int> tup(static_cast<std::size_t>(op.arity), 0);
        for (std::size_t flat = 0; flat < len; ++flat) {
            std::size_t rest = flat;
            for (int k = op.arity - 1; k >= 0; --k) {
                tup[static_cast<std::size_t>(k)] = static_cast<int>(rest % static_cast<std::size_t>(a.size));
                rest /= static_cast<std::size_t>(a.size);
            }
            std::size_t dst = 0;
            for (int k = 0; k < op.arity; ++k)
                dst = dst * static_cast<std::size_t>(a.size) +
                      static_cast<std::size_t>(perm[static_cast<std::size_t>(tup[static_cast<std::size_t>(k)])]);
            t.cells[dst] = perm[static_cast<std::size_t>(op.cells[flat])];
        }
        r.tables[sym] = std::move(t);
    }
    return r;
}

} // namespace gia
