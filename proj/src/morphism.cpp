#include "gia/morphism.hpp"

#include <algorithm>
#include <numeric>

namespace gia {

bool same_signature(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    if (a.constants.size() != b.constants.size() || a.tables.size() != b.tables.size()) return false;
    for (const auto& [sym, _] : a.constants)
        if (!b.binds_constant(sym)) return false;
    for (const auto& [sym, op] : a.tables)
        if (!b.binds_op(sym) || b.table(sym).arity != op.arity) return false;
    return true;
}

bool check_homomorphism(const FiniteAlgebra& src, const FiniteAlgebra& dst,
                        std::span<const int> map) {
    if (!same_signature(src, dst)) throw Error("check_homomorphism: signature mismatch");
    if (static_cast<int>(map.size()) != src.size) throw Error("check_homomorphism: map has wrong length");
    for (int v : map)
        if (v < 0 || v >= dst.size) throw Error("check_homomorphism: map entry out of range");

    for (const auto& [sym, idx] : src.constants)
        if (map[static_cast<std::size_t>(idx)] != dst.constant(sym)) return false;

    for (const auto& [sym, op] : src.tables) {
        const OpTable& dop = dst.table(sym);
        std::size_t len = op.cells.size();
        std::vector<int> tup(static_cast<std::size_t>(op.arity), 0);
        for (std::size_t flat = 0; flat < len; ++flat) {
            std::size_t rest = flat;
            for (int k = op.arity - 1; k >= 0; --k) {
                tup[static_cast<std::size_t>(k)] = static_cast<int>(rest % static_cast<std::size_t>(src.size));
                rest /= static_cast<std::size_t>(src.size);
            }
            std::size_t dflat = 0;
            for (int k = 0; k < op.arity; ++k)
                dflat = dflat * static_cast<std::size_t>(dst.size) +
                        static_cast<std::size_t>(map[static_cast<std::size_t>(tup[static_cast<std::size_t>(k)])]);
            if (dop.cells[dflat] != map[static_cast<std::size_t>(op.cells[flat])]) return false;
        }
    }
    return true;
}

std::optional<std::vector<int>> find_isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    if (!same_signature(a, b)) throw Error("find_isomorphism: signature mismatch");
    if (a.size != b.size) return std::nullopt;

    std::vector<int> perm(static_cast<std::size_t>(a.size));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool consts_ok = true;
        for (const auto& [sym, idx] : a.constants)
            if (perm[static_cast<std::size_t>(idx)] != b.constant(sym)) {
                consts_ok = false;
                break;
            }
        if (!consts_ok) continue;
        if (!check_homomorphism(a, b, perm)) continue;
        std::vector<int> inv(perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i) inv[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
        if (check_homomorphism(b, a, inv)) return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

namespace {

struct HomSearch {
    const FiniteAlgebra& src;
    const FiniteAlgebra& dst;
    std::vector<int> img;
    std::vector<std::vector<int>> found;
    std::uint64_t nodes = 0;
    std::uint64_t budget;

    // Checks every operation instance whose arguments and result all have
    // images assigned so far (prefix of length k+1 just extended at k).
    bool consistent(int upto) const {
        for (const auto& [sym, op] : src.tables) {
            const OpTable& dop = dst.table(sym);
            std::size_t len = op.cells.size();
            std::vector<int> tup(static_cast<std::size_t>(op.arity), 0);
            for (std::size_t flat = 0; flat < len; ++flat) {
                std::size_t rest = flat;
                bool all_assigned = true;
                for (int k = op.arity - 1; k >= 0; --k) {
                    int e = static_cast<int>(rest % static_cast<std::size_t>(src.size));
                    rest /= static_cast<std::size_t>(src.size);
                    tup[static_cast<std::size_t>(k)] = e;
                    if (e > upto) all_assigned = false;
                }
                if (!all_assigned || op.cells[flat] > upto) continue;
                std::size_t dflat = 0;
                for (int k = 0; k < op.arity; ++k)
                    dflat = dflat * static_cast<std::size_t>(dst.size) +
                            static_cast<std::size_t>(img[static_cast<std::size_t>(tup[static_cast<std::size_t>(k)])]);
                if (dop.cells[dflat] != img[static_cast<std::size_t>(op.cells[flat])]) return false;
            }
        }
        return true;
    }

    void run(int elem) {
        if (++nodes > budget) throw BudgetExceeded("homomorphism search exceeded node budget");
        if (elem == src.size) {
            found.push_back(img);
            return;
        }
        for (int v = 0; v < dst.size; ++v) {
            bool pinned = false;
            for (const auto& [sym, idx] : src.constants)
                if (idx == elem && dst.constant(sym) != v) {
                    pinned = true;
                    break;
                }
            if (pinned) continue;
            img[static_cast<std::size_t>(elem)] = v;
            if (consistent(elem)) run(elem + 1);
        }
        img[static_cast<std::size_t>(elem)] = -1;
    }
};

} // namespace

std::vector<std::vector<int>> enumerate_homomorphisms(const FiniteAlgebra& src,
                                                      const FiniteAlgebra& dst,
                                                      std::uint64_t node_budget) {
    if (!same_signature(src, dst)) throw Error("enumerate_homomorphisms: signature mismatch");
    HomSearch s{src, dst, std::vector<int>(static_cast<std::size_t>(src.size), -1), {}, 0, node_budget};
    s.run(0);
    return s.found;
}

} // namespace gia
