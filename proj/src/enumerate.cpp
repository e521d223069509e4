#include "gia/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

namespace gia {

void EnumerationStats::merge(const EnumerationStats& o) {
    nodes += o.nodes;
    completed += o.completed;
    canon_rejected += o.canon_rejected;
    for (const auto& [k, v] : o.prunes) prunes[k] += v;
}

std::vector<int> flat_tables(const FiniteAlgebra& alg) {
    std::vector<int> out;
    for (const auto& [sym, op] : alg.tables) // std::map: symbols in sorted order
        out.insert(out.end(), op.cells.begin(), op.cells.end());
    for (const auto& [sym, idx] : alg.constants) out.push_back(idx);
    return out;
}

namespace {

// Permutations of [0,n) fixing the given indices, lexicographic order,
// identity first.
std::vector<std::vector<int>> fixing_permutations(int n, const std::vector<int>& fixed) {
    std::vector<int> free_idx;
    for (int i = 0; i < n; ++i)
        if (std::find(fixed.begin(), fixed.end(), i) == fixed.end()) free_idx.push_back(i);
    std::vector<int> arrangement = free_idx;
    std::vector<std::vector<int>> out;
    do {
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        for (std::size_t i = 0; i < free_idx.size(); ++i)
            perm[static_cast<std::size_t>(free_idx[i])] = arrangement[i];
        out.push_back(std::move(perm));
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    return out;
}

std::vector<int> pinned_indices(const FiniteAlgebra& alg) {
    std::vector<int> fixed;
    for (const auto& [sym, idx] : alg.constants)
        if (std::find(fixed.begin(), fixed.end(), idx) == fixed.end()) fixed.push_back(idx);
    return fixed;
}

} // namespace

FiniteAlgebra canonical_form(const FiniteAlgebra& alg) {
    // normalize constant placement first: one -> n-1, zero -> 0
    FiniteAlgebra base = alg;
    auto swap_to = [&](const std::string& sym, int target) {
        if (!base.binds_constant(sym)) return;
        int cur = base.constant(sym);
        if (cur == target) return;
        std::vector<int> perm(static_cast<std::size_t>(base.size));
        std::iota(perm.begin(), perm.end(), 0);
        std::swap(perm[static_cast<std::size_t>(cur)], perm[static_cast<std::size_t>(target)]);
        base = apply_permutation(base, perm);
    };
    swap_to("one", base.size - 1);
    swap_to("zero", 0);

    std::vector<int> best_key = flat_tables(base);
    FiniteAlgebra best = base;
    for (const auto& perm : fixing_permutations(base.size, pinned_indices(base))) {
        FiniteAlgebra cand = apply_permutation(base, perm);
        std::vector<int> key = flat_tables(cand);
        if (key < best_key) {
            best_key = std::move(key);
            best = std::move(cand);
        }
    }
    best.labels = alg.labels.size() == best.labels.size() ? best.labels : alg.labels;
    return best;
}

bool is_canonical(const FiniteAlgebra& alg) {
    return flat_tables(alg) == flat_tables(canonical_form(alg));
}

namespace {

// -------- partial-table search state --------

struct CellRef {
    int op = 0;        // index into ops order
    std::size_t flat = 0;
};

struct PartialEval {
    enum class Tag { Known, Blocked, Undetermined } tag;
    int value = -1;        // Known
    int op = -1;           // Blocked: which table
    std::size_t flat = 0;  // Blocked: which cell
};

struct GroundInstance {
    int law = 0;                 // index into identity law list
    std::array<int, 4> val{};    // variable values (alphabetical var order)
};

struct Engine {
    const ResolvedSystem& sys;
    int n;
    std::uint64_t budget;
    std::atomic<std::uint64_t>* node_counter; // shared across workers
    bool canonical_only = true;

    std::vector<std::string> op_names;      // assignment order
    std::vector<int> op_arity;
    std::vector<std::vector<int>> tables;   // -1 = unassigned
    std::map<std::string, int> op_index;
    std::map<std::string, int> constants;   // pinned

    std::vector<const Law*> identity_laws;
    std::vector<std::vector<std::string>> law_vars;
    std::vector<GroundInstance> instances;

    std::vector<CellRef> cell_order;        // static DFS order
    std::vector<CellRef> trail;

    EnumerationStats stats;
    std::vector<FiniteAlgebra> models;

    // ---- term evaluation over partial tables ----
    PartialEval eval(const TermPtr& t, const std::array<int, 4>& val, const std::vector<std::string>& vars) const {
        switch (t->kind) {
        case Term::Kind::Variable: {
            for (std::size_t i = 0; i < vars.size(); ++i)
                if (vars[i] == t->name) return {PartialEval::Tag::Known, val[i], -1, 0};
            return {PartialEval::Tag::Undetermined, -1, -1, 0};
        }
        case Term::Kind::Constant: {
            auto it = constants.find(t->name);
            if (it == constants.end()) return {PartialEval::Tag::Undetermined, -1, -1, 0};
            return {PartialEval::Tag::Known, it->second, -1, 0};
        }
        case Term::Kind::Apply: {
            auto oit = op_index.find(t->name);
            if (oit == op_index.end()) return {PartialEval::Tag::Undetermined, -1, -1, 0};
            std::size_t flat = 0;
            for (const auto& a : t->args) {
                PartialEval pe = eval(a, val, vars);
                if (pe.tag != PartialEval::Tag::Known) return {PartialEval::Tag::Undetermined, -1, -1, 0};
                flat = flat * static_cast<std::size_t>(n) + static_cast<std::size_t>(pe.value);
            }
            int v = tables[static_cast<std::size_t>(oit->second)][flat];
            if (v < 0) return {PartialEval::Tag::Blocked, -1, oit->second, flat};
            return {PartialEval::Tag::Known, v, -1, 0};
        }
        }
        return {PartialEval::Tag::Undetermined, -1, -1, 0};
    }

    void assign(int op, std::size_t flat, int v) {
        tables[static_cast<std::size_t>(op)][flat] = v;
        trail.push_back({op, flat});
    }

    void undo_to(std::size_t mark) {
        while (trail.size() > mark) {
            CellRef c = trail.back();
            trail.pop_back();
            tables[static_cast<std::size_t>(c.op)][c.flat] = -1;
        }
    }

    // Returns false on a violated ground instance; applies forced values.
    bool propagate() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const GroundInstance& gi : instances) {
                const Law& law = *identity_laws[static_cast<std::size_t>(gi.law)];
                const auto& vars = law_vars[static_cast<std::size_t>(gi.law)];
                PartialEval l = eval(law.conclusion.lhs, gi.val, vars);
                PartialEval r = eval(law.conclusion.rhs, gi.val, vars);
                if (l.tag == PartialEval::Tag::Known && r.tag == PartialEval::Tag::Known) {
                    if (l.value != r.value) {
                        ++stats.prunes[law.id];
                        return false;
                    }
                } else if (l.tag == PartialEval::Tag::Known && r.tag == PartialEval::Tag::Blocked) {
                    assign(r.op, r.flat, l.value);
                    changed = true;
                } else if (r.tag == PartialEval::Tag::Known && l.tag == PartialEval::Tag::Blocked) {
                    assign(l.op, l.flat, r.value);
                    changed = true;
                }
            }
        }
        return true;
    }

    FiniteAlgebra materialize() const {
        FiniteAlgebra a;
        a.size = n;
        for (int i = 0; i < n; ++i) a.labels.push_back(std::to_string(i));
        a.constants = constants;
        for (std::size_t oi = 0; oi < op_names.size(); ++oi) {
            OpTable t;
            t.arity = op_arity[oi];
            t.cells = tables[oi];
            a.tables[op_names[oi]] = std::move(t);
        }
        return a;
    }

    void leaf() {
        ++stats.completed;
        FiniteAlgebra a = materialize();
        // identities are fully ground here, so propagate() already verified
        // them; quasi-identities need the completed table
        for (const Law& law : sys.laws) {
            if (law.is_identity()) continue;
            if (check_law(a, law)) {
                ++stats.prunes[law.id];
                return;
            }
        }
        if (!canonical_only || is_canonical(a))
            models.push_back(std::move(a));
        else
            ++stats.canon_rejected;
    }

    void dfs(std::size_t pos) {
        while (pos < cell_order.size() &&
               tables[static_cast<std::size_t>(cell_order[pos].op)][cell_order[pos].flat] >= 0)
            ++pos;
        if (pos == cell_order.size()) {
            leaf();
            return;
        }
        CellRef c = cell_order[pos];
        for (int v = 0; v < n; ++v) {
            std::uint64_t seen = node_counter->fetch_add(1, std::memory_order_relaxed) + 1;
            if (seen > budget) throw BudgetExceeded("enumeration exceeded node budget");
            ++stats.nodes;
            std::size_t mark = trail.size();
            assign(c.op, c.flat, v);
            if (propagate()) dfs(pos + 1);
            undo_to(mark);
        }
    }
};

Engine make_engine(const ResolvedSystem& sys, int size, std::uint64_t budget,
                   std::atomic<std::uint64_t>* counter, bool canonical_only) {
    Engine e{sys, size, budget, counter, canonical_only, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}};

    // pin constants: one at n-1; zero at 0 when the signature has it or the
    // system requires a least element
    bool has_one = false, has_zero = false;
    for (const auto& c : sys.signature.constants) {
        if (c == "one") has_one = true;
        if (c == "zero") has_zero = true;
    }
    if (has_one) e.constants["one"] = size - 1;
    if (has_zero || sys.needs_least) e.constants["zero"] = 0;

    // binary operations first (declaration order), then unary
    for (const auto& [op, arity] : sys.signature.operations)
        if (arity >= 2) {
            e.op_index[op] = static_cast<int>(e.op_names.size());
            e.op_names.push_back(op);
            e.op_arity.push_back(arity);
        }
    for (const auto& [op, arity] : sys.signature.operations)
        if (arity == 1) {
            e.op_index[op] = static_cast<int>(e.op_names.size());
            e.op_names.push_back(op);
            e.op_arity.push_back(arity);
        }
    for (std::size_t oi = 0; oi < e.op_names.size(); ++oi)
        e.tables.emplace_back(table_length(size, e.op_arity[oi]), -1);

    // G-family prefills: G1 row, G2 column, G5 diagonal, G17 zero row
    if (sys.g_prefill && e.op_index.count("succ")) {
        auto& t = e.tables[static_cast<std::size_t>(e.op_index["succ"])];
        const int one = size - 1;
        for (int j = 0; j < size; ++j) t[static_cast<std::size_t>(one) * size + j] = j;   // 1 succ x = x
        for (int i = 0; i < size; ++i) t[static_cast<std::size_t>(i) * size + one] = one; // x succ 1 = 1
        for (int i = 0; i < size; ++i) t[static_cast<std::size_t>(i) * size + i] = one;   // x succ x = 1
        if (e.constants.count("zero"))
            for (int j = 0; j < size; ++j) t[static_cast<std::size_t>(0) * size + j] = one; // 0 succ x = 1
    }

    // identity laws and their ground instances
    for (const Law& law : sys.laws) {
        if (!law.is_identity()) continue;
        e.identity_laws.push_back(&law);
        std::vector<std::string> vars = term_variables(law.conclusion.lhs);
        for (const auto& v : term_variables(law.conclusion.rhs))
            if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
        std::sort(vars.begin(), vars.end());
        if (vars.size() > 4) throw Error("enumeration supports at most 4 variables per law");
        e.law_vars.push_back(vars);
    }
    for (std::size_t li = 0; li < e.identity_laws.size(); ++li) {
        const std::size_t k = e.law_vars[li].size();
        std::size_t count = table_length(size, static_cast<int>(k));
        for (std::size_t flat = 0; flat < count; ++flat) {
            GroundInstance gi;
            gi.law = static_cast<int>(li);
            std::size_t rest = flat;
            for (std::size_t i = k; i > 0; --i) {
                gi.val[i - 1] = static_cast<int>(rest % static_cast<std::size_t>(size));
                rest /= static_cast<std::size_t>(size);
            }
            e.instances.push_back(gi);
        }
    }

    // static cell order: tables in op order, cells row-major
    for (std::size_t oi = 0; oi < e.op_names.size(); ++oi)
        for (std::size_t f = 0; f < e.tables[oi].size(); ++f)
            if (e.tables[oi][f] < 0) e.cell_order.push_back({static_cast<int>(oi), f});

    return e;
}

EnumerationResult run_engine(const ResolvedSystem& sys, const EnumerationTask& opts) {
    if (opts.size < 1) throw Error("enumeration size must be >= 1");
    std::atomic<std::uint64_t> counter{0};
    Engine root = make_engine(sys, opts.size, opts.node_budget, &counter, opts.canonical_only);

    EnumerationResult result;
    if (!root.propagate()) {
        result.stats = root.stats;
        return result;
    }

    // find the first unassigned cell for root partitioning
    std::size_t pos = 0;
    while (pos < root.cell_order.size() &&
           root.tables[static_cast<std::size_t>(root.cell_order[pos].op)][root.cell_order[pos].flat] >= 0)
        ++pos;

    int jobs = std::max(1, opts.jobs);
    if (pos == root.cell_order.size() || jobs == 1) {
        root.dfs(pos);
        result.models = std::move(root.models);
        result.stats = root.stats;
    } else {
        CellRef c = root.cell_order[pos];
        int branches = opts.size;
        jobs = std::min(jobs, branches);
        std::vector<Engine> workers;
        workers.reserve(static_cast<std::size_t>(jobs));
        for (int w = 0; w < jobs; ++w) {
            Engine e = root; // copies the root-propagated state
            e.stats = EnumerationStats{};
            workers.push_back(std::move(e));
        }
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
        std::vector<std::thread> threads;
        for (int w = 0; w < jobs; ++w) {
            threads.emplace_back([&, w]() {
                Engine& e = workers[static_cast<std::size_t>(w)];
                try {
                    for (int v = w; v < branches; v += jobs) {
                        std::uint64_t seen = e.node_counter->fetch_add(1, std::memory_order_relaxed) + 1;
                        if (seen > e.budget) throw BudgetExceeded("enumeration exceeded node budget");
                        ++e.stats.nodes;
                        std::size_t mark = e.trail.size();
                        e.assign(c.op, c.flat, v);
                        if (e.propagate()) e.dfs(pos + 1);
                        e.undo_to(mark);
                    }
                } catch (...) {
                    errors[static_cast<std::size_t>(w)] = std::current_exception();
                }
            });
        }
        for (auto& t : threads) t.join();
        for (auto& err : errors)
            if (err) std::rethrow_exception(err);
        for (Engine& e : workers) {
            result.stats.merge(e.stats);
            for (auto& m : e.models) result.models.push_back(std::move(m));
        }
    }

    std::sort(result.models.begin(), result.models.end(),
              [](const FiniteAlgebra& a, const FiniteAlgebra& b) { return flat_tables(a) < flat_tables(b); });
    for (std::size_t i = 0; i < result.models.size(); ++i)
        result.models[i].name = sys.id + ".n" + std::to_string(opts.size) + "." + std::to_string(i + 1);
    return result;
}

} // namespace

EnumerationResult enumerate_models(const ResolvedSystem& sys, const EnumerationTask& opts) {
    return run_engine(sys, opts);
}

EnumerationResult enumerate_models(const EnumerationTask& task) {
    return run_engine(get_system(task.system_id, task.param), task);
}

namespace {

EnumerationResult run_naive(const ResolvedSystem& sys, const EnumerationTask& opts) {
    if (opts.size < 1) throw Error("enumeration size must be >= 1");
    const int n = opts.size;

    FiniteAlgebra skel;
    skel.size = n;
    for (int i = 0; i < n; ++i) skel.labels.push_back(std::to_string(i));
    bool has_one = false, has_zero = false;
    for (const auto& c : sys.signature.constants) {
        if (c == "one") has_one = true;
        if (c == "zero") has_zero = true;
    }
    if (has_one) skel.constants["one"] = n - 1;
    if (has_zero || sys.needs_least) skel.constants["zero"] = 0;

    std::vector<std::string> ops;
    std::vector<int> arities;
    for (const auto& [op, arity] : sys.signature.operations) {
        ops.push_back(op);
        arities.push_back(arity);
        skel.tables[op] = OpTable{arity, std::vector<int>(table_length(n, arity), 0)};
    }

    std::size_t total_cells = 0;
    for (const auto& [op, t] : skel.tables) total_cells += t.cells.size();
    double space = 1;
    for (std::size_t i = 0; i < total_cells; ++i) {
        space *= n;
        if (space > static_cast<double>(opts.node_budget))
            throw BudgetExceeded("naive enumeration space exceeds the node budget");
    }

    EnumerationResult result;
    // odometer over every cell of every table
    std::vector<std::pair<std::string, std::size_t>> cells;
    for (const auto& op : ops)
        for (std::size_t f = 0; f < skel.tables[op].cells.size(); ++f) cells.emplace_back(op, f);

    while (true) {
        ++result.stats.completed;
        bool ok = true;
        for (const Law& law : sys.laws) {
            if (law_mentions_constant(law, "zero") && !skel.binds_constant("zero")) {
                ok = false;
                break;
            }
            if (check_law(skel, law)) {
                ++result.stats.prunes[law.id];
                ok = false;
                break;
            }
        }
        if (ok) {
            if (!opts.canonical_only || is_canonical(skel))
                result.models.push_back(skel);
            else
                ++result.stats.canon_rejected;
        }
        // advance odometer
        std::size_t i = cells.size();
        bool done = true;
        while (i > 0) {
            --i;
            int& cell = skel.tables[cells[i].first].cells[cells[i].second];
            if (++cell < n) {
                done = false;
                break;
            }
            cell = 0;
        }
        if (done) break;
    }

    std::sort(result.models.begin(), result.models.end(),
              [](const FiniteAlgebra& a, const FiniteAlgebra& b) { return flat_tables(a) < flat_tables(b); });
    for (std::size_t i = 0; i < result.models.size(); ++i)
        result.models[i].name = sys.id + ".n" + std::to_string(opts.size) + "." + std::to_string(i + 1);
    result.stats.nodes = result.stats.completed;
    return result;
}

} // namespace

EnumerationResult enumerate_models_naive(const ResolvedSystem& sys, const EnumerationTask& opts) {
    return run_naive(sys, opts);
}

EnumerationResult enumerate_models_naive(const EnumerationTask& task) {
    return run_naive(get_system(task.system_id, task.param), task);
}

} // namespace gia
