#include "gia/law.hpp"

#include <algorithm>
#include <set>

namespace gia {

int eval_term(const FiniteAlgebra& alg, const TermPtr& term,
              const std::map<std::string, int>& valuation) {
    switch (term->kind) {
    case Term::Kind::Variable: {
        auto it = valuation.find(term->name);
        if (it == valuation.end()) throw Error("unbound variable '" + term->name + "'");
        return it->second;
    }
    case Term::Kind::Constant:
        if (!alg.binds_constant(term->name))
            throw Error("unknown constant '" + term->name + "' in " + term_to_string(term));
        return alg.constant(term->name);
    case Term::Kind::Apply: {
        if (!alg.binds_op(term->name))
            throw Error("unknown operation '" + term->name + "' in " + term_to_string(term));
        const OpTable& t = alg.table(term->name);
        if (static_cast<std::size_t>(t.arity) != term->args.size())
            throw Error("arity mismatch at " + term_to_string(term) + ": '" + term->name +
                        "' takes " + std::to_string(t.arity) + " arguments");
        std::size_t idx = 0;
        for (const auto& a : term->args)
            idx = idx * static_cast<std::size_t>(alg.size) +
                  static_cast<std::size_t>(eval_term(alg, a, valuation));
        return t.cells[idx];
    }
    }
    throw Error("malformed term");
}

CompiledTerm::CompiledTerm(const FiniteAlgebra& alg, const TermPtr& term,
                           const std::vector<std::string>& var_order) {
    algebra_size_ = alg.size;
    std::size_t depth = 0, max_depth = 0;
    // postfix emission
    auto emit = [&](auto&& self, const TermPtr& t) -> void {
        switch (t->kind) {
        case Term::Kind::Variable: {
            auto it = std::find(var_order.begin(), var_order.end(), t->name);
            if (it == var_order.end()) throw Error("unbound variable '" + t->name + "'");
            code_.push_back({Instr::Op::PushVar, static_cast<int>(it - var_order.begin()), nullptr});
            max_depth = std::max(max_depth, ++depth);
            return;
        }
        case Term::Kind::Constant:
            code_.push_back({Instr::Op::PushConst, alg.constant(t->name), nullptr});
            max_depth = std::max(max_depth, ++depth);
            return;
        case Term::Kind::Apply: {
            if (!alg.binds_op(t->name))
                throw Error("unknown operation '" + t->name + "' in " + term_to_string(t));
            const OpTable& table = alg.table(t->name);
            if (static_cast<std::size_t>(table.arity) != t->args.size())
                throw Error("arity mismatch at " + term_to_string(t));
            for (const auto& a : t->args) self(self, a);
            Instr::Op op = table.arity == 1   ? Instr::Op::Apply1
                           : table.arity == 2 ? Instr::Op::Apply2
                                              : Instr::Op::ApplyK;
            code_.push_back({op, table.arity, &table});
            depth -= static_cast<std::size_t>(table.arity) - 1;
            return;
        }
        }
    };
    emit(emit, term);
    stack_.reserve(max_depth);
}

int CompiledTerm::eval(std::span<const int> valuation) const {
    stack_.clear();
    for (const Instr& in : code_) {
        switch (in.op) {
        case Instr::Op::PushVar:
            stack_.push_back(valuation[static_cast<std::size_t>(in.arg)]);
            break;
        case Instr::Op::PushConst:
            stack_.push_back(in.arg);
            break;
        case Instr::Op::Apply1:
            stack_.back() = in.table->apply1(stack_.back());
            break;
        case Instr::Op::Apply2: {
            int b = stack_.back();
            stack_.pop_back();
            stack_.back() = in.table->apply2(algebra_size_, stack_.back(), b);
            break;
        }
        case Instr::Op::ApplyK: {
            std::size_t k = static_cast<std::size_t>(in.arg);
            std::size_t idx = 0;
            for (std::size_t i = stack_.size() - k; i < stack_.size(); ++i)
                idx = idx * static_cast<std::size_t>(algebra_size_) + static_cast<std::size_t>(stack_[i]);
            stack_.resize(stack_.size() - k);
            stack_.push_back(in.table->cells[idx]);
            break;
        }
        }
    }
    return stack_.back();
}

static std::vector<std::string> law_variables(const Law& law) {
    std::set<std::string> s;
    auto add = [&](const TermPtr& t) {
        for (const auto& v : term_variables(t)) s.insert(v);
    };
    for (const auto& eq : law.premises) {
        add(eq.lhs);
        add(eq.rhs);
    }
    add(law.conclusion.lhs);
    add(law.conclusion.rhs);
    return {s.begin(), s.end()};
}

LawResult check_law(const FiniteAlgebra& alg, const Law& law) {
    const std::vector<std::string> vars = law_variables(law);
    const std::size_t k = vars.size();
    const int n = alg.size;

    std::vector<std::pair<CompiledTerm, CompiledTerm>> premises;
    premises.reserve(law.premises.size());
    for (const auto& eq : law.premises)
        premises.emplace_back(CompiledTerm(alg, eq.lhs, vars), CompiledTerm(alg, eq.rhs, vars));
    CompiledTerm cl(alg, law.conclusion.lhs, vars);
    CompiledTerm cr(alg, law.conclusion.rhs, vars);

    std::vector<int> val(k, 0);
    while (true) {
        bool applicable = true;
        for (const auto& [pl, pr] : premises) {
            if (pl.eval(val) != pr.eval(val)) {
                applicable = false;
                break;
            }
        }
        if (applicable) {
            int l = cl.eval(val);
            int r = cr.eval(val);
            if (l != r) {
                Witness w;
                w.law_id = law.id;
                for (std::size_t i = 0; i < k; ++i) w.valuation[vars[i]] = val[i];
                w.lhs_value = l;
                w.rhs_value = r;
                return w;
            }
        }
        // odometer, last variable fastest: failures surface in
        // lexicographic valuation order
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (++val[i] < n) break;
            val[i] = 0;
            if (i == 0) return std::nullopt;
        }
        if (k == 0) return std::nullopt;
    }
}

bool witness_replays(const FiniteAlgebra& alg, const Law& law, const Witness& w) {
    try {
        for (const auto& eq : law.premises)
            if (eval_term(alg, eq.lhs, w.valuation) != eval_term(alg, eq.rhs, w.valuation)) return false;
        int l = eval_term(alg, law.conclusion.lhs, w.valuation);
        int r = eval_term(alg, law.conclusion.rhs, w.valuation);
        return l == w.lhs_value && r == w.rhs_value && l != r;
    } catch (const Error&) {
        return false;
    }
}

} // namespace gia
