#pragma once

#include "gia/algebra.hpp"
#include "gia/term.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gia {

struct Equation {
    TermPtr lhs;
    TermPtr rhs;
};

/// Identity (no premises) or quasi-identity. An identity holds iff lhs and
/// rhs agree under every valuation; a quasi-identity holds iff the
/// conclusion agrees whenever all premises do (vacuous satisfaction).
struct Law {
    std::string id;
    std::vector<Equation> premises;
    Equation conclusion;

    bool is_identity() const { return premises.empty(); }
};

/// A failing valuation. For identities, lhs/rhs are the values of the two
/// sides; for quasi-identities they are the conclusion's values and every
/// premise holds under the valuation.
struct Witness {
    std::string law_id;
    std::map<std::string, int> valuation; // variable name -> element index
    int lhs_value = 0;
    int rhs_value = 0;
};

using LawResult = std::optional<Witness>; // nullopt = holds

/// Evaluates a term bottom-up through the algebra's tables.
/// Throws Error on an unbound variable, unknown symbol, or arity mismatch,
/// naming the offending node.
int eval_term(const FiniteAlgebra& alg, const TermPtr& term,
              const std::map<std::string, int>& valuation);

/// Exhaustive check over all n^k valuations, variables in alphabetical
/// order, elements ascending; returns the lexicographically first failing
/// valuation if any. Quasi-identities skip valuations with a failing
/// premise.
LawResult check_law(const FiniteAlgebra& alg, const Law& law);

/// Replays a witness through eval_term: true iff it certifies the failure
/// it claims (premises hold, recorded values reproduce, and they differ).
bool witness_replays(const FiniteAlgebra& alg, const Law& law, const Witness& w);

/// Term compiled to a postfix program against one algebra's tables.
/// check_law uses this internally; exposed for the hot enumeration paths.
class CompiledTerm {
  public:
    CompiledTerm() = default;
    CompiledTerm(const FiniteAlgebra& alg, const TermPtr& term,
                 const std::vector<std::string>& var_order);

    int eval(std::span<const int> valuation) const;

  private:
    struct Instr {
        enum class Op { PushVar, PushConst, Apply1, Apply2, ApplyK } op;
        int arg = 0;             // var slot or constant value
        const OpTable* table = nullptr;
    };
    std::vector<Instr> code_;
    int algebra_size_ = 0;
    mutable std::vector<int> stack_;
};

} // namespace gia
