#pragma once

#include "gia/algebra.hpp"
#include "gia/law.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gia {

struct SignatureReq {
    std::vector<std::string> constants;
    std::vector<std::pair<std::string, int>> operations; // (symbol, arity)
};

/// A named variety: required signature plus laws. Membership additionally
/// requires the parent system's laws (chains are acyclic).
struct AxiomSystem {
    std::string id;
    std::vector<std::string> aliases;
    std::string summary;
    SignatureReq signature;
    std::optional<std::string> parent;
    std::vector<Law> own_laws;
    bool needs_least = false;   // membership requires a least element; the
                                // `zero` constant is derived when unbound
    bool g_prefill = false;     // enumeration may pre-fill the G1/G2/G5(/G17) cells
    bool parameterized = false; // get_system requires a parameter (G_{n+1})
};

/// A system instance with parent laws inlined in a stable order
/// (ancestors first).
struct ResolvedSystem {
    std::string id;
    const AxiomSystem* def = nullptr;
    SignatureReq signature;
    std::vector<Law> laws;
    bool needs_least = false;
    bool g_prefill = false;
};

/// Catalog entries in a stable order.
const std::vector<AxiomSystem>& catalog();

/// Resolves an id or alias; parameter is required iff the system is
/// parameterized (G_{n+1}, n >= 1). Throws Error otherwise.
ResolvedSystem get_system(const std::string& id, std::optional<int> param = std::nullopt);

/// The (x =>_n y) v x = 1 identity with =>_0 y = y, x =>_{k+1} y = x succ (x =>_k y).
Law valued_law(int n);

/// Global law registry: every axiom, derived lemma law, and *-as-printed
/// variant, addressable by id (primed ids also resolve without the prime).
const Law& law_by_id(const std::string& id);
bool law_exists(const std::string& id);
const std::vector<std::string>& law_registry_order();

/// True iff some term of the law references the given constant symbol.
bool law_mentions_constant(const Law& law, const std::string& sym);

/// Reference document: every law id with its formula and any encoding or
/// correction note, plus the system table.
std::string catalog_reference();

struct LawOutcome {
    std::string law_id;
    LawResult result; // nullopt = holds
};

struct MembershipReport {
    std::string system_id;
    bool member = false;
    std::vector<LawOutcome> outcomes;
    std::vector<std::string> skipped; // law ids not evaluated (no least element)
    std::vector<std::string> notes;
};

/// Binds `zero` to the least element of the derived order when the algebra
/// does not bind it explicitly; nullopt when no least element exists.
/// Requires succ and one. `note` receives a provenance remark.
std::optional<FiniteAlgebra> with_resolved_zero(const FiniteAlgebra& alg,
                                                std::string* note = nullptr);

/// Runs every law of the system (parents inlined); lists all failures.
/// Throws Error when the algebra does not bind the required signature.
MembershipReport check_membership(const FiniteAlgebra& alg, const std::string& system_id,
                                  std::optional<int> param = std::nullopt);
MembershipReport check_membership(const FiniteAlgebra& alg, const ResolvedSystem& sys);

enum class Verdict { Member, NonMember, NotApplicable };

struct DiagnosisEntry {
    std::string system_id;
    Verdict verdict;
};

/// One verdict per catalog entry, in catalog order. Systems whose signature
/// the algebra does not bind (and the parameterized family) come back
/// NotApplicable.
std::vector<DiagnosisEntry> diagnose(const FiniteAlgebra& alg);

} // namespace gia
