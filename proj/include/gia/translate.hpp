#pragma once

#include "gia/algebra.hpp"
#include "gia/catalog.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gia {

/// Table-level constructions between the varieties:
///   g_from_cbck   <A,*,0>  ->  <A,succ,1>,  x succ y = y * x, 1 := 0-element
///   cbck_from_g   <A,succ,1> -> <A,*,0>,    x * y = y succ x, 0 := 1-element
///   i_from_cbck   as g_from_cbck with the CI condition checked, target I
///   cbck_from_i   as cbck_from_g from an I-algebra
///   i_from_w      reduct dropping neg
///   w_from_i0     neg x := x succ 0
///   m4_from_mdg   join/neg/nabla/meet via L1..L4 (0 explicit, else neg(1),
///                 else the derived least), target M4, succ-recovery checked
///   mdg_from_m4   succ via the M13 composite, 0 := neg(1), target MDG4_0,
///                 L1..L4 checked on the source
const std::vector<std::string>& translation_spec_ids();

struct RoundTrip {
    bool exact = false;
    std::string first_discrepancy;
};

struct TranslationReport {
    std::string spec_id;
    FiniteAlgebra input;
    FiniteAlgebra output;
    MembershipReport source_membership;
    MembershipReport target_membership;
    std::optional<LawOutcome> ci_condition;   // i_from_cbck
    std::optional<bool> neg_matches_l2;       // m4_from_mdg with neg bound
    std::optional<bool> succ_recovered;       // m4_from_mdg: M13 over the result
    std::string recovery_note;
    std::optional<bool> l_identities_hold;    // mdg_from_m4: L1..L4 on the source
    std::optional<RoundTrip> round_trip;
};

TranslationReport translate(const FiniteAlgebra& alg, const std::string& spec_id);
TranslationReport m4_from_mdg(const FiniteAlgebra& alg);
TranslationReport mdg_from_m4(const FiniteAlgebra& alg);

struct CAxiomReport {
    MembershipReport c_membership;
    bool m4_path = false;      // L2 tie + M1..M6 + succ recovery, with 0 = neg(1)
    std::string m4_path_note;
    bool agree = false;
};

/// C1..C8 against the M4-derivation route; a disagreement between the two
/// verdicts is the headline field.
CAxiomReport check_c_axioms(const FiniteAlgebra& alg);

struct Embedding {
    int k = 0;
    std::vector<std::vector<int>> coords; // element -> (h_1(x), ..., h_k(x)) in T4
};

/// Injective homomorphism into the k-fold power of T4_modal, smallest k
/// first, deterministic hom order; nullopt if none with k <= max_k.
std::optional<Embedding> represent_in_t4_power(const FiniteAlgebra& alg, int max_k,
                                               std::uint64_t node_budget = 100'000'000);

} // namespace gia
