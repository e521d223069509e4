#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gia/algfile.hpp"
#include "gia/builtins.hpp"
#include "gia/conjecture.hpp"
#include "gia/derive.hpp"
#include "gia/enumerate.hpp"

#include <algorithm>

using namespace gia;

namespace {

EnumerationTask task(const std::string& sys, int size) {
    EnumerationTask t;
    t.system_id = sys;
    t.size = size;
    return t;
}

std::string dump(const EnumerationResult& r) {
    std::string s;
    for (const auto& m : r.models) s += serialize_algebra(m);
    return s;
}

} // namespace

TEST_CASE("tiny G enumerations match the frozen oracle counts") {
    CHECK(enumerate_models(task("G", 1)).models.size() == 1);

    EnumerationResult g2 = enumerate_models(task("G", 2));
    REQUIRE(g2.models.size() == 1);
    CHECK(g2.models[0].table("succ").cells == std::vector<int>{1, 1, 0, 1});

    // computed by the naive oracle (3^9 tables filtered by G1..G4): the
    // three-element chain and the two-atoms-below-top algebra
    CHECK(enumerate_models(task("G", 3)).models.size() == 2);
    CHECK(enumerate_models(task("G0", 3)).models.size() == 1);
}

TEST_CASE("pruned and naive enumerators agree at sizes <= 3") {
    for (const char* sys : {"G", "G0", "G4", "I", "W", "BCK", "CBCK", "C"}) {
        for (int size = 1; size <= 3; ++size) {
            EnumerationResult pruned = enumerate_models(task(sys, size));
            EnumerationResult naive = enumerate_models_naive(task(sys, size));
            INFO(sys << " at size " << size);
            CHECK(dump(pruned) == dump(naive));
        }
    }
}

TEST_CASE("every emitted model is canonical and a member") {
    for (const char* sys : {"G", "G0", "G4_0", "M4", "CBCK"}) {
        EnumerationResult r = enumerate_models(task(sys, 4));
        for (const FiniteAlgebra& m : r.models) {
            INFO(m.name);
            CHECK(is_canonical(m));
            CHECK(check_membership(m, sys).member);
        }
        // output order is lexicographic on the flat tables
        for (std::size_t i = 1; i < r.models.size(); ++i)
            CHECK(flat_tables(r.models[i - 1]) < flat_tables(r.models[i]));
    }
}

TEST_CASE("counts are independent of the job count") {
    for (int jobs : {1, 2, 3, 7}) {
        EnumerationTask t = task("G4_0", 5);
        t.jobs = jobs;
        EnumerationResult r = enumerate_models(t);
        static std::string reference;
        static EnumerationStats ref_stats;
        if (jobs == 1) {
            reference = dump(r);
            ref_stats = r.stats;
        } else {
            CHECK(dump(r) == reference);
            CHECK(r.stats.nodes == ref_stats.nodes);
            CHECK(r.stats.completed == ref_stats.completed);
            CHECK(r.stats.canon_rejected == ref_stats.canon_rejected);
            CHECK(r.stats.prunes == ref_stats.prunes);
        }
    }
}

TEST_CASE("budget exhaustion is an error, distinct from zero models") {
    EnumerationTask t = task("G", 4);
    t.node_budget = 5;
    CHECK_THROWS_AS(enumerate_models(t), BudgetExceeded);

    // genuinely empty result: no five-element distributive G4_0-algebra
    EnumerationResult empty = enumerate_models(task("DG4_0", 5));
    CHECK(empty.models.empty());
    CHECK(empty.stats.nodes > 0);
}

TEST_CASE("T4 appears among the size-4 M4 models") {
    EnumerationResult r = enumerate_models(task("M4", 4));
    REQUIRE(r.models.size() == 2);
    FiniteAlgebra t4 = canonical_form(make_builtin("T4_modal"));
    bool found = false;
    for (const auto& m : r.models)
        if (flat_tables(m) == flat_tables(t4)) found = true;
    CHECK(found);
}

TEST_CASE("no constant-fixing permutation beats an emitted model") {
    for (const char* sys : {"G", "G0", "M4"}) {
        for (const FiniteAlgebra& m : enumerate_models(task(sys, 4)).models) {
            std::vector<int> fixed;
            for (const auto& [c, idx] : m.constants) fixed.push_back(idx);
            std::vector<int> free_idx;
            for (int i = 0; i < m.size; ++i)
                if (std::find(fixed.begin(), fixed.end(), i) == fixed.end()) free_idx.push_back(i);
            std::vector<int> arrangement = free_idx;
            do {
                std::vector<int> perm(static_cast<std::size_t>(m.size));
                for (int i = 0; i < m.size; ++i) perm[static_cast<std::size_t>(i)] = i;
                for (std::size_t i = 0; i < free_idx.size(); ++i)
                    perm[static_cast<std::size_t>(free_idx[i])] = arrangement[i];
                CHECK(flat_tables(m) <= flat_tables(apply_permutation(m, perm)));
            } while (std::next_permutation(arrangement.begin(), arrangement.end()));
        }
    }
}

TEST_CASE("canonical_form is idempotent and permutation-invariant") {
    FiniteAlgebra t4 = make_builtin("T4");
    FiniteAlgebra c = canonical_form(t4);
    CHECK(flat_tables(canonical_form(c)) == flat_tables(c));
    // a relabelled copy has the same canonical form
    std::vector<int> perm = {1, 0, 2, 3};
    CHECK(flat_tables(canonical_form(apply_permutation(t4, perm))) == flat_tables(c));
}

TEST_CASE("named conjectures") {
    ConjectureReport g35 = check_conjecture("G35-in-G40", 4);
    CHECK(g35.holds());
    REQUIRE(g35.sizes.size() == 4);
    CHECK(g35.sizes[3].models == 2);

    ConjectureReport g27 = check_conjecture("DG-implies-printed-G27", 4);
    CHECK_FALSE(g27.holds());
    CHECK(g27.counterexample->size == 2);
    CHECK(g27.counterexample_witness->law_id == "G27-as-printed");

    // Lemma 3.1: G'29 and G'30 hold across all G4 models
    CHECK(check_conjecture("G'29-in-G4", 4).holds());
    CHECK(check_conjecture("G'30-in-G4", 4).holds());

    ConjectureReport g38 = check_conjecture("G38-as-printed-in-MDG4_0", 4);
    CHECK_FALSE(g38.holds());

    CHECK_THROWS_AS(check_conjecture("bogus", 3), Error);
    CHECK_THROWS_AS(check_conjecture("nope-in-G", 3), Error);
    CHECK_THROWS_AS(check_conjecture("G'35-in-nope", 3), Error);
}

TEST_CASE("canonical_only=false keeps isomorphic copies") {
    EnumerationTask t = task("G", 3);
    t.canonical_only = false;
    EnumerationResult all = enumerate_models(t);
    EnumerationResult canon = enumerate_models(task("G", 3));
    CHECK(all.models.size() > canon.models.size());
    // every orbit representative is present
    for (const auto& m : canon.models) {
        bool found = false;
        for (const auto& a : all.models)
            if (flat_tables(a) == flat_tables(m)) found = true;
        CHECK(found);
    }
}

TEST_CASE("hierarchy soundness over enumerated models") {
    for (int size = 1; size <= 4; ++size) {
        for (const auto& m : enumerate_models(task("MDG4_0", size)).models)
            CHECK(check_membership(m, "DG4_0").member);
        for (const auto& m : enumerate_models(task("DG4_0", size)).models)
            CHECK(check_membership(m, "G4_0").member);
        for (const auto& m : enumerate_models(task("G4_0", size)).models) {
            CHECK(check_membership(m, "G0").member);
            CHECK(check_membership(m, "G4").member);
        }
        for (const auto& m : enumerate_models(task("G0", size)).models)
            CHECK(check_membership(m, "G").member);
        for (const auto& m : enumerate_models(task("G4", size)).models)
            CHECK(check_membership(m, "G").member);
    }
}

TEST_CASE("Kleene M4 models have coinciding mapsto and succ tables") {
    bool saw_kleene = false, saw_non_kleene = false;
    for (int size = 1; size <= 4; ++size) {
        for (const auto& m : enumerate_models(task("M4", size)).models) {
            DerivedStructure d = derive_structure(m);
            REQUIRE(d.impl_mapsto);
            REQUIRE(d.impl_succ);
            if (!check_law(m, law_by_id("Kleene")).has_value()) {
                saw_kleene = true;
                CHECK(*d.impl_mapsto == *d.impl_succ);
            } else {
                saw_non_kleene = true;
            }
        }
    }
    CHECK(saw_kleene);
    CHECK(saw_non_kleene); // T4 itself
}

TEST_CASE("conjecture reports are deterministic across jobs") {
    ConjectureReport a = check_conjecture("G35-in-G40", 4, 1'000'000'000, 1);
    ConjectureReport b = check_conjecture("G35-in-G40", 4, 1'000'000'000, 4);
    REQUIRE(a.sizes.size() == b.sizes.size());
    for (std::size_t i = 0; i < a.sizes.size(); ++i) CHECK(a.sizes[i].models == b.sizes[i].models);
    CHECK(a.holds() == b.holds());
}
