#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gia/builtins.hpp"
#include "gia/catalog.hpp"
#include "gia/law.hpp"
#include "gia/morphism.hpp"

#include <map>

using namespace gia;

namespace {

// Independent oracle: recursive valuation sweep through eval_term, nothing
// shared with the compiled path inside check_law.
LawResult oracle_check_law(const FiniteAlgebra& alg, const Law& law) {
    std::vector<std::string> vars;
    {
        std::map<std::string, int> seen;
        auto add = [&](const TermPtr& t) {
            for (const auto& v : term_variables(t)) seen[v] = 1;
        };
        for (const auto& p : law.premises) {
            add(p.lhs);
            add(p.rhs);
        }
        add(law.conclusion.lhs);
        add(law.conclusion.rhs);
        for (const auto& [v, _] : seen) vars.push_back(v);
    }
    std::map<std::string, int> val;
    auto rec = [&](auto&& self, std::size_t i) -> LawResult {
        if (i == vars.size()) {
            for (const auto& p : law.premises)
                if (eval_term(alg, p.lhs, val) != eval_term(alg, p.rhs, val)) return std::nullopt;
            int l = eval_term(alg, law.conclusion.lhs, val);
            int r = eval_term(alg, law.conclusion.rhs, val);
            if (l == r) return std::nullopt;
            Witness w;
            w.law_id = law.id;
            w.valuation = val;
            w.lhs_value = l;
            w.rhs_value = r;
            return w;
        }
        for (int v = 0; v < alg.size; ++v) {
            val[vars[i]] = v;
            if (LawResult w = self(self, i + 1)) return w;
        }
        val.erase(vars[i]);
        return std::nullopt;
    };
    return rec(rec, 0);
}

FiniteAlgebra t4_succ_reduct() {
    FiniteAlgebra t4 = make_builtin("T4");
    FiniteAlgebra r;
    r.name = "T4_succ";
    r.size = t4.size;
    r.labels = t4.labels;
    r.constants["one"] = t4.constant("one");
    r.tables["succ"] = t4.table("succ");
    return r;
}

FiniteAlgebra one_element() {
    FiniteAlgebra a;
    a.name = "trivial";
    a.size = 1;
    a.labels = {"1"};
    a.constants["one"] = 0;
    a.tables["succ"] = {2, {0}};
    return a;
}

} // namespace

TEST_CASE("algebra validation") {
    FiniteAlgebra a = make_builtin("T4");
    CHECK_NOTHROW(a.validate());

    FiniteAlgebra bad = a;
    bad.tables["succ"].cells[0] = 7;
    CHECK_THROWS_AS(bad.validate(), Error);

    bad = a;
    bad.tables["succ"].cells.pop_back();
    CHECK_THROWS_AS(bad.validate(), Error);

    bad = a;
    bad.labels[1] = "0";
    CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("eval_term against the T4 tables") {
    FiniteAlgebra t4 = make_builtin("T4");
    const int a = 1, b = 2;

    TermPtr xy = app("succ", {var("x"), var("y")});
    CHECK(eval_term(t4, xy, {{"x", a}, {"y", b}}) == b);

    TermPtr onex = app("succ", {cst("one"), var("x")});
    CHECK(eval_term(t4, onex, {{"x", a}}) == a);

    FiniteAlgebra t4m = make_builtin("T4_modal");
    TermPtr nx = app("nabla", {var("x")});
    CHECK(eval_term(t4m, nx, {{"x", a}}) == 3);

    CHECK_THROWS_AS(eval_term(t4, xy, {{"x", a}}), Error);            // unbound y
    CHECK_THROWS_AS(eval_term(t4, app("bogus", {var("x")}), {{"x", 0}}), Error);
    CHECK_THROWS_AS(eval_term(t4, app("succ", {var("x")}), {{"x", 0}}), Error); // arity
}

TEST_CASE("check_law basics") {
    FiniteAlgebra t4 = make_builtin("T4");
    CHECK_FALSE(check_law(t4, law_by_id("G3")).has_value());
    CHECK_FALSE(check_law(t4, law_by_id("G4")).has_value());

    // one-element algebra satisfies every identity
    FiniteAlgebra triv = one_element();
    for (const char* id : {"G1", "G2", "G3", "G5", "G7", "G8", "G9"})
        CHECK_FALSE(check_law(triv, law_by_id(id)).has_value());
}

TEST_CASE("I3 fails on T4 at the lexicographically first valuation") {
    FiniteAlgebra t4 = t4_succ_reduct();
    LawResult w = check_law(t4, law_by_id("I3"));
    REQUIRE(w.has_value());
    CHECK(w->valuation == std::map<std::string, int>{{"x", 1}, {"y", 0}, {"z", 2}});
    CHECK(w->lhs_value == 2); // (a succ 0) succ ((0 succ b) succ (a succ b)) = b
    CHECK(w->rhs_value == 3);
    CHECK(witness_replays(t4, law_by_id("I3"), *w));
}

TEST_CASE("DG1 fails on example_2_7 at x=a y=b z=c") {
    FiniteAlgebra a = make_builtin("example_2_7");
    auto rz = with_resolved_zero(a);
    REQUIRE(rz.has_value());
    LawResult w = check_law(*rz, law_by_id("DG1"));
    REQUIRE(w.has_value());
    CHECK(w->valuation == std::map<std::string, int>{{"x", 1}, {"y", 2}, {"z", 3}});
    CHECK(rz->label(w->lhs_value) == "1");
    CHECK(rz->label(w->rhs_value) == "c");
    CHECK(witness_replays(*rz, law_by_id("DG1"), *w));
}

TEST_CASE("check_law agrees with the double-loop oracle") {
    std::vector<FiniteAlgebra> algebras;
    algebras.push_back(*with_resolved_zero(make_builtin("T4")));
    algebras.push_back(*with_resolved_zero(make_builtin("example_2_7")));
    algebras.push_back(make_builtin("boolean2"));
    algebras.push_back(*with_resolved_zero(make_builtin("chain", 3)));

    for (const auto& alg : algebras) {
        for (const char* id : {"G1", "G2", "G3", "G4", "G5", "G6", "G7", "G8", "G9", "G10",
                               "G12", "G13", "G14", "G15", "G17", "G19", "G20", "G21", "G22",
                               "G23", "G25", "G26", "G27", "G27-as-printed", "DG1", "CL",
                               "G'28", "G'29", "G'30", "G'33", "G'34", "G'35", "G'36", "G'37",
                               "G'38", "G38-as-printed", "I3", "I4", "D1", "D2"}) {
            const Law& law = law_by_id(id);
            LawResult fast = check_law(alg, law);
            LawResult slow = oracle_check_law(alg, law);
            CHECK(fast.has_value() == slow.has_value());
            if (fast && slow) {
                CHECK(fast->valuation == slow->valuation);
                CHECK(fast->lhs_value == slow->lhs_value);
                CHECK(fast->rhs_value == slow->rhs_value);
            }
        }
    }
}

TEST_CASE("homomorphisms") {
    FiniteAlgebra t4 = make_builtin("T4");
    std::vector<int> id = {0, 1, 2, 3};
    CHECK(check_homomorphism(t4, t4, id));

    // constant map to 1 on the succ reduct
    FiniteAlgebra r = t4_succ_reduct();
    std::vector<int> const1 = {3, 3, 3, 3};
    CHECK(check_homomorphism(r, r, const1));
    CHECK_FALSE(check_homomorphism(t4, t4, const1)); // neg breaks it

    // a and b swap, 0 and 1 fixed
    std::vector<int> swap = {0, 2, 1, 3};
    CHECK(check_homomorphism(t4, t4, swap));

    CHECK_THROWS_AS(check_homomorphism(t4, r, id), Error); // signature mismatch
}

TEST_CASE("isomorphisms") {
    FiniteAlgebra t4 = make_builtin("T4");
    auto iso = find_isomorphism(t4, t4);
    REQUIRE(iso.has_value());
    CHECK(*iso == std::vector<int>{0, 1, 2, 3});

    // relabelled presentation: same tables, labels a and b exchanged; the
    // index identity map realizes the a<->b label correspondence
    FiniteAlgebra t4r = t4;
    std::swap(t4r.labels[1], t4r.labels[2]);
    auto iso2 = find_isomorphism(t4, t4r);
    REQUIRE(iso2.has_value());
    CHECK(*iso2 == std::vector<int>{0, 1, 2, 3});
    CHECK(t4r.label((*iso2)[1]) == "b");

    // a genuinely permuted copy (0 and a exchanged) needs the matching map
    std::vector<int> perm = {1, 0, 2, 3};
    FiniteAlgebra t4p = apply_permutation(t4, perm);
    auto iso3 = find_isomorphism(t4, t4p);
    REQUIRE(iso3.has_value());
    CHECK(*iso3 == perm);

    auto none = find_isomorphism(t4_succ_reduct(), make_builtin("chain", 3));
    CHECK_FALSE(none.has_value());

    // isomorphic algebras agree on every catalog verdict
    auto d1 = diagnose(t4);
    auto d2 = diagnose(t4p);
    REQUIRE(d1.size() == d2.size());
    for (std::size_t i = 0; i < d1.size(); ++i) CHECK(d1[i].verdict == d2[i].verdict);
}

TEST_CASE("direct products") {
    FiniteAlgebra b = make_builtin("boolean2");
    FiniteAlgebra p = direct_product(b, b);
    CHECK(p.size == 4);
    CHECK(p.constant("one") == 3);
    // (1,0) succ (0,1) = (0,1)
    CHECK(p.table("succ").apply2(4, 2, 1) == 1);
    // projections are homomorphisms
    std::vector<int> pr1 = {0, 0, 1, 1}, pr2 = {0, 1, 0, 1};
    CHECK(check_homomorphism(p, b, pr1));
    CHECK(check_homomorphism(p, b, pr2));
}
