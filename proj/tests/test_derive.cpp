#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gia/builtins.hpp"
#include "gia/catalog.hpp"
#include "gia/derive.hpp"

using namespace gia;

TEST_CASE("derived order of T4 is the diamond") {
    FiniteAlgebra t4 = make_builtin("T4");
    DerivedOrder o = derive_order(t4);
    CHECK(o.poset);
    // 0 below everything, a and b incomparable, 1 on top
    CHECK(o.le(0, 1));
    CHECK(o.le(0, 2));
    CHECK(o.le(0, 3));
    CHECK(o.le(1, 3));
    CHECK(o.le(2, 3));
    CHECK_FALSE(o.le(1, 2));
    CHECK_FALSE(o.le(2, 1));
    for (int i = 0; i < 4; ++i) CHECK(o.le(i, i));

    Bounds b = derive_bounds(o);
    CHECK(b.least == 0);
    CHECK(b.greatest == 3);
}

TEST_CASE("derived order of example_2_7 has three incomparable atoms") {
    FiniteAlgebra a = make_builtin("example_2_7");
    DerivedOrder o = derive_order(a);
    CHECK(o.poset);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            if (i != j) CHECK_FALSE(o.le(i, j));
    Bounds b = derive_bounds(o);
    CHECK(b.least == 0);
    CHECK(b.greatest == 4);
}

TEST_CASE("order edge cases") {
    FiniteAlgebra triv;
    triv.name = "trivial";
    triv.size = 1;
    triv.labels = {"1"};
    triv.constants["one"] = 0;
    triv.tables["succ"] = {2, {0}};
    DerivedOrder o = derive_order(triv);
    CHECK(o.poset);
    CHECK(derive_bounds(o).least == 0);
    CHECK(derive_bounds(o).greatest == 0);

    // two-element antichain below a top: least missing
    FiniteAlgebra vee;
    vee.name = "vee";
    vee.size = 3;
    vee.labels = {"a", "b", "1"};
    vee.constants["one"] = 2;
    vee.tables["succ"] = {2, {2, 1, 2, 0, 2, 2, 0, 1, 2}};
    Bounds b = derive_bounds(derive_order(vee));
    CHECK_FALSE(b.least.has_value());
    CHECK(b.greatest == 2);
}

TEST_CASE("non-poset verdict names the failing axiom") {
    FiniteAlgebra a;
    a.name = "loop";
    a.size = 2;
    a.labels = {"p", "1"};
    a.constants["one"] = 1;
    a.tables["succ"] = {2, {1, 1, 1, 1}}; // p and 1 mutually below each other
    DerivedOrder o = derive_order(a);
    CHECK_FALSE(o.poset);
    CHECK(o.violation.find("antisymmetric") != std::string::npos);
}

TEST_CASE("derive_structure on T4: joins, meets, negation, modal operators") {
    FiniteAlgebra t4 = make_builtin("T4");
    DerivedStructure d = derive_structure(t4);
    REQUIRE(d.join);
    REQUIRE(d.meet);
    REQUIRE(d.neg);
    REQUIRE(d.nabla);
    REQUIRE(d.delta);
    CHECK(d.violations.empty());
    CHECK(d.zero == 0);

    const int a = 1, b = 2;
    CHECK((*d.join)[a * 4 + b] == 3);  // a v b = 1
    CHECK((*d.meet)[a * 4 + b] == 0);  // a ^ b = 0
    CHECK(*d.neg == std::vector<int>{3, 1, 2, 0});
    CHECK(*d.nabla == std::vector<int>{0, 3, 3, 3});
    CHECK(*d.delta == std::vector<int>{0, 0, 0, 3});

    FiniteAlgebra t4m = make_builtin("T4_modal");
    DerivedStructure dm = derive_structure(t4m);
    REQUIRE(dm.impl_succ);
    CHECK(*dm.impl_succ == t4.table("succ").cells);

    // the printed supset / arrow / mapsto tables
    CHECK(*dm.impl_supset == std::vector<int>{3, 3, 3, 3, 1, 1, 3, 3, 2, 3, 2, 3, 0, 1, 2, 3});
    CHECK(*dm.impl_arrow == std::vector<int>{3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 0, 1, 2, 3});
    CHECK(*dm.impl_mapsto == std::vector<int>{3, 3, 3, 3, 1, 3, 3, 3, 2, 3, 3, 3, 0, 1, 2, 3});
    CHECK(*dm.delta == std::vector<int>{0, 0, 0, 3});
}

TEST_CASE("derive_structure flags structure violations instead of refusing") {
    // a succ-algebra that is not a G-algebra: constant table
    FiniteAlgebra junk;
    junk.name = "junk";
    junk.size = 2;
    junk.labels = {"0", "1"};
    junk.constants["one"] = 1;
    junk.tables["succ"] = {2, {0, 0, 0, 0}};
    DerivedStructure d = derive_structure(junk);
    CHECK_FALSE(d.violations.empty());
}

TEST_CASE("implication composites match the printed cells") {
    FiniteAlgebra t4m = make_builtin("T4_modal");
    const int a = 1, b = 2;
    CHECK(implication(t4m, ImplKind::Succ, a, 0) == a);
    CHECK(implication(t4m, ImplKind::Mapsto, a, 0) == a);
    CHECK(implication(t4m, ImplKind::Arrow, 3, b) == b);
    CHECK(implication(t4m, ImplKind::Supset, a, 0) == a);
    CHECK(impl_kind_from_name("succ") == ImplKind::Succ);
    CHECK_THROWS_AS(impl_kind_from_name("bogus"), Error);
}

TEST_CASE("iterated implication") {
    FiniteAlgebra t4 = make_builtin("T4");
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) CHECK(iterate_implication(t4, 0, x, y) == y);
    CHECK(iterate_implication(t4, 2, 1, 0) == 3); // a succ (a succ 0) = a succ a = 1

    FiniteAlgebra c4 = make_builtin("chain", 3);
    CHECK(iterate_implication(c4, 2, 2, 0) == 2); // min(3, 3-x+prev) twice from 0
    CHECK_THROWS_AS(iterate_implication(t4, -1, 0, 0), Error);
}

TEST_CASE("valued_check") {
    FiniteAlgebra t4 = make_builtin("T4");
    CHECK_FALSE(valued_check(t4, 2).has_value()); // G'29 holds in T4

    for (int m : {3, 4, 5}) {
        FiniteAlgebra chain = make_builtin("chain", m);
        CHECK_FALSE(valued_check(chain, m).has_value());
    }
    FiniteAlgebra c4 = make_builtin("chain", 3);
    LawResult w = valued_check(c4, 2);
    REQUIRE(w.has_value());
    CHECK(c4.label(w->valuation.at("x")) == "2/3");
    CHECK(c4.label(w->valuation.at("y")) == "0");
}

TEST_CASE("builtin tables match the printed rows") {
    FiniteAlgebra t4 = make_builtin("T4");
    const OpTable& s = t4.table("succ");
    // row b of the succ table: (b, a, 1, 1)
    CHECK(std::vector<int>(s.cells.begin() + 8, s.cells.begin() + 12) == std::vector<int>{2, 1, 3, 3});

    FiniteAlgebra e = make_builtin("example_2_7");
    const OpTable& es = e.table("succ");
    // row c: (c, a, b, 1, 1)
    CHECK(std::vector<int>(es.cells.begin() + 15, es.cells.begin() + 20) ==
          std::vector<int>{3, 1, 2, 4, 4});

    FiniteAlgebra c4 = make_builtin("chain", 3);
    CHECK(c4.table("succ").apply2(4, 3, 2) == 2); // 1 succ 2/3 = 2/3
    CHECK(c4.labels == std::vector<std::string>{"0", "1/3", "2/3", "1"});

    CHECK_THROWS_AS(make_builtin("chain", 0), Error);
    CHECK_THROWS_AS(make_builtin("chain"), Error);
    CHECK_THROWS_AS(make_builtin("nope"), Error);
}

TEST_CASE("L1..L4 hold in T4_modal") {
    FiniteAlgebra t4m = make_builtin("T4_modal");
    for (const char* id : {"L1", "L2", "L3", "L4"})
        CHECK_FALSE(check_law(t4m, law_by_id(id)).has_value());
}

TEST_CASE("M7 and the Kleene condition") {
    FiniteAlgebra t4m = make_builtin("T4_modal");
    CHECK_FALSE(check_law(t4m, law_by_id("M7")).has_value());
    CHECK(check_law(t4m, law_by_id("Kleene")).has_value()); // T4 is not Kleene
    CHECK(check_law(t4m, law_by_id("M'6")).has_value());    // nor three-valued
}
