#include "gia/translate.hpp"

#include "gia/builtins.hpp"
#include "gia/derive.hpp"
#include "gia/morphism.hpp"

#include <algorithm>

namespace gia {

const std::vector<std::string>& translation_spec_ids() {
    static const std::vector<std::string> ids = {"g_from_cbck", "cbck_from_g", "i_from_cbck",
                                                 "cbck_from_i", "i_from_w",    "w_from_i0",
                                                 "m4_from_mdg", "mdg_from_m4"};
    return ids;
}

namespace {

void require(const FiniteAlgebra& alg, std::initializer_list<const char*> ops,
             std::initializer_list<const char*> consts) {
    for (const char* op : ops)
        if (!alg.binds_op(op)) throw Error(alg.name + ": missing source operation '" + std::string(op) + "'");
    for (const char* c : consts)
        if (!alg.binds_constant(c)) throw Error(alg.name + ": missing source constant '" + std::string(c) + "'");
}

FiniteAlgebra skeleton(const FiniteAlgebra& src, const std::string& suffix) {
    FiniteAlgebra out;
    out.name = src.name + "." + suffix;
    out.size = src.size;
    out.labels = src.labels;
    return out;
}

OpTable flipped(const FiniteAlgebra& src, const std::string& op) {
    const OpTable& t = src.table(op);
    OpTable out{2, std::vector<int>(t.cells.size(), 0)};
    for (int x = 0; x < src.size; ++x)
        for (int y = 0; y < src.size; ++y)
            out.cells[static_cast<std::size_t>(x) * src.size + y] = t.apply2(src.size, y, x);
    return out;
}

std::string compare_tables(const FiniteAlgebra& a, const FiniteAlgebra& b,
                           std::initializer_list<const char*> ops) {
    for (const char* op : ops) {
        const OpTable& ta = a.table(op);
        const OpTable& tb = b.table(op);
        for (std::size_t f = 0; f < ta.cells.size(); ++f)
            if (ta.cells[f] != tb.cells[f]) {
                std::size_t rest = f;
                std::string args;
                std::vector<int> tup(static_cast<std::size_t>(ta.arity));
                for (int k = ta.arity - 1; k >= 0; --k) {
                    tup[static_cast<std::size_t>(k)] = static_cast<int>(rest % static_cast<std::size_t>(a.size));
                    rest /= static_cast<std::size_t>(a.size);
                }
                for (int k = 0; k < ta.arity; ++k)
                    args += (k ? "," : "") + a.label(tup[static_cast<std::size_t>(k)]);
                return std::string(op) + "(" + args + "): " + a.label(ta.cells[f]) + " vs " +
                       b.label(tb.cells[f]);
            }
    }
    return "";
}

// 0 for the MDG->M4 direction: explicit zero, else neg(1), else derived least.
int modal_zero(const FiniteAlgebra& alg) {
    if (alg.binds_constant("zero")) return alg.constant("zero");
    if (alg.binds_op("neg")) return alg.table("neg").apply1(alg.constant("one"));
    if (auto r = with_resolved_zero(alg)) return r->constant("zero");
    throw Error(alg.name + ": no least element and no neg to define 0 = neg(1)");
}

struct LDerived {
    std::vector<int> join, meet, neg, nabla;
};

LDerived derive_l_ops(const FiniteAlgebra& alg, int zero) {
    const OpTable& s = alg.table("succ");
    const int n = alg.size;
    auto sv = [&](int a, int b) { return s.apply2(n, a, b); };
    LDerived d;
    d.join.resize(static_cast<std::size_t>(n) * n);
    d.meet.resize(d.join.size());
    d.neg.resize(static_cast<std::size_t>(n));
    d.nabla.resize(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) d.neg[static_cast<std::size_t>(x)] = sv(x, zero);
    for (int x = 0; x < n; ++x)
        d.nabla[static_cast<std::size_t>(x)] = sv(d.neg[static_cast<std::size_t>(x)], x);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            d.join[static_cast<std::size_t>(x) * n + y] = sv(sv(x, y), y);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int nx = d.neg[static_cast<std::size_t>(x)], ny = d.neg[static_cast<std::size_t>(y)];
            d.meet[static_cast<std::size_t>(x) * n + y] =
                d.neg[static_cast<std::size_t>(d.join[static_cast<std::size_t>(nx) * n + ny])];
        }
    return d;
}

FiniteAlgebra build_m4(const FiniteAlgebra& src, const std::string& suffix, int zero) {
    FiniteAlgebra out = skeleton(src, suffix);
    out.constants["one"] = src.constant("one");
    LDerived d = derive_l_ops(src, zero);
    out.tables["join"] = {2, std::move(d.join)};
    out.tables["meet"] = {2, std::move(d.meet)};
    out.tables["neg"] = {1, std::move(d.neg)};
    out.tables["nabla"] = {1, std::move(d.nabla)};
    return out;
}

// M13 recomputed from an M4-signature algebra, compared against a succ table.
std::string recovery_mismatch(const FiniteAlgebra& m4alg, const OpTable& succ) {
    for (int x = 0; x < m4alg.size; ++x)
        for (int y = 0; y < m4alg.size; ++y) {
            int got = implication(m4alg, ImplKind::Succ, x, y);
            int want = succ.apply2(m4alg.size, x, y);
            if (got != want)
                return "succ(" + m4alg.label(x) + "," + m4alg.label(y) + "): M13 gives " +
                       m4alg.label(got) + ", table has " + m4alg.label(want);
        }
    return "";
}

MembershipReport membership_with_zero(const FiniteAlgebra& alg, int zero, const std::string& system) {
    FiniteAlgebra a = alg;
    if (!a.binds_constant("zero")) a.constants["zero"] = zero;
    return check_membership(a, system);
}

} // namespace

TranslationReport m4_from_mdg(const FiniteAlgebra& alg) {
    require(alg, {"succ"}, {"one"});
    TranslationReport rep;
    rep.spec_id = "m4_from_mdg";
    rep.input = alg;

    int zero = modal_zero(alg);
    rep.source_membership = membership_with_zero(alg, zero, "MDG4_0");
    rep.output = build_m4(alg, "m4", zero);
    rep.target_membership = check_membership(rep.output, "M4");

    if (alg.binds_op("neg")) {
        bool match = true;
        for (int x = 0; x < alg.size && match; ++x)
            if (alg.table("neg").apply1(x) != rep.output.table("neg").apply1(x)) match = false;
        rep.neg_matches_l2 = match;
    }

    rep.recovery_note = recovery_mismatch(rep.output, alg.table("succ"));
    rep.succ_recovered = rep.recovery_note.empty();

    RoundTrip rt;
    rt.exact = *rep.succ_recovered;
    rt.first_discrepancy = rep.recovery_note;
    rep.round_trip = rt;
    return rep;
}

TranslationReport mdg_from_m4(const FiniteAlgebra& alg) {
    require(alg, {"join", "meet", "neg", "nabla"}, {"one"});
    TranslationReport rep;
    rep.spec_id = "mdg_from_m4";
    rep.input = alg;
    rep.source_membership = check_membership(alg, "M4");

    const int n = alg.size;
    FiniteAlgebra out = skeleton(alg, "mdg");
    out.constants["one"] = alg.constant("one");
    out.constants["zero"] = alg.table("neg").apply1(alg.constant("one"));
    OpTable s{2, std::vector<int>(static_cast<std::size_t>(n) * n, 0)};
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            s.cells[static_cast<std::size_t>(x) * n + y] = implication(alg, ImplKind::Succ, x, y);
    out.tables["succ"] = std::move(s);
    rep.output = out;
    rep.target_membership = check_membership(out, "MDG4_0");

    bool l_ok = true;
    for (const char* id : {"L1", "L2", "L3", "L4"})
        if (check_law(alg, law_by_id(id))) l_ok = false;
    rep.l_identities_hold = l_ok;

    // round trip: rebuild the modal operations from the result
    FiniteAlgebra back = build_m4(out, "back", out.constant("zero"));
    RoundTrip rt;
    rt.first_discrepancy = compare_tables(alg, back, {"join", "meet", "neg", "nabla"});
    rt.exact = rt.first_discrepancy.empty();
    rep.round_trip = rt;
    return rep;
}

TranslationReport translate(const FiniteAlgebra& alg, const std::string& spec_id) {
    if (spec_id == "m4_from_mdg") return m4_from_mdg(alg);
    if (spec_id == "mdg_from_m4") return mdg_from_m4(alg);

    TranslationReport rep;
    rep.spec_id = spec_id;
    rep.input = alg;

    if (spec_id == "g_from_cbck" || spec_id == "i_from_cbck") {
        require(alg, {"star"}, {"zero"});
        rep.source_membership = check_membership(alg, "CBCK");
        if (spec_id == "i_from_cbck") {
            LawOutcome ci;
            ci.law_id = "CI";
            ci.result = check_law(alg, law_by_id("CI"));
            rep.ci_condition = ci;
        }
        FiniteAlgebra out = skeleton(alg, spec_id == "g_from_cbck" ? "g" : "i");
        out.tables["succ"] = flipped(alg, "star");
        out.constants["one"] = alg.constant("zero");
        rep.output = out;
        rep.target_membership = check_membership(out, spec_id == "g_from_cbck" ? "G" : "I");

        FiniteAlgebra back = skeleton(out, "back");
        back.tables["star"] = flipped(out, "succ");
        back.constants["zero"] = out.constant("one");
        RoundTrip rt;
        rt.first_discrepancy = compare_tables(alg, back, {"star"});
        rt.exact = rt.first_discrepancy.empty() && back.constant("zero") == alg.constant("zero");
        rep.round_trip = rt;
        return rep;
    }

    if (spec_id == "cbck_from_g" || spec_id == "cbck_from_i") {
        require(alg, {"succ"}, {"one"});
        rep.source_membership = check_membership(alg, spec_id == "cbck_from_g" ? "G" : "I");
        FiniteAlgebra out = skeleton(alg, "cbck");
        out.tables["star"] = flipped(alg, "succ");
        out.constants["zero"] = alg.constant("one");
        rep.output = out;
        rep.target_membership = check_membership(out, "CBCK");

        FiniteAlgebra back = skeleton(out, "back");
        back.tables["succ"] = flipped(out, "star");
        back.constants["one"] = out.constant("zero");
        RoundTrip rt;
        rt.first_discrepancy = compare_tables(alg, back, {"succ"});
        rt.exact = rt.first_discrepancy.empty() && back.constant("one") == alg.constant("one");
        rep.round_trip = rt;
        return rep;
    }

    if (spec_id == "i_from_w") {
        require(alg, {"succ", "neg"}, {"one"});
        rep.source_membership = check_membership(alg, "W");
        FiniteAlgebra out = skeleton(alg, "i");
        out.tables["succ"] = alg.table("succ");
        out.constants["one"] = alg.constant("one");
        rep.output = out;
        rep.target_membership = check_membership(out, "I");
        return rep;
    }

    if (spec_id == "w_from_i0") {
        require(alg, {"succ"}, {"one"});
        auto rz = with_resolved_zero(alg);
        if (!rz) throw Error(alg.name + ": no least element");
        rep.source_membership = check_membership(*rz, "I0");
        FiniteAlgebra out = skeleton(alg, "w");
        out.tables["succ"] = alg.table("succ");
        out.constants["one"] = alg.constant("one");
        out.constants["zero"] = rz->constant("zero");
        OpTable neg{1, std::vector<int>(static_cast<std::size_t>(alg.size), 0)};
        for (int x = 0; x < alg.size; ++x)
            neg.cells[static_cast<std::size_t>(x)] =
                alg.table("succ").apply2(alg.size, x, rz->constant("zero"));
        out.tables["neg"] = std::move(neg);
        rep.output = out;
        rep.target_membership = check_membership(out, "W");
        return rep;
    }

    throw Error("unknown translation spec '" + spec_id + "'");
}

CAxiomReport check_c_axioms(const FiniteAlgebra& alg) {
    require(alg, {"succ", "neg"}, {"one"});
    CAxiomReport rep;
    rep.c_membership = check_membership(alg, "C");

    const int n = alg.size;
    const int zero = alg.table("neg").apply1(alg.constant("one"));
    bool l2_ok = true;
    for (int x = 0; x < n && l2_ok; ++x)
        if (alg.table("neg").apply1(x) != alg.table("succ").apply2(n, x, zero)) l2_ok = false;

    FiniteAlgebra m4 = build_m4(alg, "m4", zero);
    bool m4_member = check_membership(m4, "M4").member;
    std::string mismatch = recovery_mismatch(m4, alg.table("succ"));

    rep.m4_path = l2_ok && m4_member && mismatch.empty();
    if (!l2_ok)
        rep.m4_path_note = "neg differs from x succ neg(1)";
    else if (!m4_member)
        rep.m4_path_note = "derived operations fail M1..M6";
    else if (!mismatch.empty())
        rep.m4_path_note = "M13 does not recover succ: " + mismatch;
    else
        rep.m4_path_note = "derived operations satisfy M1..M6 and M13 recovers succ";
    rep.agree = rep.m4_path == rep.c_membership.member;
    return rep;
}

std::optional<Embedding> represent_in_t4_power(const FiniteAlgebra& alg, int max_k,
                                               std::uint64_t node_budget) {
    if (max_k < 1) throw Error("represent_in_t4_power: max_k must be >= 1");
    if (alg.size < 2) throw Error("represent_in_t4_power: algebra must be non-trivial");

    FiniteAlgebra reduct;
    reduct.name = alg.name;
    reduct.size = alg.size;
    reduct.labels = alg.labels;
    for (const char* op : {"join", "meet", "neg", "nabla"}) {
        if (!alg.binds_op(op)) throw Error(alg.name + ": missing operation '" + std::string(op) + "'");
        reduct.tables[op] = alg.table(op);
    }
    reduct.constants["one"] = alg.constant("one");
    if (!check_membership(reduct, "M4").member)
        throw Error(alg.name + " is not an M4-algebra");

    FiniteAlgebra t4 = make_builtin("T4_modal");
    std::vector<std::vector<int>> homs = enumerate_homomorphisms(reduct, t4, node_budget);

    for (int k = 1; k <= max_k; ++k) {
        if (static_cast<std::size_t>(k) > homs.size()) break;
        std::vector<std::size_t> combo(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) combo[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
        while (true) {
            bool separating = true;
            for (int i = 0; i < alg.size && separating; ++i)
                for (int j = i + 1; j < alg.size && separating; ++j) {
                    bool sep = false;
                    for (std::size_t c : combo)
                        if (homs[c][static_cast<std::size_t>(i)] != homs[c][static_cast<std::size_t>(j)]) {
                            sep = true;
                            break;
                        }
                    if (!sep) separating = false;
                }
            if (separating) {
                Embedding e;
                e.k = k;
                e.coords.resize(static_cast<std::size_t>(alg.size));
                for (int i = 0; i < alg.size; ++i)
                    for (std::size_t c : combo)
                        e.coords[static_cast<std::size_t>(i)].push_back(homs[c][static_cast<std::size_t>(i)]);
                return e;
            }
            // next lexicographic combination
            int i = k - 1;
            while (i >= 0 &&
                   combo[static_cast<std::size_t>(i)] == homs.size() - static_cast<std::size_t>(k - i))
                --i;
            if (i < 0) break;
            ++combo[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return std::nullopt;
}

} // namespace gia
