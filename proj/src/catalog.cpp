#include "gia/catalog.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace gia {

namespace {

TermPtr X() { return var("x"); }
TermPtr Y() { return var("y"); }
TermPtr Z() { return var("z"); }
TermPtr ONE() { return cst("one"); }
TermPtr ZERO() { return cst("zero"); }

TermPtr S(TermPtr a, TermPtr b) { return app("succ", {std::move(a), std::move(b)}); }
TermPtr N(TermPtr a) { return app("neg", {std::move(a)}); }
TermPtr ST(TermPtr a, TermPtr b) { return app("star", {std::move(a), std::move(b)}); }
TermPtr J(TermPtr a, TermPtr b) { return app("join", {std::move(a), std::move(b)}); }
TermPtr M(TermPtr a, TermPtr b) { return app("meet", {std::move(a), std::move(b)}); }
TermPtr NB(TermPtr a) { return app("nabla", {std::move(a)}); }

// derived operations over {succ, one, zero}
TermPtr dvee(TermPtr a, TermPtr b) { return S(S(a, b), b); }      // a v b = (a>b)>b
TermPtr dneg(TermPtr a) { return S(std::move(a), ZERO()); }       // ~a = a>0
TermPtr dwedge(TermPtr a, TermPtr b) {                            // ~(~a v ~b)
    return S(dvee(dneg(std::move(a)), dneg(std::move(b))), ZERO());
}
TermPtr dnabla(TermPtr a) { return S(dneg(a), a); }               // ~a > a

Law ident(std::string id, TermPtr lhs, TermPtr rhs) {
    return Law{std::move(id), {}, {std::move(lhs), std::move(rhs)}};
}
Law quasi(std::string id, std::vector<Equation> prem, Equation concl) {
    return Law{std::move(id), std::move(prem), std::move(concl)};
}
// s <= t encoded as 1 = s>t (the constant first, so a failing witness
// reports lhs=1 against the actual value of s>t)
Law leq(std::string id, TermPtr s, TermPtr t) {
    return ident(std::move(id), ONE(), S(std::move(s), std::move(t)));
}

// M9..M13 composites over the M4 signature
TermPtr msupset(TermPtr a, TermPtr b) { return J(N(a), b); }              // M10
TermPtr marrow(TermPtr a, TermPtr b) { return J(NB(N(a)), b); }           // M11
TermPtr mdelta(TermPtr a) { return N(NB(N(a))); }                         // M9
TermPtr mmapsto(TermPtr a, TermPtr b) { return M(marrow(a, b), J(NB(b), N(a))); } // M12
TermPtr msucc(TermPtr a, TermPtr b) {                                     // M13
    return M(mmapsto(a, b), marrow(msupset(a, b), J(mdelta(N(a)), b)));
}

struct RegistryEntry {
    Law law;
    std::string note;
};

struct Registry {
    std::vector<std::string> order;
    std::map<std::string, RegistryEntry> by_id;
    std::map<std::string, std::string> aliases;

    void add(Law law, std::string note = "") {
        std::string id = law.id;
        order.push_back(id);
        by_id.emplace(id, RegistryEntry{std::move(law), std::move(note)});
        // "G'28" is also reachable as "G28"
        std::string stripped;
        for (char c : id)
            if (c != '\'') stripped += c;
        if (stripped != id && !by_id.count(stripped)) aliases[stripped] = id;
    }
};

Registry build_registry() {
    Registry r;
    auto x = X(), y = Y(), z = Z();

    // BCK A1..A5
    r.add(ident("A1", ST(ST(ST(x, y), ST(x, z)), ST(z, y)), ZERO()));
    r.add(ident("A2", ST(ST(x, ST(x, y)), y), ZERO()));
    r.add(ident("A3", ST(x, x), ZERO()));
    r.add(ident("A4", ST(ZERO(), x), ZERO()));
    r.add(quasi("A5", {{ST(x, y), ZERO()}, {ST(y, x), ZERO()}}, {x, y}));

    // CBCK B1..B4 + the CI condition
    r.add(ident("B1", ST(ST(x, y), z), ST(ST(x, z), y)));
    r.add(ident("B2", ST(x, ST(x, y)), ST(y, ST(y, x))));
    r.add(ident("B3", ST(x, x), ZERO()));
    r.add(ident("B4", ST(x, ZERO()), x),
          "stored as x*0 = x; the variant x*0 = 0 (see B4-as-printed) collapses the CI/IC "
          "translations and contradicts the standard equational basis");
    r.add(ident("B4-as-printed", ST(x, ZERO()), ZERO()), "variant form kept for falsification tests");
    r.add(ident("CI", ST(ST(x, y), ST(ST(x, y), ST(y, x))), ZERO()),
          "extra condition under which the flip x>y = y*x yields an I-algebra");

    // Wajsberg W1..W4 (the implication symbol is uniformly named succ)
    r.add(ident("W1", S(ONE(), x), x));
    r.add(ident("W2", S(S(x, y), y), S(S(y, x), x)));
    r.add(ident("W3", S(S(x, y), S(S(y, z), S(x, z))), ONE()));
    r.add(ident("W4", S(S(N(x), N(y)), S(y, x)), ONE()));

    // I-algebras I1..I5
    r.add(ident("I1", S(ONE(), x), x));
    r.add(ident("I2", S(S(x, y), y), S(S(y, x), x)));
    r.add(ident("I3", S(S(x, y), S(S(y, z), S(x, z))), ONE()));
    r.add(ident("I4", S(S(S(x, y), S(y, x)), S(y, x)), ONE()));
    r.add(ident("I5", S(ZERO(), x), ONE()));

    // G-algebras G1..G4
    r.add(ident("G1", S(ONE(), x), x));
    r.add(ident("G2", S(x, ONE()), ONE()));
    r.add(ident("G3", S(S(x, y), y), S(S(y, x), x)));
    r.add(quasi("G4", {{S(x, S(y, z)), ONE()}}, {S(y, S(x, z)), ONE()}));

    // consequences G5..G15 (G11/G16 are checked structurally)
    r.add(ident("G5", S(x, x), ONE()));
    r.add(quasi("G6", {{S(x, y), ONE()}, {S(y, x), ONE()}}, {x, y}));
    r.add(ident("G7", S(x, S(y, x)), ONE()));
    r.add(ident("G8", S(x, dvee(x, y)), ONE()));
    r.add(ident("G9", S(x, S(z, dvee(x, y))), ONE()));
    r.add(quasi("G10", {{S(x, y), ONE()}, {S(y, z), ONE()}}, {S(x, z), ONE()}));
    r.add(leq("G12", x, dvee(x, y)));
    r.add(leq("G13", y, dvee(x, y)));
    r.add(quasi("G14", {{S(x, y), ONE()}}, {ONE(), S(S(y, z), S(x, z))}));
    r.add(quasi("G15", {{S(x, z), ONE()}, {S(y, z), ONE()}}, {ONE(), S(dvee(x, y), z)}));

    // bounded: G17..G27
    r.add(leq("G17", ZERO(), x));
    r.add(ident("G19", dneg(dneg(x)), x));
    r.add(quasi("G20", {{S(x, y), ONE()}}, {ONE(), S(dneg(y), dneg(x))}));
    r.add(leq("G21", dwedge(x, y), x));
    r.add(leq("G22", dwedge(x, y), y));
    r.add(quasi("G23", {{S(z, x), ONE()}, {S(z, y), ONE()}}, {ONE(), S(z, dwedge(x, y))}));
    r.add(ident("G25", dneg(dvee(x, y)), dwedge(dneg(x), dneg(y))));
    r.add(ident("G26", dneg(dwedge(x, y)), dvee(dneg(x), dneg(y))));
    r.add(leq("G27", dvee(S(x, z), S(y, z)), S(dwedge(x, y), z)),
          "stored as (x>z)v(y>z) <= (x^y)>z, the form the monotonicity/supremum steps "
          "actually yield; the variant reading is kept as G27-as-printed");
    r.add(leq("G27-as-printed", dvee(S(x, y), S(y, z)), S(dwedge(x, y), z)),
          "variant form kept for falsification tests; fails already on the two-element Boolean algebra");
    r.add(leq("DG1", S(dwedge(x, y), z), dvee(S(x, z), S(y, z))), "distributivity");
    r.add(leq("DG2", S(dwedge(x, y), z), dvee(S(x, z), S(y, z))), "alias of DG1");
    r.add(quasi("CL", {{dwedge(x, y), dwedge(x, z)}, {dvee(x, y), dvee(x, z)}}, {y, z}),
          "cancellation law");

    // distributive-lattice identities over the derived operations
    r.add(ident("D1", dwedge(x, dvee(y, z)), dvee(dwedge(x, y), dwedge(x, z))));
    r.add(ident("D2", dvee(x, dwedge(y, z)), dwedge(dvee(x, y), dvee(x, z))));

    // G'28..G'38
    TermPtr imp2 = S(x, S(x, y)); // x =>_2 y
    r.add(ident("G'28", S(S(imp2, x), x), ONE()));
    r.add(ident("G'29", S(S(x, imp2), imp2), ONE()),
          "(x =>_2 y) v x = 1 with the join expanded in the commuted orientation "
          "(a v b = (b>a)>a), so the stored term differs from G'28");
    r.add(ident("G'30", S(imp2, x), x));
    r.add(ident("G'33", S(dneg(x), S(dneg(x), x)), S(dneg(x), x)));
    r.add(leq("G'34", x, dnabla(x)));
    {
        TermPtr A = dnabla(x);
        r.add(ident("G'35", S(A, S(A, ZERO())), S(A, ZERO())));
        r.add(ident("G'36", S(dneg(A), A), A));
        r.add(ident("G'37", dvee(dneg(A), A), ONE()));
        r.add(ident("G'38", dwedge(A, dneg(A)), ZERO()),
              "stored as nabla(x) ^ ~nabla(x) = 0; the join variant (G38-as-printed) "
              "contradicts G'37 and fails on T4");
        r.add(ident("G38-as-printed", dvee(A, dneg(A)), ZERO()),
              "variant form kept for falsification tests");
    }

    // M4 axioms
    r.add(ident("M1", M(x, J(x, y)), x));
    r.add(ident("M2", M(x, J(y, z)), J(M(z, x), M(y, x))),
          "stored as x^(yvz) = (z^x)v(y^x); the variant with (z^x)v(z^y) "
          "(see M2-as-printed) fails on T4 itself at x=0, y=1, z=1");
    r.add(ident("M2-as-printed", M(x, J(y, z)), J(M(z, x), M(z, y))),
          "variant form kept for falsification tests");
    r.add(ident("M3", N(N(x)), x));
    r.add(ident("M4", N(J(x, y)), M(N(x), N(y))));
    r.add(ident("M5", J(NB(x), N(x)), ONE()));
    r.add(ident("M6", M(NB(x), N(x)), M(N(x), x)));
    r.add(ident("M7", J(ONE(), x), ONE()), "consequence of M1..M6; registry only");
    r.add(ident("M'6", NB(M(x, y)), M(NB(x), NB(y))), "three-valued condition");
    {
        TermPtr s = M(x, N(x)), t = J(y, N(y));
        r.add(ident("Kleene", J(s, t), t), "x^~x <= yv~y encoded as join-absorption");
    }

    // L1..L4: the M13 composite recovers the implication in the M4 signature
    r.add(ident("L1", J(x, y), msucc(msucc(x, y), y)));
    r.add(ident("L2", N(x), msucc(x, N(ONE()))));
    r.add(ident("L3", NB(x), msucc(N(x), x)));
    r.add(ident("L4", M(x, y), N(J(N(x), N(y)))));

    // C1..C8
    r.add(ident("C1", S(ONE(), x), x));
    r.add(ident("C2", S(x, ONE()), ONE()));
    r.add(ident("C3", S(S(x, y), y), S(S(y, x), x)));
    r.add(quasi("C4", {{S(x, S(y, z)), ONE()}}, {S(y, S(x, z)), ONE()}));
    r.add(ident("C5", S(S(imp2, x), x), ONE()));
    r.add(ident("C6", S(N(ONE()), x), ONE()));
    r.add(ident("C7", S(x, N(ONE())), N(x)));
    {
        // abbreviations over {succ, neg, one}: 0 is ~1, a v b = (a>b)>b,
        // a ^ b = ((a>~1) v (b>~1)) > ~1
        TermPtr m0 = N(ONE());
        auto cvee = [](TermPtr a, TermPtr b) { return S(S(a, b), b); };
        auto cneg = [&](TermPtr a) { return S(std::move(a), N(ONE())); };
        auto cwedge = [&](TermPtr a, TermPtr b) {
            return S(cvee(cneg(std::move(a)), cneg(std::move(b))), N(ONE()));
        };
        TermPtr dg1_part = S(S(cwedge(x, y), z), cvee(S(x, z), S(y, z)));
        TermPtr A = S(N(x), x); // nabla x
        TermPtr g37_part = cvee(S(A, m0), A);
        r.add(ident("C8", ONE(), cwedge(dg1_part, g37_part)),
              "stored as the meet of the distributivity instance (DG1 over {succ,neg,one}) "
              "and the modal instance (~nabla(x) v nabla(x) = 1); the variant reading "
              "C8-as-printed fails on T4 at x=0, y=1, z=0 and cannot be part of a sound "
              "axiomatization of the four-valued modal algebras");
        r.add(ident("C8-as-printed", S(S(cvee(x, N(y)), z), cwedge(S(x, z), S(y, z))), ONE()),
              "variant form kept for falsification tests");
    }

    return r;
}

const Registry& registry() {
    static const Registry r = build_registry();
    return r;
}

std::vector<Law> laws(std::initializer_list<const char*> ids) {
    std::vector<Law> out;
    for (const char* id : ids) out.push_back(law_by_id(id));
    return out;
}

std::vector<AxiomSystem> build_catalog() {
    std::vector<AxiomSystem> cat;
    SignatureReq star_sig{{"zero"}, {{"star", 2}}};
    SignatureReq succ_sig{{"one"}, {{"succ", 2}}};
    SignatureReq succ_neg_sig{{"one"}, {{"succ", 2}, {"neg", 1}}};
    SignatureReq m4_sig{{"one"}, {{"join", 2}, {"meet", 2}, {"neg", 1}, {"nabla", 1}}};

    cat.push_back({"BCK", {}, "BCK-algebras <A,*,0>", star_sig, std::nullopt,
                   laws({"A1", "A2", "A3", "A4", "A5"}), false, false, false});
    cat.push_back({"CBCK", {}, "commutative BCK-algebras (equational basis)", star_sig, std::nullopt,
                   laws({"B1", "B2", "B3", "B4"}), false, false, false});
    cat.push_back({"CBCK_CI", {"CBCK-CI"}, "CBCK-algebras satisfying the CI condition", star_sig, "CBCK",
                   laws({"CI"}), false, false, false});
    cat.push_back({"W", {}, "Wajsberg algebras <A,succ,neg,1>", succ_neg_sig, std::nullopt,
                   laws({"W1", "W2", "W3", "W4"}), false, false, false});
    cat.push_back({"I", {}, "I-algebras <A,succ,1>", succ_sig, std::nullopt,
                   laws({"I1", "I2", "I3", "I4"}), false, false, false});
    cat.push_back({"I0", {"I_0"}, "I-algebras with least element", succ_sig, "I",
                   laws({"I5"}), true, false, false});
    cat.push_back({"G", {}, "generalized I-algebras", succ_sig, std::nullopt,
                   laws({"G1", "G2", "G3", "G4"}), false, true, false});
    cat.push_back({"G0", {"G_0"}, "bounded G-algebras", succ_sig, "G",
                   laws({"G17"}), true, true, false});
    cat.push_back({"DG0", {"DG_0"}, "distributive bounded G-algebras", succ_sig, "G0",
                   laws({"DG1"}), true, true, false});
    cat.push_back({"G4", {}, "G-algebras with G'28", succ_sig, "G",
                   laws({"G'28"}), false, true, false});
    cat.push_back({"G4_0", {"G40"}, "bounded G4-algebras", succ_sig, "G0",
                   laws({"G'28"}), true, true, false});
    cat.push_back({"DG4_0", {"DG40"}, "distributive bounded G4-algebras", succ_sig, "G4_0",
                   laws({"DG1"}), true, true, false});
    cat.push_back({"MDG4_0", {"MDG40"}, "modal G4_0-algebras (G'35)", succ_sig, "DG4_0",
                   laws({"G'35"}), true, true, false});
    cat.push_back({"M4", {}, "four-valued modal algebras", m4_sig, std::nullopt,
                   laws({"M1", "M2", "M3", "M4", "M5", "M6"}), false, false, false});
    cat.push_back({"L3", {}, "three-valued Lukasiewicz algebras", m4_sig, "M4",
                   laws({"M'6"}), false, false, false});
    cat.push_back({"Kleene", {}, "M4-algebras with the Kleene condition", m4_sig, "M4",
                   laws({"Kleene"}), false, false, false});
    cat.push_back({"C", {"C-system"}, "C1..C8 over <A,succ,neg,1>", succ_neg_sig, std::nullopt,
                   laws({"C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8"}), false, true, false});
    cat.push_back({"G_{n+1}", {"Gn+1", "Gn1"}, "(n+1)-valued G-algebras (parameterized)", succ_sig, "G",
                   {}, false, true, true});
    return cat;
}

const AxiomSystem* find_system(const std::string& id) {
    for (const AxiomSystem& s : catalog()) {
        if (s.id == id) return &s;
        for (const auto& a : s.aliases)
            if (a == id) return &s;
    }
    return nullptr;
}

} // namespace

const std::vector<AxiomSystem>& catalog() {
    static const std::vector<AxiomSystem> cat = build_catalog();
    return cat;
}

Law valued_law(int n) {
    if (n < 1) throw Error("valued_law: n must be >= 1");
    TermPtr x = X(), y = Y();
    TermPtr a = y; // x =>_0 y = y
    for (int i = 0; i < n; ++i) a = S(x, a);
    return ident("Gval" + std::to_string(n), S(S(a, x), x), ONE());
}

ResolvedSystem get_system(const std::string& id, std::optional<int> param) {
    const AxiomSystem* def = find_system(id);
    if (!def) throw Error("unknown system '" + id + "'");
    if (def->parameterized) {
        if (!param) throw Error("system '" + def->id + "' requires a parameter n >= 1");
        if (*param < 1) throw Error("system '" + def->id + "' parameter must be >= 1");
    } else if (param) {
        throw Error("system '" + def->id + "' takes no parameter");
    }

    std::vector<const AxiomSystem*> chain;
    for (const AxiomSystem* s = def; s; s = s->parent ? find_system(*s->parent) : nullptr)
        chain.push_back(s);
    std::reverse(chain.begin(), chain.end());

    ResolvedSystem out;
    out.def = def;
    out.id = def->id;
    out.signature = def->signature;
    for (const AxiomSystem* s : chain) {
        for (const Law& l : s->own_laws) out.laws.push_back(l);
        out.needs_least = out.needs_least || s->needs_least;
        out.g_prefill = out.g_prefill || s->g_prefill;
    }
    if (def->parameterized) {
        out.laws.push_back(valued_law(*param));
        out.id = def->id + "(n=" + std::to_string(*param) + ")";
    }
    return out;
}

const Law& law_by_id(const std::string& id) {
    const Registry& r = registry();
    auto it = r.by_id.find(id);
    if (it == r.by_id.end()) {
        auto al = r.aliases.find(id);
        if (al != r.aliases.end()) it = r.by_id.find(al->second);
    }
    if (it == r.by_id.end()) throw Error("unknown law '" + id + "'");
    return it->second.law;
}

bool law_exists(const std::string& id) {
    const Registry& r = registry();
    return r.by_id.count(id) != 0 || r.aliases.count(id) != 0;
}

const std::vector<std::string>& law_registry_order() { return registry().order; }

bool law_mentions_constant(const Law& law, const std::string& sym) {
    auto mentions = [&](auto&& self, const TermPtr& t) -> bool {
        if (t->kind == Term::Kind::Constant && t->name == sym) return true;
        for (const auto& a : t->args)
            if (self(self, a)) return true;
        return false;
    };
    for (const auto& eq : law.premises)
        if (mentions(mentions, eq.lhs) || mentions(mentions, eq.rhs)) return true;
    return mentions(mentions, law.conclusion.lhs) || mentions(mentions, law.conclusion.rhs);
}

std::optional<FiniteAlgebra> with_resolved_zero(const FiniteAlgebra& alg, std::string* note) {
    if (alg.binds_constant("zero")) {
        if (note) *note = "zero bound explicitly to '" + alg.label(alg.constant("zero")) + "'";
        return alg;
    }
    if (!alg.binds_op("succ") || !alg.binds_constant("one")) return std::nullopt;
    const OpTable& s = alg.table("succ");
    int one = alg.constant("one");
    for (int z = 0; z < alg.size; ++z) {
        bool least = true;
        for (int j = 0; j < alg.size; ++j)
            if (s.apply2(alg.size, z, j) != one) {
                least = false;
                break;
            }
        if (least) {
            FiniteAlgebra out = alg;
            out.constants["zero"] = z;
            if (note) *note = "zero derived as the least element '" + alg.label(z) + "'";
            return out;
        }
    }
    return std::nullopt;
}

MembershipReport check_membership(const FiniteAlgebra& alg, const std::string& system_id,
                                  std::optional<int> param) {
    return check_membership(alg, get_system(system_id, param));
}

MembershipReport check_membership(const FiniteAlgebra& alg, const ResolvedSystem& sys) {
    for (const auto& c : sys.signature.constants)
        if (!alg.binds_constant(c)) throw Error("signature mismatch: missing constant '" + c + "'");
    for (const auto& [op, arity] : sys.signature.operations) {
        if (!alg.binds_op(op)) throw Error("signature mismatch: missing operation '" + op + "'");
        if (alg.table(op).arity != arity)
            throw Error("signature mismatch: '" + op + "' has arity " +
                        std::to_string(alg.table(op).arity) + ", expected " + std::to_string(arity));
    }

    MembershipReport rep;
    rep.system_id = sys.id;

    const FiniteAlgebra* target = &alg;
    FiniteAlgebra resolved;
    bool zero_missing = false;
    if (sys.needs_least) {
        std::string note;
        auto r = with_resolved_zero(alg, &note);
        if (r) {
            resolved = std::move(*r);
            target = &resolved;
            rep.notes.push_back(note);
        } else {
            zero_missing = true;
            rep.notes.push_back("no least element: 0-dependent laws not evaluated");
        }
    }

    bool all_hold = true;
    for (const Law& law : sys.laws) {
        if (law_mentions_constant(law, "zero") && !target->binds_constant("zero")) {
            rep.skipped.push_back(law.id);
            all_hold = false;
            continue;
        }
        LawOutcome out;
        out.law_id = law.id;
        out.result = check_law(*target, law);
        if (out.result) all_hold = false;
        rep.outcomes.push_back(std::move(out));
    }
    rep.member = all_hold && !zero_missing;
    return rep;
}

std::vector<DiagnosisEntry> diagnose(const FiniteAlgebra& alg) {
    std::vector<DiagnosisEntry> out;
    for (const AxiomSystem& s : catalog()) {
        if (s.parameterized) {
            out.push_back({s.id, Verdict::NotApplicable});
            continue;
        }
        bool ok = true;
        for (const auto& c : s.signature.constants)
            if (!alg.binds_constant(c)) ok = false;
        for (const auto& [op, arity] : s.signature.operations)
            if (!alg.binds_op(op) || alg.table(op).arity != arity) ok = false;
        if (!ok) {
            out.push_back({s.id, Verdict::NotApplicable});
            continue;
        }
        MembershipReport rep = check_membership(alg, get_system(s.id));
        out.push_back({s.id, rep.member ? Verdict::Member : Verdict::NonMember});
    }
    return out;
}

std::string catalog_reference() {
    std::ostringstream os;
    os << "Law registry\n============\n\n";
    os << "Symbols: succ (binary implication; also the implication of W/I),\n";
    os << "star (BCK difference), neg, nabla, join, meet; constants one, zero.\n";
    os << "Derived forms over {succ, one, zero}: a v b = (a succ b) succ b;\n";
    os << "~a = a succ zero; a ^ b = ~(~a v ~b); nabla a = ~a succ a.\n";
    os << "Inequalities s <= t are encoded as the identity one = (s succ t).\n\n";
    const Registry& r = registry();
    for (const std::string& id : r.order) {
        const RegistryEntry& e = r.by_id.at(id);
        os << id << ":\n";
        if (!e.law.premises.empty()) {
            for (const auto& p : e.law.premises)
                os << "  if " << term_to_string(p.lhs) << " = " << term_to_string(p.rhs) << "\n";
            os << "  then " << term_to_string(e.law.conclusion.lhs) << " = "
               << term_to_string(e.law.conclusion.rhs) << "\n";
        } else {
            os << "  " << term_to_string(e.law.conclusion.lhs) << " = "
               << term_to_string(e.law.conclusion.rhs) << "\n";
        }
        if (!e.note.empty()) os << "  note: " << e.note << "\n";
    }
    os << "\nSystems\n=======\n\n";
    for (const AxiomSystem& s : catalog()) {
        os << s.id;
        if (!s.aliases.empty()) {
            os << " (aliases:";
            for (const auto& a : s.aliases) os << " " << a;
            os << ")";
        }
        os << " -- " << s.summary << "\n";
        os << "  laws:";
        if (s.parent) os << " [" << *s.parent << "]";
        for (const Law& l : s.own_laws) os << " " << l.id;
        if (s.parameterized) os << " Gval<n>";
        if (s.needs_least) os << "  (requires a least element; zero derived when unbound)";
        os << "\n";
    }
    return os.str();
}

} // namespace gia
