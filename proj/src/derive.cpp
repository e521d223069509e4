#include "gia/derive.hpp"

#include "gia/catalog.hpp"

namespace gia {

DerivedOrder derive_order(const FiniteAlgebra& alg) {
    if (!alg.binds_op("succ") || !alg.binds_constant("one"))
        throw Error("derive_order: algebra must bind succ and one");
    const OpTable& s = alg.table("succ");
    const int n = alg.size;
    const int one = alg.constant("one");

    DerivedOrder o;
    o.n = n;
    o.rel.assign(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            o.rel[static_cast<std::size_t>(i) * n + j] = s.apply2(n, i, j) == one ? 1 : 0;

    o.poset = true;
    for (int i = 0; i < n && o.poset; ++i)
        if (!o.le(i, i)) {
            o.poset = false;
            o.violation = "not reflexive at " + alg.label(i);
        }
    for (int i = 0; i < n && o.poset; ++i)
        for (int j = 0; j < n && o.poset; ++j)
            if (i != j && o.le(i, j) && o.le(j, i)) {
                o.poset = false;
                o.violation = "not antisymmetric at (" + alg.label(i) + ", " + alg.label(j) + ")";
            }
    for (int i = 0; i < n && o.poset; ++i)
        for (int j = 0; j < n && o.poset; ++j)
            for (int k = 0; k < n && o.poset; ++k)
                if (o.le(i, j) && o.le(j, k) && !o.le(i, k)) {
                    o.poset = false;
                    o.violation = "not transitive at (" + alg.label(i) + ", " + alg.label(j) + ", " +
                                  alg.label(k) + ")";
                }
    return o;
}

Bounds derive_bounds(const DerivedOrder& order) {
    Bounds b;
    for (int z = 0; z < order.n; ++z) {
        bool least = true;
        for (int j = 0; j < order.n; ++j)
            if (!order.le(z, j)) least = false;
        if (least) {
            b.least = z;
            break;
        }
    }
    for (int t = 0; t < order.n; ++t) {
        bool greatest = true;
        for (int j = 0; j < order.n; ++j)
            if (!order.le(j, t)) greatest = false;
        if (greatest) {
            b.greatest = t;
            break;
        }
    }
    return b;
}

ImplKind impl_kind_from_name(const std::string& name) {
    if (name == "supset") return ImplKind::Supset;
    if (name == "arrow") return ImplKind::Arrow;
    if (name == "mapsto") return ImplKind::Mapsto;
    if (name == "succ") return ImplKind::Succ;
    throw Error("unknown implication '" + name + "' (expected supset|arrow|mapsto|succ)");
}

std::string impl_kind_name(ImplKind k) {
    switch (k) {
    case ImplKind::Supset: return "supset";
    case ImplKind::Arrow: return "arrow";
    case ImplKind::Mapsto: return "mapsto";
    case ImplKind::Succ: return "succ";
    }
    return "?";
}

namespace {

struct M4Ops {
    const OpTable* join;
    const OpTable* meet;
    const OpTable* neg;
    const OpTable* nabla;
    int n;

    int j(int a, int b) const { return join->apply2(n, a, b); }
    int m(int a, int b) const { return meet->apply2(n, a, b); }
    int ng(int a) const { return neg->apply1(a); }
    int nb(int a) const { return nabla->apply1(a); }

    int supset(int x, int y) const { return j(ng(x), y); }          // ~x v y
    int arrow(int x, int y) const { return j(nb(ng(x)), y); }       // nabla ~x v y
    int delta(int x) const { return ng(nb(ng(x))); }                // ~ nabla ~x
    int mapsto(int x, int y) const { return m(arrow(x, y), j(nb(y), ng(x))); }
    int succ(int x, int y) const {
        return m(mapsto(x, y), arrow(supset(x, y), j(delta(ng(x)), y)));
    }
};

M4Ops m4_ops(const FiniteAlgebra& alg) {
    for (const char* sym : {"join", "meet", "neg", "nabla"})
        if (!alg.binds_op(sym)) throw Error("implication derivation requires '" + std::string(sym) + "'");
    return {&alg.table("join"), &alg.table("meet"), &alg.table("neg"), &alg.table("nabla"), alg.size};
}

} // namespace

int implication(const FiniteAlgebra& alg, ImplKind which, int x, int y) {
    M4Ops ops = m4_ops(alg);
    switch (which) {
    case ImplKind::Supset: return ops.supset(x, y);
    case ImplKind::Arrow: return ops.arrow(x, y);
    case ImplKind::Mapsto: return ops.mapsto(x, y);
    case ImplKind::Succ: return ops.succ(x, y);
    }
    throw Error("implication: bad kind");
}

int iterate_implication(const FiniteAlgebra& alg, int i, int x, int y) {
    if (i < 0) throw Error("iterate_implication: i must be >= 0");
    const OpTable& s = alg.table("succ");
    int v = y;
    for (int k = 0; k < i; ++k) v = s.apply2(alg.size, x, v);
    return v;
}

LawResult valued_check(const FiniteAlgebra& alg, int n) {
    if (n < 1) throw Error("valued_check: n must be >= 1");
    return check_law(alg, valued_law(n));
}

DerivedStructure derive_structure(const FiniteAlgebra& alg) {
    if (!alg.binds_op("succ") && !alg.binds_op("join"))
        throw Error("derive_structure: algebra binds neither succ nor the modal signature");

    DerivedStructure d;
    d.algebra_name = alg.name;
    const int n = alg.size;
    d.n = n;

    if (alg.binds_op("succ") && alg.binds_constant("one")) {
        const OpTable& s = alg.table("succ");
        const int one = alg.constant("one");
        d.order = derive_order(alg);
        if (!d.order->poset) d.violations.push_back("order: " + d.order->violation);
        d.bounds = derive_bounds(*d.order);

        auto sv = [&](int a, int b) { return s.apply2(n, a, b); };
        std::vector<int> join(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                join[static_cast<std::size_t>(i) * n + j] = sv(sv(i, j), j);
        // least-upper-bound check against the derived order
        bool lub_ok = d.order->poset;
        for (int i = 0; i < n && lub_ok; ++i)
            for (int j = 0; j < n && lub_ok; ++j) {
                int u = join[static_cast<std::size_t>(i) * n + j];
                if (!d.order->le(i, u) || !d.order->le(j, u)) lub_ok = false;
                for (int w = 0; w < n && lub_ok; ++w)
                    if (d.order->le(i, w) && d.order->le(j, w) && !d.order->le(u, w)) lub_ok = false;
            }
        if (!lub_ok) d.violations.push_back("join is not the least upper bound");
        d.join = std::move(join);

        std::string note;
        if (auto r = with_resolved_zero(alg, &note)) {
            d.zero = r->constant("zero");
            d.zero_note = note;
            const int z = *d.zero;
            std::vector<int> neg(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) neg[static_cast<std::size_t>(i)] = sv(i, z);
            std::vector<int> meet(static_cast<std::size_t>(n) * n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    int ni = neg[static_cast<std::size_t>(i)], nj = neg[static_cast<std::size_t>(j)];
                    meet[static_cast<std::size_t>(i) * n + j] = sv(sv(sv(ni, nj), nj), z);
                }
            bool glb_ok = d.order->poset;
            for (int i = 0; i < n && glb_ok; ++i)
                for (int j = 0; j < n && glb_ok; ++j) {
                    int u = meet[static_cast<std::size_t>(i) * n + j];
                    if (!d.order->le(u, i) || !d.order->le(u, j)) glb_ok = false;
                    for (int w = 0; w < n && glb_ok; ++w)
                        if (d.order->le(w, i) && d.order->le(w, j) && !d.order->le(w, u)) glb_ok = false;
                }
            if (!glb_ok) d.violations.push_back("meet is not the greatest lower bound");
            std::vector<int> nabla(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) nabla[static_cast<std::size_t>(i)] = sv(neg[static_cast<std::size_t>(i)], i);
            std::vector<int> delta(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                int v = nabla[static_cast<std::size_t>(neg[static_cast<std::size_t>(i)])];
                delta[static_cast<std::size_t>(i)] = neg[static_cast<std::size_t>(v)];
            }
            d.neg = std::move(neg);
            d.meet = std::move(meet);
            d.nabla = std::move(nabla);
            d.delta = std::move(delta);
        } else {
            d.zero_note = "no least element: 0-dependent tables absent";
        }
        if (d.order->poset && (!d.bounds.greatest || *d.bounds.greatest != one))
            d.violations.push_back("one is not the greatest element");
    }

    if (alg.binds_op("join") && alg.binds_op("meet") && alg.binds_op("neg") && alg.binds_op("nabla")) {
        M4Ops ops = m4_ops(alg);
        std::vector<int> sup(static_cast<std::size_t>(n) * n), arr(sup.size()), mp(sup.size()), sc(sup.size());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                std::size_t f = static_cast<std::size_t>(i) * n + j;
                sup[f] = ops.supset(i, j);
                arr[f] = ops.arrow(i, j);
                mp[f] = ops.mapsto(i, j);
                sc[f] = ops.succ(i, j);
            }
        d.impl_supset = std::move(sup);
        d.impl_arrow = std::move(arr);
        d.impl_mapsto = std::move(mp);
        d.impl_succ = std::move(sc);
        std::vector<int> delta(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) delta[static_cast<std::size_t>(i)] = ops.delta(i);
        if (!d.delta) d.delta = std::move(delta);
    }

    return d;
}

} // namespace gia
