#pragma once

#include "idemcore/monad.hpp"

namespace idemcore::fincat {

// F left adjoint to G, F: B -> C, G: C -> B, with unit Id_B -> GF and
// counit FG -> Id_C. Both triangle identities are checked at construction.
struct AdjunctionData {
    FinFunctor f;
    FinFunctor g;
    FinNatTrans eta;
    FinNatTrans eps;
};

inline AdjunctionData check_adjunction(const FinFunctor& f, const FinFunctor& g,
                                       const FinNatTrans& eta, const FinNatTrans& eps) {
    const CatPtr& b = f.source();
    const CatPtr& c = f.target();
    if (!(g.source()->equal_tables(*c) && g.target()->equal_tables(*b)))
        throw ValidationError("AdjunctionShape", "right adjoint endpoints do not oppose F");
    if (!(eta.source() == identity_functor(b) && eta.target() == compose_functors(g, f)))
        throw ValidationError("AdjunctionShape", "unit is not Id -> GF");
    if (!(eps.source() == compose_functors(f, g) && eps.target() == identity_functor(c)))
        throw ValidationError("AdjunctionShape", "counit is not FG -> Id");
    for (ObjIdx o = 0; o < b->num_objects(); ++o) {
        MorIdx lhs = c->compose(eps.component(f.on_object(o)), f.on_morphism(eta.component(o)));
        if (lhs != c->identity(f.on_object(o)))
            throw ValidationError("TriangleFail", "eps(F) . F(eta) != 1",
                                  Json{{"side", "F"}, {"object", b->object_id(o)}});
    }
    for (ObjIdx o = 0; o < c->num_objects(); ++o) {
        MorIdx lhs = b->compose(g.on_morphism(eps.component(o)), eta.component(g.on_object(o)));
        if (lhs != b->identity(g.on_object(o)))
            throw ValidationError("TriangleFail", "G(eps) . eta(G) != 1",
                                  Json{{"side", "G"}, {"object", c->object_id(o)}});
    }
    return AdjunctionData{f, g, eta, eps};
}

inline AdjunctionData identity_adjunction(const CatPtr& c) {
    FinFunctor id = identity_functor(c);
    return AdjunctionData{id, id, identity_nat(id), identity_nat(id)};
}

// Pastes (F' dashv G') after (F dashv G): F'F dashv GG' with pasted unit and
// counit; the result is validated again.
inline AdjunctionData compose_adjunctions(const AdjunctionData& outer, const AdjunctionData& inner) {
    // inner: B -> C, outer: C -> D
    const FinFunctor& f1 = inner.f;
    const FinFunctor& g1 = inner.g;
    const FinFunctor& f2 = outer.f;
    const FinFunctor& g2 = outer.g;
    if (!f1.target()->equal_tables(*f2.source()))
        throw ValidationError("AdjunctionShape", "adjunctions are not composable");
    FinFunctor bigF = compose_functors(f2, f1);
    FinFunctor bigG = compose_functors(g1, g2);
    const FinCategory& b = *f1.source();
    const FinCategory& d = *f2.target();
    std::vector<MorIdx> unit(b.num_objects()), counit(d.num_objects());
    for (ObjIdx o = 0; o < b.num_objects(); ++o)
        unit[o] = b.compose(g1.on_morphism(outer.eta.component(f1.on_object(o))),
                            inner.eta.component(o));
    for (ObjIdx o = 0; o < d.num_objects(); ++o)
        counit[o] = d.compose(outer.eps.component(o),
                              f2.on_morphism(inner.eps.component(g2.on_object(o))));
    FinNatTrans eta(identity_functor(f1.source()), compose_functors(bigG, bigF), std::move(unit));
    FinNatTrans eps(compose_functors(bigF, bigG), identity_functor(f2.target()), std::move(counit));
    return check_adjunction(bigF, bigG, eta, eps);
}

// (GF, eta, G eps F), law-checked.
inline MonadData induced_monad(const AdjunctionData& a) {
    FinFunctor t = compose_functors(a.g, a.f);
    const FinCategory& b = *a.f.source();
    std::vector<MorIdx> mu(b.num_objects());
    for (ObjIdx o = 0; o < b.num_objects(); ++o)
        mu[o] = a.g.on_morphism(a.eps.component(a.f.on_object(o)));
    FinNatTrans mu_nt(compose_functors(t, t), t, std::move(mu));
    return check_monad(t, a.eta, mu_nt);
}

// Two adjunctions sharing a right adjoint are isomorphic; returns the monad
// isomorphism G(phi) with phi = eps(F') . F(eta'), validated as a monad
// morphism with invertible components.
inline FinNatTrans shared_right_adjoint_monad_iso(const AdjunctionData& a1,
                                                  const AdjunctionData& a2) {
    if (!(a1.g == a2.g))
        throw ValidationError("AdjunctionShape", "adjunctions do not share the right adjoint");
    const FinCategory& b = *a1.f.source();
    const FinCategory& c = *a1.f.target();
    MonadData m1 = induced_monad(a1);
    MonadData m2 = induced_monad(a2);
    std::vector<MorIdx> comps(b.num_objects());
    for (ObjIdx o = 0; o < b.num_objects(); ++o) {
        MorIdx phi = c.compose(a1.eps.component(a2.f.on_object(o)),
                               a1.f.on_morphism(a2.eta.component(o)));
        comps[o] = a1.g.on_morphism(phi);
    }
    FinNatTrans iso(m1.t, m2.t, std::move(comps));
    if (!check_monad_morphism(m1, m2, iso))
        throw ValidationError("MonadIsoFail", "comparison is not a monad morphism");
    for (ObjIdx o = 0; o < b.num_objects(); ++o)
        if (!is_iso(b, iso.component(o)))
            throw ValidationError("MonadIsoFail", "comparison component is not iso",
                                  Json{{"object", b.object_id(o)}});
    return iso;
}

struct KleisliResult {
    CatPtr kleisli;
    AdjunctionData adjunction;            // F_T dashv G_T
    std::vector<MorIdx> underlying;       // kleisli morphism index -> base morphism A -> TB
    std::vector<ObjIdx> kl_dst_object;    // kleisli morphism index -> codomain object (in base)
};

// Kleisli category: hom(A, B) = hom_base(A, TB), composition via mu, with the
// free/forgetful adjunction. The induced monad of the result equals the input
// monad on the nose.
inline KleisliResult build_kleisli(const MonadData& m) {
    const CatPtr& base = m.category();
    const FinCategory& b = *base;
    FinCategoryData data;
    for (ObjIdx o = 0; o < b.num_objects(); ++o) data.objects.push_back(b.object_id(o));

    // morphism ids in order (src object, dst object, underlying morphism id)
    std::vector<MorIdx> underlying;
    std::vector<std::pair<ObjIdx, ObjIdx>> ends;
    std::unordered_map<int64_t, MorId> index;  // (a, bidx, underlying) -> kleisli id
    auto key = [&](ObjIdx a, ObjIdx bb, MorIdx u) {
        return (static_cast<int64_t>(a) * b.num_objects() + bb) * b.num_morphisms() + u;
    };
    for (ObjIdx a = 0; a < b.num_objects(); ++a)
        for (ObjIdx bb = 0; bb < b.num_objects(); ++bb)
            for (MorIdx u : b.hom(a, m.t.on_object(bb))) {
                MorId id = static_cast<MorId>(underlying.size());
                index[key(a, bb, u)] = id;
                underlying.push_back(u);
                ends.emplace_back(a, bb);
                data.morphisms.push_back({id, b.object_id(a), b.object_id(bb)});
            }
    for (ObjIdx a = 0; a < b.num_objects(); ++a)
        data.identities.emplace_back(b.object_id(a), index[key(a, a, m.eta.component(a))]);
    for (MorId gi = 0; gi < static_cast<MorId>(underlying.size()); ++gi)
        for (MorId fi = 0; fi < static_cast<MorId>(underlying.size()); ++fi) {
            if (ends[fi].second != ends[gi].first) continue;
            // g.f = mu . T(g) . f on underlying morphisms
            MorIdx comp = b.compose(m.mu.component(ends[gi].second),
                                    b.compose(m.t.on_morphism(underlying[gi]), underlying[fi]));
            data.composition.push_back({gi, fi, index[key(ends[fi].first, ends[gi].second, comp)]});
        }
    CatPtr kl = FinCategory::validate(data);

    // F_T: identity on objects, f |-> eta . f
    std::vector<ObjIdx> f_obj(b.num_objects());
    std::vector<MorIdx> f_mor(b.num_morphisms());
    for (ObjIdx o = 0; o < b.num_objects(); ++o) f_obj[o] = o;  // ids coincide, so indices do
    for (MorIdx f = 0; f < b.num_morphisms(); ++f) {
        MorIdx u = b.compose(m.eta.component(b.dst(f)), f);
        f_mor[f] = kl->morphism_index(index[key(b.src(f), b.dst(f), u)]);
    }
    FinFunctor ft(base, kl, std::move(f_obj), std::move(f_mor));

    // G_T: A |-> TA, kleisli (A, B, u) |-> mu . T(u)
    std::vector<ObjIdx> g_obj(kl->num_objects());
    std::vector<MorIdx> g_mor(kl->num_morphisms());
    for (ObjIdx o = 0; o < kl->num_objects(); ++o) g_obj[o] = m.t.on_object(o);
    for (MorIdx k = 0; k < kl->num_morphisms(); ++k)
        g_mor[k] = b.compose(m.mu.component(ends[k].second), m.t.on_morphism(underlying[k]));
    FinFunctor gt(kl, base, std::move(g_obj), std::move(g_mor));

    // unit = eta; counit at B is the kleisli morphism TB -|-> B with underlying 1_TB
    FinNatTrans unit(identity_functor(base), compose_functors(gt, ft), m.eta.components());
    std::vector<MorIdx> counit(kl->num_objects());
    for (ObjIdx o = 0; o < kl->num_objects(); ++o) {
        ObjIdx tb = m.t.on_object(o);
        counit[o] = kl->morphism_index(index[key(tb, o, b.identity(tb))]);
    }
    FinNatTrans eps(compose_functors(ft, gt), identity_functor(kl), std::move(counit));

    AdjunctionData adj = check_adjunction(ft, gt, unit, eps);
    std::vector<ObjIdx> kl_dst(underlying.size());
    for (size_t i = 0; i < underlying.size(); ++i) kl_dst[i] = ends[i].second;
    return KleisliResult{kl, adj, std::move(underlying), std::move(kl_dst)};
}

}  // namespace idemcore::fincat
