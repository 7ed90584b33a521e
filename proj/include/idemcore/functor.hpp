#pragma once

#include <functional>

#include "idemcore/fincat.hpp"

namespace idemcore::fincat {

// Functor between finite categories; preservation of identities, endpoints
// and composition is checked exhaustively at construction.
class FinFunctor {
public:
    FinFunctor(CatPtr source, CatPtr target, std::vector<ObjIdx> obj_map,
               std::vector<MorIdx> mor_map)
        : source_(std::move(source)),
          target_(std::move(target)),
          obj_map_(std::move(obj_map)),
          mor_map_(std::move(mor_map)) {
        const FinCategory& s = *source_;
        const FinCategory& t = *target_;
        if (static_cast<int>(obj_map_.size()) != s.num_objects() ||
            static_cast<int>(mor_map_.size()) != s.num_morphisms())
            throw ValidationError("FunctorShape", "object/morphism map sizes do not match source");
        for (MorIdx m = 0; m < s.num_morphisms(); ++m) {
            MorIdx fm = mor_map_[m];
            if (t.src(fm) != obj_map_[s.src(m)] || t.dst(fm) != obj_map_[s.dst(m)])
                throw ValidationError("FunctorEndpoints", "functor breaks endpoints",
                                      Json{{"morphism", s.morphism_id(m)}});
        }
        for (ObjIdx o = 0; o < s.num_objects(); ++o)
            if (mor_map_[s.identity(o)] != t.identity(obj_map_[o]))
                throw ValidationError("FunctorIdentity", "functor breaks an identity",
                                      Json{{"object", s.object_id(o)}});
        for (MorIdx g = 0; g < s.num_morphisms(); ++g)
            for (MorIdx f = 0; f < s.num_morphisms(); ++f) {
                if (!s.composable(g, f)) continue;
                if (mor_map_[s.compose(g, f)] != t.compose(mor_map_[g], mor_map_[f]))
                    throw ValidationError("FunctorComposition", "functor breaks a composite",
                                          Json{{"g", s.morphism_id(g)}, {"f", s.morphism_id(f)}});
            }
    }

    const CatPtr& source() const { return source_; }
    const CatPtr& target() const { return target_; }
    ObjIdx on_object(ObjIdx o) const { return obj_map_[o]; }
    MorIdx on_morphism(MorIdx m) const { return mor_map_[m]; }
    const std::vector<ObjIdx>& object_map() const { return obj_map_; }
    const std::vector<MorIdx>& morphism_map() const { return mor_map_; }

    bool operator==(const FinFunctor& other) const {
        return source_->equal_tables(*other.source_) && target_->equal_tables(*other.target_) &&
               obj_map_ == other.obj_map_ && mor_map_ == other.mor_map_;
    }

private:
    CatPtr source_, target_;
    std::vector<ObjIdx> obj_map_;
    std::vector<MorIdx> mor_map_;
};

inline FinFunctor identity_functor(const CatPtr& c) {
    std::vector<ObjIdx> om(c->num_objects());
    std::vector<MorIdx> mm(c->num_morphisms());
    for (ObjIdx o = 0; o < c->num_objects(); ++o) om[o] = o;
    for (MorIdx m = 0; m < c->num_morphisms(); ++m) mm[m] = m;
    return FinFunctor(c, c, std::move(om), std::move(mm));
}

// g after f
inline FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f) {
    if (!f.target()->equal_tables(*g.source()))
        throw ValidationError("FunctorCompose", "functors are not composable");
    std::vector<ObjIdx> om(f.source()->num_objects());
    std::vector<MorIdx> mm(f.source()->num_morphisms());
    for (size_t o = 0; o < om.size(); ++o) om[o] = g.on_object(f.on_object(static_cast<ObjIdx>(o)));
    for (size_t m = 0; m < mm.size(); ++m) mm[m] = g.on_morphism(f.on_morphism(static_cast<MorIdx>(m)));
    return FinFunctor(f.source(), g.target(), std::move(om), std::move(mm));
}

// Natural transformation between parallel functors; naturality checked
// against every morphism of the source category.
class FinNatTrans {
public:
    FinNatTrans(FinFunctor source, FinFunctor target, std::vector<MorIdx> components)
        : source_(std::move(source)), target_(std::move(target)), comps_(std::move(components)) {
        if (!(source_.source()->equal_tables(*target_.source()) &&
              source_.target()->equal_tables(*target_.target())))
            throw ValidationError("NatTransShape", "functors are not parallel");
        const FinCategory& dom = *source_.source();
        const FinCategory& cod = *source_.target();
        if (static_cast<int>(comps_.size()) != dom.num_objects())
            throw ValidationError("NatTransShape", "one component per source object required");
        for (ObjIdx o = 0; o < dom.num_objects(); ++o) {
            MorIdx c = comps_[o];
            if (cod.src(c) != source_.on_object(o) || cod.dst(c) != target_.on_object(o))
                throw ValidationError("NatTransComponent", "component endpoints wrong",
                                      Json{{"object", dom.object_id(o)}});
        }
        for (MorIdx m = 0; m < dom.num_morphisms(); ++m) {
            MorIdx lhs = cod.compose(comps_[dom.dst(m)], source_.on_morphism(m));
            MorIdx rhs = cod.compose(target_.on_morphism(m), comps_[dom.src(m)]);
            if (lhs != rhs)
                throw ValidationError("NotNatural", "naturality square fails",
                                      Json{{"morphism", dom.morphism_id(m)}});
        }
    }

    const FinFunctor& source() const { return source_; }
    const FinFunctor& target() const { return target_; }
    MorIdx component(ObjIdx o) const { return comps_[o]; }
    const std::vector<MorIdx>& components() const { return comps_; }

    bool operator==(const FinNatTrans& other) const {
        return source_ == other.source_ && target_ == other.target_ && comps_ == other.comps_;
    }

private:
    FinFunctor source_, target_;
    std::vector<MorIdx> comps_;
};

// beta . alpha, vertically
inline FinNatTrans vcompose(const FinNatTrans& beta, const FinNatTrans& alpha) {
    const FinCategory& cod = *alpha.source().target();
    std::vector<MorIdx> comps(alpha.components().size());
    for (size_t o = 0; o < comps.size(); ++o)
        comps[o] = cod.compose(beta.component(static_cast<ObjIdx>(o)),
                               alpha.component(static_cast<ObjIdx>(o)));
    return FinNatTrans(alpha.source(), beta.target(), std::move(comps));
}

// H(alpha): components H(alpha_B); H after the (co)domains of alpha
inline FinNatTrans whisker_post(const FinFunctor& h, const FinNatTrans& alpha) {
    std::vector<MorIdx> comps(alpha.components().size());
    for (size_t o = 0; o < comps.size(); ++o)
        comps[o] = h.on_morphism(alpha.component(static_cast<ObjIdx>(o)));
    return FinNatTrans(compose_functors(h, alpha.source()), compose_functors(h, alpha.target()),
                       std::move(comps));
}

// alpha(H): components alpha_{H B}
inline FinNatTrans whisker_pre(const FinNatTrans& alpha, const FinFunctor& h) {
    std::vector<MorIdx> comps(h.source()->num_objects());
    for (ObjIdx o = 0; o < h.source()->num_objects(); ++o) comps[o] = alpha.component(h.on_object(o));
    return FinNatTrans(compose_functors(alpha.source(), h), compose_functors(alpha.target(), h),
                       std::move(comps));
}

inline FinNatTrans identity_nat(const FinFunctor& f) {
    std::vector<MorIdx> comps(f.source()->num_objects());
    for (ObjIdx o = 0; o < f.source()->num_objects(); ++o)
        comps[o] = f.target()->identity(f.on_object(o));
    return FinNatTrans(f, f, std::move(comps));
}

// All natural transformations F -> G, ordered lexicographically by component
// tuple. The search assigns components object by object and prunes with the
// naturality squares that are already fully determined.
inline std::vector<FinNatTrans> enumerate_nat_trans(const FinFunctor& f, const FinFunctor& g) {
    const FinCategory& dom = *f.source();
    const FinCategory& cod = *f.target();
    int n = dom.num_objects();
    std::vector<MorIdx> comps(n, -1);
    std::vector<FinNatTrans> out;

    auto consistent = [&](ObjIdx o) {
        for (MorIdx m = 0; m < dom.num_morphisms(); ++m) {
            ObjIdx s = dom.src(m), d = dom.dst(m);
            if (comps[s] == -1 || comps[d] == -1) continue;
            if (s != o && d != o) continue;
            if (cod.compose(comps[d], f.on_morphism(m)) !=
                cod.compose(g.on_morphism(m), comps[s]))
                return false;
        }
        return true;
    };

    std::function<void(ObjIdx)> rec = [&](ObjIdx o) {
        if (o == n) {
            out.emplace_back(f, g, comps);
            return;
        }
        for (MorIdx c : cod.hom(f.on_object(o), g.on_object(o))) {
            comps[o] = c;
            if (consistent(o)) rec(o + 1);
            comps[o] = -1;
        }
    };
    rec(0);
    return out;
}

}  // namespace idemcore::fincat
