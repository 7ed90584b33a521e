#pragma once

#include "idemcore/omega.hpp"

namespace idemcore::presheaf {

// Representable presheaf y(c): carrier at d is hom(d, c), restriction by
// precomposition. Element order follows the morphism index order.
struct Representable {
    ObjIdx at = -1;
    Presheaf p;
    std::vector<std::vector<MorIdx>> elem_mor;  // per object: element -> morphism
    std::vector<int32_t> mor_elem;              // morphism -> element index, -1 elsewhere
    int32_t identity_elem = -1;                 // index of id_c in carrier(c)
};

inline Representable representable(const CatPtr& base, ObjIdx c) {
    const FinCategory& b = *base;
    Representable r;
    r.at = c;
    r.elem_mor.resize(b.num_objects());
    r.mor_elem.assign(b.num_morphisms(), -1);
    std::vector<int32_t> cards(b.num_objects());
    for (ObjIdx d = 0; d < b.num_objects(); ++d) {
        for (MorIdx h : b.hom(d, c)) {
            r.mor_elem[h] = static_cast<int32_t>(r.elem_mor[d].size());
            r.elem_mor[d].push_back(h);
        }
        cards[d] = static_cast<int32_t>(r.elem_mor[d].size());
    }
    std::vector<std::vector<int32_t>> restr(b.num_morphisms());
    for (MorIdx f = 0; f < b.num_morphisms(); ++f) {
        ObjIdx d = b.dst(f);
        restr[f].resize(cards[d]);
        for (int32_t i = 0; i < cards[d]; ++i)
            restr[f][i] = r.mor_elem[b.compose(r.elem_mor[d][i], f)];
    }
    r.p = Presheaf(base, cards, std::move(restr));
    r.identity_elem = r.mor_elem[b.identity(c)];
    return r;
}

// Exponential Y^X with carrier at c the set of natural maps y(c) x X -> Y,
// restriction by precomposition with y(g) x id. The element semantics (the
// actual natural families) is retained for evaluation and currying.
struct Exponential {
    Presheaf x, y;
    Presheaf expo;
    std::vector<Representable> reps;          // per object
    std::vector<BinaryProduct> rep_prod;      // per object: y(c) x X
    std::vector<std::vector<PresheafMap>> elems;
    std::vector<std::unordered_map<std::vector<int32_t>, int32_t, VecHash>> elem_index;

    int32_t index_of(ObjIdx c, const PresheafMap& candidate) const {
        std::vector<int32_t> key;
        for (const auto& comp : candidate.components())
            key.insert(key.end(), comp.begin(), comp.end());
        auto it = elem_index[c].find(key);
        if (it == elem_index[c].end())
            throw ValidationError("ExponentialLookup", "natural family not found in exponential");
        return it->second;
    }

    // evaluation of element phi at (h: d -> c, x in X(d))
    int32_t eval_at(ObjIdx c, int32_t phi, ObjIdx d, int32_t rep_elem, int32_t x_elem) const {
        const BinaryProduct& pr = rep_prod[c];
        return elems[c][phi].apply(d, pr.encode(d, rep_elem, x_elem));
    }
};

inline Exponential exponential(const Presheaf& x, const Presheaf& y, const Budgets& budgets) {
    const CatPtr& base = x.base();
    const FinCategory& b = *base;
    Exponential e;
    e.x = x;
    e.y = y;
    e.reps.resize(b.num_objects());
    e.rep_prod.resize(b.num_objects());
    e.elems.resize(b.num_objects());
    e.elem_index.resize(b.num_objects());
    std::vector<int32_t> cards(b.num_objects());
    for (ObjIdx c = 0; c < b.num_objects(); ++c) {
        e.reps[c] = representable(base, c);
        e.rep_prod[c] = product(e.reps[c].p, x);
        e.elems[c] = hom_set(e.rep_prod[c].p, y, budgets.max_expo_cells);
        cards[c] = static_cast<int32_t>(e.elems[c].size());
        if (cards[c] > budgets.max_expo_cells)
            throw BudgetError("exponential", "carrier exceeds per-object budget");
        for (int32_t i = 0; i < cards[c]; ++i) {
            std::vector<int32_t> key;
            for (const auto& comp : e.elems[c][i].components())
                key.insert(key.end(), comp.begin(), comp.end());
            e.elem_index[c][key] = i;
        }
    }
    std::vector<std::vector<int32_t>> restr(b.num_morphisms());
    for (MorIdx g = 0; g < b.num_morphisms(); ++g) {
        ObjIdx c = b.dst(g), cp = b.src(g);
        restr[g].resize(cards[c]);
        for (int32_t i = 0; i < cards[c]; ++i) {
            // phi' at (h': d -> c', x) = phi at (g . h', x)
            std::vector<std::vector<int32_t>> comps(b.num_objects());
            for (ObjIdx d = 0; d < b.num_objects(); ++d) {
                comps[d].resize(e.rep_prod[cp].p.card(d));
                for (int32_t hprime = 0; hprime < e.reps[cp].p.card(d); ++hprime)
                    for (int32_t xe = 0; xe < x.card(d); ++xe) {
                        MorIdx comp_mor = b.compose(g, e.reps[cp].elem_mor[d][hprime]);
                        int32_t src_elem = e.rep_prod[c].encode(d, e.reps[c].mor_elem[comp_mor], xe);
                        comps[d][e.rep_prod[cp].encode(d, hprime, xe)] =
                            e.elems[c][i].apply(d, src_elem);
                    }
            }
            PresheafMap phi_prime(e.rep_prod[cp].p, y, std::move(comps));
            restr[g][i] = e.index_of(cp, phi_prime);
        }
    }
    e.expo = Presheaf(base, std::move(cards), std::move(restr));
    return e;
}

// evaluation map Y^X x X -> Y; ev(phi, x at c) = phi_c(id_c, x)
inline PresheafMap evaluation_map(const Exponential& e, const BinaryProduct& expo_times_x) {
    const FinCategory& b = *e.x.base();
    std::vector<std::vector<int32_t>> comps(b.num_objects());
    for (ObjIdx c = 0; c < b.num_objects(); ++c) {
        comps[c].resize(expo_times_x.p.card(c));
        for (int32_t v = 0; v < expo_times_x.p.card(c); ++v) {
            auto [phi, xe] = expo_times_x.decode(c, v);
            comps[c][v] = e.eval_at(c, phi, c, e.reps[c].identity_elem, xe);
        }
    }
    return PresheafMap(expo_times_x.p, e.y, std::move(comps));
}

// transpose of f: Z x X -> Y along the product structure zp = Z x X
inline PresheafMap curry(const Exponential& e, const BinaryProduct& zp, const Presheaf& z,
                         const PresheafMap& f) {
    const FinCategory& b = *e.x.base();
    std::vector<std::vector<int32_t>> comps(b.num_objects());
    for (ObjIdx c = 0; c < b.num_objects(); ++c) {
        comps[c].resize(z.card(c));
        for (int32_t ze = 0; ze < z.card(c); ++ze) {
            std::vector<std::vector<int32_t>> phi(b.num_objects());
            for (ObjIdx d = 0; d < b.num_objects(); ++d) {
                phi[d].resize(e.rep_prod[c].p.card(d));
                for (int32_t h = 0; h < e.reps[c].p.card(d); ++h)
                    for (int32_t xe = 0; xe < e.x.card(d); ++xe) {
                        int32_t z_restr = z.restrict_along(e.reps[c].elem_mor[d][h], ze);
                        phi[d][e.rep_prod[c].encode(d, h, xe)] =
                            f.apply(d, zp.encode(d, z_restr, xe));
                    }
            }
            PresheafMap cand(e.rep_prod[c].p, e.y, std::move(phi));
            comps[c][ze] = e.index_of(c, cand);
        }
    }
    return PresheafMap(z, e.expo, std::move(comps));
}

// inverse transpose of g: Z -> Y^X
inline PresheafMap uncurry(const Exponential& e, const BinaryProduct& zp, const Presheaf& z,
                           const PresheafMap& g) {
    const FinCategory& b = *e.x.base();
    std::vector<std::vector<int32_t>> comps(b.num_objects());
    for (ObjIdx c = 0; c < b.num_objects(); ++c) {
        comps[c].resize(zp.p.card(c));
        for (int32_t v = 0; v < zp.p.card(c); ++v) {
            auto [ze, xe] = zp.decode(c, v);
            comps[c][v] = e.eval_at(c, g.apply(c, ze), c, e.reps[c].identity_elem, xe);
        }
    }
    return PresheafMap(zp.p, e.y, std::move(comps));
}

// functorial action on exponentials: for h: Y1 -> Y2, the postcomposition
// map Y1^X -> Y2^X; for k: X2 -> X1, the precomposition map Y^X1 -> Y^X2.
inline PresheafMap postcompose_exponential(const Exponential& e1, const Exponential& e2,
                                           const PresheafMap& h) {
    const FinCategory& b = *e1.x.base();
    std::vector<std::vector<int32_t>> comps(b.num_objects());
    for (ObjIdx c = 0; c < b.num_objects(); ++c) {
        comps[c].resize(e1.expo.card(c));
        for (int32_t i = 0; i < e1.expo.card(c); ++i)
            comps[c][i] = e2.index_of(c, compose(h, e1.elems[c][i]));
    }
    return PresheafMap(e1.expo, e2.expo, std::move(comps));
}

inline PresheafMap precompose_exponential(const Exponential& e1, const Exponential& e2,
                                          const PresheafMap& k) {
    // e1 = Y^{X1}, e2 = Y^{X2}, k: X2 -> X1
    const FinCategory& b = *e1.x.base();
    std::vector<std::vector<int32_t>> comps(b.num_objects());
    for (ObjIdx c = 0; c < b.num_objects(); ++c) {
        comps[c].resize(e1.expo.card(c));
        for (int32_t i = 0; i < e1.expo.card(c); ++i) {
            std::vector<std::vector<int32_t>> phi(b.num_objects());
            for (ObjIdx d = 0; d < b.num_objects(); ++d) {
                phi[d].resize(e2.rep_prod[c].p.card(d));
                for (int32_t h = 0; h < e2.reps[c].p.card(d); ++h)
                    for (int32_t xe = 0; xe < e2.x.card(d); ++xe)
                        phi[d][e2.rep_prod[c].encode(d, h, xe)] =
                            e1.elems[c][i].apply(d, e1.rep_prod[c].encode(d, h, k.apply(d, xe)));
            }
            comps[c][i] = e2.index_of(c, PresheafMap(e2.rep_prod[c].p, e1.y, std::move(phi)));
        }
    }
    return PresheafMap(e1.expo, e2.expo, std::move(comps));
}

}  // namespace idemcore::presheaf
