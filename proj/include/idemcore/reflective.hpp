#pragma once

#include "idemcore/adjunction.hpp"
#include "idemcore/budgets.hpp"

namespace idemcore::fincat {

struct ReflectiveSubcategory {
    std::vector<ObjIdx> objects;   // sorted, replete
    std::vector<MorIdx> unit;      // reflection arrow per object
    MonadData monad;               // induced idempotent monad
};

// Does rho: B -> r exhibit r as a reflection of B into the full subcategory
// on `objs`? Every f: B -> C with C in objs must factor uniquely through rho.
inline bool is_reflection_arrow(const FinCategory& c, ObjIdx b, MorIdx rho,
                                const std::vector<char>& in_sub) {
    ObjIdx r = c.dst(rho);
    if (!in_sub[r]) return false;
    for (ObjIdx tgt = 0; tgt < c.num_objects(); ++tgt) {
        if (!in_sub[tgt]) continue;
        for (MorIdx f : c.hom(b, tgt)) {
            int count = 0;
            for (MorIdx g : c.hom(r, tgt))
                if (c.compose(g, rho) == f) ++count;
            if (count != 1) return false;
        }
    }
    return true;
}

// Every full replete subcategory admitting reflection arrows, each paired
// with its induced idempotent monad. Deterministic: subsets in mask order of
// iso-class indices, least (object, arrow) witness per reflection.
inline std::vector<ReflectiveSubcategory> enumerate_reflective_subcategories(
    const CatPtr& cat, const Budgets& budgets = Budgets{}) {
    const FinCategory& c = *cat;
    if (c.num_objects() > budgets.max_cat_objects || c.num_morphisms() > budgets.max_cat_morphisms)
        throw BudgetError("enumerate_reflective_subcategories",
                          "category exceeds configured size");

    // iso classes of objects (repleteness closes subsets under iso)
    std::vector<int> iso_class(c.num_objects(), -1);
    std::vector<std::vector<ObjIdx>> classes;
    for (ObjIdx o = 0; o < c.num_objects(); ++o) {
        if (iso_class[o] != -1) continue;
        int id = static_cast<int>(classes.size());
        classes.push_back({});
        for (ObjIdx p = o; p < c.num_objects(); ++p)
            if (iso_class[p] == -1 && objects_isomorphic(c, o, p)) {
                iso_class[p] = id;
                classes[id].push_back(p);
            }
    }

    std::vector<ReflectiveSubcategory> out;
    const uint32_t nmask = 1u << classes.size();
    for (uint32_t mask = 0; mask < nmask; ++mask) {
        std::vector<char> in_sub(c.num_objects(), 0);
        std::vector<ObjIdx> objs;
        for (size_t k = 0; k < classes.size(); ++k)
            if (mask & (1u << k))
                for (ObjIdx o : classes[k]) in_sub[o] = 1;
        for (ObjIdx o = 0; o < c.num_objects(); ++o)
            if (in_sub[o]) objs.push_back(o);
        if (objs.empty() && c.num_objects() > 0) continue;

        std::vector<MorIdx> unit(c.num_objects(), -1);
        bool ok = true;
        for (ObjIdx b = 0; b < c.num_objects() && ok; ++b) {
            MorIdx found = -1;
            for (ObjIdx r = 0; r < c.num_objects() && found == -1; ++r) {
                if (!in_sub[r]) continue;
                for (MorIdx rho : c.hom(b, r))
                    if (is_reflection_arrow(c, b, rho, in_sub)) {
                        found = rho;
                        break;
                    }
            }
            if (found == -1)
                ok = false;
            else
                unit[b] = found;
        }
        if (!ok) continue;

        // extend to a functor: K f is the unique fill-in against rho
        std::vector<ObjIdx> omap(c.num_objects());
        std::vector<MorIdx> mmap(c.num_morphisms(), -1);
        for (ObjIdx o = 0; o < c.num_objects(); ++o) omap[o] = c.dst(unit[o]);
        for (MorIdx f = 0; f < c.num_morphisms() && ok; ++f) {
            MorIdx want = c.compose(unit[c.dst(f)], f);
            for (MorIdx g : c.hom(omap[c.src(f)], omap[c.dst(f)]))
                if (c.compose(g, unit[c.src(f)]) == want) {
                    mmap[f] = g;
                    break;
                }
            if (mmap[f] == -1) ok = false;
        }
        if (!ok) continue;

        FinFunctor s(cat, cat, omap, mmap);
        FinNatTrans rho(identity_functor(cat), s, unit);
        // multiplication: unique fill-in of the identity along rho at SB
        std::vector<MorIdx> mult(c.num_objects(), -1);
        for (ObjIdx b = 0; b < c.num_objects() && ok; ++b) {
            ObjIdx sb = omap[b];
            for (MorIdx g : c.hom(omap[sb], sb))
                if (c.compose(g, unit[sb]) == c.identity(sb)) {
                    mult[b] = g;
                    break;
                }
            if (mult[b] == -1) ok = false;
        }
        if (!ok) continue;
        FinNatTrans lambda(compose_functors(s, s), s, mult);
        MonadData monad = check_monad(s, rho, lambda);
        if (!is_idempotent_monad(monad))
            throw ValidationError("ReflectionNotIdempotent",
                                  "reflection induced a non-idempotent monad");
        out.push_back(ReflectiveSubcategory{std::move(objs), std::move(unit), std::move(monad)});
    }
    return out;
}

// The replete full subcategory determined by an idempotent monad: objects
// whose unit component is iso.
inline std::vector<ObjIdx> fixed_objects_of_idempotent(const MonadData& m) {
    const FinCategory& c = *m.category();
    std::vector<ObjIdx> out;
    for (ObjIdx o = 0; o < c.num_objects(); ++o)
        if (is_iso(c, m.eta.component(o))) out.push_back(o);
    return out;
}

}  // namespace idemcore::fincat
