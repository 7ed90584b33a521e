#pragma once

#include <map>

#include "idemcore/exponential.hpp"

namespace idemcore::presheaf {

// Canonical form of a presheaf encoding under independent relabelling of each
// carrier: the lexicographically least [cards..., tables...] vector.
inline std::vector<int32_t> canonical_encoding(const Presheaf& x) {
    const FinCategory& b = *x.base();
    int n = b.num_objects();
    std::vector<std::vector<std::vector<int32_t>>> perms(n);
    for (ObjIdx o = 0; o < n; ++o) {
        std::vector<int32_t> p(x.card(o));
        std::iota(p.begin(), p.end(), 0);
        do {
            perms[o].push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
    }
    std::vector<int32_t> best;
    std::vector<size_t> choice(n, 0);
    for (;;) {
        std::vector<int32_t> enc(x.cards());
        for (MorIdx f = 0; f < b.num_morphisms(); ++f) {
            const auto& pd = perms[b.dst(f)][choice[b.dst(f)]];
            const auto& ps = perms[b.src(f)][choice[b.src(f)]];
            std::vector<int32_t> table(x.card(b.dst(f)));
            for (int32_t v = 0; v < x.card(b.dst(f)); ++v)
                table[pd[v]] = ps[x.restrict_along(f, v)];
            enc.insert(enc.end(), table.begin(), table.end());
        }
        if (best.empty() || enc < best) best = std::move(enc);
        int k = n - 1;
        while (k >= 0 && ++choice[k] == perms[k].size()) choice[k--] = 0;
        if (k < 0) break;
    }
    return best;
}

inline Presheaf presheaf_from_encoding(const CatPtr& base, const std::vector<int32_t>& enc) {
    const FinCategory& b = *base;
    std::vector<int32_t> cards(enc.begin(), enc.begin() + b.num_objects());
    std::vector<std::vector<int32_t>> restr(b.num_morphisms());
    size_t pos = b.num_objects();
    for (MorIdx f = 0; f < b.num_morphisms(); ++f) {
        restr[f].assign(enc.begin() + pos, enc.begin() + pos + cards[b.dst(f)]);
        pos += cards[b.dst(f)];
    }
    return Presheaf(base, std::move(cards), std::move(restr));
}

// One representative per iso class of presheaves with all carriers <= bound,
// in ascending canonical-encoding order.
inline std::vector<Presheaf> enumerate_presheaves(const CatPtr& base, int bound,
                                                  const Budgets& budgets = Budgets{}) {
    const FinCategory& b = *base;
    if (bound > budgets.max_carrier)
        throw BudgetError("enumerate_presheaves", "carrier bound exceeds budget");
    if (b.num_objects() > budgets.max_base_objects ||
        b.num_morphisms() > budgets.max_base_morphisms)
        throw BudgetError("enumerate_presheaves", "base category exceeds budget");

    std::vector<MorIdx> gens;  // non-identity morphisms
    for (MorIdx f = 0; f < b.num_morphisms(); ++f)
        if (!b.is_identity(f)) gens.push_back(f);

    std::set<std::vector<int32_t>> canon;
    std::vector<int32_t> cards(b.num_objects(), 0);
    std::function<void(ObjIdx)> rec_cards = [&](ObjIdx o) {
        if (o == b.num_objects()) {
            // enumerate restriction tables for every non-identity morphism;
            // identity tables are fixed
            std::vector<std::vector<int32_t>> tables(b.num_morphisms());
            for (MorIdx f = 0; f < b.num_morphisms(); ++f)
                if (b.is_identity(f)) {
                    tables[f].resize(cards[b.dst(f)]);
                    std::iota(tables[f].begin(), tables[f].end(), 0);
                }
            std::function<void(size_t)> rec_tab = [&](size_t gi) {
                if (gi == gens.size()) {
                    // functoriality on composites
                    for (MorIdx g = 0; g < b.num_morphisms(); ++g)
                        for (MorIdx f = 0; f < b.num_morphisms(); ++f) {
                            if (!b.composable(g, f)) continue;
                            MorIdx gf = b.compose(g, f);
                            for (int32_t v = 0; v < cards[b.dst(g)]; ++v)
                                if (tables[gf][v] != tables[f][tables[g][v]]) return;
                        }
                    Presheaf x(base, cards, tables);
                    canon.insert(canonical_encoding(x));
                    return;
                }
                MorIdx f = gens[gi];
                int32_t dom = cards[b.dst(f)], cod = cards[b.src(f)];
                if (dom > 0 && cod == 0) return;  // no function exists
                std::vector<int32_t> t(dom, 0);
                for (;;) {
                    tables[f] = t;
                    rec_tab(gi + 1);
                    int k = dom - 1;
                    while (k >= 0 && t[k] == cod - 1) t[k--] = 0;
                    if (k < 0) break;
                    ++t[k];
                }
                return;
            };
            rec_tab(0);
            return;
        }
        for (int c = 0; c <= bound; ++c) {
            cards[o] = c;
            rec_cards(o + 1);
        }
        cards[o] = 0;
    };
    rec_cards(0);

    std::vector<Presheaf> out;
    out.reserve(canon.size());
    for (const auto& enc : canon) out.push_back(presheaf_from_encoding(base, enc));
    return out;
}

// A bounded universe: iso-class representatives plus a lazy hom cache.
struct Universe {
    CatPtr base;
    int bound = 0;
    Budgets budgets;
    std::vector<Presheaf> objects;
    mutable std::map<std::pair<int, int>, std::vector<PresheafMap>> hom_cache;

    const std::vector<PresheafMap>& maps(int i, int j) const {
        auto key = std::make_pair(i, j);
        auto it = hom_cache.find(key);
        if (it != hom_cache.end()) return it->second;
        auto maps = hom_set(objects[i], objects[j], budgets.max_homset);
        return hom_cache.emplace(key, std::move(maps)).first->second;
    }
};

inline Universe build_universe(const CatPtr& base, int bound, const Budgets& budgets = Budgets{}) {
    Universe u;
    u.base = base;
    u.bound = bound;
    u.budgets = budgets;
    u.objects = enumerate_presheaves(base, bound, budgets);
    return u;
}

}  // namespace idemcore::presheaf
