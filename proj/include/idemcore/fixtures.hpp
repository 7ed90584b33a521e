#pragma once

#include <functional>
#include <map>
#include <tuple>

#include "idemcore/fincat.hpp"

namespace idemcore::fincat {

// Standard small categories used by tests, the CLI built-ins, and the
// acceptance campaign. Object/morphism ids equal their indices.

inline CatPtr terminal_category() {
    FinCategoryData d;
    d.objects = {0};
    d.morphisms = {{0, 0, 0}};
    d.composition = {{0, 0, 0}};
    d.identities = {{0, 0}};
    return FinCategory::validate(d);
}

// Poset as a category from a reflexive-transitive leq predicate on 0..n-1.
inline CatPtr poset_category(int n, const std::function<bool(int, int)>& leq) {
    FinCategoryData d;
    std::vector<std::vector<MorId>> arrow(n, std::vector<MorId>(n, -1));
    MorId next = 0;
    for (int i = 0; i < n; ++i) d.objects.push_back(i);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (leq(i, j)) {
                arrow[i][j] = next;
                d.morphisms.push_back({next, i, j});
                ++next;
            }
    for (int i = 0; i < n; ++i) d.identities.emplace_back(i, arrow[i][i]);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (arrow[i][j] != -1 && arrow[j][k] != -1)
                    d.composition.push_back({arrow[j][k], arrow[i][j], arrow[i][k]});
    return FinCategory::validate(d);
}

inline CatPtr chain_poset(int n) {
    return poset_category(n, [](int i, int j) { return i <= j; });
}

// 0 -> 1 with one non-identity arrow
inline CatPtr poset2() { return chain_poset(2); }

// two objects, two parallel non-identity arrows a => b
inline CatPtr parallel_pair_category() {
    FinCategoryData d;
    d.objects = {0, 1};
    d.morphisms = {{0, 0, 0}, {1, 1, 1}, {2, 0, 1}, {3, 0, 1}};
    d.identities = {{0, 0}, {1, 1}};
    d.composition = {{0, 0, 0}, {1, 1, 1}, {2, 0, 2}, {3, 0, 3}, {1, 2, 2}, {1, 3, 3}};
    return FinCategory::validate(d);
}

// 0 < 1, 0 < 2, 1 < 3, 2 < 3
inline CatPtr diamond_poset() {
    return poset_category(4, [](int i, int j) {
        if (i == j) return true;
        if (i == 0) return true;
        return j == 3;
    });
}

// 0 <= 2 >= 1, with 0 and 1 incomparable
inline CatPtr v_poset() {
    return poset_category(3, [](int i, int j) { return i == j || j == 2; });
}

// One-object category of a finite monoid given by its multiplication table;
// table[a][b] = a.b and unit element 0.
inline CatPtr monoid_category(const std::vector<std::vector<int>>& table) {
    FinCategoryData d;
    int n = static_cast<int>(table.size());
    d.objects = {0};
    for (int i = 0; i < n; ++i) d.morphisms.push_back({i, 0, 0});
    d.identities = {{0, 0}};
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) d.composition.push_back({a, b, table[a][b]});
    return FinCategory::validate(d);
}

// Full subcategory of finite sets on carriers of the given sizes, optionally
// filtered to maps satisfying `keep` (e.g. monotone maps for ordinals).
// Morphism ids run in lexicographic order of (src, dst, function table).
struct ConcreteCategory {
    CatPtr cat;
    std::vector<int> sizes;                        // per object
    std::vector<std::vector<int32_t>> functions;   // per morphism index, the map table
};

inline ConcreteCategory finset_like_category(
    const std::vector<int>& sizes,
    const std::function<bool(int, int, const std::vector<int32_t>&)>& keep = nullptr) {
    int n = static_cast<int>(sizes.size());
    FinCategoryData d;
    for (int i = 0; i < n; ++i) d.objects.push_back(i);
    std::vector<std::vector<int32_t>> funcs;
    std::map<std::tuple<int, int, std::vector<int32_t>>, MorId> lookup;
    MorId next = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<int32_t> f(sizes[a], 0);
            // enumerate all functions [sizes[a]] -> [sizes[b]]
            auto emit = [&]() {
                if (keep && !keep(a, b, f)) return;
                lookup[{a, b, f}] = next;
                funcs.push_back(f);
                d.morphisms.push_back({next, a, b});
                ++next;
            };
            if (sizes[a] == 0) {
                emit();
                continue;
            }
            if (sizes[b] == 0) continue;  // no maps into the empty set from nonempty
            for (;;) {
                emit();
                int k = sizes[a] - 1;
                while (k >= 0 && f[k] == sizes[b] - 1) f[k--] = 0;
                if (k < 0) break;
                ++f[k];
            }
        }
    for (int a = 0; a < n; ++a) {
        std::vector<int32_t> idf(sizes[a]);
        for (int i = 0; i < sizes[a]; ++i) idf[i] = i;
        auto it = lookup.find({a, a, idf});
        if (it == lookup.end())
            throw ValidationError("FixtureError", "identity map filtered out");
        d.identities.emplace_back(a, it->second);
    }
    for (const auto& [kg, g] : lookup)
        for (const auto& [kf, f] : lookup) {
            if (std::get<0>(kg) != std::get<1>(kf)) continue;
            const auto& gf = std::get<2>(kg);
            const auto& ff = std::get<2>(kf);
            std::vector<int32_t> comp(ff.size());
            for (size_t i = 0; i < ff.size(); ++i) comp[i] = ff[i] < 0 ? -1 : gf[ff[i]];
            auto it = lookup.find({std::get<0>(kf), std::get<1>(kg), comp});
            if (it == lookup.end())
                throw ValidationError("FixtureError", "composite map filtered out");
            d.composition.push_back({g, f, it->second});
        }
    return ConcreteCategory{FinCategory::validate(d), sizes, std::move(funcs)};
}

// Finite ordinals 0..n-1 with monotone maps.
inline ConcreteCategory ordinal_category(int n) {
    std::vector<int> sizes(n);
    for (int i = 0; i < n; ++i) sizes[i] = i;
    return finset_like_category(sizes, [](int, int, const std::vector<int32_t>& f) {
        for (size_t i = 1; i < f.size(); ++i)
            if (f[i - 1] > f[i]) return false;
        return true;
    });
}

}  // namespace idemcore::fincat
