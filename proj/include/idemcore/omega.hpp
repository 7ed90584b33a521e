#pragma once

#include "idemcore/presheaf.hpp"

namespace idemcore::presheaf {

// A sieve on c is stored as a bitmask over global morphism indices whose
// codomain is c, closed under precomposition with arbitrary morphisms.
using SieveMask = uint64_t;

inline bool sieve_closed(const FinCategory& b, ObjIdx c, SieveMask s) {
    for (MorIdx m : b.morphisms_into(c)) {
        if (!(s >> m & 1)) continue;
        for (MorIdx g : b.morphisms_into(b.src(m)))
            if (!(s >> b.compose(m, g) & 1)) return false;
    }
    return true;
}

// The subobject classifier: Omega(c) = sieves on c, restriction by pullback
// of sieves, with the element semantics retained for later interpretation.
struct OmegaContext {
    CatPtr base;
    Presheaf omega;
    std::vector<std::vector<SieveMask>> sieves;  // per object, ascending by mask
    std::vector<std::unordered_map<SieveMask, int32_t>> index;
    PresheafMap true_map;  // terminal -> omega
    std::vector<int32_t> max_elem;
    std::vector<int32_t> empty_elem;

    int32_t sieve_element(ObjIdx o, SieveMask m) const {
        auto it = index[o].find(m);
        if (it == index[o].end())
            throw ValidationError("NotASieve", "mask is not a sieve on the object");
        return it->second;
    }
    SieveMask mask_of(ObjIdx o, int32_t elem) const { return sieves[o][elem]; }
    int32_t meet(ObjIdx o, int32_t a, int32_t b) const {
        return sieve_element(o, sieves[o][a] & sieves[o][b]);
    }
    // f: c' -> c pulls a sieve on c back to one on c'
    SieveMask pull_mask(MorIdx f, SieveMask s) const {
        const FinCategory& b = *base;
        SieveMask out = 0;
        for (MorIdx g : b.morphisms_into(b.src(f)))
            if (s >> b.compose(f, g) & 1) out |= SieveMask{1} << g;
        return out;
    }
};

inline OmegaContext make_omega(const CatPtr& base) {
    const FinCategory& b = *base;
    if (b.num_morphisms() > 62)
        throw BudgetError("make_omega", "sieve masks support at most 62 morphisms");
    OmegaContext ctx;
    ctx.base = base;
    ctx.sieves.resize(b.num_objects());
    ctx.index.resize(b.num_objects());
    ctx.max_elem.resize(b.num_objects());
    ctx.empty_elem.resize(b.num_objects());
    std::vector<int32_t> cards(b.num_objects());
    for (ObjIdx c = 0; c < b.num_objects(); ++c) {
        const auto& in = b.morphisms_into(c);
        // enumerate subsets of the incoming morphisms in ascending mask order
        for (uint64_t pick = 0;; ++pick) {
            SieveMask mask = 0;
            for (size_t k = 0; k < in.size(); ++k)
                if (pick >> k & 1) mask |= SieveMask{1} << in[k];
            if (sieve_closed(b, c, mask)) {
                ctx.index[c][mask] = static_cast<int32_t>(ctx.sieves[c].size());
                ctx.sieves[c].push_back(mask);
            }
            if (pick + 1 == (uint64_t{1} << in.size())) break;
        }
        cards[c] = static_cast<int32_t>(ctx.sieves[c].size());
        SieveMask maximal = 0;
        for (MorIdx m : in) maximal |= SieveMask{1} << m;
        ctx.max_elem[c] = ctx.index[c].at(maximal);
        ctx.empty_elem[c] = ctx.index[c].at(0);
    }
    std::vector<std::vector<int32_t>> restr(b.num_morphisms());
    for (MorIdx f = 0; f < b.num_morphisms(); ++f) {
        ObjIdx c = b.dst(f), cp = b.src(f);
        restr[f].resize(cards[c]);
        for (int32_t e = 0; e < cards[c]; ++e) {
            SieveMask pulled = 0;
            for (MorIdx g : b.morphisms_into(cp))
                if (ctx.sieves[c][e] >> b.compose(f, g) & 1) pulled |= SieveMask{1} << g;
            restr[f][e] = ctx.index[cp].at(pulled);
        }
    }
    ctx.omega = Presheaf(base, cards, std::move(restr));
    std::vector<std::vector<int32_t>> tr(b.num_objects());
    for (ObjIdx c = 0; c < b.num_objects(); ++c) tr[c] = {ctx.max_elem[c]};
    ctx.true_map = PresheafMap(terminal_presheaf(base), ctx.omega, std::move(tr));
    return ctx;
}

// chi_m(x at c) = the sieve of morphisms pulling x into m
inline PresheafMap characteristic_map(const OmegaContext& ctx, const Subpresheaf& m) {
    const FinCategory& b = *ctx.base;
    const Presheaf& x = m.ambient();
    std::vector<std::vector<int32_t>> comps(b.num_objects());
    for (ObjIdx c = 0; c < b.num_objects(); ++c) {
        comps[c].resize(x.card(c));
        for (int32_t v = 0; v < x.card(c); ++v) {
            SieveMask s = 0;
            for (MorIdx f : b.morphisms_into(c))
                if (m.contains(b.src(f), x.restrict_along(f, v))) s |= SieveMask{1} << f;
            comps[c][v] = ctx.sieve_element(c, s);
        }
    }
    return PresheafMap(x, ctx.omega, std::move(comps));
}

// preimage of `true`
inline Subpresheaf subobject_of(const OmegaContext& ctx, const PresheafMap& chi) {
    if (!(chi.dst() == ctx.omega))
        throw ValidationError("PresheafMapShape", "classifying map must land in Omega");
    const FinCategory& b = *ctx.base;
    std::vector<std::vector<char>> member(b.num_objects());
    for (ObjIdx c = 0; c < b.num_objects(); ++c) {
        member[c].assign(chi.src().card(c), 0);
        for (int32_t v = 0; v < chi.src().card(c); ++v)
            member[c][v] = chi.apply(c, v) == ctx.max_elem[c];
    }
    return Subpresheaf(chi.src(), std::move(member));
}

// binary meet of sieves as a presheaf map Omega x Omega -> Omega
inline PresheafMap omega_meet_map(const OmegaContext& ctx, const BinaryProduct& omega_sq) {
    const FinCategory& b = *ctx.base;
    std::vector<std::vector<int32_t>> comps(b.num_objects());
    for (ObjIdx c = 0; c < b.num_objects(); ++c) {
        comps[c].resize(omega_sq.p.card(c));
        for (int32_t v = 0; v < omega_sq.p.card(c); ++v) {
            auto [a, d] = omega_sq.decode(c, v);
            comps[c][v] = ctx.meet(c, a, d);
        }
    }
    return PresheafMap(omega_sq.p, ctx.omega, std::move(comps));
}

// all subpresheaves of x, ascending in the flattened membership bitvector
inline std::vector<Subpresheaf> all_subpresheaves(const Presheaf& x, long long budget = 200000) {
    const FinCategory& b = *x.base();
    int64_t total = x.total_elements();
    if (total > 40) throw BudgetError("all_subpresheaves", "too many elements");
    std::vector<std::pair<ObjIdx, int32_t>> slots;
    for (ObjIdx o = 0; o < b.num_objects(); ++o)
        for (int32_t v = 0; v < x.card(o); ++v) slots.emplace_back(o, v);
    std::vector<Subpresheaf> out;
    for (uint64_t pick = 0;; ++pick) {
        std::vector<std::vector<char>> member(b.num_objects());
        for (ObjIdx o = 0; o < b.num_objects(); ++o) member[o].assign(x.card(o), 0);
        for (size_t k = 0; k < slots.size(); ++k)
            if (pick >> k & 1) member[slots[k].first][slots[k].second] = 1;
        bool closed = true;
        for (MorIdx f = 0; f < b.num_morphisms() && closed; ++f)
            for (int32_t v = 0; v < x.card(b.dst(f)) && closed; ++v)
                if (member[b.dst(f)][v] && !member[b.src(f)][x.restrict_along(f, v)]) closed = false;
        if (closed) {
            out.emplace_back(x, std::move(member));
            if (static_cast<long long>(out.size()) > budget)
                throw BudgetError("all_subpresheaves", "result exceeds budget");
        }
        if (pick + 1 == (uint64_t{1} << slots.size())) break;
    }
    return out;
}

}  // namespace idemcore::presheaf
