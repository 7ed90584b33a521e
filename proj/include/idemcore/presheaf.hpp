#pragma once

#include <numeric>
#include <set>

#include "idemcore/budgets.hpp"
#include "idemcore/fincat.hpp"

namespace idemcore::presheaf {

using fincat::CatPtr;
using fincat::FinCategory;
using fincat::MorIdx;
using fincat::ObjIdx;

// Finite presheaf on a finite base category. carrier(c) is {0..card(c)-1};
// restrict(f) for f: c' -> c maps carrier(c) -> carrier(c'). Contravariant
// functoriality is checked exhaustively at construction.
class Presheaf {
public:
    Presheaf() = default;
    Presheaf(CatPtr base, std::vector<int32_t> cards, std::vector<std::vector<int32_t>> restr)
        : base_(std::move(base)), card_(std::move(cards)), restr_(std::move(restr)) {
        const FinCategory& b = *base_;
        if (static_cast<int>(card_.size()) != b.num_objects() ||
            static_cast<int>(restr_.size()) != b.num_morphisms())
            throw ValidationError("PresheafShape", "carrier/restriction table sizes wrong");
        for (MorIdx f = 0; f < b.num_morphisms(); ++f) {
            if (static_cast<int32_t>(restr_[f].size()) != card_[b.dst(f)])
                throw ValidationError("PresheafShape", "restriction table has wrong domain size",
                                      Json{{"morphism", b.morphism_id(f)}});
            for (int32_t v : restr_[f])
                if (v < 0 || v >= card_[b.src(f)])
                    throw ValidationError("PresheafShape", "restriction value out of range",
                                          Json{{"morphism", b.morphism_id(f)}});
        }
        for (ObjIdx o = 0; o < b.num_objects(); ++o) {
            MorIdx e = b.identity(o);
            for (int32_t x = 0; x < card_[o]; ++x)
                if (restr_[e][x] != x)
                    throw ValidationError("PresheafFunctoriality", "restriction along identity not id",
                                          Json{{"object", b.object_id(o)}});
        }
        for (MorIdx g = 0; g < b.num_morphisms(); ++g)
            for (MorIdx f = 0; f < b.num_morphisms(); ++f) {
                if (!b.composable(g, f)) continue;  // g.f with f: a -> b, g: b -> c... see below
                // here f: x -> y, g: y -> z, g.f: x -> z; restrict(g.f) = restrict(f) o restrict(g)
                MorIdx gf = b.compose(g, f);
                for (int32_t v = 0; v < card_[b.dst(g)]; ++v)
                    if (restr_[gf][v] != restr_[f][restr_[g][v]])
                        throw ValidationError(
                            "PresheafFunctoriality", "contravariant composition fails",
                            Json{{"g", b.morphism_id(g)}, {"f", b.morphism_id(f)}});
            }
    }

    const CatPtr& base() const { return base_; }
    int32_t card(ObjIdx o) const { return card_[o]; }
    const std::vector<int32_t>& cards() const { return card_; }
    int32_t restrict_along(MorIdx f, int32_t elem_at_dst) const { return restr_[f][elem_at_dst]; }
    const std::vector<int32_t>& restriction(MorIdx f) const { return restr_[f]; }

    int64_t total_elements() const {
        return std::accumulate(card_.begin(), card_.end(), static_cast<int64_t>(0));
    }

    bool operator==(const Presheaf& other) const {
        return base_->equal_tables(*other.base_) && card_ == other.card_ && restr_ == other.restr_;
    }

    std::vector<int32_t> encode() const {
        std::vector<int32_t> out = card_;
        for (const auto& t : restr_) out.insert(out.end(), t.begin(), t.end());
        return out;
    }

private:
    CatPtr base_;
    std::vector<int32_t> card_;
    std::vector<std::vector<int32_t>> restr_;
};

inline Presheaf terminal_presheaf(const CatPtr& base) {
    std::vector<int32_t> cards(base->num_objects(), 1);
    std::vector<std::vector<int32_t>> restr(base->num_morphisms(), std::vector<int32_t>{0});
    return Presheaf(base, std::move(cards), std::move(restr));
}

inline Presheaf empty_presheaf(const CatPtr& base) {
    std::vector<int32_t> cards(base->num_objects(), 0);
    std::vector<std::vector<int32_t>> restr(base->num_morphisms());
    return Presheaf(base, std::move(cards), std::move(restr));
}

// Natural transformation between presheaves on a shared base; every
// naturality square is checked.
class PresheafMap {
public:
    PresheafMap() = default;
    PresheafMap(Presheaf src, Presheaf dst, std::vector<std::vector<int32_t>> comps)
        : src_(std::move(src)), dst_(std::move(dst)), comp_(std::move(comps)) {
        const FinCategory& b = *src_.base();
        if (!b.equal_tables(*dst_.base()))
            throw ValidationError("PresheafMapShape", "source and target bases differ");
        if (static_cast<int>(comp_.size()) != b.num_objects())
            throw ValidationError("PresheafMapShape", "one component per object required");
        for (ObjIdx o = 0; o < b.num_objects(); ++o) {
            if (static_cast<int32_t>(comp_[o].size()) != src_.card(o))
                throw ValidationError("PresheafMapShape", "component size wrong",
                                      Json{{"object", b.object_id(o)}});
            for (int32_t v : comp_[o])
                if (v < 0 || v >= dst_.card(o))
                    throw ValidationError("PresheafMapShape", "component value out of range",
                                          Json{{"object", b.object_id(o)}});
        }
        for (MorIdx f = 0; f < b.num_morphisms(); ++f) {
            ObjIdx s = b.src(f), d = b.dst(f);
            for (int32_t x = 0; x < src_.card(d); ++x)
                if (comp_[s][src_.restrict_along(f, x)] != dst_.restrict_along(f, comp_[d][x]))
                    throw ValidationError("PresheafMapNaturality", "naturality square fails",
                                          Json{{"morphism", b.morphism_id(f)}});
        }
    }

    const Presheaf& src() const { return src_; }
    const Presheaf& dst() const { return dst_; }
    int32_t apply(ObjIdx o, int32_t x) const { return comp_[o][x]; }
    const std::vector<int32_t>& component(ObjIdx o) const { return comp_[o]; }
    const std::vector<std::vector<int32_t>>& components() const { return comp_; }

    bool pointwise_injective() const {
        const FinCategory& b = *src_.base();
        for (ObjIdx o = 0; o < b.num_objects(); ++o) {
            std::vector<char> seen(dst_.card(o), 0);
            for (int32_t v : comp_[o]) {
                if (seen[v]) return false;
                seen[v] = 1;
            }
        }
        return true;
    }
    bool pointwise_surjective() const {
        const FinCategory& b = *src_.base();
        for (ObjIdx o = 0; o < b.num_objects(); ++o) {
            std::vector<char> seen(dst_.card(o), 0);
            for (int32_t v : comp_[o]) seen[v] = 1;
            for (char s : seen)
                if (!s) return false;
        }
        return true;
    }
    bool pointwise_bijective() const { return pointwise_injective() && pointwise_surjective(); }

    bool operator==(const PresheafMap& other) const {
        return src_ == other.src_ && dst_ == other.dst_ && comp_ == other.comp_;
    }

private:
    Presheaf src_, dst_;
    std::vector<std::vector<int32_t>> comp_;
};

inline PresheafMap identity_map(const Presheaf& x) {
    std::vector<std::vector<int32_t>> comps(x.base()->num_objects());
    for (ObjIdx o = 0; o < x.base()->num_objects(); ++o) {
        comps[o].resize(x.card(o));
        std::iota(comps[o].begin(), comps[o].end(), 0);
    }
    return PresheafMap(x, x, std::move(comps));
}

// g after f
inline PresheafMap compose(const PresheafMap& g, const PresheafMap& f) {
    if (!(f.dst() == g.src())) throw ValidationError("PresheafMapShape", "maps not composable");
    std::vector<std::vector<int32_t>> comps(f.src().base()->num_objects());
    for (ObjIdx o = 0; o < f.src().base()->num_objects(); ++o) {
        comps[o].resize(f.src().card(o));
        for (int32_t x = 0; x < f.src().card(o); ++x) comps[o][x] = g.apply(o, f.apply(o, x));
    }
    return PresheafMap(f.src(), g.dst(), std::move(comps));
}

inline PresheafMap bang(const Presheaf& x) {
    // unique map into the terminal presheaf
    Presheaf one = terminal_presheaf(x.base());
    std::vector<std::vector<int32_t>> comps(x.base()->num_objects());
    for (ObjIdx o = 0; o < x.base()->num_objects(); ++o) comps[o].assign(x.card(o), 0);
    return PresheafMap(x, std::move(one), std::move(comps));
}

// All natural transformations X -> Y in lexicographic order of the flattened
// component table. Backtracking with eager downward propagation: assigning a
// value at (c, x) forces the value at (src f, X(f)(x)) for every f into c.
inline std::vector<PresheafMap> hom_set(const Presheaf& x, const Presheaf& y,
                                        long long max_results = 200000) {
    const FinCategory& b = *x.base();
    if (!b.equal_tables(*y.base())) throw ValidationError("PresheafMapShape", "bases differ");

    int n_obj = b.num_objects();
    std::vector<int32_t> offset(n_obj + 1, 0);
    for (ObjIdx o = 0; o < n_obj; ++o) offset[o + 1] = offset[o] + x.card(o);
    int total = offset[n_obj];

    // per-slot propagation lists: (morphism, downstream slot)
    struct Edge {
        MorIdx f;
        int32_t down;
    };
    std::vector<std::vector<Edge>> edges(total);
    for (MorIdx f = 0; f < b.num_morphisms(); ++f) {
        if (b.is_identity(f)) continue;
        ObjIdx s = b.src(f), d = b.dst(f);
        for (int32_t v = 0; v < x.card(d); ++v)
            edges[offset[d] + v].push_back({f, offset[s] + x.restrict_along(f, v)});
    }

    std::vector<int32_t> val(total, -1);
    std::vector<int32_t> trail;
    std::vector<ObjIdx> slot_obj(total);
    for (ObjIdx o = 0; o < n_obj; ++o)
        for (int32_t v = 0; v < x.card(o); ++v) slot_obj[offset[o] + v] = o;

    // zero-carrier target with nonzero source: no maps at all
    for (ObjIdx o = 0; o < n_obj; ++o)
        if (x.card(o) > 0 && y.card(o) == 0) return {};

    std::function<bool(int32_t, int32_t)> assign = [&](int32_t slot, int32_t v) {
        if (val[slot] != -1) return val[slot] == v;
        val[slot] = v;
        trail.push_back(slot);
        for (const Edge& e : edges[slot])
            if (!assign(e.down, y.restrict_along(e.f, v))) return false;
        return true;
    };

    std::vector<PresheafMap> out;
    std::function<void(int32_t)> rec = [&](int32_t slot) {
        while (slot < total && val[slot] != -1) ++slot;
        if (slot == total) {
            if (static_cast<long long>(out.size()) >= max_results)
                throw BudgetError("hom_set", "result set exceeds budget");
            std::vector<std::vector<int32_t>> comps(n_obj);
            for (ObjIdx o = 0; o < n_obj; ++o)
                comps[o].assign(val.begin() + offset[o], val.begin() + offset[o + 1]);
            out.emplace_back(x, y, std::move(comps));
            return;
        }
        for (int32_t v = 0; v < y.card(slot_obj[slot]); ++v) {
            size_t mark = trail.size();
            if (assign(slot, v)) rec(slot + 1);
            while (trail.size() > mark) {
                val[trail.back()] = -1;
                trail.pop_back();
            }
        }
    };
    rec(0);
    return out;
}

// Subpresheaf as a literal per-object subset, closed under restriction.
class Subpresheaf {
public:
    Subpresheaf(Presheaf ambient, std::vector<std::vector<char>> member)
        : ambient_(std::move(ambient)), member_(std::move(member)) {
        const FinCategory& b = *ambient_.base();
        if (static_cast<int>(member_.size()) != b.num_objects())
            throw ValidationError("SubpresheafShape", "one member set per object required");
        for (ObjIdx o = 0; o < b.num_objects(); ++o)
            if (static_cast<int32_t>(member_[o].size()) != ambient_.card(o))
                throw ValidationError("SubpresheafShape", "member table size wrong");
        for (MorIdx f = 0; f < b.num_morphisms(); ++f)
            for (int32_t v = 0; v < ambient_.card(b.dst(f)); ++v)
                if (member_[b.dst(f)][v] && !member_[b.src(f)][ambient_.restrict_along(f, v)])
                    throw ValidationError("SubpresheafNotClosed",
                                          "subset not closed under restriction",
                                          Json{{"morphism", b.morphism_id(f)},
                                               {"element", v}});
    }

    const Presheaf& ambient() const { return ambient_; }
    bool contains(ObjIdx o, int32_t v) const { return member_[o][v]; }
    const std::vector<std::vector<char>>& members() const { return member_; }

    bool operator==(const Subpresheaf& other) const {
        return ambient_ == other.ambient_ && member_ == other.member_;
    }
    bool subset_of(const Subpresheaf& other) const {
        for (size_t o = 0; o < member_.size(); ++o)
            for (size_t v = 0; v < member_[o].size(); ++v)
                if (member_[o][v] && !other.member_[o][v]) return false;
        return true;
    }
    bool full() const {
        for (const auto& m : member_)
            for (char c : m)
                if (!c) return false;
        return true;
    }

    // the subset as a presheaf in its own right, with its inclusion
    std::pair<Presheaf, PresheafMap> carrier_with_inclusion() const {
        const FinCategory& b = *ambient_.base();
        std::vector<std::vector<int32_t>> to_sub(b.num_objects());
        std::vector<std::vector<int32_t>> to_amb(b.num_objects());
        std::vector<int32_t> cards(b.num_objects(), 0);
        for (ObjIdx o = 0; o < b.num_objects(); ++o) {
            to_sub[o].assign(ambient_.card(o), -1);
            for (int32_t v = 0; v < ambient_.card(o); ++v)
                if (member_[o][v]) {
                    to_sub[o][v] = cards[o]++;
                    to_amb[o].push_back(v);
                }
        }
        std::vector<std::vector<int32_t>> restr(b.num_morphisms());
        for (MorIdx f = 0; f < b.num_morphisms(); ++f) {
            restr[f].resize(cards[b.dst(f)]);
            for (int32_t i = 0; i < cards[b.dst(f)]; ++i)
                restr[f][i] = to_sub[b.src(f)][ambient_.restrict_along(f, to_amb[b.dst(f)][i])];
        }
        Presheaf sub(ambient_.base(), cards, std::move(restr));
        std::vector<std::vector<int32_t>> incl(b.num_objects());
        for (ObjIdx o = 0; o < b.num_objects(); ++o) incl[o] = to_amb[o];
        PresheafMap inc(sub, ambient_, std::move(incl));
        return {std::move(sub), std::move(inc)};
    }

private:
    Presheaf ambient_;
    std::vector<std::vector<char>> member_;
};

inline Subpresheaf full_subpresheaf(const Presheaf& x) {
    std::vector<std::vector<char>> m(x.base()->num_objects());
    for (ObjIdx o = 0; o < x.base()->num_objects(); ++o) m[o].assign(x.card(o), 1);
    return Subpresheaf(x, std::move(m));
}

inline Subpresheaf empty_subpresheaf(const Presheaf& x) {
    std::vector<std::vector<char>> m(x.base()->num_objects());
    for (ObjIdx o = 0; o < x.base()->num_objects(); ++o) m[o].assign(x.card(o), 0);
    return Subpresheaf(x, std::move(m));
}

// image of f as a subpresheaf of its target (pointwise image; closure under
// restriction follows from naturality and is re-checked by the constructor)
inline Subpresheaf image(const PresheafMap& f) {
    const FinCategory& b = *f.src().base();
    std::vector<std::vector<char>> m(b.num_objects());
    for (ObjIdx o = 0; o < b.num_objects(); ++o) {
        m[o].assign(f.dst().card(o), 0);
        for (int32_t x = 0; x < f.src().card(o); ++x) m[o][f.apply(o, x)] = 1;
    }
    return Subpresheaf(f.dst(), std::move(m));
}

// preimage of a subpresheaf along f
inline Subpresheaf preimage(const PresheafMap& f, const Subpresheaf& n) {
    if (!(n.ambient() == f.dst())) throw ValidationError("SubpresheafShape", "preimage ambient wrong");
    const FinCategory& b = *f.src().base();
    std::vector<std::vector<char>> m(b.num_objects());
    for (ObjIdx o = 0; o < b.num_objects(); ++o) {
        m[o].assign(f.src().card(o), 0);
        for (int32_t x = 0; x < f.src().card(o); ++x) m[o][x] = n.contains(o, f.apply(o, x));
    }
    return Subpresheaf(f.src(), std::move(m));
}

// direct image f(m): image of the composite of f with the inclusion of m
inline Subpresheaf direct_image(const PresheafMap& f, const Subpresheaf& m) {
    if (!(m.ambient() == f.src())) throw ValidationError("SubpresheafShape", "image ambient wrong");
    const FinCategory& b = *f.src().base();
    std::vector<std::vector<char>> mm(b.num_objects());
    for (ObjIdx o = 0; o < b.num_objects(); ++o) {
        mm[o].assign(f.dst().card(o), 0);
        for (int32_t x = 0; x < f.src().card(o); ++x)
            if (m.contains(o, x)) mm[o][f.apply(o, x)] = 1;
    }
    return Subpresheaf(f.dst(), std::move(mm));
}

// epi-mono factorization: f = incl(image) . corestriction, with the image as
// the canonical subset representative
struct EpiMonoFactorization {
    PresheafMap epi;        // X -> image carrier
    Subpresheaf mono;       // image as subobject of Y
    PresheafMap inclusion;  // image carrier -> Y
};

inline EpiMonoFactorization epi_mono_factorize(const PresheafMap& f) {
    Subpresheaf img = image(f);
    auto [carrier, incl] = img.carrier_with_inclusion();
    const FinCategory& b = *f.src().base();
    // index of each ambient element in the carrier
    std::vector<std::vector<int32_t>> to_sub(b.num_objects());
    for (ObjIdx o = 0; o < b.num_objects(); ++o) {
        to_sub[o].assign(f.dst().card(o), -1);
        for (int32_t i = 0; i < carrier.card(o); ++i) to_sub[o][incl.apply(o, i)] = i;
    }
    std::vector<std::vector<int32_t>> comps(b.num_objects());
    for (ObjIdx o = 0; o < b.num_objects(); ++o) {
        comps[o].resize(f.src().card(o));
        for (int32_t x = 0; x < f.src().card(o); ++x) comps[o][x] = to_sub[o][f.apply(o, x)];
    }
    PresheafMap e(f.src(), carrier, std::move(comps));
    return EpiMonoFactorization{std::move(e), std::move(img), std::move(incl)};
}

// binary product with the canonical pair encoding a * |Y(c)| + b
struct BinaryProduct {
    Presheaf p;
    PresheafMap proj1, proj2;
    std::vector<int32_t> stride;  // |Y(c)| per object

    int32_t encode(ObjIdx o, int32_t a, int32_t b) const { return a * stride[o] + b; }
    std::pair<int32_t, int32_t> decode(ObjIdx o, int32_t v) const {
        return {v / stride[o], v % stride[o]};
    }
};

inline BinaryProduct product(const Presheaf& x, const Presheaf& y) {
    const FinCategory& b = *x.base();
    if (!b.equal_tables(*y.base())) throw ValidationError("PresheafShape", "bases differ");
    std::vector<int32_t> cards(b.num_objects()), stride(b.num_objects());
    for (ObjIdx o = 0; o < b.num_objects(); ++o) {
        cards[o] = x.card(o) * y.card(o);
        stride[o] = y.card(o);
    }
    std::vector<std::vector<int32_t>> restr(b.num_morphisms());
    for (MorIdx f = 0; f < b.num_morphisms(); ++f) {
        ObjIdx d = b.dst(f);
        restr[f].resize(cards[d]);
        for (int32_t a = 0; a < x.card(d); ++a)
            for (int32_t c = 0; c < y.card(d); ++c)
                restr[f][a * stride[d] + c] =
                    x.restrict_along(f, a) * stride[b.src(f)] + y.restrict_along(f, c);
    }
    Presheaf p(x.base(), cards, std::move(restr));
    std::vector<std::vector<int32_t>> c1(b.num_objects()), c2(b.num_objects());
    for (ObjIdx o = 0; o < b.num_objects(); ++o) {
        c1[o].resize(cards[o]);
        c2[o].resize(cards[o]);
        for (int32_t v = 0; v < cards[o]; ++v) {
            c1[o][v] = v / stride[o];
            c2[o][v] = v % stride[o];
        }
    }
    PresheafMap p1(p, x, std::move(c1)), p2(p, y, std::move(c2));
    return BinaryProduct{std::move(p), std::move(p1), std::move(p2), std::move(stride)};
}

// pairing <f, g>: Z -> X x Y for f: Z -> X, g: Z -> Y
inline PresheafMap pair_into_product(const BinaryProduct& prod, const PresheafMap& f,
                                     const PresheafMap& g) {
    const FinCategory& b = *f.src().base();
    std::vector<std::vector<int32_t>> comps(b.num_objects());
    for (ObjIdx o = 0; o < b.num_objects(); ++o) {
        comps[o].resize(f.src().card(o));
        for (int32_t z = 0; z < f.src().card(o); ++z)
            comps[o][z] = prod.encode(o, f.apply(o, z), g.apply(o, z));
    }
    return PresheafMap(f.src(), prod.p, std::move(comps));
}

// pullback of f: X -> Z, g: Y -> Z as the evident subset of X x Y
struct PullbackResult {
    Presheaf p;
    PresheafMap proj1, proj2;
};

inline PullbackResult pullback(const PresheafMap& f, const PresheafMap& g) {
    if (!(f.dst() == g.dst())) throw ValidationError("PresheafShape", "pullback targets differ");
    BinaryProduct prod = product(f.src(), g.src());
    const FinCategory& b = *f.src().base();
    std::vector<std::vector<char>> member(b.num_objects());
    for (ObjIdx o = 0; o < b.num_objects(); ++o) {
        member[o].assign(prod.p.card(o), 0);
        for (int32_t v = 0; v < prod.p.card(o); ++v) {
            auto [a, c] = prod.decode(o, v);
            member[o][v] = f.apply(o, a) == g.apply(o, c);
        }
    }
    Subpresheaf sub(prod.p, std::move(member));
    auto [carrier, incl] = sub.carrier_with_inclusion();
    PresheafMap p1 = compose(prod.proj1, incl);
    PresheafMap p2 = compose(prod.proj2, incl);
    return PullbackResult{std::move(carrier), std::move(p1), std::move(p2)};
}

// equalizer of a parallel pair as a subpresheaf of the common source
inline Subpresheaf equalizer(const PresheafMap& f, const PresheafMap& g) {
    if (!(f.src() == g.src() && f.dst() == g.dst()))
        throw ValidationError("PresheafShape", "equalizer needs a parallel pair");
    const FinCategory& b = *f.src().base();
    std::vector<std::vector<char>> member(b.num_objects());
    for (ObjIdx o = 0; o < b.num_objects(); ++o) {
        member[o].assign(f.src().card(o), 0);
        for (int32_t x = 0; x < f.src().card(o); ++x) member[o][x] = f.apply(o, x) == g.apply(o, x);
    }
    return Subpresheaf(f.src(), std::move(member));
}

// Does (p over X, q over Y) present P as the pullback of f: X -> Z <- Y: g?
// Checked against the constructed pullback: the canonical comparison map must
// be a pointwise bijection.
inline bool is_pullback_square(const PresheafMap& p, const PresheafMap& q, const PresheafMap& f,
                               const PresheafMap& g) {
    if (!(p.src() == q.src()) || !(p.dst() == f.src()) || !(q.dst() == g.src())) return false;
    if (!(compose(f, p) == compose(g, q))) return false;
    PullbackResult pb = pullback(f, g);
    // comparison: z |-> (p z, q z), located inside the pullback carrier
    const FinCategory& b = *p.src().base();
    // build element lookup of the pullback carrier inside X x Y
    BinaryProduct prod = product(f.src(), g.src());
    std::vector<std::unordered_map<int64_t, int32_t>> where(b.num_objects());
    for (ObjIdx o = 0; o < b.num_objects(); ++o)
        for (int32_t i = 0; i < pb.p.card(o); ++i)
            where[o][prod.encode(o, pb.proj1.apply(o, i), pb.proj2.apply(o, i))] = i;
    std::vector<std::vector<char>> hit(b.num_objects());
    for (ObjIdx o = 0; o < b.num_objects(); ++o) {
        hit[o].assign(pb.p.card(o), 0);
        if (p.src().card(o) != pb.p.card(o)) return false;
        for (int32_t z = 0; z < p.src().card(o); ++z) {
            auto it = where[o].find(prod.encode(o, p.apply(o, z), q.apply(o, z)));
            if (it == where[o].end()) return false;
            if (hit[o][it->second]) return false;  // not injective
            hit[o][it->second] = 1;
        }
    }
    return true;
}

}  // namespace idemcore::presheaf
