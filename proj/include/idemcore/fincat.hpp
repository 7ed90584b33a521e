#pragma once

#include <algorithm>
#include <array>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "idemcore/base.hpp"

namespace idemcore::fincat {

using ObjId = int32_t;
using MorId = int32_t;
// Dense internal indices; all algorithms run on these, ids appear only at the
// boundary (construction and witness reporting).
using ObjIdx = int32_t;
using MorIdx = int32_t;

struct MorRecord {
    MorId id;
    ObjId src;
    ObjId dst;
};

// Raw description as read from a problem file or a fixture builder.
struct FinCategoryData {
    std::vector<ObjId> objects;
    std::vector<MorRecord> morphisms;
    std::vector<std::array<MorId, 3>> composition;  // (g, f, g.f)
    std::vector<std::pair<ObjId, MorId>> identities;
};

// A finite category with a total composition table, validated eagerly:
// downstream code may assume associativity, neutrality and totality.
class FinCategory {
public:
    static std::shared_ptr<const FinCategory> validate(const FinCategoryData& data);

    int num_objects() const { return static_cast<int>(objects_.size()); }
    int num_morphisms() const { return static_cast<int>(morphisms_.size()); }

    ObjId object_id(ObjIdx o) const { return objects_[o]; }
    MorId morphism_id(MorIdx m) const { return morphisms_[m].id; }

    ObjIdx object_index(ObjId id) const {
        auto it = obj_index_.find(id);
        if (it == obj_index_.end())
            throw ValidationError("UnknownObject", "no object with id " + std::to_string(id));
        return it->second;
    }
    MorIdx morphism_index(MorId id) const {
        auto it = mor_index_.find(id);
        if (it == mor_index_.end())
            throw ValidationError("UnknownMorphism", "no morphism with id " + std::to_string(id));
        return it->second;
    }

    ObjIdx src(MorIdx m) const { return src_[m]; }
    ObjIdx dst(MorIdx m) const { return dst_[m]; }
    MorIdx identity(ObjIdx o) const { return identity_[o]; }
    bool is_identity(MorIdx m) const { return identity_[src_[m]] == m && src_[m] == dst_[m]; }

    bool composable(MorIdx g, MorIdx f) const { return dst_[f] == src_[g]; }
    // g.f with dst(f) == src(g)
    MorIdx compose(MorIdx g, MorIdx f) const {
        MorIdx r = comp_[static_cast<size_t>(g) * morphisms_.size() + f];
        return r;
    }

    const std::vector<MorIdx>& hom(ObjIdx a, ObjIdx b) const {
        return hom_[static_cast<size_t>(a) * objects_.size() + b];
    }
    const std::vector<MorIdx>& morphisms_into(ObjIdx b) const { return into_[b]; }
    const std::vector<MorIdx>& morphisms_from(ObjIdx a) const { return from_[a]; }

    bool equal_tables(const FinCategory& other) const {
        return objects_ == other.objects_ && src_ == other.src_ && dst_ == other.dst_ &&
               comp_ == other.comp_ && identity_ == other.identity_ &&
               [&] {
                   for (size_t i = 0; i < morphisms_.size(); ++i)
                       if (morphisms_[i].id != other.morphisms_[i].id) return false;
                   return true;
               }();
    }

private:
    std::vector<ObjId> objects_;
    std::vector<MorRecord> morphisms_;
    std::vector<ObjIdx> src_, dst_;
    std::vector<MorIdx> comp_;  // row g, column f; -1 when not composable
    std::vector<MorIdx> identity_;
    std::unordered_map<ObjId, ObjIdx> obj_index_;
    std::unordered_map<MorId, MorIdx> mor_index_;
    std::vector<std::vector<MorIdx>> hom_;
    std::vector<std::vector<MorIdx>> into_, from_;
};

using CatPtr = std::shared_ptr<const FinCategory>;

inline std::shared_ptr<const FinCategory> FinCategory::validate(const FinCategoryData& data) {
    auto cat = std::make_shared<FinCategory>();
    FinCategory& c = *cat;

    c.objects_ = data.objects;
    std::sort(c.objects_.begin(), c.objects_.end());
    for (ObjIdx i = 0; i < static_cast<ObjIdx>(c.objects_.size()); ++i) {
        if (!c.obj_index_.emplace(c.objects_[i], i).second)
            throw ValidationError("DuplicateObject", "duplicate object id",
                                  Json{{"object", c.objects_[i]}});
    }

    c.morphisms_ = data.morphisms;
    std::sort(c.morphisms_.begin(), c.morphisms_.end(),
              [](const MorRecord& a, const MorRecord& b) { return a.id < b.id; });
    const size_t n = c.morphisms_.size();
    c.src_.resize(n);
    c.dst_.resize(n);
    for (MorIdx i = 0; i < static_cast<MorIdx>(n); ++i) {
        const MorRecord& m = c.morphisms_[i];
        if (!c.mor_index_.emplace(m.id, i).second)
            throw ValidationError("DuplicateMorphism", "duplicate morphism id",
                                  Json{{"morphism", m.id}});
        c.src_[i] = c.object_index(m.src);
        c.dst_[i] = c.object_index(m.dst);
    }

    c.comp_.assign(n * n, -1);
    for (const auto& [gid, fid, rid] : data.composition) {
        MorIdx g = c.morphism_index(gid), f = c.morphism_index(fid), r = c.morphism_index(rid);
        if (c.dst_[f] != c.src_[g])
            throw ValidationError("CompNotComposable", "composition entry for a non-composable pair",
                                  Json{{"g", gid}, {"f", fid}});
        if (c.src_[r] != c.src_[f] || c.dst_[r] != c.dst_[g])
            throw ValidationError("BadCompositeEndpoints", "composite endpoints do not match",
                                  Json{{"g", gid}, {"f", fid}, {"composite", rid}});
        MorIdx& slot = c.comp_[static_cast<size_t>(g) * n + f];
        if (slot != -1 && slot != r)
            throw ValidationError("AmbiguousComposite", "two composites declared for one pair",
                                  Json{{"g", gid}, {"f", fid}});
        slot = r;
    }
    // comp must be defined exactly on composable pairs
    for (MorIdx g = 0; g < static_cast<MorIdx>(n); ++g)
        for (MorIdx f = 0; f < static_cast<MorIdx>(n); ++f) {
            bool comp = c.dst_[f] == c.src_[g];
            MorIdx r = c.comp_[static_cast<size_t>(g) * n + f];
            if (comp && r == -1)
                throw ValidationError("MissingComposite", "no composite declared for composable pair",
                                      Json{{"g", c.morphism_id(g)}, {"f", c.morphism_id(f)}});
        }

    c.identity_.assign(c.objects_.size(), -1);
    for (const auto& [oid, mid] : data.identities) {
        ObjIdx o = c.object_index(oid);
        MorIdx m = c.morphism_index(mid);
        if (c.src_[m] != o || c.dst_[m] != o)
            throw ValidationError("BadIdentity", "identity morphism is not an endomorphism",
                                  Json{{"object", oid}, {"morphism", mid}});
        c.identity_[o] = m;
    }
    for (ObjIdx o = 0; o < c.num_objects(); ++o) {
        if (c.identity_[o] == -1)
            throw ValidationError("BadIdentity", "object has no identity morphism",
                                  Json{{"object", c.object_id(o)}});
        MorIdx e = c.identity_[o];
        // left/right neutrality
        for (MorIdx f = 0; f < static_cast<MorIdx>(n); ++f) {
            if (c.dst_[f] == o && c.compose(e, f) != f)
                throw ValidationError("BadIdentity", "identity is not left-neutral",
                                      Json{{"object", c.object_id(o)}, {"morphism", c.morphism_id(f)}});
            if (c.src_[f] == o && c.compose(f, e) != f)
                throw ValidationError("BadIdentity", "identity is not right-neutral",
                                      Json{{"object", c.object_id(o)}, {"morphism", c.morphism_id(f)}});
        }
    }

    // associativity on every composable triple
    for (MorIdx h = 0; h < static_cast<MorIdx>(n); ++h)
        for (MorIdx g = 0; g < static_cast<MorIdx>(n); ++g) {
            if (c.dst_[g] != c.src_[h]) continue;
            MorIdx hg = c.compose(h, g);
            for (MorIdx f = 0; f < static_cast<MorIdx>(n); ++f) {
                if (c.dst_[f] != c.src_[g]) continue;
                if (c.compose(hg, f) != c.compose(h, c.compose(g, f)))
                    throw ValidationError(
                        "NonAssociative", "associativity fails",
                        Json{{"f", c.morphism_id(f)}, {"g", c.morphism_id(g)}, {"h", c.morphism_id(h)}});
            }
        }

    c.hom_.assign(c.objects_.size() * c.objects_.size(), {});
    c.into_.assign(c.objects_.size(), {});
    c.from_.assign(c.objects_.size(), {});
    for (MorIdx m = 0; m < static_cast<MorIdx>(n); ++m) {
        c.hom_[static_cast<size_t>(c.src_[m]) * c.objects_.size() + c.dst_[m]].push_back(m);
        c.into_[c.dst_[m]].push_back(m);
        c.from_[c.src_[m]].push_back(m);
    }
    return cat;
}

// Exhaustive cancellation tests; no special-casing of identities.
inline bool is_mono(const FinCategory& c, MorIdx f) {
    for (ObjIdx a = 0; a < c.num_objects(); ++a) {
        const auto& hom = c.hom(a, c.src(f));
        for (size_t i = 0; i < hom.size(); ++i)
            for (size_t j = i + 1; j < hom.size(); ++j)
                if (c.compose(f, hom[i]) == c.compose(f, hom[j])) return false;
    }
    return true;
}

inline bool is_epi(const FinCategory& c, MorIdx f) {
    for (ObjIdx b = 0; b < c.num_objects(); ++b) {
        const auto& hom = c.hom(c.dst(f), b);
        for (size_t i = 0; i < hom.size(); ++i)
            for (size_t j = i + 1; j < hom.size(); ++j)
                if (c.compose(hom[i], f) == c.compose(hom[j], f)) return false;
    }
    return true;
}

inline std::optional<MorIdx> inverse(const FinCategory& c, MorIdx f) {
    for (MorIdx g : c.hom(c.dst(f), c.src(f)))
        if (c.compose(g, f) == c.identity(c.src(f)) && c.compose(f, g) == c.identity(c.dst(f)))
            return g;
    return std::nullopt;
}

inline bool is_iso(const FinCategory& c, MorIdx f) { return inverse(c, f).has_value(); }

// Objects a, b isomorphic in c.
inline bool objects_isomorphic(const FinCategory& c, ObjIdx a, ObjIdx b) {
    if (a == b) return true;
    for (MorIdx f : c.hom(a, b))
        if (is_iso(c, f)) return true;
    return false;
}

}  // namespace idemcore::fincat
