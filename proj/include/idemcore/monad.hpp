#pragma once

#include "idemcore/functor.hpp"

namespace idemcore::fincat {

// A monad as validated data: unit and multiplication laws hold componentwise.
struct MonadData {
    FinFunctor t;
    FinNatTrans eta;  // Id -> T
    FinNatTrans mu;   // TT -> T

    const CatPtr& category() const { return t.source(); }

    bool operator==(const MonadData& other) const {
        return t == other.t && eta == other.eta && mu == other.mu;
    }
};

// Validates the monad laws; throws UnitLawFail/AssocFail/NotNatural with the
// first witnessing object.
inline MonadData check_monad(const FinFunctor& t, const FinNatTrans& eta, const FinNatTrans& mu) {
    const CatPtr& c = t.source();
    if (!c->equal_tables(*t.target()))
        throw ValidationError("NotEndofunctor", "monad functor must be an endofunctor");
    if (!(eta.source() == identity_functor(c) && eta.target() == t))
        throw ValidationError("NotNatural", "unit is not a transformation Id -> T");
    FinFunctor tt = compose_functors(t, t);
    if (!(mu.source() == tt && mu.target() == t))
        throw ValidationError("NotNatural", "multiplication is not a transformation TT -> T");

    const FinCategory& cat = *c;
    for (ObjIdx b = 0; b < cat.num_objects(); ++b) {
        MorIdx t_eta = t.on_morphism(eta.component(b));      // (T eta)_B
        MorIdx eta_t = eta.component(t.on_object(b));        // (eta T)_B
        MorIdx id_tb = cat.identity(t.on_object(b));
        if (cat.compose(mu.component(b), t_eta) != id_tb)
            throw ValidationError("UnitLawFail", "mu . T(eta) != id",
                                  Json{{"object", cat.object_id(b)}});
        if (cat.compose(mu.component(b), eta_t) != id_tb)
            throw ValidationError("UnitLawFail", "mu . eta(T) != id",
                                  Json{{"object", cat.object_id(b)}});
    }
    for (ObjIdx b = 0; b < cat.num_objects(); ++b) {
        MorIdx t_mu = t.on_morphism(mu.component(b));        // (T mu)_B
        MorIdx mu_t = mu.component(t.on_object(b));          // (mu T)_B
        if (cat.compose(mu.component(b), t_mu) != cat.compose(mu.component(b), mu_t))
            throw ValidationError("AssocFail", "mu . T(mu) != mu . mu(T)",
                                  Json{{"object", cat.object_id(b)}});
    }
    return MonadData{t, eta, mu};
}

inline MonadData identity_monad(const CatPtr& c) {
    FinFunctor id = identity_functor(c);
    return MonadData{id, identity_nat(id), identity_nat(id)};
}

// Idempotent iff every mu component is iso; when so, mu^-1 = T(eta) = eta(T)
// componentwise, and that identity is asserted rather than assumed.
inline bool is_idempotent_monad(const MonadData& m) {
    const FinCategory& cat = *m.category();
    for (ObjIdx b = 0; b < cat.num_objects(); ++b) {
        auto inv = inverse(cat, m.mu.component(b));
        if (!inv) return false;
        MorIdx t_eta = m.t.on_morphism(m.eta.component(b));
        MorIdx eta_t = m.eta.component(m.t.on_object(b));
        if (*inv != t_eta || *inv != eta_t)
            throw ValidationError("IdempotenceWitnessFail",
                                  "mu invertible but mu^-1 != T(eta) = eta(T)",
                                  Json{{"object", cat.object_id(b)}});
    }
    return true;
}

// theta . eta = eta' and mu' . (theta o theta) = theta . mu, componentwise.
inline bool check_monad_morphism(const MonadData& s, const MonadData& t, const FinNatTrans& theta) {
    const FinCategory& cat = *s.category();
    if (!(theta.source() == s.t && theta.target() == t.t)) return false;
    for (ObjIdx b = 0; b < cat.num_objects(); ++b)
        if (cat.compose(theta.component(b), s.eta.component(b)) != t.eta.component(b)) return false;
    // (theta o theta)_B = theta_{T'B} . S(theta_B)  (horizontal composite SS -> T'T')
    for (ObjIdx b = 0; b < cat.num_objects(); ++b) {
        MorIdx horiz = cat.compose(theta.component(t.t.on_object(b)),
                                   s.t.on_morphism(theta.component(b)));
        MorIdx lhs = cat.compose(t.mu.component(b), horiz);
        MorIdx rhs = cat.compose(theta.component(b), s.mu.component(b));
        if (lhs != rhs) return false;
    }
    return true;
}

inline std::vector<FinNatTrans> enumerate_monad_morphisms(const MonadData& s, const MonadData& t) {
    std::vector<FinNatTrans> out;
    for (auto& cand : enumerate_nat_trans(s.t, t.t))
        if (check_monad_morphism(s, t, cand)) out.push_back(cand);
    return out;
}

// For idempotent S, the unique monad morphism S -> T when it exists:
// the candidate is alpha_B = (rho_{TB})^-1 . S(eta_B), and for idempotent S a
// transformation is a monad morphism iff alpha . rho = eta.
inline std::optional<FinNatTrans> unique_morphism_from_idempotent(const MonadData& s,
                                                                  const MonadData& t) {
    if (!is_idempotent_monad(s))
        throw ValidationError("NotIdempotent", "source monad must be idempotent");
    const FinCategory& cat = *s.category();
    std::vector<MorIdx> comps(cat.num_objects());
    for (ObjIdx b = 0; b < cat.num_objects(); ++b) {
        MorIdx rho_tb = s.eta.component(t.t.on_object(b));  // rho at TB
        auto inv = inverse(cat, rho_tb);
        if (!inv) return std::nullopt;  // TB carries no S-algebra structure
        comps[b] = cat.compose(*inv, s.t.on_morphism(t.eta.component(b)));
    }
    FinNatTrans alpha(s.t, t.t, std::move(comps));
    for (ObjIdx b = 0; b < cat.num_objects(); ++b)
        if (cat.compose(alpha.component(b), s.eta.component(b)) != t.eta.component(b))
            return std::nullopt;
    if (!check_monad_morphism(s, t, alpha)) return std::nullopt;
    return alpha;
}

// Exhaustive enumeration of all monads on a finite category, ordered by
// (object map, morphism map, eta, mu). Exponential; guarded by the budget.
inline std::vector<MonadData> enumerate_monads(const CatPtr& c, int max_morphisms = 24) {
    const FinCategory& cat = *c;
    if (cat.num_morphisms() > max_morphisms)
        throw BudgetError("enumerate_monads", std::to_string(cat.num_morphisms()) + " morphisms");

    std::vector<MonadData> out;
    int no = cat.num_objects(), nm = cat.num_morphisms();
    std::vector<ObjIdx> omap(no, 0);
    std::vector<MorIdx> mmap(nm, -1);

    // enumerate endofunctors by backtracking over the morphism map
    std::function<void()> emit_functor = [&]() {
        FinFunctor t(c, c, omap, mmap);  // construction re-checks; cheap at this size
        // unit candidates
        std::vector<MorIdx> eta(no, -1);
        std::function<void(ObjIdx)> rec_eta = [&](ObjIdx b) {
            if (b == no) {
                FinNatTrans eta_nt(identity_functor(c), t, eta);
                // multiplication candidates
                FinFunctor tt = compose_functors(t, t);
                std::vector<MorIdx> mu(no, -1);
                std::function<void(ObjIdx)> rec_mu = [&](ObjIdx b2) {
                    if (b2 == no) {
                        try {
                            FinNatTrans mu_nt(tt, t, mu);
                            out.push_back(check_monad(t, eta_nt, mu_nt));
                        } catch (const ValidationError&) {
                        }
                        return;
                    }
                    for (MorIdx m : cat.hom(tt.on_object(b2), t.on_object(b2))) {
                        mu[b2] = m;
                        rec_mu(b2 + 1);
                    }
                    mu[b2] = -1;
                };
                rec_mu(0);
                return;
            }
            for (MorIdx m : cat.hom(b, t.on_object(b))) {
                eta[b] = m;
                // prune: naturality against already-chosen components
                bool ok = true;
                for (MorIdx f = 0; f < nm && ok; ++f) {
                    ObjIdx s = cat.src(f), d = cat.dst(f);
                    if (s > b || d > b) continue;
                    if (cat.compose(eta[d], f) != cat.compose(t.on_morphism(f), eta[s])) ok = false;
                }
                if (ok) rec_eta(b + 1);
            }
            eta[b] = -1;
        };
        try {
            rec_eta(0);
        } catch (const ValidationError&) {
        }
    };

    std::function<void(MorIdx)> rec_mor = [&](MorIdx m) {
        if (m == nm) {
            emit_functor();
            return;
        }
        ObjIdx s = omap[cat.src(m)], d = omap[cat.dst(m)];
        if (cat.is_identity(m)) {
            mmap[m] = cat.identity(s);
            // partial composition check against earlier assignments
            bool ok = true;
            for (MorIdx g = 0; g <= m && ok; ++g)
                for (MorIdx f = 0; f <= m && ok; ++f) {
                    if (mmap[g] == -1 || mmap[f] == -1 || !cat.composable(g, f)) continue;
                    MorIdx gf = cat.compose(g, f);
                    if (gf <= m && mmap[gf] != -1 &&
                        cat.compose(mmap[g], mmap[f]) != mmap[gf])
                        ok = false;
                }
            if (ok) rec_mor(m + 1);
            mmap[m] = -1;
            return;
        }
        for (MorIdx cand : cat.hom(s, d)) {
            mmap[m] = cand;
            bool ok = true;
            for (MorIdx g = 0; g <= m && ok; ++g)
                for (MorIdx f = 0; f <= m && ok; ++f) {
                    if (mmap[g] == -1 || mmap[f] == -1 || !cat.composable(g, f)) continue;
                    MorIdx gf = cat.compose(g, f);
                    if (gf <= m && mmap[gf] != -1 &&
                        cat.compose(mmap[g], mmap[f]) != mmap[gf])
                        ok = false;
                }
            if (ok) rec_mor(m + 1);
        }
        mmap[m] = -1;
    };

    std::function<void(ObjIdx)> rec_obj = [&](ObjIdx o) {
        if (o == no) {
            rec_mor(0);
            return;
        }
        for (ObjIdx cand = 0; cand < no; ++cand) {
            omap[o] = cand;
            rec_obj(o + 1);
        }
        omap[o] = 0;
    };
    rec_obj(0);
    return out;
}

}  // namespace idemcore::fincat
