#include <catch2/catch_amalgamated.hpp>

#include "idemcore/enumerate.hpp"
#include "idemcore/fixtures.hpp"

using namespace idemcore;
using namespace idemcore::fincat;
using namespace idemcore::presheaf;

namespace {

Presheaf two_point_over_terminal(int n) {
    auto base = terminal_category();
    return Presheaf(base, {n}, {[&] {
                        std::vector<int32_t> t(n);
                        std::iota(t.begin(), t.end(), 0);
                        return t;
                    }()});
}

// presheaf on poset 2 (arrow 0 -> 1, morphism ids 0:id0, 1:0->1, 2:id1)
Presheaf poset2_presheaf(const CatPtr& base, int32_t c0, int32_t c1,
                         std::vector<int32_t> restr) {
    std::vector<int32_t> i0(c0), i1(c1);
    std::iota(i0.begin(), i0.end(), 0);
    std::iota(i1.begin(), i1.end(), 0);
    return Presheaf(base, {c0, c1}, {i0, std::move(restr), i1});
}

}  // namespace

TEST_CASE("presheaf validation enforces functoriality") {
    auto c3 = chain_poset(3);
    // morphism ids on chain3: 0:id0 1:(0->1) 2:(0->2) 3:id1 4:(1->2) 5:id2
    // restrict along composite must equal the composite of restrictions
    std::vector<int32_t> cards = {2, 2, 2};
    std::vector<std::vector<int32_t>> restr = {
        {0, 1}, {0, 1}, {1, 0}, {0, 1}, {0, 1}, {0, 1}};
    CHECK_THROWS_AS(Presheaf(c3, cards, restr), ValidationError);
    restr[2] = {0, 1};
    CHECK_NOTHROW(Presheaf(c3, cards, restr));
}

TEST_CASE("hom_set counts on small instances") {
    auto one = terminal_category();
    Presheaf t = terminal_presheaf(one);
    CHECK(hom_set(t, t).size() == 1);
    CHECK(hom_set(two_point_over_terminal(3), two_point_over_terminal(2)).size() == 8);

    // maps into the empty presheaf exist only from the empty presheaf
    Presheaf e = empty_presheaf(one);
    CHECK(hom_set(two_point_over_terminal(1), e).empty());
    CHECK(hom_set(e, e).size() == 1);
}

TEST_CASE("omega on standard bases") {
    auto one = terminal_category();
    OmegaContext o1 = make_omega(one);
    CHECK(o1.omega.card(0) == 2);

    auto p2 = poset2();
    OmegaContext o2 = make_omega(p2);
    CHECK(o2.omega.card(0) == 2);
    CHECK(o2.omega.card(1) == 3);
    // restriction along 0 -> 1 sends the maximal sieve to the maximal sieve
    MorIdx arrow = p2->hom(0, 1).at(0);
    CHECK(o2.omega.restrict_along(arrow, o2.max_elem[1]) == o2.max_elem[0]);

    // parallel pair: sieves on the target are {}, {f}, {g}, {f,g}, max
    OmegaContext opp = make_omega(parallel_pair_category());
    CHECK(opp.omega.card(0) == 2);
    CHECK(opp.omega.card(1) == 5);

    OmegaContext o3 = make_omega(chain_poset(3));
    CHECK(o3.omega.card(0) == 2);
    CHECK(o3.omega.card(1) == 3);
    CHECK(o3.omega.card(2) == 4);
}

TEST_CASE("yoneda: maps from a representable into omega count its sieves") {
    auto p2 = poset2();
    OmegaContext o2 = make_omega(p2);
    Representable y1 = representable(p2, 1);
    CHECK(hom_set(y1.p, o2.omega).size() == static_cast<size_t>(o2.omega.card(1)));
    Representable y0 = representable(p2, 0);
    CHECK(hom_set(y0.p, o2.omega).size() == static_cast<size_t>(o2.omega.card(0)));
}

TEST_CASE("products, pullbacks, equalizers") {
    auto p2 = poset2();
    Presheaf x = poset2_presheaf(p2, 2, 2, {0, 1});
    Presheaf one = terminal_presheaf(p2);
    BinaryProduct xp1 = product(x, one);
    CHECK(xp1.p.cards() == x.cards());

    // pullback over the terminal base is the set-level fiber product
    auto tb = terminal_category();
    Presheaf a = two_point_over_terminal(3), bb = two_point_over_terminal(2),
             z = two_point_over_terminal(2);
    PresheafMap f(a, z, {{0, 0, 1}});
    PresheafMap g(bb, z, {{0, 1}});
    PullbackResult pb = pullback(f, g);
    int expected = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j)
            if ((i == 2 ? 1 : 0) == j) ++expected;
    CHECK(pb.p.card(0) == expected);
    CHECK(is_pullback_square(pb.proj1, pb.proj2, f, g));

    // pointwise fiber-product oracle over poset 2
    Presheaf y2 = poset2_presheaf(p2, 2, 2, {1, 0});
    PresheafMap ff(x, y2, {{0, 1}, {1, 0}});
    PresheafMap gg(y2, y2, {{0, 1}, {0, 1}});
    PullbackResult pb2 = pullback(ff, gg);
    for (ObjIdx o = 0; o < 2; ++o) {
        int count = 0;
        for (int i = 0; i < x.card(o); ++i)
            for (int j = 0; j < y2.card(o); ++j)
                if (ff.apply(o, i) == gg.apply(o, j)) ++count;
        CHECK(pb2.p.card(o) == count);
    }

    Subpresheaf eq = equalizer(ff, ff);
    CHECK(eq.full());
}

TEST_CASE("epi-mono factorization is the pointwise image") {
    auto p2 = poset2();
    Presheaf x = poset2_presheaf(p2, 1, 2, {0, 0});
    Presheaf y = poset2_presheaf(p2, 2, 2, {0, 1});
    PresheafMap f(x, y, {{0}, {0, 0}});
    EpiMonoFactorization em = epi_mono_factorize(f);
    CHECK(em.epi.pointwise_surjective());
    CHECK(em.inclusion.pointwise_injective());
    CHECK(compose(em.inclusion, em.epi) == f);
    for (ObjIdx o = 0; o < 2; ++o) {
        std::set<int32_t> img;
        for (int32_t v = 0; v < x.card(o); ++v) img.insert(f.apply(o, v));
        for (int32_t v = 0; v < y.card(o); ++v) CHECK(em.mono.contains(o, v) == img.count(v));
    }

    // mono input: epi part is iso; epi input: image is everything
    Presheaf pt = poset2_presheaf(p2, 1, 1, {0});
    PresheafMap mono(pt, y, {{1}, {1}});
    CHECK(mono.pointwise_injective());
    CHECK(epi_mono_factorize(mono).epi.pointwise_bijective());
    PresheafMap epi(y, pt, {{0, 0}, {0, 0}});
    CHECK(epi_mono_factorize(epi).mono.full());
}

TEST_CASE("classifier: characteristic maps and subobjects round-trip") {
    for (const CatPtr& base : {terminal_category(), poset2()}) {
        OmegaContext om = make_omega(base);
        Universe u = build_universe(base, 2);
        for (const Presheaf& x : u.objects) {
            for (const Subpresheaf& m : all_subpresheaves(x)) {
                PresheafMap chi = characteristic_map(om, m);
                CHECK(subobject_of(om, chi) == m);
                // classifier law: (incl, !, chi, true) is a pullback
                auto [sub, incl] = m.carrier_with_inclusion();
                CHECK(is_pullback_square(incl, bang(sub), chi, om.true_map));
            }
            // full subobject classifies as true . !
            PresheafMap chi_full = characteristic_map(om, full_subpresheaf(x));
            CHECK(chi_full == compose(om.true_map, bang(x)));
        }
    }
}

TEST_CASE("exponentials: set exponents over the terminal base") {
    auto one = terminal_category();
    Budgets bud;
    Presheaf x = two_point_over_terminal(3), y = two_point_over_terminal(2);
    Exponential e = exponential(x, y, bud);
    CHECK(e.expo.card(0) == 8);

    // Y^1 has the same cardinality as Y
    Exponential e1 = exponential(terminal_presheaf(one), y, bud);
    CHECK(e1.expo.card(0) == y.card(0));
}

TEST_CASE("exponentials: currying is a bijection over poset 2") {
    auto p2 = poset2();
    Budgets bud;
    Presheaf x = poset2_presheaf(p2, 2, 1, {0});
    Presheaf y = poset2_presheaf(p2, 2, 2, {0, 1});
    Exponential e = exponential(x, y, bud);
    for (const Presheaf& z :
         {terminal_presheaf(p2), poset2_presheaf(p2, 2, 2, {1, 1}), poset2_presheaf(p2, 1, 2, {0, 0})}) {
        BinaryProduct zp = product(z, x);
        auto direct = hom_set(zp.p, y);
        auto curried = hom_set(z, e.expo);
        CHECK(direct.size() == curried.size());
        for (const PresheafMap& f : direct) {
            PresheafMap g = curry(e, zp, z, f);
            CHECK(uncurry(e, zp, z, g) == f);
        }
    }
    // evaluation agrees with uncurrying the identity
    BinaryProduct ex = product(e.expo, x);
    PresheafMap ev = evaluation_map(e, ex);
    CHECK(uncurry(e, ex, e.expo, identity_map(e.expo)) == ev);
}

TEST_CASE("image/preimage adjointness on subobject lattices") {
    auto p2 = poset2();
    Presheaf x = poset2_presheaf(p2, 2, 2, {0, 0});
    Presheaf y = poset2_presheaf(p2, 2, 2, {1, 1});
    for (const PresheafMap& f : hom_set(x, y))
        for (const Subpresheaf& m : all_subpresheaves(x))
            for (const Subpresheaf& n : all_subpresheaves(y))
                CHECK(direct_image(f, m).subset_of(n) == m.subset_of(preimage(f, n)));
}

TEST_CASE("presheaf enumeration up to isomorphism") {
    auto one = terminal_category();
    CHECK(enumerate_presheaves(one, 1).size() == 2);
    CHECK(enumerate_presheaves(one, 2).size() == 3);

    // brute-force oracle on poset 2: enumerate every table, quotient by
    // explicit iso testing (pointwise bijections commuting with restriction)
    auto p2 = poset2();
    auto classes = enumerate_presheaves(p2, 2);
    std::vector<Presheaf> all;
    for (int c0 = 0; c0 <= 2; ++c0)
        for (int c1 = 0; c1 <= 2; ++c1) {
            if (c1 > 0 && c0 == 0) continue;  // no restriction function exists
            std::vector<int32_t> t(c1, 0);
            for (;;) {
                all.push_back(poset2_presheaf(p2, c0, c1, t));
                int k = c1 - 1;
                while (k >= 0 && t[k] == c0 - 1) t[k--] = 0;
                if (k < 0 || c1 == 0) break;
                ++t[k];
            }
        }
    auto isomorphic = [](const Presheaf& a, const Presheaf& b) {
        if (a.cards() != b.cards()) return false;
        for (const PresheafMap& h : hom_set(a, b))
            if (h.pointwise_bijective()) return true;
        return false;
    };
    std::vector<Presheaf> reps;
    for (const Presheaf& x : all) {
        bool seen = false;
        for (const Presheaf& r : reps)
            if (isomorphic(x, r)) seen = true;
        if (!seen) reps.push_back(x);
    }
    CHECK(classes.size() == reps.size());
    // representatives are canonical: re-encoding is idempotent
    for (const Presheaf& x : classes)
        CHECK(canonical_encoding(x) == x.encode());
}
