#include <gtest/gtest.h>

#include "fgchar/dsl.hpp"
#include "fgchar/gmodule.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace fgchar;

namespace {

/// Some vector whose orbit spans F_3^dim, by Gaussian elimination.
bool cyclic_by_rank(const GModule& m, int dim) {
    for (int v = 0; v < m.order(); ++v) {
        std::vector<std::vector<int>> rows;
        for (int g = 0; g < m.actor->order(); ++g) rows.push_back(fixture::digits(m.act[g][v], dim));
        if (oracle::rank_mod_p(rows, 3) == dim) return true;
    }
    return false;
}

}  // namespace

TEST(GModule, Sl23NaturalPowers) {
    auto s = fixture::sl23();
    ASSERT_EQ(s.group->order(), 24);
    for (int k = 1; k <= 3; ++k) {
        auto m = fixture::natural_power(s, k);
        const bool lib = is_cyclic_module(m).cyclic;
        EXPECT_EQ(lib, cyclic_by_rank(m, 2 * k)) << "k=" << k;
        EXPECT_EQ(lib, k <= 2) << "k=" << k;
        auto gens = module_generators(m);
        EXPECT_EQ(submodule_generated(m, gens).order(), m.order());
        EXPECT_LE(static_cast<int>(gens.size()), k);
    }
}

TEST(GModule, CyclicWitnessGenerates) {
    auto s = fixture::sl23();
    auto m = fixture::natural_power(s, 2);
    auto r = is_cyclic_module(m);
    ASSERT_TRUE(r.generator);
    std::vector<std::vector<int>> rows;
    for (int g = 0; g < 24; ++g) rows.push_back(fixture::digits(m.act[g][*r.generator], 4));
    EXPECT_EQ(oracle::rank_mod_p(rows, 3), 4);
}

TEST(GModule, SimpleSubmodulesOfVSquared) {
    // V+V has one simple submodule per point of P^1(F_3)
    auto m = fixture::natural_power(fixture::sl23(), 2);
    auto simples = simple_submodules(m);
    EXPECT_EQ(simples.size(), 4u);
    for (const auto& sm : simples) {
        EXPECT_EQ(sm.order(), 9);
        auto c = complement_in_semisimple(m, sm);
        EXPECT_EQ(c.order(), 9);
        EXPECT_TRUE(c.intersect(sm).is_trivial());
        EXPECT_TRUE(module_isomorphism(submodule_as_module(m, sm), section_module(m, Subgroup::whole(m.carrier), c)));
    }
}

TEST(GModule, DualityLaws) {
    auto s = fixture::sl23();
    auto v = fixture::natural_power(s, 1);
    auto dv = dual_module(v);
    EXPECT_EQ(dv.module.order(), 9);
    // the natural module of SL(2,3) is symplectic, hence self-dual
    EXPECT_TRUE(module_isomorphism(v, dv.module));
    EXPECT_TRUE(module_isomorphism(v, dual_module(dv.module).module));

    // C3 acting on C7 by doubling: the dual acts by 4, which is not isomorphic
    auto c7 = cyclic(7), c3 = cyclic(3);
    std::vector<std::vector<int>> act(3, std::vector<int>(7));
    for (int k = 0, f = 1; k < 3; ++k, f = f * 2 % 7)
        for (int x = 0; x < 7; ++x) act[k][x] = x * f % 7;
    auto w = make_module(c7, c3, act);
    auto dw = dual_module(w);
    EXPECT_FALSE(module_isomorphism(w, dw.module));
    EXPECT_TRUE(module_isomorphism(w, dual_module(dw.module).module));
    // pairing invariance: phi(n) = (g.phi)(g.n)
    for (int g = 0; g < 3; ++g)
        for (int k = 0; k < 7; ++k)
            for (int x = 0; x < 7; ++x) EXPECT_EQ(dw.characters[k][x], dw.characters[dw.module.act[g][k]][w.act[g][x]]);
}

TEST(GModule, SingleClassMatchesCyclicity) {
    for (const char* spec : {"D(8)", "A(4)", "S(4)", "Q(8) x C(2)", "sdp(EA(3,2), C(2), inversion)", "sdp(C(4) x C(4), EA(2,2), diagonal-inversion)",
                             "Heis(3)", "D(12)"}) {
        auto g = dsl::evaluate(spec).group;
        for (const auto& n : all_subgroups(g)) {
            if (!is_normal(n) || !is_abelian(n)) continue;
            EXPECT_EQ(is_generated_by_single_class(n).generated, is_cyclic_module(from_normal_subgroup(n)).cyclic) << spec;
        }
    }
}

TEST(GModule, GoursatWitnessOnDiagonal) {
    auto g = dsl::evaluate("D(6) x D(6)").group;
    int r1 = *g->named("r1"), s1 = *g->named("s1"), r2 = *g->named("r2"), s2 = *g->named("s2");
    int hg[2] = {g->mul(r1, r2), g->mul(s1, s2)}, ng[2] = {r1, s1}, mg[1] = {r2};
    auto h = subgroup_generated(g, hg), n = subgroup_generated(g, ng), m = subgroup_generated(g, mg);
    auto w = goursat_witness(h, m, n);
    EXPECT_TRUE(w.injective);
    EXPECT_TRUE(w.equivariant);
    EXPECT_TRUE(w.homomorphism);
    for (const auto& [x, y] : w.map) EXPECT_TRUE(n.contains(y));
    EXPECT_THROW(goursat_witness(h, n, n), Error);
}

TEST(GModule, ModulesFromNormalSubgroups) {
    auto g = dsl::evaluate("sdp(C(4) x C(4), C(2), inversion)").group;
    const auto& z = center(g);
    auto m = from_normal_subgroup(z);
    for (int x = 0; x < g->order(); ++x)
        for (int v = 0; v < m.order(); ++v) EXPECT_EQ(m.act[x][v], v);
    EXPECT_THROW(make_module(cyclic(3), cyclic(2), {{0, 1, 2}, {0, 1, 1}}), Error);
    EXPECT_THROW(from_normal_subgroup(Subgroup::whole(dihedral(8))), Error);
}
