#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fgchar/catalog.hpp"
#include "fgchar/rep_analysis.hpp"
#include "oracles.hpp"

using namespace fgchar;

namespace {

std::set<int> as_set(const Subgroup& s) { return {s.elements().begin(), s.elements().end()}; }

std::vector<int> local_index(const EmbeddedSubgroup& e) {
    std::vector<int> in_h(static_cast<std::size_t>(e.subgroup.parent()->order()), -1);
    for (int h = 0; h < e.group->order(); ++h) in_h[e.inclusion(h)] = h;
    return in_h;
}

}  // namespace

TEST(RepAnalysis, KernelsAndCentersMatchElementwiseOracles) {
    for (auto g : {dihedral(8), generalized_quaternion(8), symmetric(4), heisenberg(3), dsl::evaluate("D(8) x C(3)").group}) {
        const auto& t = character_table(g);
        for (int r = 0; r < t.size(); ++r) {
            auto chi = oracle::per_element(t.rows[r]);
            EXPECT_EQ(as_set(row_kernels(t)[r]), oracle::kernel_elements(*g, chi));
            EXPECT_EQ(as_set(row_centers(t)[r]), oracle::scalar_elements(*g, chi));
        }
    }
}

TEST(RepAnalysis, D8FaithfulRowIsTheDegreeTwo) {
    auto g = dihedral(8);
    const auto& t = character_table(g);
    auto f = faithful_rows(t);
    ASSERT_EQ(f.size(), 1u);
    EXPECT_EQ(t.degree(f[0]), 2);
    EXPECT_EQ(char_center(t.rows[f[0]]), center(g));
    EXPECT_TRUE(is_center_preserving(t.rows[f[0]]));
}

TEST(RepAnalysis, InduceMatchesElementSumFormula) {
    auto ex = example_d8_c4();
    auto emb = as_group(ex.designated);
    auto in_h = local_index(emb);
    const auto& th = character_table(emb.group);
    for (const auto& rho : th.rows) {
        auto ind = induce(rho, emb.inclusion);
        auto expect = oracle::induced_by_elements(*ex.group, in_h, oracle::per_element(rho), emb.group->order());
        EXPECT_EQ(oracle::per_element(ind), expect);
    }
}

TEST(RepAnalysis, DecomposeRegularCharacter) {
    for (auto g : {symmetric(4), dsl::evaluate("Q(8) x C(3)").group, alternating(5)}) {
        const auto& t = character_table(g);
        ClassFunction reg{g, std::vector<CycNum>(t.rows[0].values.size(), CycNum(0))};
        reg.values[0] = CycNum(g->order());
        auto d = decompose(reg, t);
        ASSERT_EQ(static_cast<int>(d.components.size()), t.size());
        for (auto [row, m] : d.components) EXPECT_EQ(m, t.degree(row));
    }
}

TEST(RepAnalysis, DecomposeRejectsNonCharacter) {
    auto g = symmetric(3);
    const auto& t = character_table(g);
    ClassFunction half{g, t.rows[0].values};
    for (auto& v : half.values) v = v.scaled(mpq_class(1, 2));
    EXPECT_THROW(decompose(half, t), Error);
}

TEST(RepAnalysis, HeisenbergPairConstituents) {
    auto ex = example_heisenberg_pair();
    auto emb = as_group(ex.designated);
    const auto& th = character_table(emb.group);
    const auto& tg = character_table(ex.group);
    auto report = cp_report(emb.inclusion, th, tg);
    ASSERT_EQ(report.entries.size(), 2u);
    auto in_h = local_index(emb);
    const auto zg = oracle::center(*ex.group);
    for (const auto& e : report.entries) {
        std::multiset<long> degs;
        int both = 0;
        for (const auto& c : e.constituents) {
            degs.insert(c.degree);
            EXPECT_EQ(c.multiplicity, 1);
            auto sigma = oracle::per_element(tg.rows[c.row]);
            auto ker = oracle::kernel_elements(*ex.group, sigma);
            auto zs = oracle::scalar_elements(*ex.group, sigma);
            bool faithful = true, cp = true;
            for (int x : ex.designated.elements()) {
                if (x != ex.group->identity() && ker.count(x)) faithful = false;
                if (zs.count(x) && !zg.count(x)) cp = false;
            }
            EXPECT_EQ(c.faithful_on_h, faithful);
            EXPECT_EQ(c.cp_on_h, cp);
            both += faithful && cp;
        }
        EXPECT_EQ(degs, (std::multiset<long>{1, 1, 2}));
        EXPECT_EQ(both, 1);
        EXPECT_TRUE(e.satisfied);
    }
}

TEST(RepAnalysis, D8C4CenterPreservingRowsOnH) {
    auto ex = example_d8_c4();
    const auto& tg = character_table(ex.group);
    auto emb = as_group(ex.designated);
    const auto zg = oracle::center(*ex.group);
    int cp = 0;
    for (int r = 0; r < tg.size(); ++r) {
        auto zs = oracle::scalar_elements(*ex.group, oracle::per_element(tg.rows[r]));
        bool want = true;
        for (int x : ex.designated.elements())
            if (zs.count(x) && !zg.count(x)) want = false;
        EXPECT_EQ(row_cp_on(tg, r, emb.inclusion), want);
        cp += want;
    }
    // the witness c -> diag(i,-i), a -> [[0,1],[-1,0]], b -> [[0,1],[1,0]] is one of these
    EXPECT_EQ(cp, 4);
}

TEST(RepAnalysis, FrobeniusReciprocitySampled) {
    std::mt19937 rng(7);
    std::vector<GroupPtr> groups = {symmetric(4), dihedral(12), generalized_quaternion(16), heisenberg(3),
                                    dsl::evaluate("sdp(C(4), C(4), inversion)").group};
    for (int trial = 0; trial < 60; ++trial) {
        const auto& g = groups[rng() % groups.size()];
        auto subs = all_subgroups(g);
        auto emb = as_group(subs[rng() % subs.size()]);
        const auto& th = character_table(emb.group);
        const auto& tg = character_table(g);
        const auto& rho = th.rows[rng() % th.size()];
        const auto& sigma = tg.rows[rng() % tg.size()];
        auto lhs = oracle::inner(*g, oracle::per_element(induce(rho, emb.inclusion)), oracle::per_element(sigma));
        auto rhs = oracle::inner(*emb.group, oracle::per_element(rho), oracle::per_element(restrict(sigma, emb.inclusion)));
        EXPECT_EQ(lhs, rhs);
    }
}

TEST(RepAnalysis, GaschutzFlags) {
    auto q8 = gaschutz(generalized_quaternion(8));
    EXPECT_TRUE(q8.faithful_irreducible && q8.socle_single_class && q8.agree());
    auto v4 = gaschutz(elementary_abelian(2, 2));
    EXPECT_FALSE(v4.faithful_irreducible);
    EXPECT_TRUE(v4.agree());
    auto d8 = gaschutz(dihedral(8));
    EXPECT_TRUE(d8.faithful_irreducible && d8.agree());
    auto c2c4 = gaschutz(dsl::evaluate("C(2) x C(4)").group);
    EXPECT_FALSE(c2c4.faithful_irreducible);
    EXPECT_TRUE(c2c4.agree());
}

TEST(RepAnalysis, OmegaAndExistenceOnD8) {
    auto g = dihedral(8);
    auto chars = central_characters(g);
    EXPECT_EQ(chars.size(), 2u);
    for (const auto& chi : chars) EXPECT_TRUE(omega_chi(g, chi).agree());
    auto ex = cp_existence(g);
    EXPECT_TRUE(ex.exists());
    EXPECT_TRUE(ex.routes_agree());
}

TEST(RepAnalysis, QuasikernelIsCenter) {
    for (auto g : {dihedral(8), symmetric(4), heisenberg(3), alternating(5), dsl::evaluate("Q(8) x D(6)").group})
        EXPECT_EQ(as_set(quasikernel_intersection(g)), oracle::center(*g));
}

TEST(RepAnalysis, InvalidInputsThrow) {
    auto g = dihedral(8);
    const auto& t = character_table(g);
    auto emb = as_group(center(g));
    const auto& th = character_table(emb.group);
    // the trivial row of Z(D8) is not faithful
    EXPECT_THROW(find_cp_constituents(th.rows[0], emb.inclusion, t), Error);
}
