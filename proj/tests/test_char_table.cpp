#include <gtest/gtest.h>

#include <set>

#include "fgchar/char_table.hpp"
#include "fgchar/constructions.hpp"
#include "fgchar/named.hpp"

using namespace fgchar;

namespace {

std::vector<long> degrees(const CharacterTable& t) {
    std::vector<long> d;
    for (int i = 0; i < t.size(); ++i) d.push_back(t.degree(i));
    return d;
}

void expect_orthogonal(const GroupPtr& g) {
    const auto& t = character_table(g, 1000);
    const auto& cc = conjugacy_classes(g);
    ASSERT_EQ(t.size(), cc.size());
    long sum = 0;
    for (int i = 0; i < t.size(); ++i) sum += t.degree(i) * t.degree(i);
    EXPECT_EQ(sum, g->order());
    for (int i = 0; i < t.size(); ++i)
        for (int j = 0; j < t.size(); ++j) EXPECT_EQ(inner_product(t.rows[i], t.rows[j]), CycNum(i == j ? 1 : 0));
    for (int a = 0; a < cc.size(); ++a)
        for (int b = 0; b < cc.size(); ++b) {
            CycNum s(0);
            for (const auto& row : t.rows) s += row.values[a] * row.values[b].conj();
            EXPECT_EQ(s, CycNum(a == b ? g->order() / cc.class_size(a) : 0));
        }
}

}  // namespace

TEST(CharTable, Trivial) {
    const auto& t = character_table(cyclic(1));
    ASSERT_EQ(t.size(), 1);
    EXPECT_EQ(t.rows[0].values[0], CycNum(1));
}

TEST(CharTable, CyclicThree) {
    auto g = cyclic(3);
    const auto& t = character_table(g);
    ASSERT_EQ(t.size(), 3);
    const auto& cc = conjugacy_classes(g);
    int gen = *g->named("g");
    int c1 = cc.class_of[gen], c2 = cc.class_of[g->mul(gen, gen)];
    EXPECT_EQ(t.rows[0].values[c1], CycNum(1));
    EXPECT_EQ(t.rows[1].values[c1], CycNum::root(3, 1));
    EXPECT_EQ(t.rows[1].values[c2], CycNum::root(3, 2));
    EXPECT_EQ(t.rows[2].values[c1], CycNum::root(3, 2));
    EXPECT_EQ(t.rows[2].values[c2], CycNum::root(3, 1));
}

TEST(CharTable, AbelianMatchesDualGroup) {
    // independent oracle: characters of Z/m x Z/n are (a,b) -> zeta_m^(ia) zeta_n^(jb)
    for (auto [m, n] : std::vector<std::pair<int, int>>{{4, 2}, {6, 1}, {3, 3}, {8, 4}, {5, 2}}) {
        auto prod = direct_product(cyclic(m), cyclic(n));
        auto g = prod.group;
        const auto& t = character_table(g);
        const auto& cc = conjugacy_classes(g);
        std::set<std::vector<std::string>> expected, actual;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) {
                std::vector<std::string> row(static_cast<std::size_t>(cc.size()));
                for (int x = 0; x < g->order(); ++x) {
                    int a = prod.projections[0](x), b = prod.projections[1](x);
                    row[cc.class_of[x]] = (CycNum::root(m, static_cast<long long>(i) * a) * CycNum::root(n, static_cast<long long>(j) * b))
                                              .embed(g->exponent())
                                              .to_string();
                }
                expected.insert(row);
            }
        for (const auto& r : t.rows) {
            std::vector<std::string> row;
            for (const auto& v : r.values) row.push_back(v.embed(g->exponent()).to_string());
            actual.insert(row);
        }
        EXPECT_EQ(expected, actual) << m << "x" << n;
    }
}

TEST(CharTable, Degrees) {
    EXPECT_EQ(degrees(character_table(dihedral(8))), (std::vector<long>{1, 1, 1, 1, 2}));
    EXPECT_EQ(degrees(character_table(generalized_quaternion(8))), (std::vector<long>{1, 1, 1, 1, 2}));
    EXPECT_EQ(degrees(character_table(symmetric(4))), (std::vector<long>{1, 1, 2, 3, 3}));
    EXPECT_EQ(degrees(character_table(alternating(5))), (std::vector<long>{1, 3, 3, 4, 5}));
    EXPECT_EQ(degrees(character_table(example_heisenberg_pair().group)), (std::vector<long>{1, 1, 1, 1, 1, 1, 1, 1, 2, 2}));
}

TEST(CharTable, TrivialRowFirst) {
    for (auto g : {dihedral(8), symmetric(4), alternating(5), cyclic(7), heisenberg(3)}) {
        const auto& t = character_table(g);
        EXPECT_EQ(t.rows[0], trivial_character(g));
    }
}

TEST(CharTable, Orthogonality) {
    for (auto g : {dihedral(8), dihedral(10), generalized_quaternion(16), symmetric(4), alternating(5), heisenberg(3),
                   example_heisenberg_pair().group, example_d8_c4().group, direct_product(symmetric(3), cyclic(4)).group,
                   symmetric(5)})
        expect_orthogonal(g);
}

TEST(CharTable, LargerGroups) {
    expect_orthogonal(example_d8_cube().group);
    expect_orthogonal(symmetric(6));
}

TEST(CharTable, RegularCharacter) {
    auto g = symmetric(4);
    const auto& t = character_table(g);
    auto reg = regular_character(g);
    EXPECT_EQ(inner_product(reg, trivial_character(g)), CycNum(1));
    EXPECT_EQ(inner_product(reg, reg), CycNum(24));
    for (int i = 0; i < t.size(); ++i) EXPECT_EQ(inner_product(reg, t.rows[i]), CycNum(t.degree(i)));
    auto c2 = cyclic(2);
    auto rc = regular_character(c2);
    EXPECT_EQ(rc.values[0], CycNum(2));
    EXPECT_EQ(rc.values[1], CycNum(0));
}

TEST(CharTable, Errors) {
    EXPECT_THROW(character_table(symmetric(6), 100), Error);
    EXPECT_THROW(inner_product(trivial_character(cyclic(2)), trivial_character(cyclic(2))), Error);
}

TEST(CharTable, Deterministic) {
    auto a = compute_character_table(symmetric(4));
    auto b = compute_character_table(symmetric(4));
    ASSERT_EQ(a.size(), b.size());
    for (int i = 0; i < a.size(); ++i) EXPECT_EQ(a.rows[i].values, b.rows[i].values);
}
