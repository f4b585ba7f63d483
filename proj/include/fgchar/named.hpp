#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "fgchar/constructions.hpp"
#include "fgchar/group.hpp"

namespace fgchar {

namespace detail {

/// "x^2 y z^3" style label; exponents 0 are dropped, the empty word is "1".
inline std::string monomial(const std::vector<std::pair<std::string, int>>& parts) {
    std::string out;
    for (const auto& [sym, e] : parts) {
        if (e == 0) continue;
        if (!out.empty()) out += ' ';
        out += sym;
        if (e != 1) out += '^' + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

inline bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

template <class Product>
GroupPtr table_group(int n, Product product, const std::vector<std::string>& labels, NamedElements names,
                     std::vector<int> generators) {
    std::vector<std::uint16_t> flat(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) flat[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>(product(a, b));
    return FiniteGroup::from_trusted_table(n, std::move(flat), labels, std::move(names), std::move(generators));
}

}  // namespace detail

/// Z/n, generator g.
inline GroupPtr cyclic(int n) {
    if (n < 1 || n > kMaxGroupOrder) fail(ErrorCode::ParameterOutOfRange, "C(" + std::to_string(n) + ")");
    std::vector<std::string> labels;
    for (int k = 0; k < n; ++k) labels.push_back(detail::monomial({{"g", k}}));
    NamedElements names;
    std::vector<int> gens;
    if (n > 1) {
        names.emplace_back("g", 1);
        gens.push_back(1);
    }
    return detail::table_group(n, [n](int a, int b) { return (a + b) % n; }, labels, std::move(names), std::move(gens));
}

/// Dihedral group of order `order` (even, >= 2): r^i s^j at index i + m*j,
/// m = order/2. Names r, s and, when m is even, z = r^(m/2).
inline GroupPtr dihedral(int order) {
    if (order < 2 || order % 2 || order > kMaxGroupOrder) fail(ErrorCode::ParameterOutOfRange, "D(" + std::to_string(order) + ")");
    const int m = order / 2;
    std::vector<std::string> labels;
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < m; ++i) labels.push_back(detail::monomial({{"r", i}, {"s", j}}));
    auto product = [m](int a, int b) {
        int i = a % m, j = a / m, k = b % m, l = b / m;
        int e = j ? i - k : i + k;
        return ((e % m) + m) % m + m * ((j + l) % 2);
    };
    NamedElements names;
    std::vector<int> gens;
    if (m > 1) {
        names.emplace_back("r", 1);
        gens.push_back(1);
    }
    names.emplace_back("s", m);
    gens.push_back(m);
    if (m % 2 == 0) names.emplace_back("z", m / 2);
    return detail::table_group(order, product, labels, std::move(names), std::move(gens));
}

/// Generalized quaternion group of order `order` = 4n, n >= 2: a^i b^j at
/// index i + 2n*j, b^2 = a^n, b^-1 a b = a^-1. Names a, b, z = a^n.
inline GroupPtr generalized_quaternion(int order) {
    if (order < 8 || order % 4 || order > kMaxGroupOrder) fail(ErrorCode::ParameterOutOfRange, "Q(" + std::to_string(order) + ")");
    const int n = order / 4, m = 2 * n;
    std::vector<std::string> labels;
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < m; ++i) labels.push_back(detail::monomial({{"a", i}, {"b", j}}));
    auto product = [n, m](int x, int y) {
        int i = x % m, j = x / m, k = y % m, l = y / m;
        int e = j ? i - k : i + k;
        if (j && l) e += n;
        return ((e % m) + m) % m + m * ((j + l) % 2);
    };
    NamedElements names{{"a", 1}, {"b", m}, {"z", n}};
    return detail::table_group(order, product, labels, std::move(names), {1, m});
}

/// Permutation group whose generators carry the given names.
inline GroupPtr named_permutation_group(int degree, const std::vector<std::pair<std::string, Permutation>>& gens) {
    std::vector<Permutation> perms;
    for (const auto& [name, p] : gens) perms.push_back(p);
    Permutation id(static_cast<std::size_t>(degree));
    std::iota(id.begin(), id.end(), 0);
    auto elems = bfs_closure<Permutation>(id, perms, compose, static_cast<std::size_t>(kMaxGroupOrder));
    NamedElements names;
    std::vector<int> idx;
    for (const auto& [name, p] : gens) {
        int k = index_of_permutation(elems, p);
        names.emplace_back(name, k);
        idx.push_back(k);
    }
    return group_from_elements<Permutation>(elems, compose, cycle_notation, std::move(names), std::move(idx));
}

/// S_n (n <= 6) from c = (0 1 ... n-1) and t = (0 1).
inline GroupPtr symmetric(int n) {
    if (n < 1 || n > 6) fail(ErrorCode::ParameterOutOfRange, "S(" + std::to_string(n) + ")");
    if (n == 1) return named_permutation_group(1, {});
    Permutation c(static_cast<std::size_t>(n)), t(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        c[i] = (i + 1) % n;
        t[i] = i;
    }
    std::swap(t[0], t[1]);
    return named_permutation_group(n, {{"c", c}, {"t", t}});
}

/// A_n (n <= 6) from u = (0 1 2) and v = (0 1 ... n-1) for odd n,
/// v = (1 2 ... n-1) for even n.
inline GroupPtr alternating(int n) {
    if (n < 1 || n > 6) fail(ErrorCode::ParameterOutOfRange, "A(" + std::to_string(n) + ")");
    if (n < 3) return named_permutation_group(n, {});
    Permutation u(static_cast<std::size_t>(n)), v(static_cast<std::size_t>(n));
    std::iota(u.begin(), u.end(), 0);
    u[0] = 1;
    u[1] = 2;
    u[2] = 0;
    if (n % 2) {
        for (int i = 0; i < n; ++i) v[i] = (i + 1) % n;
    } else {
        v[0] = 0;
        for (int i = 1; i < n; ++i) v[i] = i + 1 < n ? i + 1 : 1;
    }
    if (n == 3) return named_permutation_group(n, {{"u", u}});
    return named_permutation_group(n, {{"u", u}, {"v", v}});
}

/// (Z/p)^k with basis a, b, c, ...; index = base-p digits, first coordinate most significant.
inline GroupPtr elementary_abelian(int p, int k) {
    if (!detail::is_prime(p) || k < 1 || k > 26) fail(ErrorCode::ParameterOutOfRange, "EA(" + std::to_string(p) + "," + std::to_string(k) + ")");
    long long order = 1;
    for (int i = 0; i < k; ++i) {
        order *= p;
        if (order > kMaxGroupOrder) fail(ErrorCode::ParameterOutOfRange, "EA order exceeds " + std::to_string(kMaxGroupOrder));
    }
    std::vector<GroupPtr> factors(static_cast<std::size_t>(k), cyclic(p));
    auto prod = direct_product(factors, false).group;
    const int n = static_cast<int>(order);
    std::vector<int> place(static_cast<std::size_t>(k));
    for (int i = 0, s = n / p; i < k; ++i, s /= p) place[i] = s;
    std::vector<std::string> labels;
    for (int x = 0; x < n; ++x) {
        std::vector<std::pair<std::string, int>> parts;
        for (int i = 0; i < k; ++i) parts.emplace_back(std::string(1, static_cast<char>('a' + i)), (x / place[i]) % p);
        labels.push_back(detail::monomial(parts));
    }
    NamedElements names;
    for (int i = 0; i < k; ++i) names.emplace_back(std::string(1, static_cast<char>('a' + i)), place[i]);
    return detail::table_group(n, [&](int a, int b) { return prod->mul(a, b); }, labels, std::move(names), place);
}

/// Heisenberg group over Z/m: (a,b,c) at index a*m^2 + b*m + c with
/// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab'). Names x, y, z with [x,y] = z.
inline GroupPtr heisenberg(int m) {
    if (m < 2 || m * m * m > kMaxGroupOrder) fail(ErrorCode::ParameterOutOfRange, "Heis(" + std::to_string(m) + ")");
    const int n = m * m * m;
    std::vector<std::string> labels;
    for (int x = 0; x < n; ++x) labels.push_back(detail::monomial({{"x", x / (m * m)}, {"y", (x / m) % m}, {"z", x % m}}));
    auto product = [m](int u, int v) {
        int a = u / (m * m), b = (u / m) % m, c = u % m;
        int a2 = v / (m * m), b2 = (v / m) % m, c2 = v % m;
        return ((a + a2) % m) * m * m + ((b + b2) % m) * m + (c + c2 + a * b2) % m;
    };
    NamedElements names{{"x", m * m}, {"y", m}, {"z", 1}};
    return detail::table_group(n, product, labels, std::move(names), {m * m, m});
}

/// A group together with a designated subgroup, as used by the worked examples.
struct ExampleGroup {
    GroupPtr group;
    Subgroup designated;
};

/// <x, y^2> inside Heis(4), order 16, with H = <x>.
inline ExampleGroup example_heisenberg_pair() {
    auto heis = heisenberg(4);
    int x = *heis->named("x"), y = *heis->named("y");
    int y2 = heis->mul(y, y);
    int gens[2] = {x, y2};
    auto sub = as_group(subgroup_generated(heis, gens), gens);
    auto g = sub.group;
    // rebuild with the example's names
    std::vector<int> local_gens = g->generators();
    int lx = local_gens[0], ly2 = local_gens[1];
    int lz2 = g->commutator(lx, ly2);
    std::vector<std::uint16_t> flat;
    const int n = g->order();
    flat.reserve(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) flat.push_back(static_cast<std::uint16_t>(g->mul(a, b)));
    auto named = FiniteGroup::from_trusted_table(n, std::move(flat), g->labels(), {{"x", lx}, {"y2", ly2}, {"z2", lz2}}, {lx, ly2});
    int hx[1] = {lx};
    return {named, subgroup_generated(named, hx)};
}

/// (D8 x D8 x D8)/<z1 z2 z3>, order 256, with H = image of <s1, s2, s3>.
inline ExampleGroup example_d8_cube() {
    auto d8 = dihedral(8);
    auto prod = direct_product({d8, d8, d8}).group;
    int z1 = *prod->named("z1"), z2 = *prod->named("z2"), z3 = *prod->named("z3");
    int zzz[1] = {prod->mul(prod->mul(z1, z2), z3)};
    auto q = quotient(subgroup_generated(prod, zzz));
    const auto& g = q.group;
    int s[3] = {*g->named("s1"), *g->named("s2"), *g->named("s3")};
    return {g, subgroup_generated(g, s)};
}

/// C4 x| D8 with both a and b inverting c (the D8 generators r, s renamed
/// a, b), order 32, with H = <a^2, c>.
inline ExampleGroup example_d8_c4() {
    auto c4 = cyclic(4);
    auto d8 = dihedral(8);
    std::vector<int> inversion(4);
    for (int k = 0; k < 4; ++k) inversion[k] = c4->inv(k);
    auto action = action_from_generators(*c4, *d8, d8->generators(), {inversion, inversion});
    auto sd = semidirect_product(c4, d8, action);
    const auto& p = sd.group;
    int a = sd.embed_h(*d8->named("r")), b = sd.embed_h(*d8->named("s")), c = sd.embed_n(*c4->named("g"));
    const int n = p->order();
    std::vector<std::uint16_t> flat;
    flat.reserve(static_cast<std::size_t>(n) * n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) flat.push_back(static_cast<std::uint16_t>(p->mul(u, v)));
    // labels in the example's alphabet: c^k a^i b^j
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) {
        int k = u / d8->order(), h = u % d8->order();
        labels[u] = detail::monomial({{"c", k}, {"a", h % 4}, {"b", h / 4}});
    }
    auto g = FiniteGroup::from_trusted_table(n, std::move(flat), std::move(labels), {{"a", a}, {"b", b}, {"c", c}}, {a, b, c});
    int h[2] = {g->mul(a, a), c};
    return {g, subgroup_generated(g, h)};
}

}  // namespace fgchar
