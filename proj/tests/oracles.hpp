#pragma once

// Independent brute-force references used only by the tests. None of these
// call into the library's algorithms beyond reading multiplication tables.

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "fgchar/char_table.hpp"
#include "fgchar/group.hpp"

namespace oracle {

using fgchar::FiniteGroup;

inline std::vector<int> orders(const FiniteGroup& g) {
    std::vector<int> out(static_cast<std::size_t>(g.order()));
    for (int x = 0; x < g.order(); ++x) {
        int y = x, k = 1;
        while (y != g.identity()) {
            y = g.mul(y, x);
            ++k;
        }
        out[x] = k;
    }
    return out;
}

/// Closure by repeated squaring of the set under products until stable.
inline std::set<int> closure(const FiniteGroup& g, std::set<int> s) {
    s.insert(g.identity());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(s.begin(), s.end());
        for (int a : cur)
            for (int b : cur)
                if (s.insert(g.mul(a, b)).second) grew = true;
    }
    return s;
}

inline std::set<int> center(const FiniteGroup& g) {
    std::set<int> z;
    for (int a = 0; a < g.order(); ++a) {
        bool c = true;
        for (int b = 0; b < g.order() && c; ++b) c = g.mul(a, b) == g.mul(b, a);
        if (c) z.insert(a);
    }
    return z;
}

/// Every subgroup by brute force over closures of subsets of size <= 3.
inline std::set<std::set<int>> subgroups_small(const FiniteGroup& g) {
    std::set<std::set<int>> out;
    const int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b)
            for (int c = b; c < n; ++c) out.insert(closure(g, {a, b, c}));
    return out;
}

/// Brute-force isomorphism search for small groups: backtracking over the
/// images of a generating set, checking the induced map is a bijective
/// homomorphism.
inline bool isomorphic(const FiniteGroup& g1, const FiniteGroup& g2) {
    if (g1.order() != g2.order()) return false;
    auto o1 = orders(g1), o2 = orders(g2);
    {
        auto s1 = o1, s2 = o2;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 != s2) return false;
    }
    const int n = g1.order();
    std::vector<int> gens;
    {
        std::set<int> reached{g1.identity()};
        for (int x = 0; x < n; ++x)
            if (!reached.count(x)) {
                gens.push_back(x);
                std::set<int> seed(gens.begin(), gens.end());
                reached = closure(g1, seed);
            }
    }
    std::vector<int> images(gens.size());
    std::function<bool(std::size_t)> search = [&](std::size_t k) -> bool {
        if (k == gens.size()) {
            // extend by BFS over words
            std::vector<int> phi(static_cast<std::size_t>(n), -1);
            phi[g1.identity()] = g2.identity();
            std::vector<int> queue{g1.identity()};
            for (std::size_t i = 0; i < queue.size(); ++i)
                for (std::size_t j = 0; j < gens.size(); ++j) {
                    int x = g1.mul(queue[i], gens[j]);
                    int y = g2.mul(phi[queue[i]], images[j]);
                    if (phi[x] < 0) {
                        phi[x] = y;
                        queue.push_back(x);
                    } else if (phi[x] != y) {
                        return false;
                    }
                }
            std::vector<char> hit(static_cast<std::size_t>(n), 0);
            for (int v : phi) {
                if (hit[v]) return false;
                hit[v] = 1;
            }
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (phi[g1.mul(a, b)] != g2.mul(phi[a], phi[b])) return false;
            return true;
        }
        for (int y = 0; y < n; ++y) {
            if (o2[y] != o1[gens[k]]) continue;
            images[k] = y;
            if (search(k + 1)) return true;
        }
        return false;
    };
    return search(0);
}

/// Induced character by the element-sum formula
/// Ind(g) = (1/|H|) sum over x in G with x^-1 g x in H of rho(x^-1 g x),
/// returned per element of G. `in_h[g]` is the local index of g in H or -1.
inline std::vector<fgchar::CycNum> induced_by_elements(const FiniteGroup& g, const std::vector<int>& in_h,
                                                       const std::vector<fgchar::CycNum>& rho_on_h, int h_order) {
    std::vector<fgchar::CycNum> out(static_cast<std::size_t>(g.order()), fgchar::CycNum(0));
    for (int y = 0; y < g.order(); ++y) {
        fgchar::CycNum s(0);
        for (int x = 0; x < g.order(); ++x) {
            int c = g.mul(g.mul(g.inv(x), y), x);
            if (in_h[c] >= 0) s += rho_on_h[in_h[c]];
        }
        out[y] = s.scaled(mpq_class(1, h_order));
    }
    return out;
}

/// Elements acting as scalars for an irreducible character given per element:
/// g qualifies iff chi(g x) = (chi(g)/chi(1)) chi(x) for every x.
inline std::set<int> scalar_elements(const FiniteGroup& g, const std::vector<fgchar::CycNum>& chi) {
    std::set<int> out;
    const mpq_class deg = *chi[g.identity()].is_rational();
    for (int a = 0; a < g.order(); ++a) {
        fgchar::CycNum lambda = chi[a].scaled(1 / deg);
        bool scalar = true;
        for (int x = 0; x < g.order() && scalar; ++x) scalar = chi[g.mul(a, x)] == lambda * chi[x];
        if (scalar) out.insert(a);
    }
    return out;
}

inline std::set<int> kernel_elements(const FiniteGroup& g, const std::vector<fgchar::CycNum>& chi) {
    std::set<int> out;
    for (int a = 0; a < g.order(); ++a)
        if (chi[a] == chi[g.identity()]) out.insert(a);
    return out;
}

/// Values of a class function spread out to every element.
inline std::vector<fgchar::CycNum> per_element(const fgchar::ClassFunction& f) {
    std::vector<fgchar::CycNum> out;
    for (int x = 0; x < f.group->order(); ++x) out.push_back(fgchar::value_at(f, x));
    return out;
}

/// (1/|G|) sum_g a(g) conj(b(g)) over elements.
inline fgchar::CycNum inner(const FiniteGroup& g, const std::vector<fgchar::CycNum>& a, const std::vector<fgchar::CycNum>& b) {
    fgchar::CycNum s(0);
    for (int x = 0; x < g.order(); ++x) s += a[x] * b[x].conj();
    return s.scaled(mpq_class(1, g.order()));
}

inline bool is_abelian_set(const FiniteGroup& g, const std::set<int>& s) {
    for (int a : s)
        for (int b : s)
            if (g.mul(a, b) != g.mul(b, a)) return false;
    return true;
}

/// Rank over F_p of integer vectors (entries reduced mod p).
inline int rank_mod_p(std::vector<std::vector<int>> rows, int p) {
    int rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        int piv = -1;
        for (std::size_t r = static_cast<std::size_t>(rank); r < rows.size(); ++r)
            if (((rows[r][c] % p) + p) % p) {
                piv = static_cast<int>(r);
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        int inv = 1;
        while ((((rows[rank][c] * inv) % p) + p) % p != 1) ++inv;
        for (auto& v : rows[rank]) v = ((v * inv) % p + p) % p;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(r) == rank) continue;
            int f = ((rows[r][c] % p) + p) % p;
            if (f)
                for (std::size_t k = 0; k < cols; ++k) rows[r][k] = ((rows[r][k] - f * rows[rank][k]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

}  // namespace oracle
