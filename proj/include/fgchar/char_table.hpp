#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <string>
#include <vector>

#include "fgchar/cyclotomic.hpp"
#include "fgchar/group.hpp"
#include "fgchar/subgroups.hpp"

namespace fgchar {

/// A class function on a group, one value per conjugacy class (in the order
/// of conjugacy_classes(group)).
struct ClassFunction {
    GroupPtr group;
    std::vector<CycNum> values;

    CycNum at_identity() const { return values[0]; }
    /// Value on the identity class as an integer; throws if it is not one.
    long degree() const {
        auto r = values[0].is_rational();
        if (!r || r->get_den() != 1) fail(ErrorCode::NotACharacter, "value at the identity is not an integer");
        return r->get_num().get_si();
    }

    friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
        return a.group == b.group && a.values == b.values;
    }
};

struct CharacterTable {
    GroupPtr group;
    int conductor = 1;   // exponent of the group
    std::vector<ClassFunction> rows;

    const ConjugacyClasses& classes() const { return conjugacy_classes(group); }
    int size() const noexcept { return static_cast<int>(rows.size()); }
    long degree(int row) const { return rows[row].degree(); }
};

inline constexpr int kDefaultTableOrderCap = 512;

namespace modp {

using u64 = std::uint64_t;

inline u64 mul(u64 a, u64 b, u64 p) { return (a * b) % p; }
inline u64 power(u64 a, u64 k, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (k) {
        if (k & 1) r = mul(r, a, p);
        a = mul(a, a, p);
        k >>= 1;
    }
    return r;
}
inline u64 inverse(u64 a, u64 p) { return power(a, p - 2, p); }

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Least prime p with p = 1 (mod e) and p > 2 sqrt(n).
inline u64 choose_prime(u64 e, u64 n) {
    const double bound = 2.0 * std::sqrt(static_cast<double>(n));
    for (u64 p = e + 1;; p += e)
        if (static_cast<double>(p) > bound && is_prime(p)) return p;
}

inline u64 primitive_root(u64 p) {
    std::vector<u64> factors;
    u64 m = p - 1;
    for (u64 d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) factors.push_back(m);
    for (u64 g = 2;; ++g) {
        bool ok = true;
        for (u64 q : factors)
            if (power(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
}

using Matrix = std::vector<std::vector<u64>>;

/// Characteristic polynomial (ascending coefficients, monic) via reduction to
/// upper Hessenberg form.
inline std::vector<u64> charpoly(Matrix a, u64 p) {
    const std::size_t n = a.size();
    for (std::size_t m = 1; m + 1 < n + 1 && m < n; ++m) {
        std::size_t piv = m;
        while (piv < n && a[piv][m - 1] == 0) ++piv;
        if (piv == n) continue;
        if (piv != m) {
            std::swap(a[piv], a[m]);
            for (std::size_t i = 0; i < n; ++i) std::swap(a[i][piv], a[i][m]);
        }
        u64 inv = inverse(a[m][m - 1], p);
        for (std::size_t i = m + 1; i < n; ++i) {
            u64 f = mul(a[i][m - 1], inv, p);
            if (!f) continue;
            for (std::size_t j = 0; j < n; ++j) a[i][j] = (a[i][j] + p - mul(f, a[m][j], p)) % p;
            for (std::size_t j = 0; j < n; ++j) a[j][m] = (a[j][m] + mul(f, a[j][i], p)) % p;
        }
    }
    // p_k = char poly of leading k x k block
    std::vector<std::vector<u64>> polys(n + 1);
    polys[0] = {1};
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<u64> pk(k + 1, 0);
        // (x - a[k-1][k-1]) * p_{k-1}
        for (std::size_t i = 0; i < polys[k - 1].size(); ++i) {
            pk[i + 1] = (pk[i + 1] + polys[k - 1][i]) % p;
            pk[i] = (pk[i] + p - mul(a[k - 1][k - 1], polys[k - 1][i], p)) % p;
        }
        u64 t = 1;
        for (std::size_t i = 1; i < k; ++i) {
            t = mul(t, a[k - i][k - i - 1], p);
            u64 coef = mul(t, a[k - i - 1][k - 1], p);
            for (std::size_t j = 0; j < polys[k - i - 1].size(); ++j)
                pk[j] = (pk[j] + p - mul(coef, polys[k - i - 1][j], p)) % p;
        }
        polys[k] = std::move(pk);
    }
    return polys[n];
}

/// Basis (rows) of the null space of `a` (n x n), in reduced form.
inline Matrix nullspace(Matrix a, u64 p) {
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        u64 inv = inverse(a[r][c], p);
        for (auto& v : a[r]) v = mul(v, inv, p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            u64 f = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] = (a[i][j] + p - mul(f, a[r][j], p)) % p;
        }
        pivot_col.push_back(c);
        ++r;
    }
    Matrix basis;
    std::vector<char> is_pivot(cols, 0);
    for (auto c : pivot_col) is_pivot[c] = 1;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<u64> v(cols, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = (p - a[i][f]) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Row-reduces a list of vectors to reduced echelon form; returns pivot columns.
inline std::vector<std::size_t> row_reduce(Matrix& a, u64 p) {
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        u64 inv = inverse(a[r][c], p);
        for (auto& v : a[r]) v = mul(v, inv, p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            u64 f = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] = (a[i][j] + p - mul(f, a[r][j], p)) % p;
        }
        pivots.push_back(c);
        ++r;
    }
    a.resize(r);
    return pivots;
}

}  // namespace modp

namespace detail {

/// power_class[k][l] = class of reps[k]^l for l < order(reps[k]).
inline std::vector<std::vector<int>> power_classes(const GroupPtr& g) {
    const auto& cc = conjugacy_classes(g);
    std::vector<std::vector<int>> out(static_cast<std::size_t>(cc.size()));
    for (int k = 0; k < cc.size(); ++k) {
        int x = g->identity();
        int m = g->element_order(cc.reps[k]);
        for (int l = 0; l < m; ++l) {
            out[k].push_back(cc.class_of[x]);
            x = g->mul(x, cc.reps[k]);
        }
    }
    return out;
}

inline std::vector<int> inverse_classes(const GroupPtr& g) {
    const auto& cc = conjugacy_classes(g);
    std::vector<int> out(static_cast<std::size_t>(cc.size()));
    for (int k = 0; k < cc.size(); ++k) out[k] = cc.class_of[g->inv(cc.reps[k])];
    return out;
}

/// (A_i)_{jk} = #{x in C_i : x^-1 z_k in C_j} mod p, so that the central
/// character vector is a right eigenvector with eigenvalue omega_i.
inline modp::Matrix class_matrix(const GroupPtr& g, int i, modp::u64 p) {
    const auto& cc = conjugacy_classes(g);
    const int r = cc.size();
    modp::Matrix a(static_cast<std::size_t>(r), std::vector<modp::u64>(static_cast<std::size_t>(r), 0));
    for (int k = 0; k < r; ++k) {
        const int z = cc.reps[k];
        for (int x : cc.classes[i]) {
            int j = cc.class_of[g->mul(g->inv(x), z)];
            a[j][k] = (a[j][k] + 1) % p;
        }
    }
    return a;
}

}  // namespace detail

/// Irreducible characters by Dixon-Schneider. Rows are sorted by degree
/// ascending, then by canonical value coefficients in descending numeric
/// lexicographic order (so the trivial character leads among its degree).
inline CharacterTable compute_character_table(const GroupPtr& g) {
    using modp::u64;
    const auto& cc = conjugacy_classes(g);
    const int r = cc.size();
    const int n = g->order();
    const int e = g->exponent();
    CharacterTable table;
    table.group = g;
    table.conductor = e;
    if (r == 1) {
        table.rows.push_back(ClassFunction{g, {CycNum(1)}});
        return table;
    }

    const u64 p = modp::choose_prime(static_cast<u64>(e), static_cast<u64>(n));
    const u64 z_root = modp::power(modp::primitive_root(p), (p - 1) / static_cast<u64>(e), p);

    // simultaneous eigenvectors by iterative splitting
    struct Space {
        modp::Matrix basis;  // reduced rows
        std::vector<std::size_t> pivots;
        int next_class;
    };
    std::vector<modp::Matrix> matrices(static_cast<std::size_t>(r));
    auto matrix = [&](int i) -> const modp::Matrix& {
        if (matrices[i].empty()) matrices[i] = detail::class_matrix(g, i, p);
        return matrices[i];
    };

    std::vector<std::vector<u64>> eigenvectors;
    std::deque<Space> work;
    {
        modp::Matrix id(static_cast<std::size_t>(r), std::vector<u64>(static_cast<std::size_t>(r), 0));
        std::vector<std::size_t> piv;
        for (int i = 0; i < r; ++i) {
            id[i][i] = 1;
            piv.push_back(static_cast<std::size_t>(i));
        }
        work.push_back({std::move(id), std::move(piv), 1});
    }
    while (!work.empty()) {
        Space sp = std::move(work.front());
        work.pop_front();
        const std::size_t dim = sp.basis.size();
        if (dim == 1) {
            eigenvectors.push_back(sp.basis[0]);
            continue;
        }
        bool split = false;
        for (int i = sp.next_class; i < r && !split; ++i) {
            const auto& a = matrix(i);
            // images A v_t and their coordinates in the basis (read off at pivots)
            modp::Matrix images(dim, std::vector<u64>(static_cast<std::size_t>(r), 0));
            for (std::size_t t = 0; t < dim; ++t)
                for (int j = 0; j < r; ++j) {
                    u64 s = 0;
                    for (int k = 0; k < r; ++k)
                        if (a[j][k] && sp.basis[t][k]) s = (s + a[j][k] * sp.basis[t][k]) % p;
                    images[t][j] = s;
                }
            modp::Matrix b(dim, std::vector<u64>(dim, 0));  // b[s][t]: coordinate s of A v_t
            for (std::size_t t = 0; t < dim; ++t)
                for (std::size_t s = 0; s < dim; ++s) b[s][t] = images[t][sp.pivots[s]];
            auto cp = modp::charpoly(b, p);
            std::vector<u64> roots;
            for (u64 lam = 0; lam < p; ++lam) {
                u64 v = 0;
                for (std::size_t k = cp.size(); k-- > 0;) v = (modp::mul(v, lam, p) + cp[k]) % p;
                if (v == 0) roots.push_back(lam);
            }
            if (roots.size() <= 1) continue;
            split = true;
            for (u64 lam : roots) {
                modp::Matrix shifted = b;
                for (std::size_t s = 0; s < dim; ++s) shifted[s][s] = (shifted[s][s] + p - lam) % p;
                auto null = modp::nullspace(shifted, p);
                modp::Matrix sub;
                for (const auto& coord : null) {
                    std::vector<u64> v(static_cast<std::size_t>(r), 0);
                    for (std::size_t t = 0; t < dim; ++t)
                        if (coord[t])
                            for (int k = 0; k < r; ++k) v[k] = (v[k] + coord[t] * sp.basis[t][k]) % p;
                    sub.push_back(std::move(v));
                }
                auto piv = modp::row_reduce(sub, p);
                work.push_back({std::move(sub), std::move(piv), i + 1});
            }
        }
        if (!split) fail(ErrorCode::InternalSplitFailure, "eigenspace of dimension " + std::to_string(dim) + " did not split");
    }
    if (static_cast<int>(eigenvectors.size()) != r)
        fail(ErrorCode::InternalSplitFailure, "found " + std::to_string(eigenvectors.size()) + " characters for " + std::to_string(r) + " classes");

    const auto inv_cls = detail::inverse_classes(g);
    const auto pow_cls = detail::power_classes(g);
    for (auto& w : eigenvectors) {
        u64 w0inv = modp::inverse(w[0], p);
        for (auto& v : w) v = modp::mul(v, w0inv, p);
        u64 s = 0;
        for (int j = 0; j < r; ++j)
            s = (s + modp::mul(modp::mul(w[j], w[inv_cls[j]], p), modp::inverse(static_cast<u64>(cc.class_size(j)) % p, p), p)) % p;
        u64 dsq = modp::mul(static_cast<u64>(n) % p, modp::inverse(s, p), p);
        long d = 0;
        for (long c = 1; c * c <= n; ++c)
            if (static_cast<u64>(c * c) % p == dsq && n % c == 0) {
                d = c;
                break;
            }
        if (d == 0) fail(ErrorCode::InternalSplitFailure, "no degree matches the eigenvector");
        std::vector<u64> chi(static_cast<std::size_t>(r));
        for (int j = 0; j < r; ++j)
            chi[j] = modp::mul(modp::mul(static_cast<u64>(d), w[j], p), modp::inverse(static_cast<u64>(cc.class_size(j)) % p, p), p);

        ClassFunction row{g, std::vector<CycNum>(static_cast<std::size_t>(r))};
        for (int j = 0; j < r; ++j) {
            const auto& pw = pow_cls[j];
            const u64 m = pw.size();
            const u64 zm = modp::power(z_root, static_cast<u64>(e) / m, p);
            const u64 minv = modp::inverse(m % p, p);
            std::vector<mpq_class> coeffs(static_cast<std::size_t>(e), mpq_class(0));
            for (u64 k = 0; k < m; ++k) {
                u64 acc = 0;
                u64 step = modp::inverse(modp::power(zm, k, p), p);  // zeta_m^-k
                u64 f = 1;
                for (u64 l = 0; l < m; ++l) {
                    acc = (acc + modp::mul(chi[pw[l]], f, p)) % p;
                    f = modp::mul(f, step, p);
                }
                u64 mu = modp::mul(acc, minv, p);
                if (mu > static_cast<u64>(d)) fail(ErrorCode::InternalSplitFailure, "eigenvalue multiplicity out of range");
                coeffs[static_cast<std::size_t>(k * (static_cast<u64>(e) / m))] += static_cast<long>(mu);
            }
            row.values[j] = CycNum::from_powers(e, coeffs);
        }
        table.rows.push_back(std::move(row));
    }
    std::sort(table.rows.begin(), table.rows.end(), [](const ClassFunction& a, const ClassFunction& b) {
        long da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        for (std::size_t j = 0; j < a.values.size(); ++j) {
            if (canonical_less(b.values[j], a.values[j])) return true;
            if (canonical_less(a.values[j], b.values[j])) return false;
        }
        return false;
    });
    return table;
}

inline const CharacterTable& character_table(const GroupPtr& g, int order_cap = kDefaultTableOrderCap) {
    if (g->order() > order_cap)
        fail(ErrorCode::OrderCapExceeded, "character table of a group of order " + std::to_string(g->order()));
    return g->cached<CharacterTable>("character_table", [&] { return compute_character_table(g); });
}

inline CycNum inner_product(const ClassFunction& a, const ClassFunction& b) {
    if (a.group != b.group) fail(ErrorCode::GroupMismatch, "inner product of class functions on different groups");
    const auto& cc = conjugacy_classes(a.group);
    CycNum sum(0);
    for (int k = 0; k < cc.size(); ++k) sum += (a.values[k] * b.values[k].conj()).scaled(mpq_class(cc.class_size(k)));
    return sum.scaled(mpq_class(1, a.group->order()));
}

inline ClassFunction regular_character(const GroupPtr& g) {
    const auto& cc = conjugacy_classes(g);
    ClassFunction f{g, std::vector<CycNum>(static_cast<std::size_t>(cc.size()), CycNum(0))};
    f.values[0] = CycNum(static_cast<long>(g->order()));
    return f;
}

inline ClassFunction trivial_character(const GroupPtr& g) {
    return ClassFunction{g, std::vector<CycNum>(static_cast<std::size_t>(conjugacy_classes(g).size()), CycNum(1))};
}

/// Value of a class function at an element.
inline const CycNum& value_at(const ClassFunction& f, int element) {
    return f.values[conjugacy_classes(f.group).class_of[element]];
}

}  // namespace fgchar
