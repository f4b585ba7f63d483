#pragma once

#include <gmpxx.h>

#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "fgchar/char_table.hpp"
#include "fgchar/gmodule.hpp"
#include "fgchar/rep_analysis.hpp"
#include "fgchar/subgroups.hpp"

namespace fgchar {

/// Q/Z-valued function on G x G, row-major: values[g * n + h] = z(g, h).
struct Cocycle {
    GroupPtr base;
    std::vector<mpq_class> values;

    const mpq_class& at(int g, int h) const { return values[static_cast<std::size_t>(g) * base->order() + h]; }
};

/// G -> Q/Z, one value per element.
using Cochain = std::vector<mpq_class>;

struct CentralExtension {
    GroupPtr total;
    Subgroup mu;
    GroupHom projection;      // total -> base
    std::vector<int> section;  // base element -> total element

    const GroupPtr& base() const { return projection.target; }
};

/// lcm of the denominators.
inline long cocycle_order(const Cocycle& z) {
    long n = 1;
    for (const auto& v : z.values) n = std::lcm(n, v.get_den().get_si());
    return n;
}

namespace detail {

/// Values scaled to integers mod n.
inline std::vector<long> scaled_values(const std::vector<mpq_class>& v, long n) {
    std::vector<long> out;
    out.reserve(v.size());
    for (const auto& x : v) {
        mpq_class y = mod_one(x) * n;
        out.push_back(y.get_num().get_si());
    }
    return out;
}

}  // namespace detail

inline void validate(const Cocycle& z) {
    const auto& g = *z.base;
    const int n = g.order();
    if (static_cast<long>(z.values.size()) != static_cast<long>(n) * n)
        fail(ErrorCode::InvalidCocycle, "expected " + std::to_string(n * n) + " values");
    for (const auto& v : z.values)
        if (v < 0 || v >= 1) fail(ErrorCode::InvalidCocycle, "value " + v.get_str() + " outside [0, 1)");
    const int e = g.identity();
    for (int x = 0; x < n; ++x)
        if (z.at(e, x) != 0 || z.at(x, e) != 0) fail(ErrorCode::NotNormalized, "nonzero value at the identity for " + g.label(x));
    const long m = cocycle_order(z);
    auto iv = detail::scaled_values(z.values, m);
    auto at = [&](int a, int b) { return iv[static_cast<std::size_t>(a) * n + b]; };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if ((at(a, b) + at(g.mul(a, b), c) - at(b, c) - at(a, g.mul(b, c))) % m != 0)
                    fail(ErrorCode::CocycleIdentityFails,
                         "cocycle identity fails at (" + g.label(a) + ", " + g.label(b) + ", " + g.label(c) + ")");
}

inline Cocycle zero_cocycle(const GroupPtr& g) {
    return Cocycle{g, std::vector<mpq_class>(static_cast<std::size_t>(g->order()) * g->order(), mpq_class(0))};
}

/// delta f(g, h) = f(h) - f(gh) + f(g)
inline Cocycle coboundary(const GroupPtr& g, const Cochain& f) {
    if (static_cast<int>(f.size()) != g->order()) fail(ErrorCode::InvalidInput, "cochain has the wrong length");
    if (mod_one(f[g->identity()]) != 0) fail(ErrorCode::NotNormalized, "f(1) must be 0");
    Cocycle z = zero_cocycle(g);
    const int n = g->order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) z.values[static_cast<std::size_t>(a) * n + b] = mod_one(f[b] - f[g->mul(a, b)] + f[a]);
    return z;
}

inline Cocycle add(const Cocycle& a, const Cocycle& b, long sign = 1) {
    if (a.base != b.base) fail(ErrorCode::GroupMismatch, "cocycles over different groups");
    Cocycle out{a.base, a.values};
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = mod_one(a.values[i] + sign * b.values[i]);
    return out;
}

namespace detail {

using i128 = __int128;

inline long mod(i128 a, long m) {
    i128 r = a % m;
    return static_cast<long>(r < 0 ? r + m : r);
}

/// Solves A x = b over Z/m by row echelon elimination that keeps the
/// annihilator multiple of each pivot row (so back substitution never
/// gets stuck on a zero-divisor pivot). Returns one solution or nothing.
inline std::optional<std::vector<long>> solve_mod(std::vector<std::vector<long>> rows, std::vector<long> rhs, int cols, long m) {
    struct Pivot {
        int col;
        std::vector<long> row;
        long rhs;
    };
    std::vector<Pivot> pivots;
    for (int c = 0; c < cols; ++c) {
        // gcd-combine column c of all rows into a single pivot row
        int p = -1;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i][c] % m == 0) continue;
            if (p < 0) {
                p = static_cast<int>(i);
                continue;
            }
            // extended gcd on (rows[p][c], rows[i][c]) via unimodular 2x2 transform
            long a = rows[p][c], b = rows[i][c];
            long x0 = 1, y0 = 0, x1 = 0, y1 = 1;
            long aa = a, bb = b;
            while (bb != 0) {
                long q = aa / bb;
                long t = aa - q * bb;
                aa = bb;
                bb = t;
                t = x0 - q * x1;
                x0 = x1;
                x1 = t;
                t = y0 - q * y1;
                y0 = y1;
                y1 = t;
            }
            // [x0 y0; x1 y1] has determinant +-1 and sends (a, b) to (gcd, 0)
            std::vector<long> np(static_cast<std::size_t>(cols)), ni(static_cast<std::size_t>(cols));
            for (int k = 0; k < cols; ++k) {
                np[k] = mod(static_cast<i128>(x0) * rows[p][k] + static_cast<i128>(y0) * rows[i][k], m);
                ni[k] = mod(static_cast<i128>(x1) * rows[p][k] + static_cast<i128>(y1) * rows[i][k], m);
            }
            long rp = mod(static_cast<i128>(x0) * rhs[p] + static_cast<i128>(y0) * rhs[i], m);
            long ri = mod(static_cast<i128>(x1) * rhs[p] + static_cast<i128>(y1) * rhs[i], m);
            rows[p] = std::move(np);
            rows[i] = std::move(ni);
            rhs[p] = rp;
            rhs[i] = ri;
        }
        if (p < 0) continue;
        Pivot piv{c, rows[p], rhs[p]};
        rows.erase(rows.begin() + p);
        rhs.erase(rhs.begin() + p);
        const long g = std::gcd(piv.row[c], m);
        if (g != 1) {
            // annihilator row: (m / g) * pivot has zero in column c
            const long k = m / g;
            std::vector<long> ann(static_cast<std::size_t>(cols));
            bool nonzero = false;
            for (int j = 0; j < cols; ++j) {
                ann[j] = mod(static_cast<i128>(k) * piv.row[j], m);
                nonzero = nonzero || ann[j] != 0;
            }
            long ar = mod(static_cast<i128>(k) * piv.rhs, m);
            if (nonzero || ar != 0) {
                rows.push_back(std::move(ann));
                rhs.push_back(ar);
            }
        }
        pivots.push_back(std::move(piv));
    }
    for (long r : rhs)
        if (r % m != 0) return std::nullopt;
    std::vector<long> x(static_cast<std::size_t>(cols), 0);
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        i128 acc = it->rhs;
        for (int j = it->col + 1; j < cols; ++j) acc -= static_cast<i128>(it->row[j]) * x[j];
        long c = mod(acc, m);
        long a = it->row[it->col];
        long g = std::gcd(a, m);
        if (c % g != 0) return std::nullopt;
        // a / g is a unit mod m / g
        long mg = m / g;
        mpz_class inv;
        mpz_class ag = a / g, mz = mg;
        if (mg == 1)
            inv = 0;
        else
            mpz_invert(inv.get_mpz_t(), ag.get_mpz_t(), mz.get_mpz_t());
        x[it->col] = mod(static_cast<i128>(c / g) * inv.get_si(), mg);
    }
    return x;
}

}  // namespace detail

/// A cochain f with values in (1/m)Z/Z and z1 - z2 = delta f, if one exists.
/// Without a modulus, m = lcm of the two cocycle orders: cohomology with
/// coefficients in the cyclic group the cocycles already live in.
inline std::optional<Cochain> is_cohomologous(const Cocycle& z1, const Cocycle& z2, std::optional<long> modulus = std::nullopt) {
    if (z1.base != z2.base) fail(ErrorCode::GroupMismatch, "cocycles over different groups");
    const auto& g = *z1.base;
    const int n = g.order();
    Cocycle d = add(z1, z2, -1);
    const long m = modulus ? *modulus : std::lcm(cocycle_order(z1), cocycle_order(z2));
    if (m < 1 || m % cocycle_order(d) != 0) fail(ErrorCode::InvalidInput, "modulus must be a multiple of the difference's order");
    auto dv = detail::scaled_values(d.values, m);
    std::vector<std::vector<long>> rows;
    std::vector<long> rhs;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<long> row(static_cast<std::size_t>(n), 0);
            row[b] += 1;
            row[g.mul(a, b)] -= 1;
            row[a] += 1;
            for (auto& v : row) v = detail::mod(v, m);
            rows.push_back(std::move(row));
            rhs.push_back(dv[static_cast<std::size_t>(a) * n + b]);
        }
    auto sol = detail::solve_mod(std::move(rows), std::move(rhs), n, m);
    if (!sol) return std::nullopt;
    Cochain f;
    for (long v : *sol) f.push_back(mod_one(mpq_class(v, m)));
    // f(1) = 0 is forced by the (1, 1) equation for normalized cocycles
    if (add(coboundary(z1.base, f), d, -1).values != zero_cocycle(z1.base).values)
        fail(ErrorCode::InvalidInput, "cohomology solver produced a wrong witness");
    return f;
}

/// Cohomology in Q/Z: if z1 - z2 = delta f then (ord d) f is a homomorphism
/// into Q/Z, so f has order dividing ord(d) |G| and that modulus is complete.
inline std::optional<Cochain> is_cohomologous_qz(const Cocycle& z1, const Cocycle& z2) {
    return is_cohomologous(z1, z2, cocycle_order(add(z1, z2, -1)) * z1.base->order());
}

/// Total group on pairs (k mod n, g) with index k + n * g.
inline CentralExtension extension_from_cocycle(const Cocycle& z) {
    try {
        validate(z);
    } catch (const Error& e) {
        fail(ErrorCode::InvalidCocycle, std::string(e.what()));
    }
    const auto& g = z.base;
    const int gn = g->order();
    const long n = cocycle_order(z);
    const long total = n * gn;
    if (total > kMaxGroupOrder) fail(ErrorCode::OrderCapExceeded, "extension of order " + std::to_string(total));
    auto iv = detail::scaled_values(z.values, n);
    const int t = static_cast<int>(total);
    std::vector<std::uint16_t> flat(static_cast<std::size_t>(t) * t);
    for (int x = 0; x < t; ++x)
        for (int y = 0; y < t; ++y) {
            const long k = x % n, a = x / n, l = y % n, b = y / n;
            const long kk = (k + l + iv[static_cast<std::size_t>(a) * gn + b]) % n;
            flat[static_cast<std::size_t>(x) * t + y] = static_cast<std::uint16_t>(kk + n * g->mul(static_cast<int>(a), static_cast<int>(b)));
        }
    std::vector<std::string> labels;
    for (int x = 0; x < t; ++x) labels.push_back("(" + std::to_string(x % n) + "," + g->label(static_cast<int>(x / n)) + ")");
    NamedElements names;
    for (const auto& [name, x] : g->names()) names.emplace_back(name, static_cast<int>(n * x));
    if (n > 1 && !g->named("m")) names.emplace_back("m", static_cast<int>(1 + n * g->identity()));
    std::vector<int> gens;
    for (int s : g->generators()) gens.push_back(static_cast<int>(n * s));
    if (n > 1) gens.push_back(static_cast<int>(1 + n * g->identity()));
    auto grp = FiniteGroup::from_trusted_table(t, std::move(flat), std::move(labels), std::move(names), std::move(gens));
    std::vector<int> proj(static_cast<std::size_t>(t));
    for (int x = 0; x < t; ++x) proj[x] = static_cast<int>(x / n);
    ElementSet mu(static_cast<std::size_t>(t));
    for (long k = 0; k < n; ++k) mu.insert(static_cast<std::size_t>(k + n * g->identity()));
    std::vector<int> section;
    for (int a = 0; a < gn; ++a) section.push_back(static_cast<int>(n * a));
    return {grp, Subgroup(grp, std::move(mu)), GroupHom{grp, g, std::move(proj)}, std::move(section)};
}

/// Checks the extension data and fills the least-index section.
inline CentralExtension make_extension(GroupHom projection, const Subgroup& mu) {
    const auto& e = projection.source;
    if (mu.parent() != e) fail(ErrorCode::GroupMismatch, "mu is not a subgroup of the total group");
    if (!mu.is_subgroup_of(center(e))) fail(ErrorCode::MuNotCentral, "mu is not central");
    if (!projection.is_homomorphism()) fail(ErrorCode::InvalidInput, "projection is not a homomorphism");
    if (!(projection.kernel() == mu)) fail(ErrorCode::MuNotKernel, "mu is not the kernel of the projection");
    if (projection.image().order() != projection.target->order()) fail(ErrorCode::InvalidInput, "projection is not onto");
    std::vector<int> section(static_cast<std::size_t>(projection.target->order()), -1);
    for (int x = 0; x < e->order(); ++x)
        if (section[projection(x)] < 0) section[projection(x)] = x;
    return {e, mu, std::move(projection), std::move(section)};
}

/// z(g, h) = exponent of s(g) s(h) s(gh)^-1 in the chosen generator of mu, over |mu|.
inline Cocycle cocycle_from_extension(const CentralExtension& ext, std::optional<int> mu_generator = std::nullopt) {
    const auto& e = ext.total;
    const auto& g = ext.base();
    if (!ext.mu.is_subgroup_of(center(e))) fail(ErrorCode::MuNotCentral, "mu is not central");
    if (!(ext.projection.kernel() == ext.mu)) fail(ErrorCode::MuNotKernel, "mu is not the kernel of the projection");
    const int m = ext.mu.order();
    int gen = e->identity();
    if (mu_generator) {
        gen = *mu_generator;
    } else {
        for (int x : ext.mu.elements())
            if (e->element_order(x) == m) {
                gen = x;
                break;
            }
    }
    if (!ext.mu.contains(gen) || e->element_order(gen) != m) fail(ErrorCode::InvalidInput, "mu is not cyclic or the generator is wrong");
    std::vector<int> log(static_cast<std::size_t>(e->order()), -1);
    for (int k = 0, x = e->identity(); k < m; ++k, x = e->mul(x, gen)) log[x] = k;
    // least-index lifts
    std::vector<int> s(static_cast<std::size_t>(g->order()), -1);
    for (int x = 0; x < e->order(); ++x)
        if (s[ext.projection(x)] < 0) s[ext.projection(x)] = x;
    Cocycle z = zero_cocycle(g);
    const int n = g->order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int c = e->mul(e->mul(s[a], s[b]), e->inv(s[g->mul(a, b)]));
            z.values[static_cast<std::size_t>(a) * n + b] = mpq_class(log[c], m);
            z.values[static_cast<std::size_t>(a) * n + b].canonicalize();
        }
    validate(z);
    return z;
}

/// A cohomologous cocycle with |G| z' = 0: f(g) = sum_h z(g, h), fdot = rep(f) / |G|,
/// z'(g, h) = z(g, h) + fdot(gh) - fdot(g) - fdot(h).
inline Cocycle reduce_order(const Cocycle& z) {
    try {
        validate(z);
    } catch (const Error& e) {
        fail(ErrorCode::InvalidCocycle, std::string(e.what()));
    }
    const auto& g = *z.base;
    const int n = g.order();
    Cochain fdot(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        mpq_class f = 0;
        for (int b = 0; b < n; ++b) f += z.at(a, b);
        fdot[a] = mod_one(f) / n;
        fdot[a].canonicalize();
    }
    Cocycle out{z.base, z.values};
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            out.values[static_cast<std::size_t>(a) * n + b] = mod_one(z.at(a, b) + fdot[g.mul(a, b)] - fdot[a] - fdot[b]);
    for (const auto& v : out.values)
        if (mod_one(v * n) != 0) fail(ErrorCode::InvalidCocycle, "reduced cocycle does not have order dividing |G|");
    if (!is_cohomologous_qz(z, out)) fail(ErrorCode::InvalidCocycle, "reduced cocycle is not cohomologous to the input");
    return out;
}

// ---------------------------------------------------------------------------
// Projective data read off the total group

inline Subgroup image_in_base(const CentralExtension& ext, const Subgroup& s) {
    ElementSet out(static_cast<std::size_t>(ext.base()->order()));
    for (int x : s.elements()) out.insert(static_cast<std::size_t>(ext.projection(x)));
    return Subgroup(ext.base(), std::move(out));
}

inline Subgroup z_c(const CentralExtension& ext) { return image_in_base(ext, center(ext.total)); }

/// Rows of the total group's table whose kernel meets mu trivially.
inline std::vector<int> mu_faithful_rows(const CentralExtension& ext, const CharacterTable& t) {
    std::vector<int> out;
    const auto& ks = row_kernels(t);
    for (int i = 0; i < t.size(); ++i)
        if (ks[i].intersect(ext.mu).is_trivial()) out.push_back(i);
    return out;
}

inline Subgroup k_c(const CentralExtension& ext, const CharacterTable& t) {
    auto rows = mu_faithful_rows(ext, t);
    if (rows.empty()) fail(ErrorCode::NoFaithfulCentralCharacter, "no irreducible of the total group is faithful on mu");
    Subgroup k = Subgroup::whole(ext.total);
    for (int r : rows) k = k.intersect(row_centers(t)[r]);
    return image_in_base(ext, k);
}

inline Subgroup k_c(const CentralExtension& ext) { return k_c(ext, character_table(ext.total)); }

/// A row faithful on mu with Z(sigma) = Z(total).
inline std::optional<int> has_c_faithful_irreducible(const CentralExtension& ext, const CharacterTable& t) {
    auto rows = mu_faithful_rows(ext, t);
    if (rows.empty()) fail(ErrorCode::NoFaithfulCentralCharacter, "no irreducible of the total group is faithful on mu");
    for (int r : rows)
        if (row_centers(t)[r] == center(ext.total)) return r;
    return std::nullopt;
}

inline std::optional<int> has_c_faithful_irreducible(const CentralExtension& ext) {
    return has_c_faithful_irreducible(ext, character_table(ext.total));
}

inline Subgroup preimage_in_total(const CentralExtension& ext, const Subgroup& h) {
    ElementSet out(static_cast<std::size_t>(ext.total->order()));
    for (int x = 0; x < ext.total->order(); ++x)
        if (h.contains(ext.projection(x))) out.insert(static_cast<std::size_t>(x));
    return Subgroup(ext.total, std::move(out));
}

inline constexpr long kDefaultSplitSearchCap = 1000000;

/// A subgroup of the preimage of H mapping isomorphically onto H, by search over
/// the lifts of H's generators.
inline std::optional<Subgroup> splits_over_subgroup(const CentralExtension& ext, const Subgroup& h, long cap = kDefaultSplitSearchCap) {
    if (h.parent() != ext.base()) fail(ErrorCode::SubgroupNotContained, "H is not a subgroup of the base");
    const auto& e = ext.total;
    std::vector<int> gens;
    {
        ElementSet reached(static_cast<std::size_t>(ext.base()->order()));
        reached.insert(static_cast<std::size_t>(ext.base()->identity()));
        for (int x : h.elements()) {
            if (reached.contains(static_cast<std::size_t>(x))) continue;
            gens.push_back(x);
            reached = generated_set(*ext.base(), gens);
        }
    }
    const int m = ext.mu.order();
    long combos = 1;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        combos *= m;
        if (combos > cap) fail(ErrorCode::CapExceeded, "complement search over " + std::to_string(combos) + "+ lift choices");
    }
    std::vector<int> lifts(gens.size());
    std::optional<Subgroup> found;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (found) return;
        if (i == gens.size()) {
            auto s = subgroup_generated(e, lifts);
            if (s.order() == h.order()) found = std::move(s);
            return;
        }
        for (int u : ext.mu.elements()) {
            lifts[i] = e->mul(ext.section[gens[i]], u);
            rec(i + 1);
            if (found) return;
        }
    };
    rec(0);
    return found;
}

struct RelativeFprRow {
    int rho_row = 0;                 // row of the preimage's table, faithful on mu
    bool projectively_faithful = false;  // Z(rho) = mu, so rho projectivizes to a faithful rep of H
    std::optional<int> witness;      // constituent of Ind faithful on mu with Z(sigma) n H_d = mu
};

struct RelativeFprResult {
    std::vector<RelativeFprRow> rows;
    bool holds = true;  // every projectively faithful rho has a witness
};

/// Irreducibles rho of H_d (the preimage of H) faithful on mu, each induced to the
/// total group. A witness sigma is faithful on mu and has Z(sigma) n H_d = mu,
/// i.e. its projectivization is faithful on H.
inline RelativeFprResult relative_fpr_check(const CentralExtension& ext, const Subgroup& h) {
    if (h.parent() != ext.base()) fail(ErrorCode::SubgroupNotContained, "H is not a subgroup of the base");
    const auto hd = preimage_in_total(ext, h);
    auto emb = as_group(hd);
    const auto& th = character_table(emb.group);
    const auto& tg = character_table(ext.total);
    const Subgroup mu_local = preimage(emb.inclusion, ext.mu);
    RelativeFprResult r;
    for (int i = 0; i < th.size(); ++i) {
        if (!row_kernels(th)[i].intersect(mu_local).is_trivial()) continue;
        RelativeFprRow row{i, row_centers(th)[i] == mu_local, std::nullopt};
        for (auto [s, mult] : decompose(induce(th.rows[i], emb.inclusion), tg).components) {
            if (!row_kernels(tg)[s].intersect(ext.mu).is_trivial()) continue;
            if (row_centers(tg)[s].intersect(hd) == ext.mu) {
                row.witness = s;
                break;
            }
        }
        if (row.projectively_faithful && !row.witness) r.holds = false;
        r.rows.push_back(row);
    }
    if (r.rows.empty()) fail(ErrorCode::HypothesisViolated, "the preimage of H has no irreducible faithful on mu");
    return r;
}

}  // namespace fgchar
