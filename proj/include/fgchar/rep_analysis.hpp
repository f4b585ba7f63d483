#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <bit>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fgchar/char_table.hpp"
#include "fgchar/constructions.hpp"
#include "fgchar/gmodule.hpp"
#include "fgchar/subgroups.hpp"

namespace fgchar {

/// Largest same-prime family of modules for which the section hypothesis is
/// decided by exhaustive subset enumeration.
inline constexpr int kDefaultSectionFamilyCap = 12;

struct Decomposition {
    std::vector<std::pair<int, long>> components;  // (table row, multiplicity)
};

namespace detail {

inline Subgroup class_union(const GroupPtr& g, const std::vector<char>& keep) {
    const auto& cc = conjugacy_classes(g);
    ElementSet s(static_cast<std::size_t>(g->order()));
    for (int k = 0; k < cc.size(); ++k)
        if (keep[k])
            for (int x : cc.classes[k]) s.insert(static_cast<std::size_t>(x));
    return Subgroup(g, std::move(s));
}

inline Subgroup kernel_of_values(const ClassFunction& chi) {
    std::vector<char> keep;
    for (const auto& v : chi.values) keep.push_back(v == chi.values[0]);
    return class_union(chi.group, keep);
}

// |chi(g)|^2 = chi(1)^2 detects scalar action for irreducible chi.
inline Subgroup center_of_values(const ClassFunction& chi) {
    const CycNum d2 = chi.values[0] * chi.values[0];
    std::vector<char> keep;
    for (const auto& v : chi.values) keep.push_back(v.abs_square() == d2);
    return class_union(chi.group, keep);
}

inline void require_irreducible(const ClassFunction& chi) {
    if (inner_product(chi, chi) != CycNum(1)) fail(ErrorCode::NotIrreducible, "class function is not an irreducible character");
}

inline bool is_prime_power(long n) {
    if (n == 1) return true;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            return n == 1;
        }
    return true;
}

inline std::vector<long> prime_divisors(long n) {
    std::vector<long> out;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace detail

/// Kernels of all rows of a table, cached on the group.
inline const std::vector<Subgroup>& row_kernels(const CharacterTable& t) {
    return t.group->cached<std::vector<Subgroup>>("row_kernels", [&] {
        std::vector<Subgroup> out;
        for (const auto& row : t.rows) out.push_back(detail::kernel_of_values(row));
        return out;
    });
}

inline const std::vector<Subgroup>& row_centers(const CharacterTable& t) {
    return t.group->cached<std::vector<Subgroup>>("row_centers", [&] {
        std::vector<Subgroup> out;
        for (const auto& row : t.rows) out.push_back(detail::center_of_values(row));
        return out;
    });
}

inline Subgroup kernel(const ClassFunction& chi) {
    detail::require_irreducible(chi);
    return detail::kernel_of_values(chi);
}

inline Subgroup char_center(const ClassFunction& chi) {
    detail::require_irreducible(chi);
    return detail::center_of_values(chi);
}

inline bool is_center_preserving(const ClassFunction& chi) { return char_center(chi) == center(chi.group); }

inline bool is_center_preserving_on(const ClassFunction& chi, const Subgroup& h) {
    if (h.parent() != chi.group) fail(ErrorCode::SubgroupNotContained, "H is not a subgroup of the character's group");
    return char_center(chi).intersect(h).is_subgroup_of(center(chi.group));
}

/// Res along an injective map iota: H -> G.
inline ClassFunction restrict(const ClassFunction& chi, const GroupHom& iota) {
    if (iota.target != chi.group) fail(ErrorCode::SubgroupNotContained, "restriction along a map into a different group");
    const auto& ch = conjugacy_classes(iota.source);
    const auto& cg = conjugacy_classes(chi.group);
    ClassFunction out{iota.source, {}};
    for (int k = 0; k < ch.size(); ++k) out.values.push_back(chi.values[cg.class_of[iota(ch.reps[k])]]);
    return out;
}

/// Ind(g_k) = |G| / (|H| |C_k|) * sum over H-classes c landing in C_k of |c| rho(c).
inline ClassFunction induce(const ClassFunction& rho, const GroupHom& iota) {
    if (rho.group != iota.source) fail(ErrorCode::SubgroupNotContained, "induction along a map from a different group");
    const auto& g = iota.target;
    const auto& ch = conjugacy_classes(iota.source);
    const auto& cg = conjugacy_classes(g);
    std::vector<CycNum> sums(static_cast<std::size_t>(cg.size()), CycNum(0));
    for (int c = 0; c < ch.size(); ++c)
        sums[cg.class_of[iota(ch.reps[c])]] += rho.values[c].scaled(mpq_class(ch.class_size(c)));
    ClassFunction out{g, {}};
    for (int k = 0; k < cg.size(); ++k)
        out.values.push_back(sums[k].scaled(mpq_class(g->order(), static_cast<long>(iota.source->order()) * cg.class_size(k))));
    return out;
}

namespace detail {

inline std::complex<double> to_complex(const CycNum& v) {
    const int e = v.conductor();
    std::complex<double> out = 0;
    const auto& c = v.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) out += c[i].get_d() * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(i) / e);
    return out;
}

inline const std::vector<std::vector<std::complex<double>>>& row_complex(const CharacterTable& t) {
    return t.group->cached<std::vector<std::vector<std::complex<double>>>>("row_complex", [&] {
        std::vector<std::vector<std::complex<double>>> out;
        for (const auto& row : t.rows) {
            std::vector<std::complex<double>> v;
            for (const auto& x : row.values) v.push_back(to_complex(x));
            out.push_back(std::move(v));
        }
        return out;
    });
}

inline Decomposition decompose_exact(const ClassFunction& f, const CharacterTable& t) {
    Decomposition d;
    std::vector<CycNum> rebuilt(f.values.size(), CycNum(0));
    for (int i = 0; i < t.size(); ++i) {
        auto m = inner_product(f, t.rows[i]).is_rational();
        if (!m || m->get_den() != 1 || *m < 0)
            fail(ErrorCode::NotACharacter, "multiplicity of row " + std::to_string(i) + " is not a non-negative integer");
        if (*m == 0) continue;
        d.components.emplace_back(i, m->get_num().get_si());
        for (std::size_t k = 0; k < rebuilt.size(); ++k) rebuilt[k] += t.rows[i].values[k].scaled(*m);
    }
    if (rebuilt != f.values) fail(ErrorCode::NotACharacter, "class function is not a combination of irreducibles");
    return d;
}

}  // namespace detail

/// Multiplicities estimated in floating point, then certified by exact
/// reassembly (irreducibles are linearly independent); exact inner products
/// otherwise.
inline Decomposition decompose(const ClassFunction& f, const CharacterTable& t) {
    if (f.group != t.group) fail(ErrorCode::GroupMismatch, "class function and table on different groups");
    const auto& cc = conjugacy_classes(f.group);
    const auto& rows = detail::row_complex(t);
    std::vector<std::complex<double>> fc;
    for (const auto& v : f.values) fc.push_back(detail::to_complex(v));
    Decomposition d;
    bool plausible = true;
    for (int i = 0; i < t.size() && plausible; ++i) {
        std::complex<double> s = 0;
        for (int k = 0; k < cc.size(); ++k) s += static_cast<double>(cc.class_size(k)) * fc[k] * std::conj(rows[i][k]);
        s /= static_cast<double>(f.group->order());
        const double m = std::round(s.real());
        if (std::abs(s - m) > 1e-6 || m < 0) plausible = false;
        else if (m > 0) d.components.emplace_back(i, static_cast<long>(m));
    }
    if (plausible) {
        std::vector<CycNum> rebuilt(f.values.size(), CycNum(0));
        for (auto [i, m] : d.components)
            for (std::size_t k = 0; k < rebuilt.size(); ++k) rebuilt[k] += t.rows[i].values[k].scaled(mpq_class(m));
        if (rebuilt == f.values) return d;
    }
    return detail::decompose_exact(f, t);
}

// ---------------------------------------------------------------------------
// Faithfulness and center preservation relative to a subgroup

/// Preimage in H of a subgroup of G.
inline Subgroup preimage(const GroupHom& iota, const Subgroup& s) {
    ElementSet out(static_cast<std::size_t>(iota.source->order()));
    for (int h = 0; h < iota.source->order(); ++h)
        if (s.contains(iota(h))) out.insert(static_cast<std::size_t>(h));
    return Subgroup(iota.source, std::move(out));
}

inline bool is_faithful_row(const CharacterTable& t, int row) { return row_kernels(t)[row].is_trivial(); }

inline std::vector<int> faithful_rows(const CharacterTable& t) {
    std::vector<int> out;
    for (int i = 0; i < t.size(); ++i)
        if (is_faithful_row(t, i)) out.push_back(i);
    return out;
}

/// Z(sigma) n iota(H) inside Z(G).
inline bool row_cp_on(const CharacterTable& tg, int row, const GroupHom& iota) {
    const auto& zs = row_centers(tg)[row];
    const auto& z = center(tg.group);
    for (int h = 0; h < iota.source->order(); ++h)
        if (zs.contains(iota(h)) && !z.contains(iota(h))) return false;
    return true;
}

struct Constituent {
    int row = 0;
    long multiplicity = 0;
    long degree = 0;
    bool faithful_on_h = false;
    bool cp_on_h = false;
};

struct CpEntry {
    std::optional<int> rho_row;
    std::vector<Constituent> constituents;
    bool satisfied = false;  // some constituent is center-preserving on H
};

struct CpReport {
    std::vector<int> faithful_rows;
    std::vector<CpEntry> entries;
    bool verdict = true;
};

inline std::vector<Constituent> constituents_of_induced(const ClassFunction& rho, const GroupHom& iota, const CharacterTable& tg) {
    auto dec = decompose(induce(rho, iota), tg);
    std::vector<Constituent> out;
    for (auto [row, mult] : dec.components) {
        Constituent c;
        c.row = row;
        c.multiplicity = mult;
        c.degree = tg.degree(row);
        c.faithful_on_h = preimage(iota, row_kernels(tg)[row]).is_trivial();
        c.cp_on_h = row_cp_on(tg, row, iota);
        out.push_back(c);
    }
    return out;
}

inline void require_faithful_irreducible(const ClassFunction& rho) {
    detail::require_irreducible(rho);
    if (!detail::kernel_of_values(rho).is_trivial()) fail(ErrorCode::NotFaithful, "rho is not faithful");
}

/// Constituents of Ind(rho) with faithfulness and center-preservation on H.
inline CpEntry find_cp_constituents(const ClassFunction& rho, const GroupHom& iota, const CharacterTable& tg) {
    require_faithful_irreducible(rho);
    CpEntry e;
    e.constituents = constituents_of_induced(rho, iota, tg);
    for (const auto& c : e.constituents) e.satisfied = e.satisfied || c.cp_on_h;
    return e;
}

/// Every faithful row of H's table, each induced to G.
inline CpReport cp_report(const GroupHom& iota, const CharacterTable& th, const CharacterTable& tg) {
    CpReport r;
    r.faithful_rows = faithful_rows(th);
    for (int row : r.faithful_rows) {
        auto e = find_cp_constituents(th.rows[row], iota, tg);
        e.rho_row = row;
        r.verdict = r.verdict && e.satisfied;
        r.entries.push_back(std::move(e));
    }
    return r;
}

/// Every constituent minimizing |Z(sigma) n H| is center-preserving on H.
inline bool remark_minimizer_check(const ClassFunction& rho, const GroupHom& iota, const CharacterTable& tg) {
    require_faithful_irreducible(rho);
    const int zh = center(iota.source).order();
    if (!detail::is_prime_power(zh)) fail(ErrorCode::CenterNotPrimePower, "|Z(H)| = " + std::to_string(zh));
    auto cons = constituents_of_induced(rho, iota, tg);
    std::vector<int> sizes;
    for (const auto& c : cons) sizes.push_back(preimage(iota, row_centers(tg)[c.row]).order());
    const int least = *std::min_element(sizes.begin(), sizes.end());
    for (std::size_t i = 0; i < cons.size(); ++i)
        if (sizes[i] == least && !cons[i].cp_on_h) return false;
    return true;
}

struct Z2Hypotheses {
    bool kernel_central = false;
    bool z2_meets_like_z = false;
    bool hold() const { return kernel_central && z2_meets_like_z; }
};

inline Z2Hypotheses corollary_z2_hypotheses(const ClassFunction& rho, const GroupHom& iota) {
    const auto& g = iota.target;
    Z2Hypotheses out;
    out.kernel_central = true;
    const Subgroup kr = detail::kernel_of_values(rho);
    for (int h : kr.elements()) out.kernel_central = out.kernel_central && center(g).contains(iota(h));
    out.z2_meets_like_z = preimage(iota, second_center(g)) == preimage(iota, center(g));
    return out;
}

/// Some constituent sigma has Z(sigma) n H inside Z(G) and ker(Res sigma) = ker(rho).
inline bool corollary_z2_check(const ClassFunction& rho, const GroupHom& iota, const CharacterTable& tg) {
    detail::require_irreducible(rho);
    auto hyp = corollary_z2_hypotheses(rho, iota);
    if (!hyp.kernel_central) fail(ErrorCode::HypothesisViolated, "ker(rho) is not contained in Z(G)");
    if (!hyp.z2_meets_like_z) fail(ErrorCode::HypothesisViolated, "Z2(G) n H differs from Z(G) n H");
    const auto kr = detail::kernel_of_values(rho);
    for (auto [row, mult] : decompose(induce(rho, iota), tg).components)
        if (row_cp_on(tg, row, iota) && preimage(iota, row_kernels(tg)[row]) == kr) return true;
    return false;
}

// ---------------------------------------------------------------------------
// Elements of prime-power order in Z(H) pushed off Z(G)

inline void require_main_tech_hypotheses(const ClassFunction& rho, const GroupHom& iota, const std::vector<int>& h_list) {
    if (!iota.is_injective()) fail(ErrorCode::HypothesisViolated, "iota is not injective");
    if (inner_product(rho, rho) != CycNum(1) || !detail::kernel_of_values(rho).is_trivial())
        fail(ErrorCode::HypothesisViolated, "rho is not a faithful irreducible character of H");
    const auto& zh = center(iota.source);
    const auto& zg = center(iota.target);
    std::vector<long> primes;
    for (int h : h_list) {
        if (!zh.contains(h)) fail(ErrorCode::HypothesisViolated, "h = " + iota.source->label(h) + " is not central in H");
        const int ord = iota.source->element_order(h);
        auto ps = detail::prime_divisors(ord);
        if (ps.size() != 1) fail(ErrorCode::HypothesisViolated, "h = " + iota.source->label(h) + " does not have prime-power order");
        if (std::find(primes.begin(), primes.end(), ps[0]) != primes.end())
            fail(ErrorCode::HypothesisViolated, "two elements for the prime " + std::to_string(ps[0]));
        primes.push_back(ps[0]);
        if (zg.contains(iota(h))) fail(ErrorCode::HypothesisViolated, "iota(" + iota.source->label(h) + ") is central in G");
    }
}

/// Some constituent sigma of Ind(rho) has iota(h) outside Z(sigma) for every h in the list.
inline bool main_tech_check(const ClassFunction& rho, const GroupHom& iota, const std::vector<int>& h_list, const CharacterTable& tg) {
    require_main_tech_hypotheses(rho, iota, h_list);
    for (auto [row, mult] : decompose(induce(rho, iota), tg).components) {
        const auto& zs = row_centers(tg)[row];
        bool ok = true;
        for (int h : h_list) ok = ok && !zs.contains(iota(h));
        if (ok) return true;
    }
    return false;
}

struct HListChoices {
    std::vector<std::vector<int>> lists;  // every maximal choice, one generator per subgroup
    std::vector<int> proof_choice;        // generator of the least subgroup outside Z(G), per prime
};

/// Z(H) cyclic: for each prime whose Sylow part is not inside Z(G), one generator
/// for each subgroup of the Sylow chain not inside Z(G). The property tested by
/// main_tech_check depends only on <h>, so generators stand for subgroups.
inline HListChoices main_tech_h_lists(const GroupHom& iota) {
    const auto& hg = iota.source;
    const auto& zh = center(hg);
    const auto& zg = center(iota.target);
    HListChoices out;
    const int n = zh.order();
    int c = -1;
    for (int x : zh.elements())
        if (hg->element_order(x) == n) {
            c = x;
            break;
        }
    if (c < 0 || n == 1) {
        out.lists.push_back({});
        return out;
    }
    std::vector<std::vector<int>> per_prime;
    for (long p : detail::prime_divisors(n)) {
        std::vector<int> options;
        for (long q = p; n % q == 0; q *= p) {
            int gen = hg->power(c, n / q);
            if (!zg.contains(iota(gen))) options.push_back(gen);
        }
        if (options.empty()) continue;
        out.proof_choice.push_back(options.front());
        per_prime.push_back(std::move(options));
    }
    out.lists.push_back({});
    for (const auto& options : per_prime) {
        std::vector<std::vector<int>> next;
        for (const auto& l : out.lists)
            for (int o : options) {
                auto m = l;
                m.push_back(o);
                next.push_back(std::move(m));
            }
        out.lists = std::move(next);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Section hypothesis for abelian minimal normals meeting H trivially

struct SectionCheck {
    std::optional<bool> hypothesis;  // absent when a family exceeds the cap
    bool conclusion = false;
    std::string note;
    bool consistent() const { return !hypothesis || !*hypothesis || conclusion; }
};

/// G has a faithful irreducible sigma with Res sigma containing rho.
inline bool section_conclusion(const ClassFunction& rho, const GroupHom& iota, const CharacterTable& tg) {
    for (auto [row, mult] : decompose(induce(rho, iota), tg).components)
        if (is_faithful_row(tg, row)) return true;
    return false;
}

/// Families are split by prime: a p-module is a section of a join only through
/// its p-part, so the hypothesis holds iff it holds inside every prime family.
inline SectionCheck section_hypothesis(const GroupHom& iota, int family_cap = kDefaultSectionFamilyCap) {
    const auto& g = iota.target;
    SectionCheck out;
    if (g->order() == 1) {
        out.hypothesis = true;
        return out;
    }
    const Subgroup h_image = iota.image();
    std::map<long, std::vector<Subgroup>> families;
    for (const auto& m : minimal_normal_subgroups(g))
        if (is_abelian(m) && m.intersect(h_image).is_trivial())
            families[detail::prime_divisors(m.order()).front()].push_back(m);
    auto as_h_module = [&](const Subgroup& a) { return restrict_actor(from_normal_subgroup(a), iota); };
    for (const auto& [p, fam] : families) {
        std::vector<GModule> mods;
        for (const auto& m : fam) mods.push_back(as_h_module(m));
        // two isomorphic members already violate the hypothesis
        for (std::size_t i = 0; i < mods.size(); ++i)
            for (std::size_t j = i + 1; j < mods.size(); ++j)
                if (module_isomorphism(mods[i], mods[j])) {
                    out.hypothesis = false;
                    out.note = "isomorphic H-modules " + std::to_string(i) + ", " + std::to_string(j) + " for p = " + std::to_string(p);
                    return out;
                }
        if (static_cast<int>(fam.size()) > family_cap) {
            out.note = "family for p = " + std::to_string(p) + " has " + std::to_string(fam.size()) + " members, cap " + std::to_string(family_cap);
            return out;
        }
        const unsigned k = static_cast<unsigned>(fam.size());
        for (unsigned mask = 1; mask < (1u << k); ++mask) {
            if (std::popcount(mask) < 3) continue;  // pairs are settled by the isomorphism test
            bool every_member_is_section = true;
            for (unsigned v = 0; v < k && every_member_is_section; ++v) {
                if (!(mask >> v & 1u)) continue;
                std::vector<Subgroup> rest;
                for (unsigned u = 0; u < k; ++u)
                    if (u != v && (mask >> u & 1u)) rest.push_back(fam[u]);
                every_member_is_section = is_section_isomorphic(mods[v], as_h_module(join_all(g, rest)));
            }
            if (every_member_is_section) {
                out.hypothesis = false;
                out.note = "subset mask " + std::to_string(mask) + " for p = " + std::to_string(p);
                return out;
            }
        }
    }
    out.hypothesis = true;
    return out;
}

inline SectionCheck prop_section_check(const ClassFunction& rho, const GroupHom& iota, const CharacterTable& tg,
                                       int family_cap = kDefaultSectionFamilyCap) {
    require_faithful_irreducible(rho);
    SectionCheck out = section_hypothesis(iota, family_cap);
    out.conclusion = section_conclusion(rho, iota, tg);
    return out;
}

// ---------------------------------------------------------------------------
// Groups with a faithful irreducible character

struct GaschutzReport {
    bool faithful_irreducible = false;
    bool socle_single_class = false;
    bool socle_abelian_single_class = false;
    bool normals_in_socle_abelian_single_class = false;
    bool agree() const {
        return faithful_irreducible == socle_single_class && socle_single_class == socle_abelian_single_class &&
               socle_abelian_single_class == normals_in_socle_abelian_single_class;
    }
};

inline bool socle_abelian_single_class(const GroupPtr& g) {
    if (g->order() == 1) return true;
    return is_generated_by_single_class(socle_abelian(g)).generated;
}

inline GaschutzReport gaschutz(const GroupPtr& g, const CharacterTable& t) {
    if (g->order() == 1) fail(ErrorCode::TrivialGroup, "Gaschutz criterion needs a non-trivial group");
    GaschutzReport r;
    r.faithful_irreducible = !faithful_rows(t).empty();
    r.socle_single_class = is_generated_by_single_class(socle(g)).generated;
    r.socle_abelian_single_class = socle_abelian_single_class(g);
    // normal subgroups inside the abelian socle are its submodules
    auto mod = from_normal_subgroup(socle_abelian(g));
    r.normals_in_socle_abelian_single_class = true;
    for (const auto& s : all_submodules(mod)) {
        ElementSet in_g(static_cast<std::size_t>(g->order()));
        for (int x : s.elements()) in_g.insert(static_cast<std::size_t>((*mod.ambient)(x)));
        if (!is_generated_by_single_class(Subgroup(g, std::move(in_g))).generated) {
            r.normals_in_socle_abelian_single_class = false;
            break;
        }
    }
    return r;
}

inline GaschutzReport gaschutz(const GroupPtr& g) { return gaschutz(g, character_table(g)); }

// ---------------------------------------------------------------------------
// Characters of the center

/// A character of Z(G), Q/Z-valued, indexed like center(g).elements().
using CentralCharacter = std::vector<mpq_class>;

inline void validate_central_character(const GroupPtr& g, const CentralCharacter& chi) {
    const auto& z = center(g);
    if (static_cast<int>(chi.size()) != z.order())
        fail(ErrorCode::NotCharacterOfCenter, "expected " + std::to_string(z.order()) + " values, got " + std::to_string(chi.size()));
    std::vector<int> local(static_cast<std::size_t>(g->order()), -1);
    for (int i = 0; i < z.order(); ++i) local[z.elements()[i]] = i;
    for (int i = 0; i < z.order(); ++i) {
        if (chi[i] < 0 || chi[i] >= 1) fail(ErrorCode::NotCharacterOfCenter, "value outside [0, 1)");
        for (int j = 0; j < z.order(); ++j)
            if (mod_one(chi[i] + chi[j]) != chi[local[g->mul(z.elements()[i], z.elements()[j])]])
                fail(ErrorCode::NotCharacterOfCenter, "not multiplicative at (" + g->label(z.elements()[i]) + ", " + g->label(z.elements()[j]) + ")");
    }
}

inline std::vector<CentralCharacter> central_characters(const GroupPtr& g) {
    return abelian_dual(*as_group(center(g)).group);
}

inline Subgroup central_character_kernel(const GroupPtr& g, const CentralCharacter& chi) {
    const auto& z = center(g);
    ElementSet k(static_cast<std::size_t>(g->order()));
    for (int i = 0; i < z.order(); ++i)
        if (chi[i] == 0) k.insert(static_cast<std::size_t>(z.elements()[i]));
    return Subgroup(g, std::move(k));
}

struct OmegaCoset {
    int representative = 0;              // least element of the coset z2 Z(G)
    std::vector<mpq_class> on_generators;  // chi([z2, g]) for the generators of G
};

struct OmegaReport {
    std::vector<OmegaCoset> cosets;
    bool injective = false;       // only the trivial coset maps to the trivial character
    bool quotient_cp = false;     // G -> G/ker(chi) is center-preserving
    bool agree() const { return injective == quotient_cp; }
};

inline OmegaReport omega_chi(const GroupPtr& g, const CentralCharacter& chi) {
    validate_central_character(g, chi);
    const auto& z = center(g);
    const auto& z2 = second_center(g);
    std::vector<int> local(static_cast<std::size_t>(g->order()), -1);
    for (int i = 0; i < z.order(); ++i) local[z.elements()[i]] = i;
    OmegaReport r;
    r.injective = true;
    ElementSet covered(static_cast<std::size_t>(g->order()));
    for (int x : z2.elements()) {
        if (covered.contains(static_cast<std::size_t>(x))) continue;
        for (int c : z.elements()) covered.insert(static_cast<std::size_t>(g->mul(x, c)));
        OmegaCoset coset{x, {}};
        for (int s : g->generators()) coset.on_generators.push_back(chi[local[g->commutator(x, s)]]);
        if (!z.contains(x)) {
            bool trivial = true;
            for (int y = 0; y < g->order() && trivial; ++y) trivial = chi[local[g->commutator(x, y)]] == 0;
            if (trivial) r.injective = false;
        }
        r.cosets.push_back(std::move(coset));
    }
    r.quotient_cp = relative_center(g, central_character_kernel(g, chi)) == z;
    return r;
}

// ---------------------------------------------------------------------------
// Existence of a center-preserving irreducible character

struct CpExistence {
    std::optional<int> via_table;          // a row with Z(sigma) = Z(G)
    std::optional<int> via_criterion;      // index into central_characters(g)
    std::optional<bool> omega_only;        // nilpotent groups: some chi with injective omega
    bool exists() const { return via_table.has_value(); }
    bool routes_agree() const {
        return via_table.has_value() == via_criterion.has_value() && (!omega_only || *omega_only == via_table.has_value());
    }
};

inline CpExistence cp_existence(const GroupPtr& g, const CharacterTable& t) {
    if (g->order() == 1) fail(ErrorCode::TrivialGroup, "existence question needs a non-trivial group");
    CpExistence r;
    const auto& centers = row_centers(t);
    for (int i = 0; i < t.size() && !r.via_table; ++i)
        if (centers[i] == center(g)) r.via_table = i;
    const bool nilpotent = is_nilpotent(g);
    if (nilpotent) r.omega_only = false;
    auto chars = central_characters(g);
    for (std::size_t i = 0; i < chars.size(); ++i) {
        auto om = omega_chi(g, chars[i]);
        if (!om.injective) continue;
        if (nilpotent) r.omega_only = true;
        if (r.via_criterion) continue;
        auto q = quotient(central_character_kernel(g, chars[i]));
        if (socle_abelian_single_class(q.group)) r.via_criterion = static_cast<int>(i);
        if (r.via_criterion && (!nilpotent || *r.omega_only)) break;
    }
    return r;
}

inline CpExistence cp_existence(const GroupPtr& g) { return cp_existence(g, character_table(g)); }

/// Intersection of the centers of all irreducible characters.
inline Subgroup quasikernel_intersection(const GroupPtr& g, const CharacterTable& t) {
    if (g->order() == 1) fail(ErrorCode::TrivialGroup, "quasikernel intersection of the trivial group");
    Subgroup k = Subgroup::whole(g);
    for (const auto& c : row_centers(t)) k = k.intersect(c);
    return k;
}

inline Subgroup quasikernel_intersection(const GroupPtr& g) { return quasikernel_intersection(g, character_table(g)); }

}  // namespace fgchar
