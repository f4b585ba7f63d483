#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "fgchar/constructions.hpp"
#include "fgchar/group.hpp"
#include "fgchar/subgroups.hpp"

namespace fgchar {

/// Default bound on carrier sizes for submodule enumeration and searches.
inline constexpr int kDefaultModuleCap = 4096;

/// Q/Z value in [0, 1).
inline mpq_class mod_one(mpq_class q) {
    q.canonicalize();
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    q -= fl;
    q.canonicalize();
    return q;
}

/// Every homomorphism A -> Q/Z of a finite abelian group, as a value table
/// indexed by element. Ordered by the images of A's greedy generators.
inline std::vector<std::vector<mpq_class>> abelian_dual(const FiniteGroup& a) {
    if (!a.is_abelian()) fail(ErrorCode::NotAbelian, "dual of a non-abelian group");
    const int n = a.order();
    // greedy generating set in index order
    std::vector<int> gens;
    {
        ElementSet reached(static_cast<std::size_t>(n));
        reached.insert(static_cast<std::size_t>(a.identity()));
        for (int g = 0; g < n; ++g) {
            if (reached.contains(static_cast<std::size_t>(g))) continue;
            gens.push_back(g);
            reached = generated_set(a, gens);
        }
    }
    std::vector<std::vector<mpq_class>> out;
    std::vector<int> choice(gens.size(), 0);
    auto extend = [&]() -> std::optional<std::vector<mpq_class>> {
        std::vector<mpq_class> val(static_cast<std::size_t>(n));
        std::vector<char> set(static_cast<std::size_t>(n), 0);
        val[a.identity()] = 0;
        set[a.identity()] = 1;
        std::vector<int> queue{a.identity()};
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (std::size_t j = 0; j < gens.size(); ++j) {
                int y = a.mul(queue[i], gens[j]);
                mpq_class v = mod_one(val[queue[i]] + mpq_class(choice[j], a.element_order(gens[j])));
                if (!set[y]) {
                    set[y] = 1;
                    val[y] = v;
                    queue.push_back(y);
                } else if (val[y] != v) {
                    return std::nullopt;
                }
            }
        return val;
    };
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (j == gens.size()) {
            if (auto v = extend()) out.push_back(std::move(*v));
            return;
        }
        for (int c = 0; c < a.element_order(gens[j]); ++c) {
            choice[j] = c;
            rec(j + 1);
        }
    };
    rec(0);
    return out;
}

/// A finite abelian group (the carrier, written multiplicatively as a
/// FiniteGroup) with a left action of `actor` by automorphisms.
struct GModule {
    GroupPtr carrier;
    GroupPtr actor;
    std::vector<std::vector<int>> act;  // act[g][m] = g . m
    /// Carrier elements as elements of an ambient group, when the module came from one.
    std::optional<GroupHom> ambient;

    int order() const { return carrier->order(); }
    int apply(int g, int m) const { return act[g][m]; }
};

inline void validate_module(const GModule& m) {
    if (!m.carrier->is_abelian()) fail(ErrorCode::NotAbelian, "module carrier is not abelian");
    validate_action(*m.carrier, *m.actor, m.act);
}

/// Conjugation module g . a = g a g^-1 on an abelian normal subgroup.
inline GModule from_normal_subgroup(const Subgroup& a) {
    if (!is_abelian(a)) fail(ErrorCode::NotAbelian, "subgroup is not abelian");
    require_normal(a);
    const auto& g = a.parent();
    auto emb = as_group(a);
    std::vector<int> local(static_cast<std::size_t>(g->order()), -1);
    for (int i = 0; i < emb.group->order(); ++i) local[emb.inclusion(i)] = i;
    GModule m{emb.group, g, {}, emb.inclusion};
    m.act.assign(static_cast<std::size_t>(g->order()), std::vector<int>(static_cast<std::size_t>(emb.group->order())));
    for (int x = 0; x < g->order(); ++x)
        for (int i = 0; i < emb.group->order(); ++i) m.act[x][i] = local[g->conj(emb.inclusion(i), g->inv(x))];
    return m;
}

/// The same carrier viewed as a module over a group mapping into the actor.
inline GModule restrict_actor(const GModule& m, const GroupHom& into_actor) {
    GModule r{m.carrier, into_actor.source, {}, m.ambient};
    for (int h = 0; h < into_actor.source->order(); ++h) r.act.push_back(m.act[into_actor(h)]);
    return r;
}

/// Module from an explicit action table (validated).
inline GModule make_module(GroupPtr carrier, GroupPtr actor, std::vector<std::vector<int>> act) {
    GModule m{std::move(carrier), std::move(actor), std::move(act), std::nullopt};
    validate_module(m);
    return m;
}

/// Submodules are subgroups of the carrier stable under the action.
inline Subgroup submodule_generated(const GModule& m, std::span<const int> subset) {
    std::vector<int> orbit;
    ElementSet seen(static_cast<std::size_t>(m.order()));
    for (int s : subset)
        for (int g = 0; g < m.actor->order(); ++g) {
            int v = m.act[g][s];
            if (!seen.contains(static_cast<std::size_t>(v))) {
                seen.insert(static_cast<std::size_t>(v));
                orbit.push_back(v);
            }
        }
    return subgroup_generated(m.carrier, orbit);
}

inline bool is_submodule(const GModule& m, const Subgroup& s) {
    for (int g : m.actor->generators())
        for (int v : s.elements())
            if (!s.contains(m.act[g][v])) return false;
    return true;
}

struct CyclicResult {
    bool cyclic = false;
    std::optional<int> generator;
};

/// Cyclic iff some element's orbit generates the carrier.
inline CyclicResult is_cyclic_module(const GModule& m) {
    if (m.order() == 1) return {true, m.carrier->identity()};
    for (int v = 0; v < m.order(); ++v) {
        int one[1] = {v};
        if (submodule_generated(m, one).order() == m.order()) return {true, v};
    }
    return {false, std::nullopt};
}

inline bool single_orbit_generates(const GModule& m) { return is_cyclic_module(m).cyclic; }

inline void require_module_cap(const GModule& m, int cap) {
    if (m.order() > cap) fail(ErrorCode::CapExceeded, "module of order " + std::to_string(m.order()) + " exceeds cap " + std::to_string(cap));
}

/// Every submodule, by join closure of cyclic submodules; sorted by (order, elements).
inline std::vector<Subgroup> all_submodules(const GModule& m, int cap = kDefaultModuleCap) {
    require_module_cap(m, cap);
    std::vector<Subgroup> cyclic;
    std::unordered_set<ElementSet, ElementSetHash> seen;
    for (int v = 0; v < m.order(); ++v) {
        int one[1] = {v};
        auto s = submodule_generated(m, one);
        if (seen.insert(s.members()).second) cyclic.push_back(std::move(s));
    }
    std::vector<Subgroup> found = cyclic;
    for (std::size_t i = 0; i < found.size(); ++i)
        for (const auto& c : cyclic) {
            if (c.is_subgroup_of(found[i])) continue;
            auto j = join(found[i], c);
            if (seen.insert(j.members()).second) found.push_back(std::move(j));
        }
    std::sort(found.begin(), found.end());
    return found;
}

/// Simple submodules: the minimal nonzero cyclic submodules.
inline std::vector<Subgroup> simple_submodules(const GModule& m, int cap = kDefaultModuleCap) {
    require_module_cap(m, cap);
    std::vector<Subgroup> cyclic;
    std::unordered_set<ElementSet, ElementSetHash> seen;
    for (int v = 0; v < m.order(); ++v) {
        if (v == m.carrier->identity()) continue;
        int one[1] = {v};
        auto s = submodule_generated(m, one);
        if (seen.insert(s.members()).second) cyclic.push_back(std::move(s));
    }
    std::vector<Subgroup> out;
    for (const auto& s : cyclic) {
        bool minimal = true;
        for (const auto& t : cyclic)
            if (t.order() < s.order() && t.is_subgroup_of(s)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// A complement T of S (S + T = M, S n T = 0), accumulated greedily from simple submodules.
inline Subgroup complement_in_semisimple(const GModule& m, const Subgroup& s, int cap = kDefaultModuleCap) {
    if (!is_submodule(m, s)) fail(ErrorCode::InvalidInput, "S is not a submodule");
    Subgroup t = Subgroup::trivial(m.carrier);
    Subgroup sum = s;
    for (const auto& u : simple_submodules(m, cap)) {
        if (!u.intersect(sum).is_trivial()) continue;
        t = join(t, u);
        sum = join(sum, u);
    }
    if (sum.order() != m.order()) fail(ErrorCode::NotSemisimple, "no complement: simple submodules span only " + std::to_string(sum.order()) + " of " + std::to_string(m.order()) + " elements");
    if (!s.intersect(t).is_trivial() || s.order() * t.order() != m.order())
        fail(ErrorCode::NotSemisimple, "complement equations fail");
    return t;
}

/// The submodule `s` as a module in its own right.
inline GModule submodule_as_module(const GModule& m, const Subgroup& s) {
    auto emb = as_group(s);
    std::vector<int> local(static_cast<std::size_t>(m.order()), -1);
    for (int i = 0; i < emb.group->order(); ++i) local[emb.inclusion(i)] = i;
    GModule out{emb.group, m.actor, {}, std::nullopt};
    for (int g = 0; g < m.actor->order(); ++g) {
        std::vector<int> row(static_cast<std::size_t>(emb.group->order()));
        for (int i = 0; i < emb.group->order(); ++i) row[i] = local[m.act[g][emb.inclusion(i)]];
        out.act.push_back(std::move(row));
    }
    if (m.ambient) {
        std::vector<int> img;
        for (int i = 0; i < emb.group->order(); ++i) img.push_back((*m.ambient)(emb.inclusion(i)));
        out.ambient = GroupHom{emb.group, m.ambient->target, std::move(img)};
    }
    return out;
}

/// B/C for submodules C <= B.
inline GModule section_module(const GModule& m, const Subgroup& b, const Subgroup& c) {
    GModule bm = submodule_as_module(m, b);
    std::vector<int> local(static_cast<std::size_t>(m.order()), -1);
    for (int i = 0; i < bm.order(); ++i) local[b.elements()[i]] = i;
    ElementSet cs(static_cast<std::size_t>(bm.order()));
    for (int v : c.elements()) cs.insert(static_cast<std::size_t>(local[v]));
    auto q = quotient(Subgroup(bm.carrier, std::move(cs)));
    // representative of each coset in the B-local numbering
    std::vector<int> rep(static_cast<std::size_t>(q.group->order()), -1);
    for (int i = 0; i < bm.order(); ++i)
        if (rep[q.projection(i)] < 0) rep[q.projection(i)] = i;
    GModule out{q.group, m.actor, {}, std::nullopt};
    for (int g = 0; g < m.actor->order(); ++g) {
        std::vector<int> row(static_cast<std::size_t>(q.group->order()));
        for (int k = 0; k < q.group->order(); ++k) row[k] = q.projection(bm.act[g][rep[k]]);
        out.act.push_back(std::move(row));
    }
    return out;
}

/// A generating list chosen greedily by index; not necessarily of minimal length.
inline std::vector<int> module_generators(const GModule& m) {
    std::vector<int> gens;
    Subgroup reached = Subgroup::trivial(m.carrier);
    for (int v = 0; v < m.order() && reached.order() < m.order(); ++v) {
        if (reached.contains(v)) continue;
        gens.push_back(v);
        reached = submodule_generated(m, gens);
    }
    return gens;
}

namespace detail {

inline std::vector<int> orbit_size_profile(const GModule& m) {
    std::vector<int> sizes;
    ElementSet seen(static_cast<std::size_t>(m.order()));
    for (int v = 0; v < m.order(); ++v) {
        if (seen.contains(static_cast<std::size_t>(v))) continue;
        int count = 0;
        for (int g = 0; g < m.actor->order(); ++g) {
            int w = m.act[g][v];
            if (!seen.contains(static_cast<std::size_t>(w))) {
                seen.insert(static_cast<std::size_t>(w));
                ++count;
            }
        }
        sizes.push_back(count);
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

}  // namespace detail

/// Equivariant isomorphism V -> W over the same actor, if one exists.
inline std::optional<std::vector<int>> module_isomorphism(const GModule& v, const GModule& w) {
    if (v.actor != w.actor && v.actor->order() != w.actor->order()) fail(ErrorCode::GroupMismatch, "modules over different groups");
    if (v.order() != w.order()) return std::nullopt;
    if (v.carrier->exponent() != w.carrier->exponent()) return std::nullopt;
    if (detail::orbit_size_profile(v) != detail::orbit_size_profile(w)) return std::nullopt;
    const int n = v.order();
    auto gens = module_generators(v);
    const auto& actor_gens = v.actor->generators();
    std::vector<int> images(gens.size());

    auto try_extend = [&]() -> std::optional<std::vector<int>> {
        std::vector<int> phi(static_cast<std::size_t>(n), -1);
        phi[v.carrier->identity()] = w.carrier->identity();
        std::vector<int> queue{v.carrier->identity()};
        auto visit = [&](int x, int y) {
            if (phi[x] < 0) {
                phi[x] = y;
                queue.push_back(x);
                return true;
            }
            return phi[x] == y;
        };
        for (std::size_t i = 0; i < queue.size(); ++i) {
            int x = queue[i];
            for (std::size_t j = 0; j < gens.size(); ++j)
                if (!visit(v.carrier->mul(x, gens[j]), w.carrier->mul(phi[x], images[j]))) return std::nullopt;
            for (int a : actor_gens)
                if (!visit(v.act[a][x], w.act[a][phi[x]])) return std::nullopt;
        }
        if (static_cast<int>(queue.size()) != n) return std::nullopt;
        std::vector<char> hit(static_cast<std::size_t>(n), 0);
        for (int y : phi) {
            if (hit[y]) return std::nullopt;
            hit[y] = 1;
        }
        return phi;
    };
    std::optional<std::vector<int>> found;
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (found) return;
        if (j == gens.size()) {
            found = try_extend();
            return;
        }
        const int ord = v.carrier->element_order(gens[j]);
        for (int y = 0; y < n && !found; ++y) {
            if (w.carrier->element_order(y) != ord) continue;
            images[j] = y;
            rec(j + 1);
        }
    };
    rec(0);
    return found;
}

/// Whether V is isomorphic to B/C for some submodules C <= B of W.
inline bool is_section_isomorphic(const GModule& v, const GModule& w, int cap = kDefaultModuleCap) {
    require_module_cap(v, cap);
    require_module_cap(w, cap);
    if (w.order() % v.order()) return false;
    if (v.order() == 1) return true;
    auto subs = all_submodules(w, cap);
    for (const auto& b : subs) {
        if (b.order() < v.order() || b.order() % v.order()) continue;
        for (const auto& c : subs) {
            if (c.order() * v.order() != b.order() || !c.is_subgroup_of(b)) continue;
            if (module_isomorphism(v, section_module(w, b, c))) return true;
        }
    }
    return false;
}

/// Hom(carrier, Q/Z) with (g . phi)(n) = phi(g^-1 . n).
struct DualModule {
    GModule module;
    std::vector<std::vector<mpq_class>> characters;  // characters[k] = values of dual element k
};

inline DualModule dual_module(const GModule& m, int cap = kDefaultModuleCap) {
    require_module_cap(m, cap);
    auto chars = abelian_dual(*m.carrier);
    const int n = static_cast<int>(chars.size());
    std::map<std::vector<mpq_class>, int> index;
    for (int k = 0; k < n; ++k) index.emplace(chars[k], k);
    auto add = [&](int a, int b) {
        std::vector<mpq_class> s(chars[a].size());
        for (std::size_t i = 0; i < s.size(); ++i) s[i] = mod_one(chars[a][i] + chars[b][i]);
        return index.at(s);
    };
    std::vector<std::uint16_t> flat(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) flat[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>(add(a, b));
    std::vector<std::string> labels;
    for (int k = 0; k < n; ++k) labels.push_back("chi" + std::to_string(k));
    auto carrier = FiniteGroup::from_trusted_table(n, std::move(flat), std::move(labels));
    GModule out{carrier, m.actor, {}, std::nullopt};
    for (int g = 0; g < m.actor->order(); ++g) {
        const int ginv = m.actor->inv(g);
        std::vector<int> row(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            std::vector<mpq_class> img(chars[k].size());
            for (int x = 0; x < m.order(); ++x) img[x] = chars[k][m.act[ginv][x]];
            row[k] = index.at(img);
        }
        out.act.push_back(std::move(row));
    }
    return {std::move(out), std::move(chars)};
}

/// An injective H-equivariant homomorphism M -> N built from the
/// decomposition m = h_m n_m (G = HN): m -> n_m^-1.
struct GoursatWitness {
    std::vector<std::pair<int, int>> map;  // (m, image in N), element indices of G
    bool injective = false;
    bool equivariant = false;
    bool homomorphism = false;
};

inline GoursatWitness goursat_witness(const Subgroup& h, const Subgroup& m, const Subgroup& n) {
    const auto& g = h.parent();
    if (!is_normal(m)) fail(ErrorCode::PreconditionViolated, "M is not normal in G");
    if (!is_normal(n)) fail(ErrorCode::PreconditionViolated, "N is not normal in G");
    if (!m.intersect(h).is_trivial()) fail(ErrorCode::PreconditionViolated, "M n H is not trivial");
    if (!n.intersect(h).is_trivial()) fail(ErrorCode::PreconditionViolated, "N n H is not trivial");
    if (!m.intersect(n).is_trivial()) fail(ErrorCode::PreconditionViolated, "M n N is not trivial");
    if (static_cast<long long>(h.order()) * n.order() != g->order()) fail(ErrorCode::PreconditionViolated, "G is not HN");

    GoursatWitness w;
    std::unordered_map<int, int> phi;
    for (int x : m.elements()) {
        int image = -1;
        for (int hh : h.elements()) {
            int nm = g->mul(g->inv(hh), x);  // x = hh * nm
            if (n.contains(nm)) {
                image = g->inv(nm);
                break;
            }
        }
        if (image < 0) fail(ErrorCode::PreconditionViolated, "G is not HN");
        phi[x] = image;
        w.map.emplace_back(x, image);
    }
    std::unordered_set<int> images;
    for (const auto& [x, y] : w.map) images.insert(y);
    w.injective = images.size() == w.map.size();
    w.homomorphism = true;
    for (int a : m.elements())
        for (int b : m.elements())
            if (phi[g->mul(a, b)] != g->mul(phi[a], phi[b])) w.homomorphism = false;
    w.equivariant = true;
    for (int hh : h.elements())
        for (int x : m.elements())
            if (phi[g->conj(x, g->inv(hh))] != g->conj(phi[x], g->inv(hh))) w.equivariant = false;
    return w;
}

}  // namespace fgchar
