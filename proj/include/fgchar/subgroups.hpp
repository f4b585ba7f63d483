#pragma once

#include <algorithm>
#include <span>
#include <unordered_set>
#include <vector>

#include "fgchar/group.hpp"

namespace fgchar {

/// Orbits of the conjugation action. Classes are ordered by their least
/// element, so the identity class comes first; reps[k] is that least element.
struct ConjugacyClasses {
    std::vector<std::vector<int>> classes;
    std::vector<int> class_of;
    std::vector<int> reps;

    int size() const noexcept { return static_cast<int>(classes.size()); }
    int class_size(int k) const noexcept { return static_cast<int>(classes[k].size()); }
};

// ---------------------------------------------------------------------------
// Closures

/// Closes a set under multiplication by `gens` starting from `seed` members.
inline ElementSet close_under(const FiniteGroup& g, ElementSet members, std::span<const int> gens) {
    std::vector<int> queue = members.to_vector();
    for (std::size_t i = 0; i < queue.size(); ++i) {
        int x = queue[i];
        for (int s : gens) {
            int y = g.mul(x, s);
            if (!members.contains(static_cast<std::size_t>(y))) {
                members.insert(static_cast<std::size_t>(y));
                queue.push_back(y);
            }
        }
    }
    return members;
}

inline ElementSet generated_set(const FiniteGroup& g, std::span<const int> gens) {
    ElementSet s(static_cast<std::size_t>(g.order()));
    s.insert(static_cast<std::size_t>(g.identity()));
    return close_under(g, std::move(s), gens);
}

inline Subgroup subgroup_generated(const GroupPtr& g, std::span<const int> subset) {
    return Subgroup(g, generated_set(*g, subset));
}

/// Smallest normal subgroup containing `subset`.
inline Subgroup normal_closure(const GroupPtr& g, std::span<const int> subset) {
    const int n = g->order();
    std::vector<int> gens;
    ElementSet in_gens(static_cast<std::size_t>(n));
    for (int s : subset)
        for (int x = 0; x < n; ++x) {
            int c = g->conj(s, x);
            if (!in_gens.contains(static_cast<std::size_t>(c))) {
                in_gens.insert(static_cast<std::size_t>(c));
                gens.push_back(c);
            }
        }
    return Subgroup(g, generated_set(*g, gens));
}

/// <<[h, g] : h in subset, g in G>>
inline Subgroup commutator_closure(const GroupPtr& g, std::span<const int> subset) {
    std::vector<int> comms;
    for (int h : subset)
        for (int x = 0; x < g->order(); ++x) comms.push_back(g->commutator(h, x));
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    return normal_closure(g, comms);
}

inline Subgroup join(const Subgroup& a, const Subgroup& b) {
    std::vector<int> gens = a.elements();
    gens.insert(gens.end(), b.elements().begin(), b.elements().end());
    return subgroup_generated(a.parent(), gens);
}

inline Subgroup join_all(const GroupPtr& g, const std::vector<Subgroup>& parts) {
    std::vector<int> gens;
    for (const auto& p : parts) gens.insert(gens.end(), p.elements().begin(), p.elements().end());
    return subgroup_generated(g, gens);
}

inline bool is_closed_subgroup(const FiniteGroup& g, const ElementSet& s) {
    if (!s.contains(static_cast<std::size_t>(g.identity()))) return false;
    auto el = s.to_vector();
    for (int a : el) {
        if (!s.contains(static_cast<std::size_t>(g.inv(a)))) return false;
        for (int b : el)
            if (!s.contains(static_cast<std::size_t>(g.mul(a, b)))) return false;
    }
    return true;
}

/// Returns a conjugating witness (n, x) with x^-1 n x outside `sub`, if any.
inline std::optional<std::pair<int, int>> normality_witness(const Subgroup& sub) {
    const auto& g = *sub.parent();
    for (int n : sub.elements())
        for (int x = 0; x < g.order(); ++x)
            if (!sub.contains(g.conj(n, x))) return std::make_pair(n, x);
    return std::nullopt;
}

inline bool is_normal(const Subgroup& sub) { return !normality_witness(sub).has_value(); }

inline void require_normal(const Subgroup& sub) {
    if (auto w = normality_witness(sub))
        fail(ErrorCode::NotNormal, "conjugating " + sub.parent()->label(w->first) + " by " + sub.parent()->label(w->second) +
                                       " leaves the subgroup");
}

inline Subgroup conjugate(const Subgroup& sub, int x) {
    const auto& g = *sub.parent();
    ElementSet s(static_cast<std::size_t>(g.order()));
    for (int h : sub.elements()) s.insert(static_cast<std::size_t>(g.conj(h, x)));
    return Subgroup(sub.parent(), std::move(s));
}

inline bool is_abelian(const Subgroup& sub) {
    const auto& g = *sub.parent();
    const auto& el = sub.elements();
    for (std::size_t i = 0; i < el.size(); ++i)
        for (std::size_t j = i + 1; j < el.size(); ++j)
            if (g.mul(el[i], el[j]) != g.mul(el[j], el[i])) return false;
    return true;
}

/// Subgroup of elements commuting with every element of `sub`.
inline Subgroup centralizer(const Subgroup& sub) {
    const auto& g = *sub.parent();
    ElementSet s(static_cast<std::size_t>(g.order()));
    for (int x = 0; x < g.order(); ++x) {
        bool ok = true;
        for (int h : sub.elements())
            if (g.mul(x, h) != g.mul(h, x)) {
                ok = false;
                break;
            }
        if (ok) s.insert(static_cast<std::size_t>(x));
    }
    return Subgroup(sub.parent(), std::move(s));
}

// ---------------------------------------------------------------------------
// Centers and classes

inline const Subgroup& center(const GroupPtr& g) {
    return g->cached<Subgroup>("center", [&] { return centralizer(Subgroup::whole(g)); });
}

/// Elements g with [g, x] in `n` for all x (preimage of the center of G/n).
inline Subgroup relative_center(const GroupPtr& g, const Subgroup& n) {
    ElementSet s(static_cast<std::size_t>(g->order()));
    for (int a = 0; a < g->order(); ++a) {
        bool ok = true;
        for (int x = 0; x < g->order() && ok; ++x) ok = n.contains(g->commutator(a, x));
        if (ok) s.insert(static_cast<std::size_t>(a));
    }
    return Subgroup(g, std::move(s));
}

inline const Subgroup& second_center(const GroupPtr& g) {
    return g->cached<Subgroup>("second_center", [&] { return relative_center(g, center(g)); });
}

inline const ConjugacyClasses& conjugacy_classes(const GroupPtr& g) {
    return g->cached<ConjugacyClasses>("classes", [&] {
        const int n = g->order();
        ConjugacyClasses cc;
        cc.class_of.assign(static_cast<std::size_t>(n), -1);
        for (int a = 0; a < n; ++a) {
            if (cc.class_of[a] >= 0) continue;
            const int k = cc.size();
            ElementSet orbit(static_cast<std::size_t>(n));
            for (int x = 0; x < n; ++x) orbit.insert(static_cast<std::size_t>(g->conj(a, x)));
            auto members = orbit.to_vector();
            for (int m : members) cc.class_of[m] = k;
            cc.reps.push_back(members.front());
            cc.classes.push_back(std::move(members));
        }
        // identity is the least element only if it has index 0; move its class first
        const int idc = cc.class_of[g->identity()];
        if (idc != 0) {
            auto rotate_front = [idc](auto& v) { std::rotate(v.begin(), v.begin() + idc, v.begin() + idc + 1); };
            rotate_front(cc.classes);
            rotate_front(cc.reps);
            for (int k = 0; k < cc.size(); ++k)
                for (int m : cc.classes[k]) cc.class_of[m] = k;
        }
        return cc;
    });
}

inline const Subgroup& derived_subgroup(const GroupPtr& g) {
    return g->cached<Subgroup>("derived", [&] {
        std::vector<int> comms;
        ElementSet seen(static_cast<std::size_t>(g->order()));
        for (int a = 0; a < g->order(); ++a)
            for (int b = 0; b < g->order(); ++b) {
                int c = g->commutator(a, b);
                if (!seen.contains(static_cast<std::size_t>(c))) {
                    seen.insert(static_cast<std::size_t>(c));
                    comms.push_back(c);
                }
            }
        return subgroup_generated(g, comms);
    });
}

/// Upper central series reaches G.
inline bool is_nilpotent(const GroupPtr& g) {
    return g->cached<bool>("nilpotent", [&] {
        Subgroup current = Subgroup::trivial(g);
        while (true) {
            if (current.order() == g->order()) return true;
            Subgroup next = relative_center(g, current);
            if (next.order() == current.order()) return false;
            current = std::move(next);
        }
    });
}

// ---------------------------------------------------------------------------
// Subgroup lattice

inline constexpr int kDefaultSubgroupOrderCap = 256;

/// Every subgroup exactly once, by join closure of cyclic subgroups; sorted by
/// (order, element set).
inline std::vector<Subgroup> all_subgroups(const GroupPtr& g, int order_cap = kDefaultSubgroupOrderCap) {
    if (g->order() > order_cap)
        fail(ErrorCode::OrderCapExceeded, "all_subgroups on a group of order " + std::to_string(g->order()));
    const int n = g->order();

    // cyclic subgroups, one generator each
    std::vector<ElementSet> cyclic_sets;
    std::vector<int> cyclic_gen;
    {
        std::unordered_set<ElementSet, ElementSetHash> seen;
        for (int a = 0; a < n; ++a) {
            int gen[1] = {a};
            ElementSet s = generated_set(*g, gen);
            if (seen.insert(s).second) {
                cyclic_sets.push_back(std::move(s));
                cyclic_gen.push_back(a);
            }
        }
    }

    struct Node {
        ElementSet set;
        std::vector<int> gens;
    };
    std::vector<Node> found;
    std::unordered_set<ElementSet, ElementSetHash> known;
    for (std::size_t c = 0; c < cyclic_sets.size(); ++c) {
        known.insert(cyclic_sets[c]);
        std::vector<int> gens;
        if (cyclic_sets[c].count() > 1) gens.push_back(cyclic_gen[c]);
        found.push_back({cyclic_sets[c], std::move(gens)});
    }
    for (std::size_t i = 0; i < found.size(); ++i) {
        for (std::size_t c = 0; c < cyclic_sets.size(); ++c) {
            if (cyclic_sets[c].is_subset_of(found[i].set)) continue;
            std::vector<int> gens = found[i].gens;
            gens.push_back(cyclic_gen[c]);
            ElementSet joined = close_under(*g, found[i].set, gens);
            if (known.insert(joined).second) found.push_back({std::move(joined), std::move(gens)});
        }
    }
    std::vector<Subgroup> out;
    out.reserve(found.size());
    for (auto& node : found) out.emplace_back(g, std::move(node.set));
    std::sort(out.begin(), out.end());
    return out;
}

/// One representative (the least in list order) per conjugacy class of subgroups.
inline std::vector<Subgroup> subgroup_class_representatives(const std::vector<Subgroup>& subgroups) {
    std::vector<Subgroup> reps;
    if (subgroups.empty()) return reps;
    const auto& g = *subgroups.front().parent();
    std::unordered_set<ElementSet, ElementSetHash> covered;
    for (const auto& s : subgroups) {
        if (covered.count(s.members())) continue;
        reps.push_back(s);
        for (int x = 0; x < g.order(); ++x) covered.insert(conjugate(s, x).members());
    }
    return reps;
}

// ---------------------------------------------------------------------------
// Minimal normal subgroups and socle

inline const std::vector<Subgroup>& minimal_normal_subgroups(const GroupPtr& g) {
    if (g->order() == 1) fail(ErrorCode::TrivialGroup, "minimal normal subgroups of the trivial group");
    return g->cached<std::vector<Subgroup>>("minimal_normals", [&] {
        const auto& cc = conjugacy_classes(g);
        std::vector<Subgroup> closures;
        std::unordered_set<ElementSet, ElementSetHash> seen;
        for (int k = 1; k < cc.size(); ++k) {
            int rep[1] = {cc.reps[k]};
            Subgroup s = normal_closure(g, rep);
            if (seen.insert(s.members()).second) closures.push_back(std::move(s));
        }
        std::vector<Subgroup> minimal;
        for (const auto& s : closures) {
            bool is_min = true;
            for (const auto& t : closures)
                if (t.order() < s.order() && t.is_subgroup_of(s)) {
                    is_min = false;
                    break;
                }
            if (is_min) minimal.push_back(s);
        }
        std::sort(minimal.begin(), minimal.end());
        return minimal;
    });
}

inline const Subgroup& socle(const GroupPtr& g) {
    const auto& mins = minimal_normal_subgroups(g);
    return g->cached<Subgroup>("socle", [&] { return join_all(g, mins); });
}

inline const Subgroup& socle_abelian(const GroupPtr& g) {
    const auto& mins = minimal_normal_subgroups(g);
    return g->cached<Subgroup>("socle_abelian", [&] {
        std::vector<Subgroup> parts;
        for (const auto& m : mins)
            if (is_abelian(m)) parts.push_back(m);
        return join_all(g, parts);
    });
}

inline const Subgroup& socle_nonabelian(const GroupPtr& g) {
    const auto& mins = minimal_normal_subgroups(g);
    return g->cached<Subgroup>("socle_nonabelian", [&] {
        std::vector<Subgroup> parts;
        for (const auto& m : mins)
            if (!is_abelian(m)) parts.push_back(m);
        return join_all(g, parts);
    });
}

struct SingleClassResult {
    bool generated = false;
    std::optional<int> witness;
};

/// Whether the normal subgroup `n` is the normal closure of one of its elements.
inline SingleClassResult is_generated_by_single_class(const Subgroup& n) {
    require_normal(n);
    const auto& g = n.parent();
    if (n.is_trivial()) return {true, g->identity()};
    const auto& cc = conjugacy_classes(g);
    for (int k = 0; k < cc.size(); ++k) {
        int rep = cc.reps[k];
        if (!n.contains(rep)) continue;
        int one[1] = {rep};
        if (normal_closure(g, one).order() == n.order()) return {true, rep};
    }
    return {false, std::nullopt};
}

// ---------------------------------------------------------------------------
// Subgroups as standalone groups

/// A subgroup realized as its own group, with the inclusion map.
struct EmbeddedSubgroup {
    Subgroup subgroup;
    GroupPtr group;
    GroupHom inclusion;  // group -> subgroup.parent()
};

/// `generators` (parent indices inside `sub`) become the declared generators.
inline EmbeddedSubgroup as_group(const Subgroup& sub, std::span<const int> generators = {}) {
    const auto& g = *sub.parent();
    const auto& el = sub.elements();
    const int m = static_cast<int>(el.size());
    std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
    for (int i = 0; i < m; ++i) local[el[i]] = i;
    std::vector<std::uint16_t> flat(static_cast<std::size_t>(m) * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) flat[static_cast<std::size_t>(a) * m + b] = static_cast<std::uint16_t>(local[g.mul(el[a], el[b])]);
    std::vector<std::string> labels;
    labels.reserve(el.size());
    for (int x : el) labels.push_back(g.label(x));
    NamedElements names;
    for (const auto& [name, x] : g.names())
        if (sub.contains(x)) names.emplace_back(name, local[x]);
    std::vector<int> gens;
    for (int x : generators) gens.push_back(local[x]);
    auto grp = FiniteGroup::from_trusted_table(m, std::move(flat), std::move(labels), std::move(names), std::move(gens));
    return {sub, grp, GroupHom{grp, sub.parent(), el}};
}

}  // namespace fgchar
