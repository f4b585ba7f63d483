#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "fgchar/group.hpp"
#include "fgchar/subgroups.hpp"

namespace fgchar {

struct DirectProduct {
    GroupPtr group;
    std::vector<GroupHom> embeddings;   // factor i -> group
    std::vector<GroupHom> projections;  // group -> factor i
};

/// Product of any number of factors. Element index is mixed radix with the
/// first factor most significant. With `suffix_names`, the generator names of
/// factor i get the suffix i+1 (z -> z1, z2, ...).
inline DirectProduct direct_product(const std::vector<GroupPtr>& factors, bool suffix_names = true) {
    long long total = 1;
    for (const auto& f : factors) {
        total *= f->order();
        if (total > kMaxGroupOrder) fail(ErrorCode::OrderCapExceeded, "direct product exceeds order " + std::to_string(kMaxGroupOrder));
    }
    const int n = static_cast<int>(total);
    const std::size_t k = factors.size();
    std::vector<int> stride(k, 1);
    for (std::size_t i = k; i-- > 1;) stride[i - 1] = stride[i] * factors[i]->order();

    auto component = [&](int x, std::size_t i) { return (x / stride[i]) % factors[i]->order(); };

    std::vector<std::uint16_t> flat(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int c = 0;
            for (std::size_t i = 0; i < k; ++i) c += factors[i]->mul(component(a, i), component(b, i)) * stride[i];
            flat[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>(c);
        }
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        std::string l = "(";
        for (std::size_t i = 0; i < k; ++i) {
            if (i) l += ',';
            l += factors[i]->label(component(x, i));
        }
        labels[x] = l + ")";
    }
    auto embed_index = [&](std::size_t i, int g) {
        int x = 0;
        for (std::size_t j = 0; j < k; ++j) x += (j == i ? g : factors[j]->identity()) * stride[j];
        return x;
    };
    NamedElements names;
    std::vector<int> gens;
    for (std::size_t i = 0; i < k; ++i) {
        for (const auto& [name, g] : factors[i]->names())
            names.emplace_back(suffix_names ? name + std::to_string(i + 1) : name, embed_index(i, g));
        for (int g : factors[i]->generators()) gens.push_back(embed_index(i, g));
    }
    DirectProduct out;
    out.group = FiniteGroup::from_trusted_table(n, std::move(flat), std::move(labels), std::move(names), std::move(gens));
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<int> emb(static_cast<std::size_t>(factors[i]->order()));
        for (int g = 0; g < factors[i]->order(); ++g) emb[g] = embed_index(i, g);
        out.embeddings.push_back(GroupHom{factors[i], out.group, std::move(emb)});
        std::vector<int> proj(static_cast<std::size_t>(n));
        for (int x = 0; x < n; ++x) proj[x] = component(x, i);
        out.projections.push_back(GroupHom{out.group, factors[i], std::move(proj)});
    }
    return out;
}

inline DirectProduct direct_product(const GroupPtr& g1, const GroupPtr& g2) { return direct_product({g1, g2}); }

/// action[h][n] = image of n under the automorphism attached to h.
using GroupAction = std::vector<std::vector<int>>;

inline void validate_action(const FiniteGroup& n, const FiniteGroup& h, const GroupAction& action) {
    if (static_cast<int>(action.size()) != h.order()) fail(ErrorCode::InvalidInput, "action must list one map per element of H");
    for (int x = 0; x < h.order(); ++x) {
        const auto& phi = action[x];
        if (static_cast<int>(phi.size()) != n.order()) fail(ErrorCode::InvalidInput, "action map has wrong length");
        std::vector<char> seen(static_cast<std::size_t>(n.order()), 0);
        for (int v : phi) {
            if (v < 0 || v >= n.order() || seen[v])
                fail(ErrorCode::ActionNotAutomorphism, "map of " + h.label(x) + " is not a bijection");
            seen[v] = 1;
        }
        for (int a = 0; a < n.order(); ++a)
            for (int b = 0; b < n.order(); ++b)
                if (phi[n.mul(a, b)] != n.mul(phi[a], phi[b]))
                    fail(ErrorCode::ActionNotAutomorphism,
                         "map of " + h.label(x) + " fails on the pair (" + n.label(a) + ", " + n.label(b) + ")");
    }
    for (int x = 0; x < h.order(); ++x)
        for (int y = 0; y < h.order(); ++y) {
            const auto& pxy = action[h.mul(x, y)];
            for (int a = 0; a < n.order(); ++a)
                if (pxy[a] != action[x][action[y][a]])
                    fail(ErrorCode::ActionNotHomomorphism, "pair (" + h.label(x) + ", " + h.label(y) + ")");
        }
}

/// Extends automorphisms given on a generating list of H to all of H.
/// Throws ActionNotHomomorphism when the generator images are inconsistent.
inline GroupAction action_from_generators(const FiniteGroup& n, const FiniteGroup& h, const std::vector<int>& gens,
                                          const std::vector<std::vector<int>>& images) {
    GroupAction action(static_cast<std::size_t>(h.order()));
    std::vector<int> id(static_cast<std::size_t>(n.order()));
    std::iota(id.begin(), id.end(), 0);
    action[h.identity()] = id;
    std::vector<int> queue{h.identity()};
    for (std::size_t i = 0; i < queue.size(); ++i) {
        int x = queue[i];
        for (std::size_t j = 0; j < gens.size(); ++j) {
            int y = h.mul(x, gens[j]);
            std::vector<int> phi(static_cast<std::size_t>(n.order()));
            for (int a = 0; a < n.order(); ++a) phi[a] = action[x][images[j][a]];
            if (action[y].empty()) {
                action[y] = std::move(phi);
                queue.push_back(y);
            } else if (action[y] != phi) {
                fail(ErrorCode::ActionNotHomomorphism,
                     "generator images disagree at " + h.label(y) + " (via " + h.label(x) + " and " + h.label(gens[j]) + ")");
            }
        }
    }
    if (static_cast<int>(queue.size()) != h.order()) fail(ErrorCode::InvalidInput, "listed generators do not generate H");
    return action;
}

struct SemidirectProduct {
    GroupPtr group;
    GroupHom embed_n;
    GroupHom embed_h;
};

/// N x| H on pairs (n, h), index n*|H| + h, with (n1,h1)(n2,h2) = (n1 * h1(n2), h1 h2).
inline SemidirectProduct semidirect_product(const GroupPtr& n, const GroupPtr& h, const GroupAction& action) {
    validate_action(*n, *h, action);
    const long long total = static_cast<long long>(n->order()) * h->order();
    if (total > kMaxGroupOrder) fail(ErrorCode::OrderCapExceeded, "semidirect product of order " + std::to_string(total));
    const int order = static_cast<int>(total);
    const int hn = h->order();
    std::vector<std::uint16_t> flat(static_cast<std::size_t>(order) * order);
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) {
            int n1 = a / hn, h1 = a % hn, n2 = b / hn, h2 = b % hn;
            int c = n->mul(n1, action[h1][n2]) * hn + h->mul(h1, h2);
            flat[static_cast<std::size_t>(a) * order + b] = static_cast<std::uint16_t>(c);
        }
    std::vector<std::string> labels(static_cast<std::size_t>(order));
    for (int x = 0; x < order; ++x) labels[x] = "(" + n->label(x / hn) + "," + h->label(x % hn) + ")";
    NamedElements names;
    std::vector<int> gens;
    for (const auto& [name, v] : n->names()) names.emplace_back(name, v * hn + h->identity());
    for (const auto& [name, v] : h->names()) names.emplace_back(name, n->identity() * hn + v);
    for (int v : n->generators()) gens.push_back(v * hn + h->identity());
    for (int v : h->generators()) gens.push_back(n->identity() * hn + v);
    SemidirectProduct out;
    out.group = FiniteGroup::from_trusted_table(order, std::move(flat), std::move(labels), std::move(names), std::move(gens));
    std::vector<int> en(static_cast<std::size_t>(n->order())), eh(static_cast<std::size_t>(hn));
    for (int v = 0; v < n->order(); ++v) en[v] = v * hn + h->identity();
    for (int v = 0; v < hn; ++v) eh[v] = n->identity() * hn + v;
    out.embed_n = GroupHom{n, out.group, std::move(en)};
    out.embed_h = GroupHom{h, out.group, std::move(eh)};
    return out;
}

struct Quotient {
    GroupPtr group;
    GroupHom projection;
};

/// G/N on coset representatives (least element index per coset), ordered by
/// representative. Labels and names are inherited from the representatives.
inline Quotient quotient(const Subgroup& normal) {
    require_normal(normal);
    const auto& g = normal.parent();
    const int n = g->order();
    std::vector<int> coset_of(static_cast<std::size_t>(n), -1);
    std::vector<int> reps;
    for (int x = 0; x < n; ++x) {
        if (coset_of[x] >= 0) continue;
        const int c = static_cast<int>(reps.size());
        reps.push_back(x);
        for (int m : normal.elements()) coset_of[g->mul(x, m)] = c;
    }
    const int q = static_cast<int>(reps.size());
    std::vector<std::uint16_t> flat(static_cast<std::size_t>(q) * q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) flat[static_cast<std::size_t>(a) * q + b] = static_cast<std::uint16_t>(coset_of[g->mul(reps[a], reps[b])]);
    std::vector<std::string> labels;
    for (int r : reps) labels.push_back(g->label(r));
    NamedElements names;
    for (const auto& [name, v] : g->names()) names.emplace_back(name, coset_of[v]);
    std::vector<int> gens;
    for (int v : g->generators())
        if (!normal.contains(v)) gens.push_back(coset_of[v]);
    Quotient out;
    out.group = FiniteGroup::from_trusted_table(q, std::move(flat), std::move(labels), std::move(names), std::move(gens));
    out.projection = GroupHom{g, out.group, std::move(coset_of)};
    return out;
}

}  // namespace fgchar
