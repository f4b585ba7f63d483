#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "fgchar/element_set.hpp"
#include "fgchar/errors.hpp"

namespace fgchar {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Named elements usable in words ("r", "s", "z1", ...), in declaration order.
using NamedElements = std::vector<std::pair<std::string, int>>;

/// Largest order for which a multiplication table is stored.
inline constexpr int kMaxGroupOrder = 10000;

/// An exact finite group given by its full multiplication table.
///
/// Immutable after construction. Derived data (classes, center, character
/// table, ...) is memoized per instance through `cached`, which is safe to
/// call from concurrent workers.
class FiniteGroup {
public:
    /// Validates `table` (entry table[g][h] = g*h) and derives identity and inverses.
    static GroupPtr from_multiplication_table(const std::vector<std::vector<int>>& table,
                                              std::vector<std::string> labels, NamedElements names = {});

    /// Trusted constructor for tables produced by the library's own constructions.
    /// Identity and inverses are still derived; associativity is not rechecked.
    static GroupPtr from_trusted_table(int order, std::vector<std::uint16_t> flat, std::vector<std::string> labels,
                                       NamedElements names = {}, std::vector<int> generators = {});

    int order() const noexcept { return n_; }
    int identity() const noexcept { return identity_; }
    int mul(int a, int b) const noexcept { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
    int inv(int a) const noexcept { return inv_[a]; }
    /// x^-1 g x
    int conj(int g, int x) const noexcept { return mul(mul(inv_[x], g), x); }
    /// [a,b] = a^-1 b^-1 a b
    int commutator(int a, int b) const noexcept { return mul(mul(inv_[a], inv_[b]), mul(a, b)); }
    int power(int g, long long k) const;
    int element_order(int g) const { return element_orders()[g]; }
    const std::vector<int>& element_orders() const;
    int exponent() const;
    bool is_abelian() const;

    const std::string& label(int g) const { return labels_[g]; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::optional<int> find_label(std::string_view label) const;

    const NamedElements& names() const noexcept { return names_; }
    std::optional<int> named(std::string_view name) const;

    /// Declared generators; when none were declared, a greedy generating set
    /// (each element not yet generated, in index order).
    const std::vector<int>& generators() const;

    /// Row-major copy of the table as nested vectors.
    std::vector<std::vector<int>> table() const;

    template <class T, class Make>
    const T& cached(const std::string& key, Make&& make) const {
        {
            std::lock_guard<std::mutex> lock(cache_->mutex);
            auto it = cache_->slots.find(key);
            if (it != cache_->slots.end()) return *static_cast<const T*>(it->second.get());
        }
        std::shared_ptr<const void> value = std::make_shared<const T>(make());
        std::lock_guard<std::mutex> lock(cache_->mutex);
        auto [it, inserted] = cache_->slots.try_emplace(key, std::move(value));
        return *static_cast<const T*>(it->second.get());
    }

private:
    struct Cache {
        std::mutex mutex;
        std::map<std::string, std::shared_ptr<const void>, std::less<>> slots;
    };

    FiniteGroup() : cache_(std::make_shared<Cache>()) {}
    void derive_identity_and_inverses();

    int n_ = 0;
    int identity_ = 0;
    std::vector<std::uint16_t> mul_;
    std::vector<int> inv_;
    std::vector<std::string> labels_;
    NamedElements names_;
    std::vector<int> gens_;
    std::shared_ptr<Cache> cache_;
};

/// A subgroup of a parent group, stored as a membership set.
class Subgroup {
public:
    Subgroup() = default;
    Subgroup(GroupPtr parent, ElementSet members)
        : parent_(std::move(parent)), members_(std::move(members)), elements_(members_.to_vector()) {}

    static Subgroup whole(const GroupPtr& g) {
        ElementSet s(static_cast<std::size_t>(g->order()));
        for (int i = 0; i < g->order(); ++i) s.insert(static_cast<std::size_t>(i));
        return Subgroup(g, std::move(s));
    }
    static Subgroup trivial(const GroupPtr& g) {
        ElementSet s(static_cast<std::size_t>(g->order()));
        s.insert(static_cast<std::size_t>(g->identity()));
        return Subgroup(g, std::move(s));
    }

    const GroupPtr& parent() const noexcept { return parent_; }
    const ElementSet& members() const noexcept { return members_; }
    const std::vector<int>& elements() const noexcept { return elements_; }
    int order() const noexcept { return static_cast<int>(elements_.size()); }
    bool contains(int g) const noexcept { return members_.contains(static_cast<std::size_t>(g)); }
    bool is_trivial() const noexcept { return elements_.size() == 1; }
    bool is_subgroup_of(const Subgroup& other) const noexcept { return members_.is_subset_of(other.members_); }

    Subgroup intersect(const Subgroup& other) const { return Subgroup(parent_, members_ & other.members_); }

    friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }
    /// Ordering by (order, sorted element list).
    friend bool operator<(const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements_ < b.elements_;
    }

private:
    GroupPtr parent_;
    ElementSet members_;
    std::vector<int> elements_;
};

/// A homomorphism given elementwise.
struct GroupHom {
    GroupPtr source;
    GroupPtr target;
    std::vector<int> image_of;

    int operator()(int g) const { return image_of[g]; }

    bool is_homomorphism() const {
        for (int a = 0; a < source->order(); ++a)
            for (int b = 0; b < source->order(); ++b)
                if (image_of[source->mul(a, b)] != target->mul(image_of[a], image_of[b])) return false;
        return true;
    }
    bool is_injective() const {
        std::vector<char> seen(static_cast<std::size_t>(target->order()), 0);
        for (int x : image_of) {
            if (seen[x]) return false;
            seen[x] = 1;
        }
        return true;
    }
    ElementSet image_set() const { return ElementSet::of(static_cast<std::size_t>(target->order()), image_of); }
    Subgroup image() const { return Subgroup(target, image_set()); }
    Subgroup kernel() const {
        ElementSet k(static_cast<std::size_t>(source->order()));
        for (int g = 0; g < source->order(); ++g)
            if (image_of[g] == target->identity()) k.insert(static_cast<std::size_t>(g));
        return Subgroup(source, std::move(k));
    }
};

// ---------------------------------------------------------------------------
// Implementation

inline GroupPtr FiniteGroup::from_multiplication_table(const std::vector<std::vector<int>>& table,
                                                       std::vector<std::string> labels, NamedElements names) {
    const int n = static_cast<int>(table.size());
    if (n == 0) fail(ErrorCode::InvalidInput, "empty multiplication table");
    if (n > kMaxGroupOrder) fail(ErrorCode::OrderCapExceeded, "table of order " + std::to_string(n));
    if (static_cast<int>(labels.size()) != n) fail(ErrorCode::InvalidInput, "label count does not match table size");
    {
        std::unordered_set<std::string> seen;
        for (const auto& l : labels)
            if (!seen.insert(l).second) fail(ErrorCode::InvalidInput, "duplicate label '" + l + "'");
    }
    std::vector<std::uint16_t> flat(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(table[a].size()) != n) fail(ErrorCode::InvalidInput, "table is not square");
        for (int b = 0; b < n; ++b) {
            int v = table[a][b];
            if (v < 0 || v >= n)
                fail(ErrorCode::InvalidInput, "entry (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
            flat[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>(v);
        }
    }
    auto at = [&](int a, int b) { return static_cast<int>(flat[static_cast<std::size_t>(a) * n + b]); };

    int e = -1;
    for (int c = 0; c < n && e < 0; ++c) {
        bool ok = true;
        for (int g = 0; g < n && ok; ++g) ok = at(c, g) == g && at(g, c) == g;
        if (ok) e = c;
    }
    if (e < 0) fail(ErrorCode::NoIdentity, "no two-sided identity element");
    for (int g = 0; g < n; ++g) {
        bool found = false;
        for (int h = 0; h < n && !found; ++h) found = at(g, h) == e && at(h, g) == e;
        if (!found) fail(ErrorCode::NoInverse, "element " + std::to_string(g) + " ('" + labels[g] + "') has no inverse");
    }

    // Light's test: associativity need only be checked against a generating set.
    std::vector<int> gens;
    ElementSet reached(static_cast<std::size_t>(n));
    std::vector<int> reached_list;
    std::size_t processed = 0;
    auto add = [&](int x) {
        if (!reached.contains(static_cast<std::size_t>(x))) {
            reached.insert(static_cast<std::size_t>(x));
            reached_list.push_back(x);
        }
    };
    add(e);
    for (int g = 0; g < n; ++g) {
        if (reached.contains(static_cast<std::size_t>(g))) continue;
        gens.push_back(g);
        add(g);
        // close the generated submagma incrementally; every pair is multiplied once
        for (; processed < reached_list.size(); ++processed) {
            int x = reached_list[processed];
            for (std::size_t j = 0; j <= processed; ++j) {
                add(at(x, reached_list[j]));
                add(at(reached_list[j], x));
            }
        }
    }
    for (int g : gens)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (at(at(x, g), y) != at(x, at(g, y)))
                    fail(ErrorCode::NotAssociative, "witness triple (" + std::to_string(x) + "," + std::to_string(g) + "," +
                                                        std::to_string(y) + ")");

    auto grp = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    grp->n_ = n;
    grp->mul_ = std::move(flat);
    grp->labels_ = std::move(labels);
    grp->names_ = std::move(names);
    grp->derive_identity_and_inverses();
    return grp;
}

inline GroupPtr FiniteGroup::from_trusted_table(int order, std::vector<std::uint16_t> flat, std::vector<std::string> labels,
                                                NamedElements names, std::vector<int> generators) {
    if (order > kMaxGroupOrder) fail(ErrorCode::OrderCapExceeded, "group of order " + std::to_string(order));
    auto grp = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    grp->n_ = order;
    grp->mul_ = std::move(flat);
    grp->labels_ = std::move(labels);
    grp->names_ = std::move(names);
    grp->gens_ = std::move(generators);
    grp->derive_identity_and_inverses();
    return grp;
}

inline void FiniteGroup::derive_identity_and_inverses() {
    identity_ = -1;
    for (int c = 0; c < n_ && identity_ < 0; ++c)
        if (mul(c, c) == c) identity_ = c;
    if (identity_ < 0) fail(ErrorCode::NoIdentity, "no idempotent element");
    inv_.assign(static_cast<std::size_t>(n_), -1);
    for (int g = 0; g < n_; ++g)
        for (int h = 0; h < n_; ++h)
            if (mul(g, h) == identity_) {
                inv_[g] = h;
                break;
            }
}

inline int FiniteGroup::power(int g, long long k) const {
    int ord = element_order(g);
    long long r = ((k % ord) + ord) % ord;
    int result = identity_;
    int base = g;
    while (r > 0) {
        if (r & 1) result = mul(result, base);
        base = mul(base, base);
        r >>= 1;
    }
    return result;
}

inline const std::vector<int>& FiniteGroup::element_orders() const {
    return cached<std::vector<int>>("element_orders", [this] {
        std::vector<int> ord(static_cast<std::size_t>(n_), 0);
        for (int g = 0; g < n_; ++g) {
            int x = g, k = 1;
            while (x != identity_) {
                x = mul(x, g);
                ++k;
            }
            ord[g] = k;
        }
        return ord;
    });
}

inline int FiniteGroup::exponent() const {
    return cached<int>("exponent", [this] {
        long long e = 1;
        for (int o : element_orders()) e = std::lcm(e, static_cast<long long>(o));
        return static_cast<int>(e);
    });
}

inline bool FiniteGroup::is_abelian() const {
    return cached<bool>("is_abelian", [this] {
        for (int a = 0; a < n_; ++a)
            for (int b = a + 1; b < n_; ++b)
                if (mul(a, b) != mul(b, a)) return false;
        return true;
    });
}

inline std::optional<int> FiniteGroup::find_label(std::string_view label) const {
    for (int g = 0; g < n_; ++g)
        if (labels_[g] == label) return g;
    return std::nullopt;
}

inline std::optional<int> FiniteGroup::named(std::string_view name) const {
    for (const auto& [k, v] : names_)
        if (k == name) return v;
    return std::nullopt;
}

inline const std::vector<int>& FiniteGroup::generators() const {
    if (!gens_.empty() || n_ == 1) return gens_;
    return cached<std::vector<int>>("greedy_generators", [this] {
        std::vector<int> gens;
        ElementSet reached(static_cast<std::size_t>(n_));
        reached.insert(static_cast<std::size_t>(identity_));
        std::vector<int> list{identity_};
        for (int g = 0; g < n_; ++g) {
            if (reached.contains(static_cast<std::size_t>(g))) continue;
            gens.push_back(g);
            // re-close: multiply everything reached by all generators
            for (std::size_t i = 0; i < list.size(); ++i) {
                for (int s : gens) {
                    int y = mul(list[i], s);
                    if (!reached.contains(static_cast<std::size_t>(y))) {
                        reached.insert(static_cast<std::size_t>(y));
                        list.push_back(y);
                    }
                }
            }
            if (!reached.contains(static_cast<std::size_t>(g))) {
                reached.insert(static_cast<std::size_t>(g));
                list.push_back(g);
            }
        }
        return gens;
    });
}

inline std::vector<std::vector<int>> FiniteGroup::table() const {
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(n_)));
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) t[a][b] = mul(a, b);
    return t;
}

// ---------------------------------------------------------------------------
// Generic closure of a generating set of arbitrary element type.

struct VectorHash {
    template <class T>
    std::size_t operator()(const std::vector<T>& v) const noexcept {
        std::size_t h = v.size();
        for (const auto& x : v) h ^= std::hash<T>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

template <class T>
struct ElementHash : std::hash<T> {};
template <class T>
struct ElementHash<std::vector<T>> : VectorHash {};

/// Closes `generators` under `multiply`, breadth first from `identity`,
/// applying generators in the given order. Returns elements in discovery order.
template <class T, class Mul, class Hash = ElementHash<T>>
std::vector<T> bfs_closure(const T& identity, const std::vector<T>& generators, Mul multiply, std::size_t cap) {
    std::vector<T> elements{identity};
    std::unordered_map<T, std::size_t, Hash> index{{identity, 0}};
    for (std::size_t i = 0; i < elements.size(); ++i) {
        for (const auto& s : generators) {
            T y = multiply(elements[i], s);
            if (index.find(y) == index.end()) {
                if (elements.size() >= cap)
                    fail(ErrorCode::OrderCapExceeded, "closure exceeds " + std::to_string(cap) + " elements");
                index.emplace(y, elements.size());
                elements.push_back(std::move(y));
            }
        }
    }
    return elements;
}


/// Builds a group from elements of type T with a product, via an index map.
template <class T, class Mul, class Label, class Hash = ElementHash<T>>
GroupPtr group_from_elements(const std::vector<T>& elements, Mul multiply, Label label_of, NamedElements names = {},
                             std::vector<int> generators = {}) {
    const int n = static_cast<int>(elements.size());
    if (n > kMaxGroupOrder) fail(ErrorCode::OrderCapExceeded, "group of order " + std::to_string(n));
    std::unordered_map<T, int, Hash> index;
    index.reserve(elements.size());
    for (int i = 0; i < n; ++i) index.emplace(elements[i], i);
    std::vector<std::uint16_t> flat(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto it = index.find(multiply(elements[a], elements[b]));
            if (it == index.end()) fail(ErrorCode::InvalidInput, "element set is not closed under multiplication");
            flat[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>(it->second);
        }
    std::vector<std::string> labels;
    labels.reserve(elements.size());
    for (const auto& e : elements) labels.push_back(label_of(e));
    return FiniteGroup::from_trusted_table(n, std::move(flat), std::move(labels), std::move(names), std::move(generators));
}

using Permutation = std::vector<int>;

/// Product convention: (p*q)(i) = q[p[i]], i.e. apply p first.
inline Permutation compose(const Permutation& p, const Permutation& q) {
    Permutation r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
    return r;
}

inline std::string cycle_notation(const Permutation& p) {
    std::string out;
    std::vector<char> seen(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<int>(i)) continue;
        out += '(';
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = 1;
            if (!first) out += ',';
            out += std::to_string(j);
            first = false;
            j = static_cast<std::size_t>(p[j]);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

/// Index of a permutation generator within a BFS closure (helper for naming).
inline int index_of_permutation(const std::vector<Permutation>& elems, const Permutation& p) {
    auto it = std::find(elems.begin(), elems.end(), p);
    return it == elems.end() ? -1 : static_cast<int>(it - elems.begin());
}

/// Closure of permutation generators; element order is BFS discovery order.
inline GroupPtr from_permutation_generators(int degree, const std::vector<Permutation>& generators,
                                            std::size_t cap = 10000, NamedElements names = {}) {
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != degree) fail(ErrorCode::NotAPermutation, "generator has wrong length");
        std::vector<char> seen(static_cast<std::size_t>(degree), 0);
        for (int x : g) {
            if (x < 0 || x >= degree || seen[x]) fail(ErrorCode::NotAPermutation, "generator " + cycle_notation(g) + " is not a bijection");
            seen[x] = 1;
        }
    }
    Permutation id(static_cast<std::size_t>(degree));
    std::iota(id.begin(), id.end(), 0);
    auto elems = bfs_closure<Permutation>(id, generators, compose, cap);
    std::vector<int> gen_idx;
    for (const auto& g : generators) gen_idx.push_back(index_of_permutation(elems, g));
    return group_from_elements<Permutation>(elems, compose, cycle_notation, std::move(names), std::move(gen_idx));
}


}  // namespace fgchar
