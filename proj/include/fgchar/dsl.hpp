#pragma once

#include <cctype>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "fgchar/constructions.hpp"
#include "fgchar/named.hpp"
#include "fgchar/subgroups.hpp"

namespace fgchar::dsl {

// ---------------------------------------------------------------------------
// AST

/// Product of powers of named elements; empty means the identity.
struct Word {
    std::vector<std::pair<std::string, int>> factors;
    friend bool operator==(const Word&, const Word&) = default;
};

struct Action {
    enum class Kind { Inversion, DiagonalInversion, File };
    Kind kind = Kind::Inversion;
    std::string path;  // File only
    friend bool operator==(const Action&, const Action&) = default;
};

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Atom {
    std::string name;  // "C", "EA", ..., or "paper:ex-heis-pair"
    std::vector<int> args;
};
struct Product {
    std::vector<NodePtr> factors;
};
struct Quot {
    NodePtr base;
    std::vector<Word> words;
};
struct Sdp {
    NodePtr n, h;
    Action action;
};
struct Sub {
    NodePtr base;
    std::vector<Word> words;
};

struct Node {
    std::variant<Atom, Product, Quot, Sdp, Sub> v;
};

inline bool equal(const NodePtr& a, const NodePtr& b);

namespace detail {
inline bool equal_lists(const std::vector<NodePtr>& a, const std::vector<NodePtr>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!equal(a[i], b[i])) return false;
    return true;
}
}  // namespace detail

/// Structural equality.
inline bool equal(const NodePtr& a, const NodePtr& b) {
    if (a->v.index() != b->v.index()) return false;
    return std::visit(
        [&](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            const auto& y = std::get<T>(b->v);
            if constexpr (std::is_same_v<T, Atom>) return x.name == y.name && x.args == y.args;
            else if constexpr (std::is_same_v<T, Product>) return detail::equal_lists(x.factors, y.factors);
            else if constexpr (std::is_same_v<T, Sdp>) return x.action == y.action && equal(x.n, y.n) && equal(x.h, y.h);
            else return x.words == y.words && equal(x.base, y.base);
        },
        a->v);
}

// ---------------------------------------------------------------------------
// Errors

class SyntaxError : public Error {
public:
    SyntaxError(int line, int col, std::string expected)
        : Error(ErrorCode::SyntaxError, "line " + std::to_string(line) + ", col " + std::to_string(col) + ": expected " + expected),
          line_(line), col_(col), expected_(std::move(expected)) {}
    int line() const noexcept { return line_; }
    int col() const noexcept { return col_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    int line_, col_;
    std::string expected_;
};

// ---------------------------------------------------------------------------
// Parser

namespace detail {

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    NodePtr parse_spec() {
        auto e = expr();
        skip_ws();
        if (!at_end()) error("end of input or 'x'");
        return e;
    }

    std::vector<Word> parse_word_list() {
        auto w = word_list();
        skip_ws();
        if (!at_end()) error("end of input");
        return w;
    }

    Word parse_word() {
        skip_ws();
        auto w = word();
        skip_ws();
        if (!at_end()) error("end of input or '*'");
        return w;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }

    [[noreturn]] void error(const std::string& expected) const {
        int line = 1, col = 1;
        for (std::size_t i = 0; i < pos_ && i < s_.size(); ++i) {
            if (s_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw SyntaxError(line, col, expected);
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c) error(std::string("'") + c + "'");
        ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
    static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

    std::string ident() {
        skip_ws();
        if (!ident_start(peek())) error("identifier");
        std::size_t start = pos_;
        while (!at_end() && ident_char(peek())) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    int integer(bool allow_sign = false) {
        skip_ws();
        std::size_t start = pos_;
        bool neg = false;
        if (allow_sign && peek() == '-') {
            neg = true;
            ++pos_;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
            pos_ = start;
            error("integer");
        }
        long long v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            if (v > 1000000) error("integer below 1000000");
            ++pos_;
        }
        return static_cast<int>(neg ? -v : v);
    }

    // lookahead for the product operator: 'x' not followed by an identifier character
    bool product_op() {
        skip_ws();
        if (peek() != 'x') return false;
        if (pos_ + 1 < s_.size() && ident_char(s_[pos_ + 1])) return false;
        ++pos_;
        return true;
    }

    NodePtr expr() {
        std::vector<NodePtr> factors{term()};
        while (product_op()) factors.push_back(term());
        if (factors.size() == 1) return factors[0];
        return std::make_shared<const Node>(Node{Product{std::move(factors)}});
    }

    NodePtr term() {
        skip_ws();
        if (accept('(')) {
            auto e = expr();
            expect(')');
            return e;
        }
        if (!ident_start(peek())) error("group atom, 'quot', 'sdp', 'subgroup' or '('");
        std::size_t start = pos_;
        std::string id = ident();
        if (id == "paper" && peek() == ':') {
            ++pos_;
            std::size_t s = pos_;
            while (!at_end() && (ident_char(peek()) || peek() == '-')) ++pos_;
            std::string name(s_.substr(s, pos_ - s));
            if (name != "ex-heis-pair" && name != "ex-d8cube" && name != "ex-d8xc4") {
                pos_ = s;
                error("ex-heis-pair, ex-d8cube or ex-d8xc4");
            }
            return std::make_shared<const Node>(Node{Atom{"paper:" + name, {}}});
        }
        if (id == "quot" || id == "subgroup") {
            expect('(');
            auto base = expr();
            expect(',');
            auto words = word_list();
            expect(')');
            if (id == "quot") return std::make_shared<const Node>(Node{Quot{base, std::move(words)}});
            return std::make_shared<const Node>(Node{Sub{base, std::move(words)}});
        }
        if (id == "sdp") {
            expect('(');
            auto n = expr();
            expect(',');
            auto h = expr();
            expect(',');
            auto a = action();
            expect(')');
            return std::make_shared<const Node>(Node{Sdp{n, h, std::move(a)}});
        }
        int arity = 0;
        if (id == "C" || id == "D" || id == "Q" || id == "S" || id == "A" || id == "Heis") arity = 1;
        else if (id == "EA") arity = 2;
        if (arity == 0) {
            pos_ = start;
            error("group atom (C, D, Q, S, A, EA, Heis, paper:...), 'quot', 'sdp' or 'subgroup'");
        }
        expect('(');
        std::vector<int> args{integer()};
        if (arity == 2) {
            expect(',');
            args.push_back(integer());
        }
        expect(')');
        return std::make_shared<const Node>(Node{Atom{id, std::move(args)}});
    }

    Action action() {
        skip_ws();
        std::size_t start = pos_;
        while (!at_end() && (ident_char(peek()) || peek() == '-')) ++pos_;
        std::string name(s_.substr(start, pos_ - start));
        if (name == "inversion") return {Action::Kind::Inversion, {}};
        if (name == "diagonal-inversion") return {Action::Kind::DiagonalInversion, {}};
        if (name == "file" && peek() == ':') {
            ++pos_;
            return {Action::Kind::File, quoted()};
        }
        pos_ = start;
        error("action (inversion, diagonal-inversion or file:\"path\")");
    }

    std::string quoted() {
        if (peek() != '"') error("'\"'");
        ++pos_;
        std::string out;
        while (true) {
            if (at_end()) error("closing '\"'");
            char c = s_[pos_++];
            if (c == '"') break;
            if (c == '\\') {
                if (at_end()) error("escaped character");
                c = s_[pos_++];
            }
            out += c;
        }
        return out;
    }

    std::vector<Word> word_list() {
        expect('[');
        std::vector<Word> out;
        if (accept(']')) return out;
        do {
            skip_ws();
            out.push_back(word());
        } while (accept(','));
        expect(']');
        return out;
    }

    Word word() {
        skip_ws();
        Word w;
        if (peek() == '1' && !(pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1])))) {
            ++pos_;
            return w;
        }
        do {
            std::string name = ident();
            int e = 1;
            if (accept('^')) e = integer(true);
            w.factors.emplace_back(std::move(name), e);
        } while (accept('*'));
        return w;
    }
};

}  // namespace detail

inline NodePtr parse_spec(std::string_view text) { return detail::Parser(text).parse_spec(); }

/// "[w1, w2, ...]"
inline std::vector<Word> parse_word_list(std::string_view text) { return detail::Parser(text).parse_word_list(); }

inline Word parse_word(std::string_view text) { return detail::Parser(text).parse_word(); }

// ---------------------------------------------------------------------------
// Printer (canonical form; parse(print(a)) == a)

inline std::string print(const Word& w) {
    if (w.factors.empty()) return "1";
    std::string out;
    for (const auto& [name, e] : w.factors) {
        if (!out.empty()) out += '*';
        out += name;
        if (e != 1) out += '^' + std::to_string(e);
    }
    return out;
}

inline std::string print(const std::vector<Word>& ws) {
    std::string out = "[";
    for (std::size_t i = 0; i < ws.size(); ++i) out += (i ? ", " : "") + print(ws[i]);
    return out + "]";
}

inline std::string print(const Action& a) {
    switch (a.kind) {
        case Action::Kind::Inversion: return "inversion";
        case Action::Kind::DiagonalInversion: return "diagonal-inversion";
        case Action::Kind::File: break;
    }
    std::string out = "file:\"";
    for (char c : a.path) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

inline std::string print(const NodePtr& node) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Atom>) {
                if (x.args.empty()) return x.name;
                std::string out = x.name + "(";
                for (std::size_t i = 0; i < x.args.size(); ++i) out += (i ? "," : "") + std::to_string(x.args[i]);
                return out + ")";
            } else if constexpr (std::is_same_v<T, Product>) {
                std::string out;
                for (std::size_t i = 0; i < x.factors.size(); ++i) {
                    if (i) out += " x ";
                    bool nested = std::holds_alternative<Product>(x.factors[i]->v);
                    out += nested ? "(" + print(x.factors[i]) + ")" : print(x.factors[i]);
                }
                return out;
            } else if constexpr (std::is_same_v<T, Quot>) {
                return "quot(" + print(x.base) + ", " + print(x.words) + ")";
            } else if constexpr (std::is_same_v<T, Sub>) {
                return "subgroup(" + print(x.base) + ", " + print(x.words) + ")";
            } else {
                return "sdp(" + print(x.n) + ", " + print(x.h) + ", " + print(x.action) + ")";
            }
        },
        node->v);
}

// ---------------------------------------------------------------------------
// Evaluation

struct Evaluated {
    GroupPtr group;
    std::optional<Subgroup> designated;  // worked-example atoms only
};

/// Element named by `w` in `g`; names are the group's declared names.
inline int evaluate_word(const FiniteGroup& g, const Word& w) {
    int x = g.identity();
    for (const auto& [name, e] : w.factors) {
        auto v = g.named(name);
        if (!v) {
            std::string known;
            for (const auto& [n, _] : g.names()) known += (known.empty() ? "" : ", ") + n;
            fail(ErrorCode::UnknownSpec, "unknown generator name '" + name + "' (known: " + (known.empty() ? "none" : known) + ")");
        }
        x = g.mul(x, g.power(*v, e));
    }
    return x;
}

inline std::vector<int> evaluate_words(const FiniteGroup& g, const std::vector<Word>& ws) {
    std::vector<int> out;
    for (const auto& w : ws) out.push_back(evaluate_word(g, w));
    return out;
}

/// Same group with every declared name suffixed.
inline GroupPtr with_name_suffix(const GroupPtr& g, const std::string& suffix) {
    const int n = g->order();
    std::vector<std::uint16_t> flat(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) flat[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>(g->mul(a, b));
    NamedElements names;
    for (const auto& [name, v] : g->names()) names.emplace_back(name + suffix, v);
    return FiniteGroup::from_trusted_table(n, std::move(flat), g->labels(), std::move(names), g->generators());
}

namespace detail {

inline std::vector<int> inversion_map(const FiniteGroup& n) {
    std::vector<int> m(static_cast<std::size_t>(n.order()));
    for (int a = 0; a < n.order(); ++a) m[a] = n.inv(a);
    return m;
}

inline std::vector<int> identity_map(const FiniteGroup& n) {
    std::vector<int> m(static_cast<std::size_t>(n.order()));
    for (int a = 0; a < n.order(); ++a) m[a] = a;
    return m;
}

/// Extends images of some named elements of N to an endomorphism by BFS over
/// the Cayley graph; inconsistent or non-generating data is rejected.
inline std::vector<int> extend_to_endomorphism(const FiniteGroup& n, const std::vector<std::pair<int, int>>& gen_images) {
    std::vector<int> phi(static_cast<std::size_t>(n.order()), -1);
    phi[n.identity()] = n.identity();
    std::vector<int> queue{n.identity()};
    for (std::size_t i = 0; i < queue.size(); ++i) {
        int x = queue[i];
        for (auto [g, img] : gen_images) {
            int y = n.mul(x, g), v = n.mul(phi[x], img);
            if (phi[y] < 0) {
                phi[y] = v;
                queue.push_back(y);
            } else if (phi[y] != v) {
                fail(ErrorCode::ActionNotAutomorphism, "generator images are inconsistent at " + n.label(y));
            }
        }
    }
    if (static_cast<int>(queue.size()) != n.order()) fail(ErrorCode::InvalidInput, "the listed names do not generate N");
    return phi;
}

inline std::vector<std::vector<int>> file_action_images(const FiniteGroup& n, const FiniteGroup& h, const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::InvalidInput, "cannot open action file '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::InvalidInput, "action file '" + path + "': " + e.what());
    }
    if (!doc.is_object() || !doc.contains("images") || !doc["images"].is_array())
        fail(ErrorCode::InvalidInput, "action file needs an \"images\" array");
    const auto& images = doc["images"];
    if (images.size() != h.generators().size())
        fail(ErrorCode::InvalidInput, "action file lists " + std::to_string(images.size()) + " images for " +
                                          std::to_string(h.generators().size()) + " generators of H");
    std::vector<std::vector<int>> out;
    for (const auto& obj : images) {
        if (!obj.is_object()) fail(ErrorCode::InvalidInput, "each image must be an object");
        std::vector<std::pair<int, int>> gi;
        for (const auto& [name, word] : obj.items()) {
            if (!word.is_string()) fail(ErrorCode::InvalidInput, "image of '" + name + "' must be a word string");
            Word src{{{name, 1}}};
            gi.emplace_back(evaluate_word(n, src), evaluate_word(n, parse_word(word.get<std::string>())));
        }
        out.push_back(extend_to_endomorphism(n, gi));
    }
    return out;
}

}  // namespace detail

/// Action of H's declared generators on N for a named registry entry.
inline GroupAction make_action(const GroupPtr& n, const GroupPtr& h, const Action& a) {
    std::vector<std::vector<int>> images;
    const auto& gens = h->generators();
    switch (a.kind) {
        case Action::Kind::Inversion:
            for (std::size_t i = 0; i < gens.size(); ++i)
                images.push_back(i == 0 ? detail::inversion_map(*n) : detail::identity_map(*n));
            break;
        case Action::Kind::DiagonalInversion:
            for (std::size_t i = 0; i < gens.size(); ++i) images.push_back(detail::inversion_map(*n));
            break;
        case Action::Kind::File:
            images = detail::file_action_images(*n, *h, a.path);
            break;
    }
    // inversion is an automorphism only for abelian N; say so before the generic check
    if (a.kind != Action::Kind::File && !n->is_abelian())
        fail(ErrorCode::ActionNotAutomorphism, "inversion is not an automorphism of a non-abelian N");
    return action_from_generators(*n, *h, gens, images);
}

inline Evaluated evaluate_atom(const Atom& a) {
    auto arg = [&](std::size_t i) { return a.args.at(i); };
    if (a.name == "C") return {cyclic(arg(0)), {}};
    if (a.name == "D") {
        if (arg(0) < 2 || arg(0) % 2) fail(ErrorCode::ParameterOutOfRange, "D(n) needs an even order n >= 2");
        return {dihedral(arg(0)), {}};
    }
    if (a.name == "Q") return {generalized_quaternion(arg(0)), {}};
    if (a.name == "S") return {symmetric(arg(0)), {}};
    if (a.name == "A") return {alternating(arg(0)), {}};
    if (a.name == "EA") return {elementary_abelian(arg(0), arg(1)), {}};
    if (a.name == "Heis") return {heisenberg(arg(0)), {}};
    ExampleGroup ex;
    if (a.name == "paper:ex-heis-pair") ex = example_heisenberg_pair();
    else if (a.name == "paper:ex-d8cube") ex = example_d8_cube();
    else if (a.name == "paper:ex-d8xc4") ex = example_d8_c4();
    else fail(ErrorCode::UnknownSpec, "unknown atom '" + a.name + "'");
    return {ex.group, ex.designated};
}

inline Evaluated evaluate(const NodePtr& node) {
    return std::visit(
        [](const auto& x) -> Evaluated {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Atom>) {
                return evaluate_atom(x);
            } else if constexpr (std::is_same_v<T, Product>) {
                std::vector<GroupPtr> groups;
                for (const auto& f : x.factors) groups.push_back(evaluate(f).group);
                return {direct_product(groups).group, {}};
            } else if constexpr (std::is_same_v<T, Quot>) {
                auto g = evaluate(x.base).group;
                auto gens = evaluate_words(*g, x.words);
                return {quotient(subgroup_generated(g, gens)).group, {}};
            } else if constexpr (std::is_same_v<T, Sub>) {
                auto g = evaluate(x.base).group;
                std::vector<int> gens;
                for (int v : evaluate_words(*g, x.words))
                    if (v != g->identity() && std::find(gens.begin(), gens.end(), v) == gens.end()) gens.push_back(v);
                return {as_group(subgroup_generated(g, gens), gens).group, {}};
            } else {
                // the action file speaks the factors' own names; suffixes come after
                auto n = evaluate(x.n).group, h = evaluate(x.h).group;
                auto action = make_action(n, h, x.action);
                return {semidirect_product(with_name_suffix(n, "1"), with_name_suffix(h, "2"), action).group, {}};
            }
        },
        node->v);
}

inline Evaluated evaluate(std::string_view text) { return evaluate(parse_spec(text)); }

/// Subgroup of g generated by a "[w1, ...]" list.
inline Subgroup subgroup_from_words(const GroupPtr& g, std::string_view text) {
    auto gens = evaluate_words(*g, parse_word_list(text));
    return subgroup_generated(g, gens);
}

}  // namespace fgchar::dsl
