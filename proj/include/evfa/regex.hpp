#ifndef EVFA_REGEX_HPP
#define EVFA_REGEX_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "symbol.hpp"

namespace evfa {

class regex_ast;
using regex_ptr = std::shared_ptr<const regex_ast>;

/// Immutable syntax tree of the event regex notation.
///
/// Surface grammar (whitespace is insignificant between tokens, '#' starts a
/// comment running to end of line):
///
///   regex   := union
///   union   := concat { "+" concat }
///   concat  := star { ("." star) | star }        juxtaposition concatenates
///   star    := atom { "*" }
///   atom    := IDENT | "EPS" | "NULL" | "(" regex ")"
///   IDENT   := [A-Za-z][A-Za-z0-9_]*  excluding the two keywords
///
/// "+" is language union, never one-or-more. "EPS" is the empty word, "NULL"
/// the empty language. Union and concatenation are left-associative.
class regex_ast {
public:
    enum class kind { empty_set, epsilon, sym, concat, alternation, star };

    kind node_kind() const noexcept { return kind_; }
    const symbol& sym() const { return *sym_; }
    const regex_ptr& left() const noexcept { return left_; }
    const regex_ptr& right() const noexcept { return right_; }
    const regex_ptr& inner() const noexcept { return left_; }

    static regex_ptr make_empty_set() { return make(kind::empty_set, std::nullopt, nullptr, nullptr); }
    static regex_ptr make_epsilon() { return make(kind::epsilon, std::nullopt, nullptr, nullptr); }
    static regex_ptr make_sym(symbol s) { return make(kind::sym, std::move(s), nullptr, nullptr); }
    static regex_ptr make_concat(regex_ptr l, regex_ptr r) {
        return make(kind::concat, std::nullopt, std::move(l), std::move(r));
    }
    static regex_ptr make_alternation(regex_ptr l, regex_ptr r) {
        return make(kind::alternation, std::nullopt, std::move(l), std::move(r));
    }
    static regex_ptr make_star(regex_ptr x) {
        return make(kind::star, std::nullopt, std::move(x), nullptr);
    }

private:
    regex_ast(kind k, std::optional<symbol> s, regex_ptr l, regex_ptr r)
        : kind_(k), sym_(std::move(s)), left_(std::move(l)), right_(std::move(r)) {}

    static regex_ptr make(kind k, std::optional<symbol> s, regex_ptr l, regex_ptr r) {
        return regex_ptr(new regex_ast(k, std::move(s), std::move(l), std::move(r)));
    }

    kind kind_;
    std::optional<symbol> sym_;
    regex_ptr left_;
    regex_ptr right_;
};

/// Short constructors for building trees by hand.
namespace rx {
inline regex_ptr empty_set() { return regex_ast::make_empty_set(); }
inline regex_ptr eps() { return regex_ast::make_epsilon(); }
inline regex_ptr sym(symbol s) { return regex_ast::make_sym(std::move(s)); }
inline regex_ptr sym(std::string_view name) { return regex_ast::make_sym(symbol(name)); }
inline regex_ptr cat(regex_ptr l, regex_ptr r) {
    return regex_ast::make_concat(std::move(l), std::move(r));
}
inline regex_ptr alt(regex_ptr l, regex_ptr r) {
    return regex_ast::make_alternation(std::move(l), std::move(r));
}
inline regex_ptr star(regex_ptr x) { return regex_ast::make_star(std::move(x)); }
}  // namespace rx

inline bool structurally_equal(const regex_ptr& a, const regex_ptr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->node_kind() != b->node_kind()) return false;
    switch (a->node_kind()) {
        case regex_ast::kind::empty_set:
        case regex_ast::kind::epsilon:
            return true;
        case regex_ast::kind::sym:
            return a->sym() == b->sym();
        case regex_ast::kind::star:
            return structurally_equal(a->inner(), b->inner());
        case regex_ast::kind::concat:
        case regex_ast::kind::alternation:
            return structurally_equal(a->left(), b->left()) &&
                   structurally_equal(a->right(), b->right());
    }
    return false;
}

inline std::size_t node_count(const regex_ptr& ast) {
    if (!ast) return 0;
    switch (ast->node_kind()) {
        case regex_ast::kind::empty_set:
        case regex_ast::kind::epsilon:
        case regex_ast::kind::sym:
            return 1;
        case regex_ast::kind::star:
            return 1 + node_count(ast->inner());
        case regex_ast::kind::concat:
        case regex_ast::kind::alternation:
            return 1 + node_count(ast->left()) + node_count(ast->right());
    }
    return 0;
}

/// Symbols of the tree in first-occurrence (surface reading) order.
inline std::vector<symbol> used_symbols(const regex_ptr& ast) {
    std::vector<symbol> out;
    const auto walk = [&](auto&& self, const regex_ptr& node) -> void {
        if (!node) return;
        if (node->node_kind() == regex_ast::kind::sym) {
            for (const symbol& s : out)
                if (s == node->sym()) return;
            out.push_back(node->sym());
            return;
        }
        self(self, node->left());
        self(self, node->right());
    };
    walk(walk, ast);
    return out;
}

/// Regex source text plus an optional alphabet every identifier must belong to.
struct regex_source {
    std::string text;
    std::optional<alphabet> declared_alphabet;
};

namespace detail {

struct regex_token {
    enum class type { ident, eps, null, plus, dot, star, lparen, rparen, end };
    type t;
    std::string text;    // identifiers only
    std::size_t offset;  // byte offset into the source
};

inline std::vector<regex_token> lex_regex(std::string_view text) {
    using type = regex_token::type;
    std::vector<regex_token> out;
    const auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); };
    const auto ident_tail = [&](char c) {
        return alpha(c) || (c >= '0' && c <= '9') || c == '_';
    };
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v') {
            ++i;
            continue;
        }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        const std::size_t start = i;
        if (alpha(c)) {
            ++i;
            while (i < text.size() && ident_tail(text[i])) ++i;
            std::string name(text.substr(start, i - start));
            if (name == "EPS")
                out.push_back({type::eps, "", start});
            else if (name == "NULL")
                out.push_back({type::null, "", start});
            else
                out.push_back({type::ident, std::move(name), start});
            continue;
        }
        switch (c) {
            case '+': out.push_back({type::plus, "", start}); break;
            case '.': out.push_back({type::dot, "", start}); break;
            case '*': out.push_back({type::star, "", start}); break;
            case '(': out.push_back({type::lparen, "", start}); break;
            case ')': out.push_back({type::rparen, "", start}); break;
            default:
                throw syntax_error("unexpected character '" + std::string(1, c) + "'", start);
        }
        ++i;
    }
    out.push_back({type::end, "", text.size()});
    return out;
}

class regex_parser {
public:
    regex_parser(std::vector<regex_token> tokens, const std::optional<alphabet>& declared)
        : tokens_(std::move(tokens)), declared_(declared) {}

    regex_ptr parse() {
        if (peek().t == regex_token::type::end)
            throw syntax_error("empty regular expression", peek().offset);
        regex_ptr ast = parse_union();
        if (peek().t != regex_token::type::end)
            throw syntax_error("unexpected trailing input", peek().offset);
        return ast;
    }

private:
    using type = regex_token::type;

    const regex_token& peek() const { return tokens_[pos_]; }
    const regex_token& advance() { return tokens_[pos_++]; }

    bool at_atom_start() const {
        const type t = peek().t;
        return t == type::ident || t == type::eps || t == type::null || t == type::lparen;
    }

    regex_ptr parse_union() {
        regex_ptr node = parse_concat();
        while (peek().t == type::plus) {
            advance();
            node = regex_ast::make_alternation(std::move(node), parse_concat());
        }
        return node;
    }

    regex_ptr parse_concat() {
        regex_ptr node = parse_star();
        while (true) {
            if (peek().t == type::dot) {
                advance();
                node = regex_ast::make_concat(std::move(node), parse_star());
            } else if (at_atom_start()) {
                node = regex_ast::make_concat(std::move(node), parse_star());
            } else {
                return node;
            }
        }
    }

    regex_ptr parse_star() {
        regex_ptr node = parse_atom();
        while (peek().t == type::star) {
            advance();
            node = regex_ast::make_star(std::move(node));
        }
        return node;
    }

    regex_ptr parse_atom() {
        switch (peek().t) {
            case type::ident: {
                const regex_token tok = advance();
                if (declared_ && !declared_->index_of(tok.text))
                    throw undeclared_symbol_error(tok.text, tok.offset);
                return regex_ast::make_sym(symbol(tok.text));
            }
            case type::eps:
                advance();
                return regex_ast::make_epsilon();
            case type::null:
                advance();
                return regex_ast::make_empty_set();
            case type::lparen: {
                advance();
                regex_ptr inner = parse_union();
                if (peek().t != type::rparen)
                    throw syntax_error("expected ')'", peek().offset);
                advance();
                return inner;
            }
            default:
                throw syntax_error("expected an event name, 'EPS', 'NULL', or '('", peek().offset);
        }
    }

    std::vector<regex_token> tokens_;
    const std::optional<alphabet>& declared_;
    std::size_t pos_ = 0;
};

inline int regex_precedence(regex_ast::kind k) {
    switch (k) {
        case regex_ast::kind::alternation: return 0;
        case regex_ast::kind::concat: return 1;
        default: return 2;
    }
}

inline void print_node(const regex_ptr& node, int min_prec, std::string& out) {
    const bool parens = regex_precedence(node->node_kind()) < min_prec;
    if (parens) out += '(';
    switch (node->node_kind()) {
        case regex_ast::kind::empty_set:
            out += "NULL";
            break;
        case regex_ast::kind::epsilon:
            out += "EPS";
            break;
        case regex_ast::kind::sym:
            out += node->sym().name();
            break;
        case regex_ast::kind::star:
            out += '(';
            print_node(node->inner(), 0, out);
            out += ")*";
            break;
        case regex_ast::kind::concat:
            print_node(node->left(), 1, out);
            out += " . ";
            print_node(node->right(), 2, out);
            break;
        case regex_ast::kind::alternation:
            print_node(node->left(), 0, out);
            out += " + ";
            print_node(node->right(), 1, out);
            break;
    }
    if (parens) out += ')';
}

}  // namespace detail

inline regex_ptr parse_regex(const regex_source& src) {
    detail::regex_parser parser(detail::lex_regex(src.text), src.declared_alphabet);
    return parser.parse();
}

inline regex_ptr parse_regex(std::string_view text) {
    return parse_regex(regex_source{std::string(text), std::nullopt});
}

/// Canonical surface form: an explicit '.' for every concatenation, star
/// operands always parenthesized, minimal parentheses otherwise.
/// parse_regex(print_regex(ast)) is structurally equal to ast.
inline std::string print_regex(const regex_ptr& ast) {
    std::string out;
    detail::print_node(ast, 0, out);
    return out;
}

}  // namespace evfa

#endif  // EVFA_REGEX_HPP
