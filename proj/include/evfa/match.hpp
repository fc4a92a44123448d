#ifndef EVFA_MATCH_HPP
#define EVFA_MATCH_HPP

#include <cstddef>

#include "regex.hpp"
#include "symbol.hpp"

namespace evfa {
namespace detail {

inline bool match_range(const regex_ptr& node, const word& w, std::size_t lo, std::size_t hi) {
    switch (node->node_kind()) {
        case regex_ast::kind::empty_set:
            return false;
        case regex_ast::kind::epsilon:
            return lo == hi;
        case regex_ast::kind::sym:
            return hi - lo == 1 && w[lo] == node->sym();
        case regex_ast::kind::alternation:
            return match_range(node->left(), w, lo, hi) || match_range(node->right(), w, lo, hi);
        case regex_ast::kind::concat:
            for (std::size_t k = lo; k <= hi; ++k)
                if (match_range(node->left(), w, lo, k) && match_range(node->right(), w, k, hi))
                    return true;
            return false;
        case regex_ast::kind::star:
            if (lo == hi) return true;
            // each iteration consumes a nonempty prefix, which forces progress
            for (std::size_t k = lo + 1; k <= hi; ++k)
                if (match_range(node->inner(), w, lo, k) && match_range(node, w, k, hi))
                    return true;
            return false;
    }
    return false;
}

}  // namespace detail

/// Reference semantics of the regex notation by direct recursion on the tree:
/// a concatenation matches iff some split matches both sides, a star matches
/// the empty word or a nonempty prefix matched by the body followed by a star
/// match of the rest. Independent of the NFA/DFA pipeline.
inline bool brute_force_match(const regex_ptr& ast, const word& w) {
    return detail::match_range(ast, w, 0, w.size());
}

}  // namespace evfa

#endif  // EVFA_MATCH_HPP
