#ifndef EVFA_NFA_HPP
#define EVFA_NFA_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "dfa.hpp"
#include "errors.hpp"
#include "regex.hpp"
#include "symbol.hpp"

namespace evfa {

/// Thompson-form epsilon-NFA, the compilation intermediate between a regex
/// tree and a DFA. Invariants: exactly one accepting state with no outgoing
/// edges, a start state with no incoming edges, at most two epsilon edges per
/// state, and a state with a symbol edge has no epsilon edges.
struct nfa {
    struct state {
        /// Outgoing symbol edge as (alphabet index, target); at most one.
        std::optional<std::pair<std::size_t, state_id>> on_symbol;
        std::vector<state_id> eps;
    };

    alphabet sigma;
    std::vector<state> states;
    state_id start = 0;
    state_id accept = 0;
};

/// Sorted, duplicate-free set of NFA states.
using state_set = std::vector<state_id>;

namespace detail {

struct nfa_builder {
    const alphabet& sigma;
    std::vector<nfa::state> states;

    struct frag {
        state_id start;
        state_id accept;
    };

    state_id fresh() {
        states.emplace_back();
        return static_cast<state_id>(states.size() - 1);
    }

    frag build(const regex_ptr& node) {
        switch (node->node_kind()) {
            case regex_ast::kind::empty_set: {
                const state_id s = fresh(), t = fresh();
                return {s, t};
            }
            case regex_ast::kind::epsilon: {
                const state_id s = fresh(), t = fresh();
                states[s].eps.push_back(t);
                return {s, t};
            }
            case regex_ast::kind::sym: {
                const auto index = sigma.index_of(node->sym());
                if (!index) throw undeclared_symbol_error(node->sym().name());
                const state_id s = fresh(), t = fresh();
                states[s].on_symbol = {{*index, t}};
                return {s, t};
            }
            case regex_ast::kind::concat: {
                const frag l = build(node->left());
                const frag r = build(node->right());
                states[l.accept].eps.push_back(r.start);
                return {l.start, r.accept};
            }
            case regex_ast::kind::alternation: {
                const frag l = build(node->left());
                const frag r = build(node->right());
                const state_id s = fresh(), t = fresh();
                states[s].eps = {l.start, r.start};
                states[l.accept].eps.push_back(t);
                states[r.accept].eps.push_back(t);
                return {s, t};
            }
            case regex_ast::kind::star: {
                const frag f = build(node->inner());
                const state_id s = fresh(), t = fresh();
                states[s].eps = {f.start, t};
                states[f.accept].eps = {f.start, t};
                return {s, t};
            }
        }
        throw error("unreachable regex node kind");
    }
};

}  // namespace detail

/// Compiles a regex tree to a Thompson NFA over `sigma`.
///
/// State budget per node: leaves allocate 2 states, alternation and star add
/// 2, concatenation adds none, so |states| <= 2 * node_count(ast).
inline nfa thompson(const regex_ptr& ast, const alphabet& sigma) {
    if (sigma.empty()) throw invalid_automaton_error("automaton alphabet must be nonempty");
    detail::nfa_builder builder{sigma, {}};
    const auto frag = builder.build(ast);
    return nfa{sigma, std::move(builder.states), frag.start, frag.accept};
}

/// Least superset of `states` closed under epsilon edges. Idempotent.
inline state_set epsilon_closure(const nfa& n, const state_set& states) {
    std::vector<bool> seen(n.states.size(), false);
    std::vector<state_id> stack;
    for (const state_id q : states) {
        if (q >= n.states.size()) throw invalid_state_error(q, n.states.size());
        if (!seen[q]) {
            seen[q] = true;
            stack.push_back(q);
        }
    }
    while (!stack.empty()) {
        const state_id q = stack.back();
        stack.pop_back();
        for (const state_id t : n.states[q].eps) {
            if (!seen[t]) {
                seen[t] = true;
                stack.push_back(t);
            }
        }
    }
    state_set out;
    for (std::size_t q = 0; q < seen.size(); ++q)
        if (seen[q]) out.push_back(static_cast<state_id>(q));
    return out;
}

}  // namespace evfa

#endif  // EVFA_NFA_HPP
