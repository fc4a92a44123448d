#ifndef EVFA_COMPILE_HPP
#define EVFA_COMPILE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dfa.hpp"
#include "errors.hpp"
#include "nfa.hpp"
#include "regex.hpp"
#include "symbol.hpp"

namespace evfa {

/// Determinizes a Thompson NFA by the subset construction.
///
/// Subset states are discovered breadth-first with symbols in alphabet order,
/// so numbering is deterministic. The resulting transition function is total:
/// a (state, symbol) pair with no NFA successor routes to the empty subset,
/// which materializes as an explicit sink state only when first needed.
inline dfa subset_construct(const nfa& n) {
    const std::size_t nsym = n.sigma.size();

    std::map<state_set, state_id> ids;
    std::vector<state_set> sets;
    const auto intern = [&](state_set s) {
        const auto it = ids.find(s);
        if (it != ids.end()) return it->second;
        const state_id id = static_cast<state_id>(sets.size());
        ids.emplace(s, id);
        sets.push_back(std::move(s));
        return id;
    };
    intern(epsilon_closure(n, {n.start}));

    std::vector<state_id> delta;
    for (std::size_t q = 0; q < sets.size(); ++q) {  // sets grows while iterating
        const state_set current = sets[q];
        for (std::size_t c = 0; c < nsym; ++c) {
            state_set moved;
            for (const state_id s : current) {
                const auto& edge = n.states[s].on_symbol;
                if (edge && edge->first == c) moved.push_back(edge->second);
            }
            std::sort(moved.begin(), moved.end());
            moved.erase(std::unique(moved.begin(), moved.end()), moved.end());
            delta.push_back(intern(epsilon_closure(n, moved)));
        }
    }

    std::vector<state_id> accepting;
    for (std::size_t q = 0; q < sets.size(); ++q)
        if (std::binary_search(sets[q].begin(), sets[q].end(), n.accept))
            accepting.push_back(static_cast<state_id>(q));

    return dfa(sets.size(), n.sigma, std::move(delta), 0, std::move(accepting));
}

/// States from which some word (possibly empty) reaches acceptance.
inline std::vector<bool> live_state_mask(const dfa& d) {
    const std::size_t n = d.state_count();
    const std::size_t nsym = d.sigma().size();

    std::vector<std::vector<state_id>> preds(n);
    for (std::size_t q = 0; q < n; ++q)
        for (std::size_t c = 0; c < nsym; ++c)
            preds[d.target(static_cast<state_id>(q), c)].push_back(static_cast<state_id>(q));

    std::vector<bool> live(n, false);
    std::deque<state_id> queue;
    for (std::size_t q = 0; q < n; ++q) {
        if (d.is_accepting(static_cast<state_id>(q))) {
            live[q] = true;
            queue.push_back(static_cast<state_id>(q));
        }
    }
    while (!queue.empty()) {
        const state_id q = queue.front();
        queue.pop_front();
        for (const state_id p : preds[q]) {
            if (!live[p]) {
                live[p] = true;
                queue.push_back(p);
            }
        }
    }
    return live;
}

namespace detail {

/// Renumbers states by breadth-first discovery from the start, exploring
/// symbols in alphabet order. Every state must be reachable.
inline dfa canonical_renumber(std::size_t n, const alphabet& sigma,
                              const std::vector<state_id>& delta, state_id start,
                              const std::vector<bool>& accepting) {
    const std::size_t nsym = sigma.size();
    std::vector<state_id> renum(n, no_state);
    std::vector<state_id> order;
    renum[start] = 0;
    order.push_back(start);
    for (std::size_t i = 0; i < order.size(); ++i) {
        const state_id q = order[i];
        for (std::size_t c = 0; c < nsym; ++c) {
            const state_id t = delta[q * nsym + c];
            if (renum[t] == no_state) {
                renum[t] = static_cast<state_id>(order.size());
                order.push_back(t);
            }
        }
    }
    if (order.size() != n)
        throw invalid_automaton_error("canonical renumbering requires every state reachable");

    std::vector<state_id> out_delta(n * nsym);
    std::vector<state_id> out_accepting;
    for (std::size_t i = 0; i < n; ++i) {
        const state_id q = order[i];
        for (std::size_t c = 0; c < nsym; ++c) out_delta[i * nsym + c] = renum[delta[q * nsym + c]];
        if (accepting[q]) out_accepting.push_back(static_cast<state_id>(i));
    }
    return dfa(n, sigma, std::move(out_delta), 0, std::move(out_accepting));
}

}  // namespace detail

/// Hopcroft partition refinement. The result is the unique minimal DFA for
/// the input's language: only reachable states are kept, every pair of
/// distinct states is distinguishable, and states carry the canonical
/// numbering (breadth-first from the start, symbols in alphabet order), so
/// two language-equal inputs minimize to field-identical machines.
inline dfa hopcroft_minimize(const dfa& d) {
    const std::size_t nsym = d.sigma().size();

    // drop unreachable states
    std::vector<state_id> order;
    std::vector<state_id> compact(d.state_count(), no_state);
    compact[d.start()] = 0;
    order.push_back(d.start());
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t c = 0; c < nsym; ++c) {
            const state_id t = d.target(order[i], c);
            if (compact[t] == no_state) {
                compact[t] = static_cast<state_id>(order.size());
                order.push_back(t);
            }
        }
    }
    const std::size_t n = order.size();
    std::vector<state_id> delta(n * nsym);
    std::vector<bool> accepting(n, false);
    for (std::size_t q = 0; q < n; ++q) {
        for (std::size_t c = 0; c < nsym; ++c) delta[q * nsym + c] = compact[d.target(order[q], c)];
        accepting[q] = d.is_accepting(order[q]);
    }

    // initial partition: accepting vs. non-accepting
    std::vector<std::vector<state_id>> blocks;
    std::vector<std::size_t> block_of(n, 0);
    {
        std::vector<state_id> acc, rej;
        for (std::size_t q = 0; q < n; ++q)
            (accepting[q] ? acc : rej).push_back(static_cast<state_id>(q));
        if (!acc.empty()) {
            for (const state_id q : acc) block_of[q] = blocks.size();
            blocks.push_back(std::move(acc));
        }
        if (!rej.empty()) {
            for (const state_id q : rej) block_of[q] = blocks.size();
            blocks.push_back(std::move(rej));
        }
    }

    std::vector<std::vector<std::vector<state_id>>> preds(
        nsym, std::vector<std::vector<state_id>>(n));
    for (std::size_t q = 0; q < n; ++q)
        for (std::size_t c = 0; c < nsym; ++c)
            preds[c][delta[q * nsym + c]].push_back(static_cast<state_id>(q));

    std::deque<std::size_t> worklist;
    std::vector<bool> queued;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        worklist.push_back(b);
        queued.push_back(true);
    }

    while (!worklist.empty()) {
        const std::size_t a = worklist.front();
        worklist.pop_front();
        queued[a] = false;
        const std::vector<state_id> splitter = blocks[a];

        for (std::size_t c = 0; c < nsym; ++c) {
            // group the preimage of the splitter by current block
            std::map<std::size_t, std::vector<state_id>> hits;
            for (const state_id q : splitter)
                for (const state_id p : preds[c][q]) hits[block_of[p]].push_back(p);

            for (auto& [b, inside] : hits) {
                if (inside.size() == blocks[b].size()) continue;

                const std::size_t fresh = blocks.size();
                std::vector<bool> is_inside(n, false);
                for (const state_id q : inside) is_inside[q] = true;
                std::vector<state_id> rest;
                for (const state_id q : blocks[b])
                    if (!is_inside[q]) rest.push_back(q);

                blocks[b] = std::move(inside);
                blocks.push_back(std::move(rest));
                for (const state_id q : blocks[fresh]) block_of[q] = fresh;
                queued.push_back(false);

                if (queued[b]) {
                    worklist.push_back(fresh);
                    queued[fresh] = true;
                } else {
                    const std::size_t pick =
                        blocks[b].size() <= blocks[fresh].size() ? b : fresh;
                    worklist.push_back(pick);
                    queued[pick] = true;
                }
            }
        }
    }

    // quotient machine over the refined partition
    const std::size_t bn = blocks.size();
    std::vector<state_id> qdelta(bn * nsym);
    std::vector<bool> qacc(bn, false);
    for (std::size_t b = 0; b < bn; ++b) {
        const state_id rep = blocks[b].front();
        for (std::size_t c = 0; c < nsym; ++c)
            qdelta[b * nsym + c] = static_cast<state_id>(block_of[delta[rep * nsym + c]]);
        qacc[b] = accepting[rep];
    }
    return detail::canonical_renumber(bn, d.sigma(), qdelta,
                                      static_cast<state_id>(block_of[0]), qacc);
}

struct equivalence_result {
    bool equal;
    /// Shortest word accepted by exactly one machine; empty when `equal`.
    word counterexample;
};

/// Language equality via breadth-first search of the product automaton.
/// When the languages differ the counterexample is shortest, with ties broken
/// by alphabet order. Requires both machines to share one alphabet, same
/// symbols in the same order.
inline equivalence_result equivalent(const dfa& a, const dfa& b) {
    if (a.sigma() != b.sigma())
        throw alphabet_mismatch_error("machines do not share an alphabet");
    const std::size_t nsym = a.sigma().size();

    struct discovery {
        std::size_t parent;
        std::size_t via_symbol;
    };
    std::vector<std::pair<state_id, state_id>> pairs;
    std::vector<discovery> from;
    std::unordered_map<std::uint64_t, std::size_t> seen;
    const auto key = [&](state_id x, state_id y) {
        return static_cast<std::uint64_t>(x) * b.state_count() + y;
    };
    const auto rebuild = [&](std::size_t i) {
        std::vector<std::size_t> symbols;
        while (i != 0) {
            symbols.push_back(from[i].via_symbol);
            i = from[i].parent;
        }
        word w;
        w.reserve(symbols.size());
        for (auto it = symbols.rbegin(); it != symbols.rend(); ++it) w.push_back(a.sigma().at(*it));
        return w;
    };

    if (a.is_accepting(a.start()) != b.is_accepting(b.start())) return {false, {}};
    pairs.push_back({a.start(), b.start()});
    from.push_back({0, 0});
    seen.emplace(key(a.start(), b.start()), 0);

    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto [x, y] = pairs[i];
        for (std::size_t c = 0; c < nsym; ++c) {
            const state_id nx = a.target(x, c);
            const state_id ny = b.target(y, c);
            const auto [it, fresh] = seen.emplace(key(nx, ny), pairs.size());
            if (!fresh) continue;
            pairs.push_back({nx, ny});
            from.push_back({i, c});
            if (a.is_accepting(nx) != b.is_accepting(ny))
                return {false, rebuild(pairs.size() - 1)};
        }
    }
    return {true, {}};
}

/// parse -> thompson -> subset construction. The alphabet is the declared one
/// when present, otherwise the symbols used by the expression. Minimization
/// is the caller's choice.
inline dfa compile_regex(const regex_source& src) {
    const regex_ptr ast = parse_regex(src);
    const alphabet sigma =
        src.declared_alphabet ? *src.declared_alphabet : alphabet(used_symbols(ast));
    if (sigma.empty())
        throw invalid_automaton_error(
            "the expression uses no events and no alphabet was declared");
    return subset_construct(thompson(ast, sigma));
}

}  // namespace evfa

#endif  // EVFA_COMPILE_HPP
