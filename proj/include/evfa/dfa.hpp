#ifndef EVFA_DFA_HPP
#define EVFA_DFA_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "symbol.hpp"

namespace evfa {

using state_id = std::uint32_t;

/// Sentinel for "no transition yet" while assembling a table. The dfa
/// constructor rejects any table that still contains it.
inline constexpr state_id no_state = std::numeric_limits<state_id>::max();

/// Snapshot of a machine run: the current state and the unprocessed input.
struct configuration {
    state_id state;
    word remaining;

    friend bool operator==(const configuration&, const configuration&) = default;
};

/// Deterministic finite automaton with a total transition function.
///
/// States are dense ids in [0, state_count). The table is validated eagerly:
/// construction fails unless every (state, symbol) pair has a target, so every
/// downstream algorithm may assume totality. Instances are immutable and safe
/// to share across concurrent readers.
class dfa {
public:
    /// `transitions` is row-major: entry [q * |sigma| + c] is the target of
    /// state q on the c-th alphabet symbol.
    dfa(std::size_t state_count, alphabet sigma, std::vector<state_id> transitions,
        state_id start, std::vector<state_id> accepting)
        : state_count_(state_count),
          sigma_(std::move(sigma)),
          delta_(std::move(transitions)),
          start_(start),
          accepting_(state_count, false) {
        if (sigma_.empty()) throw invalid_automaton_error("automaton alphabet must be nonempty");
        if (state_count_ == 0) throw invalid_automaton_error("automaton needs at least one state");
        if (delta_.size() != state_count_ * sigma_.size())
            throw invalid_automaton_error("transition table has " + std::to_string(delta_.size()) +
                                          " entries, expected " +
                                          std::to_string(state_count_ * sigma_.size()));
        for (std::size_t q = 0; q < state_count_; ++q) {
            for (std::size_t c = 0; c < sigma_.size(); ++c) {
                const state_id target = delta_[q * sigma_.size() + c];
                if (target == no_state)
                    throw invalid_automaton_error("partial transition table: no transition for state " +
                                                  std::to_string(q) + " on '" + sigma_.at(c).name() +
                                                  "'");
                if (target >= state_count_)
                    throw invalid_automaton_error("transition target " + std::to_string(target) +
                                                  " out of range");
            }
        }
        if (start_ >= state_count_) throw invalid_automaton_error("start state out of range");
        for (const state_id q : accepting) {
            if (q >= state_count_)
                throw invalid_automaton_error("accepting state " + std::to_string(q) +
                                              " out of range");
            accepting_[q] = true;
        }
    }

    std::size_t state_count() const noexcept { return state_count_; }
    const alphabet& sigma() const noexcept { return sigma_; }
    state_id start() const noexcept { return start_; }

    bool is_accepting(state_id q) const {
        if (q >= state_count_) throw invalid_state_error(q, state_count_);
        return accepting_[q];
    }

    /// Accepting states in ascending order.
    std::vector<state_id> accepting_states() const {
        std::vector<state_id> out;
        for (std::size_t q = 0; q < state_count_; ++q)
            if (accepting_[q]) out.push_back(static_cast<state_id>(q));
        return out;
    }

    /// Transition lookup by alphabet index; bounds are the caller's concern.
    state_id target(state_id q, std::size_t symbol_index) const {
        return delta_[q * sigma_.size() + symbol_index];
    }

    friend bool operator==(const dfa& a, const dfa& b) {
        return a.state_count_ == b.state_count_ && a.sigma_ == b.sigma_ && a.delta_ == b.delta_ &&
               a.start_ == b.start_ && a.accepting_ == b.accepting_;
    }
    friend bool operator!=(const dfa& a, const dfa& b) { return !(a == b); }

private:
    std::size_t state_count_;
    alphabet sigma_;
    std::vector<state_id> delta_;
    state_id start_;
    std::vector<bool> accepting_;
};

/// unknown_symbol_error that carries the configurations computed before the
/// offending event.
class truncated_run_error : public unknown_symbol_error {
public:
    truncated_run_error(std::string symbol_name, std::size_t offset,
                        std::vector<configuration> partial_run)
        : unknown_symbol_error(std::move(symbol_name), offset),
          partial_run_(std::move(partial_run)) {}

    const std::vector<configuration>& partial_run() const noexcept { return partial_run_; }

private:
    std::vector<configuration> partial_run_;
};

/// One application of the transition function.
inline state_id step(const dfa& d, state_id q, const symbol& a) {
    if (q >= d.state_count()) throw invalid_state_error(q, d.state_count());
    const auto index = d.sigma().index_of(a);
    if (!index) throw unknown_symbol_error(a.name());
    return d.target(q, *index);
}

/// Extended transition function: consumes the word left to right.
/// extended_step(d, q, {}) is exactly q.
inline state_id extended_step(const dfa& d, state_id q, const word& w) {
    if (q >= d.state_count()) throw invalid_state_error(q, d.state_count());
    for (std::size_t i = 0; i < w.size(); ++i) {
        const auto index = d.sigma().index_of(w[i]);
        if (!index) throw unknown_symbol_error(w[i].name(), i);
        q = d.target(q, *index);
    }
    return q;
}

/// True iff the word drives the machine from its start state into an
/// accepting state. A foreign event raises unknown_symbol_error; it is not a
/// rejection.
inline bool accepts(const dfa& d, const word& w) {
    return d.is_accepting(extended_step(d, d.start(), w));
}

/// Full configuration sequence of the machine on `w`: |w|+1 entries, from
/// [start, w] to [q_final, empty]. On a foreign event the run is truncated
/// and the error carries the partial sequence.
inline std::vector<configuration> run(const dfa& d, const word& w) {
    std::vector<configuration> trace;
    trace.reserve(w.size() + 1);
    state_id q = d.start();
    trace.push_back({q, w});
    for (std::size_t i = 0; i < w.size(); ++i) {
        const auto index = d.sigma().index_of(w[i]);
        if (!index) throw truncated_run_error(w[i].name(), i, std::move(trace));
        q = d.target(q, *index);
        trace.push_back({q, word(w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end())});
    }
    return trace;
}

}  // namespace evfa

#endif  // EVFA_DFA_HPP
