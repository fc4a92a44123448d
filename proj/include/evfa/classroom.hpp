#ifndef EVFA_CLASSROOM_HPP
#define EVFA_CLASSROOM_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "compile.hpp"
#include "dfa.hpp"
#include "nfa.hpp"
#include "regex.hpp"
#include "symbol.hpp"

namespace evfa {

enum class classroom_model_id { simple, emotional };

inline const char* to_string(classroom_model_id id) {
    return id == classroom_model_id::simple ? "simple" : "emotional";
}

/// A classroom interaction model: an event alphabet, the defining regular
/// expression, and the compiled minimal machine.
struct classroom_model {
    classroom_model_id id;
    alphabet sigma;
    regex_ptr source_regex;
    dfa machine;
};

/// Defining expression of the simple model: lecture rounds, optionally with
/// query/response exchanges, ending when the class understands.
inline const char* simple_model_regex() {
    return "(Deliver_Lecture)* . Understand_Lecture"
           " + (Deliver_Lecture . (Ask_Queries . Response_Queries)*)* . Understand_Lecture";
}

/// Defining expression of the emotional model: lecture rounds wrapped in
/// emotional support, then understanding, reduced queries, and respect.
inline const char* emotional_model_regex() {
    return "(Deliver_Lecture . (Emotional_Environment . Positive_Behavior . Positive_Language"
           " . Extra_Motivation))* . Understand_Lecture . (Minimum_Queries . Give_Respect)*"
           " . Understand_Lecture . Give_Respect";
}

namespace detail {

inline classroom_model build_model(classroom_model_id id, alphabet sigma, const char* source) {
    regex_ptr ast = parse_regex(regex_source{source, sigma});
    dfa machine = hopcroft_minimize(subset_construct(thompson(ast, sigma)));
    return classroom_model{id, std::move(sigma), std::move(ast), std::move(machine)};
}

}  // namespace detail

inline classroom_model simple_model() {
    return detail::build_model(
        classroom_model_id::simple,
        alphabet::of({"Deliver_Lecture", "Response_Queries", "Understand_Lecture", "Ask_Queries"}),
        simple_model_regex());
}

inline classroom_model emotional_model() {
    return detail::build_model(
        classroom_model_id::emotional,
        alphabet::of({"Deliver_Lecture", "Emotional_Environment", "Positive_Behavior",
                      "Positive_Language", "Extra_Motivation", "Understand_Lecture",
                      "Minimum_Queries", "Give_Respect"}),
        emotional_model_regex());
}

inline classroom_model model_by_id(classroom_model_id id) {
    return id == classroom_model_id::simple ? simple_model() : emotional_model();
}

/// The query-like event counted by trace verdicts under each model.
inline symbol query_symbol(classroom_model_id id) {
    return symbol(id == classroom_model_id::simple ? "Ask_Queries" : "Minimum_Queries");
}

/// Outcome of classifying one trace against a model.
struct trace_verdict {
    bool accepted = false;
    std::vector<configuration> run;
    /// First event index after which no completion can be accepted; absent
    /// for accepted traces and for rejected traces that end in a live state.
    std::optional<std::size_t> failure_offset;
    /// Occurrences of the model's query symbol in the trace.
    std::size_t query_count = 0;
};

inline trace_verdict classify_trace(const classroom_model& model, const word& trace) {
    std::vector<configuration> steps = run(model.machine, trace);
    const bool accepted = model.machine.is_accepting(steps.back().state);

    std::optional<std::size_t> failure_offset;
    if (!accepted) {
        const std::vector<bool> live = live_state_mask(model.machine);
        for (std::size_t i = 0; i < trace.size(); ++i) {
            if (!live[steps[i + 1].state]) {
                failure_offset = i;
                break;
            }
        }
    }

    const symbol query = query_symbol(model.id);
    std::size_t query_count = 0;
    for (const symbol& event : trace)
        if (event == query) ++query_count;

    return {accepted, std::move(steps), failure_offset, query_count};
}

/// Exact ratio of query events to total events.
struct rational {
    std::uint64_t numerator = 0;
    std::uint64_t denominator = 1;
};

struct session {
    classroom_model_id model;
    word trace;
};

struct student_profile {
    std::string student_id;
    std::size_t sessions = 0;
    std::size_t accepted_simple = 0;
    std::size_t accepted_emotional = 0;
    std::uint64_t query_events = 0;
    std::uint64_t total_events = 0;

    rational mean_query_rate() const {
        if (total_events == 0) return {0, 1};
        return {query_events, total_events};
    }
};

/// Aggregates per-session verdicts for one student. A foreign event aborts
/// the aggregation; the error reports the offending session's index.
inline student_profile profile_student(std::string student_id,
                                       const std::vector<session>& sessions) {
    student_profile out;
    out.student_id = std::move(student_id);
    std::optional<classroom_model> simple;
    std::optional<classroom_model> emotional;
    for (std::size_t i = 0; i < sessions.size(); ++i) {
        const session& s = sessions[i];
        std::optional<classroom_model>& slot =
            s.model == classroom_model_id::simple ? simple : emotional;
        if (!slot) slot = model_by_id(s.model);
        try {
            const trace_verdict verdict = classify_trace(*slot, s.trace);
            ++out.sessions;
            if (verdict.accepted) {
                if (s.model == classroom_model_id::simple)
                    ++out.accepted_simple;
                else
                    ++out.accepted_emotional;
            }
            out.query_events += verdict.query_count;
            out.total_events += s.trace.size();
        } catch (const unknown_symbol_error& e) {
            throw unknown_symbol_error(e.symbol_name(), e.offset(), i);
        }
    }
    return out;
}

}  // namespace evfa

#endif  // EVFA_CLASSROOM_HPP
