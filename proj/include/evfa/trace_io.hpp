#ifndef EVFA_TRACE_IO_HPP
#define EVFA_TRACE_IO_HPP

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "dfa.hpp"
#include "errors.hpp"
#include "symbol.hpp"

namespace evfa {
namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    if (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

inline std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) fields.push_back(line.substr(start, i - start));
    }
    return fields;
}

inline std::string_view trim(std::string_view s) {
    const auto ws = [](char c) {
        return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v';
    };
    while (!s.empty() && ws(s.front())) s.remove_prefix(1);
    while (!s.empty() && ws(s.back())) s.remove_suffix(1);
    return s;
}

inline std::uint64_t parse_number(std::string_view field, std::size_t line) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size())
        throw format_error("expected a number, got '" + std::string(field) + "'", line);
    return value;
}

}  // namespace detail

/// Parses a trace file: one event token per line. Blank lines and lines whose
/// first non-space character is '#' are skipped; surrounding whitespace is
/// trimmed. Event order follows file order.
inline word parse_trace(std::string_view text) {
    word events;
    const auto lines = detail::split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string_view token = detail::trim(lines[i]);
        if (token.empty() || token.front() == '#') continue;
        if (!is_valid_symbol_name(token))
            throw bad_token_error("not a valid event token: '" + std::string(token) + "'", i + 1);
        events.emplace_back(std::string(token));
    }
    return events;
}

/// Renders the line-oriented `automaton v1` document:
///
///   automaton v1
///   alphabet: a b
///   states: 2
///   start: 0
///   accept: 1
///   trans: 0 a 1
///   ...
///
/// Deterministic: states ascending, symbols in alphabet order, so
/// re-serialization of an equal machine is byte-identical.
inline std::string serialize_dfa(const dfa& d) {
    std::string out = "automaton v1\n";
    out += "alphabet:";
    for (const symbol& s : d.sigma()) {
        out += ' ';
        out += s.name();
    }
    out += '\n';
    out += "states: " + std::to_string(d.state_count()) + '\n';
    out += "start: " + std::to_string(d.start()) + '\n';
    out += "accept:";
    for (const state_id q : d.accepting_states()) {
        out += ' ';
        out += std::to_string(q);
    }
    out += '\n';
    for (std::size_t q = 0; q < d.state_count(); ++q)
        for (std::size_t c = 0; c < d.sigma().size(); ++c)
            out += "trans: " + std::to_string(q) + ' ' + d.sigma().at(c).name() + ' ' +
                   std::to_string(d.target(static_cast<state_id>(q), c)) + '\n';
    return out;
}

/// Parses an `automaton v1` document. Transition lines may appear in any
/// order; `label: <state> <token>` annotation lines are validated and
/// ignored. A missing (state, symbol) transition is a totality violation.
inline dfa deserialize_dfa(std::string_view text) {
    const auto lines = detail::split_lines(text);
    const auto header_fields = [&](std::size_t index,
                                   std::string_view keyword) -> std::vector<std::string_view> {
        if (index >= lines.size())
            throw format_error("missing '" + std::string(keyword) + "' line", index + 1);
        auto fields = detail::split_fields(lines[index]);
        if (fields.empty() || fields.front() != keyword)
            throw format_error("expected a '" + std::string(keyword) + "' line", index + 1);
        fields.erase(fields.begin());
        return fields;
    };

    if (lines.empty() || detail::trim(lines[0]) != "automaton v1")
        throw format_error("expected 'automaton v1' header", 1);

    const auto alphabet_fields = header_fields(1, "alphabet:");
    std::vector<symbol> symbols;
    for (const auto field : alphabet_fields) {
        if (!is_valid_symbol_name(field))
            throw format_error("bad symbol name '" + std::string(field) + "'", 2);
        symbols.emplace_back(std::string(field));
    }
    alphabet sigma;
    try {
        sigma = alphabet(std::move(symbols));
    } catch (const error& e) {
        throw format_error(e.what(), 2);
    }
    if (sigma.empty()) throw format_error("alphabet must be nonempty", 2);

    const auto states_fields = header_fields(2, "states:");
    if (states_fields.size() != 1) throw format_error("expected 'states: <count>'", 3);
    const std::uint64_t state_count = detail::parse_number(states_fields[0], 3);
    if (state_count == 0) throw invalid_automaton_error("automaton needs at least one state");
    if (state_count >= no_state) throw format_error("state count too large", 3);

    const auto start_fields = header_fields(3, "start:");
    if (start_fields.size() != 1) throw format_error("expected 'start: <state>'", 4);
    const std::uint64_t start = detail::parse_number(start_fields[0], 4);
    if (start >= state_count) throw format_error("start state out of range", 4);

    const auto accept_fields = header_fields(4, "accept:");
    std::vector<state_id> accepting;
    std::vector<bool> accept_seen(state_count, false);
    for (const auto field : accept_fields) {
        const std::uint64_t q = detail::parse_number(field, 5);
        if (q >= state_count) throw format_error("accepting state out of range", 5);
        if (accept_seen[q])
            throw format_error("duplicate accepting state " + std::string(field), 5);
        accept_seen[q] = true;
        accepting.push_back(static_cast<state_id>(q));
    }

    std::vector<state_id> delta(state_count * sigma.size(), no_state);
    for (std::size_t i = 5; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        const auto fields = detail::split_fields(lines[i]);
        if (fields.empty()) throw format_error("blank line", line_no);
        if (fields.front() == "label:") {
            if (fields.size() != 3) throw format_error("expected 'label: <state> <token>'", line_no);
            const std::uint64_t q = detail::parse_number(fields[1], line_no);
            if (q >= state_count) throw format_error("label state out of range", line_no);
            if (!is_valid_symbol_name(fields[2])) throw format_error("bad label token", line_no);
            continue;  // annotations are ignored by all algorithms
        }
        if (fields.front() != "trans:")
            throw format_error("expected a 'trans:' or 'label:' line", line_no);
        if (fields.size() != 4)
            throw format_error("expected 'trans: <from> <symbol> <to>'", line_no);
        const std::uint64_t from = detail::parse_number(fields[1], line_no);
        if (from >= state_count) throw format_error("source state out of range", line_no);
        const auto sym_index = sigma.index_of(fields[2]);
        if (!sym_index)
            throw format_error("symbol '" + std::string(fields[2]) + "' not in alphabet", line_no);
        const std::uint64_t to = detail::parse_number(fields[3], line_no);
        if (to >= state_count) throw format_error("target state out of range", line_no);
        state_id& cell = delta[from * sigma.size() + *sym_index];
        if (cell != no_state)
            throw format_error("duplicate transition for state " + std::string(fields[1]) +
                                   " on '" + std::string(fields[2]) + "'",
                               line_no);
        cell = static_cast<state_id>(to);
    }

    // the constructor reports any remaining gap as a totality violation
    return dfa(state_count, std::move(sigma), std::move(delta), static_cast<state_id>(start),
               std::move(accepting));
}

/// DOT rendering: rankdir=LR, doublecircle accepting states, an unlabeled
/// arrow into the start state, parallel edges merged with comma-joined
/// labels. Node and edge order is deterministic (states ascending, symbols in
/// alphabet order), so output is byte-stable.
inline std::string export_dot(const dfa& d, std::string_view name) {
    std::string out = "digraph " + std::string(name) + " {\n";
    out += "  rankdir=LR;\n";
    out += "  __start [shape=none, label=\"\"];\n";
    for (std::size_t q = 0; q < d.state_count(); ++q)
        out += "  " + std::to_string(q) + " [shape=" +
               (d.is_accepting(static_cast<state_id>(q)) ? "doublecircle" : "circle") + "];\n";
    out += "  __start -> " + std::to_string(d.start()) + ";\n";
    for (std::size_t q = 0; q < d.state_count(); ++q) {
        std::vector<std::pair<state_id, std::string>> edges;
        for (std::size_t c = 0; c < d.sigma().size(); ++c) {
            const state_id t = d.target(static_cast<state_id>(q), c);
            const auto it = std::find_if(edges.begin(), edges.end(),
                                         [&](const auto& e) { return e.first == t; });
            if (it == edges.end())
                edges.push_back({t, d.sigma().at(c).name()});
            else
                it->second += "," + d.sigma().at(c).name();
        }
        for (const auto& [t, label] : edges)
            out += "  " + std::to_string(q) + " -> " + std::to_string(t) + " [label=\"" + label +
                   "\"];\n";
    }
    out += "}\n";
    return out;
}

inline std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return std::move(buffer).str();
}

inline word load_trace_file(const std::filesystem::path& path) {
    return parse_trace(read_text_file(path));
}

inline dfa load_automaton_file(const std::filesystem::path& path) {
    return deserialize_dfa(read_text_file(path));
}

/// Splits a session file name `<student-id>__<nn>.trace` into the student id
/// and the session number. The id must be a valid event token; the split is
/// at the last "__".
inline std::optional<std::pair<std::string, unsigned>> parse_session_filename(
    std::string_view filename) {
    constexpr std::string_view suffix = ".trace";
    if (filename.size() <= suffix.size() || !filename.ends_with(suffix)) return std::nullopt;
    const std::string_view stem = filename.substr(0, filename.size() - suffix.size());
    const std::size_t sep = stem.rfind("__");
    if (sep == std::string_view::npos || sep == 0) return std::nullopt;
    const std::string_view id = stem.substr(0, sep);
    const std::string_view digits = stem.substr(sep + 2);
    if (digits.empty() || !is_valid_symbol_name(id)) return std::nullopt;
    unsigned number = 0;
    for (const char c : digits) {
        if (c < '0' || c > '9') return std::nullopt;
        number = number * 10 + static_cast<unsigned>(c - '0');
    }
    return std::make_pair(std::string(id), number);
}

}  // namespace evfa

#endif  // EVFA_TRACE_IO_HPP
