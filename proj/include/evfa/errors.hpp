#ifndef EVFA_ERRORS_HPP
#define EVFA_ERRORS_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace evfa {

/// Base of every error the toolkit raises. The CLI maps these to exit code 2.
class error : public std::runtime_error {
public:
    explicit error(const std::string& message) : std::runtime_error(message) {}
};

/// Event outside the automaton's alphabet. Consuming a foreign event is an
/// error, not a rejection: the transition function is only defined over the
/// machine's own alphabet.
class unknown_symbol_error : public error {
public:
    explicit unknown_symbol_error(std::string symbol_name,
                                  std::optional<std::size_t> offset = std::nullopt,
                                  std::optional<std::size_t> session_index = std::nullopt)
        : error(describe(symbol_name, offset, session_index)),
          symbol_name_(std::move(symbol_name)),
          offset_(offset),
          session_index_(session_index) {}

    const std::string& symbol_name() const noexcept { return symbol_name_; }
    /// Index of the offending event within the input word, when known.
    std::optional<std::size_t> offset() const noexcept { return offset_; }
    /// Index of the offending session, set when aggregation propagates the error.
    std::optional<std::size_t> session_index() const noexcept { return session_index_; }

private:
    static std::string describe(const std::string& name, std::optional<std::size_t> offset,
                                std::optional<std::size_t> session) {
        std::string text = "unknown symbol '" + name + "'";
        if (offset) text += " at event " + std::to_string(*offset);
        if (session) text += " (session " + std::to_string(*session) + ")";
        return text;
    }

    std::string symbol_name_;
    std::optional<std::size_t> offset_;
    std::optional<std::size_t> session_index_;
};

/// State id outside [0, |Q|).
class invalid_state_error : public error {
public:
    invalid_state_error(std::size_t state, std::size_t state_count)
        : error("state " + std::to_string(state) + " out of range [0, " +
                std::to_string(state_count) + ")"),
          state_(state),
          state_count_(state_count) {}

    std::size_t state() const noexcept { return state_; }
    std::size_t state_count() const noexcept { return state_count_; }

private:
    std::size_t state_;
    std::size_t state_count_;
};

/// Malformed regular-expression source text.
class syntax_error : public error {
public:
    syntax_error(const std::string& message, std::size_t offset)
        : error(message + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}

    /// 0-based byte offset into the source text.
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Identifier outside the declared alphabet.
class undeclared_symbol_error : public error {
public:
    explicit undeclared_symbol_error(std::string symbol_name,
                                     std::optional<std::size_t> offset = std::nullopt)
        : error(describe(symbol_name, offset)),
          symbol_name_(std::move(symbol_name)),
          offset_(offset) {}

    const std::string& symbol_name() const noexcept { return symbol_name_; }
    std::optional<std::size_t> offset() const noexcept { return offset_; }

private:
    static std::string describe(const std::string& name, std::optional<std::size_t> offset) {
        std::string text = "symbol '" + name + "' is not in the declared alphabet";
        if (offset) text += " (byte " + std::to_string(*offset) + ")";
        return text;
    }

    std::string symbol_name_;
    std::optional<std::size_t> offset_;
};

/// Trace line that does not form a valid event token.
class bad_token_error : public error {
public:
    bad_token_error(const std::string& message, std::size_t line)
        : error(message + " (line " + std::to_string(line) + ")"), line_(line) {}

    /// 1-based line number.
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Malformed automaton document line.
class format_error : public error {
public:
    format_error(const std::string& message, std::size_t line)
        : error(message + " (line " + std::to_string(line) + ")"), line_(line) {}

    /// 1-based line number.
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Structurally invalid automaton: partial transition table, out-of-range
/// ids, empty alphabet.
class invalid_automaton_error : public error {
public:
    explicit invalid_automaton_error(const std::string& message) : error(message) {}
};

/// Two machines whose alphabets differ where equal alphabets are required.
class alphabet_mismatch_error : public error {
public:
    explicit alphabet_mismatch_error(const std::string& message) : error(message) {}
};

}  // namespace evfa

#endif  // EVFA_ERRORS_HPP
