#ifndef EVFA_SYMBOL_HPP
#define EVFA_SYMBOL_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace evfa {

/// True when `name` matches [A-Za-z][A-Za-z0-9_]*.
inline bool is_valid_symbol_name(std::string_view name) {
    const auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); };
    if (name.empty() || !alpha(name.front())) return false;
    for (std::size_t i = 1; i < name.size(); ++i) {
        const char c = name[i];
        if (!alpha(c) && !(c >= '0' && c <= '9') && c != '_') return false;
    }
    return true;
}

/// An event token. Equality is byte equality of the name.
class symbol {
public:
    explicit symbol(std::string name) : name_(std::move(name)) {
        if (!is_valid_symbol_name(name_)) throw error("invalid symbol name: '" + name_ + "'");
    }
    explicit symbol(std::string_view name) : symbol(std::string(name)) {}
    explicit symbol(const char* name) : symbol(std::string(name)) {}

    const std::string& name() const noexcept { return name_; }

    friend bool operator==(const symbol& a, const symbol& b) noexcept { return a.name_ == b.name_; }
    friend bool operator!=(const symbol& a, const symbol& b) noexcept { return !(a == b); }
    friend bool operator<(const symbol& a, const symbol& b) noexcept { return a.name_ < b.name_; }

private:
    std::string name_;
};

/// Input word: a finite event sequence. The empty word is the empty vector.
using word = std::vector<symbol>;

inline word make_word(std::initializer_list<std::string_view> names) {
    word w;
    w.reserve(names.size());
    for (const auto n : names) w.emplace_back(std::string(n));
    return w;
}

inline std::string to_string(const word& w) {
    std::string out;
    for (const symbol& s : w) {
        if (!out.empty()) out += ' ';
        out += s.name();
    }
    return out;
}

/// Finite ordered symbol set. Order is first-insertion order and it is
/// significant: serialization, DOT export, and canonical state numbering all
/// iterate the alphabet in this order.
class alphabet {
public:
    alphabet() = default;

    explicit alphabet(std::vector<symbol> symbols) : symbols_(std::move(symbols)) {
        for (std::size_t i = 0; i < symbols_.size(); ++i) {
            const auto [it, fresh] = index_.emplace(symbols_[i].name(), i);
            if (!fresh) throw error("duplicate symbol in alphabet: '" + symbols_[i].name() + "'");
        }
    }

    static alphabet of(std::initializer_list<std::string_view> names) {
        std::vector<symbol> symbols;
        symbols.reserve(names.size());
        for (const auto n : names) symbols.emplace_back(std::string(n));
        return alphabet(std::move(symbols));
    }

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    const symbol& at(std::size_t i) const { return symbols_.at(i); }

    std::optional<std::size_t> index_of(std::string_view name) const {
        const auto it = index_.find(std::string(name));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    std::optional<std::size_t> index_of(const symbol& s) const { return index_of(s.name()); }
    bool contains(const symbol& s) const { return index_of(s).has_value(); }

    auto begin() const noexcept { return symbols_.begin(); }
    auto end() const noexcept { return symbols_.end(); }

    friend bool operator==(const alphabet& a, const alphabet& b) { return a.symbols_ == b.symbols_; }
    friend bool operator!=(const alphabet& a, const alphabet& b) { return !(a == b); }

private:
    std::vector<symbol> symbols_;
    std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace evfa

#endif  // EVFA_SYMBOL_HPP
