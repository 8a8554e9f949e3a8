#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace suw {

/// A symbol of the alphabet {1..sigma}. Always 1-based at interfaces.
using Symbol = std::uint32_t;

/// The alphabet {1..sigma}, sigma >= 1.
class Alphabet {
public:
    /// Throws std::invalid_argument when sigma is zero.
    explicit Alphabet(std::size_t sigma);

    std::size_t sigma() const noexcept { return sigma_; }
    bool contains(std::uint64_t s) const noexcept { return s >= 1 && s <= sigma_; }

    friend bool operator==(Alphabet, Alphabet) = default;

private:
    std::size_t sigma_;
};

/// An immutable, validated word over an Alphabet.
class Word {
public:
    /// Empty word over `alphabet`.
    explicit Word(Alphabet alphabet) : alphabet_(alphabet) {}

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t sigma() const noexcept { return alphabet_.sigma(); }
    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }

    std::span<const Symbol> symbols() const noexcept { return symbols_; }

    /// 1-based access, matching the w[i] notation used in the docs.
    Symbol at(std::size_t i) const { return symbols_.at(i - 1); }
    /// 0-based access.
    Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }

    auto begin() const noexcept { return symbols_.begin(); }
    auto end() const noexcept { return symbols_.end(); }

    /// The factor w[from, to] (1-based, inclusive); empty when from > to.
    Word factor(std::size_t from, std::size_t to) const;

    friend bool operator==(const Word& a, const Word& b) {
        return a.alphabet_ == b.alphabet_ && a.symbols_ == b.symbols_;
    }

private:
    friend Word make_word(std::span<const std::uint64_t> symbols, std::size_t sigma);
    friend Word make_word(std::span<const Symbol> symbols, std::size_t sigma);

    Word(Alphabet alphabet, std::vector<Symbol> symbols)
        : alphabet_(alphabet), symbols_(std::move(symbols)) {}

    Alphabet alphabet_;
    std::vector<Symbol> symbols_;
};

/// Validates `symbols` against {1..sigma}. Throws SymbolOutOfRange with the
/// 1-based position of the first bad symbol.
Word make_word(std::span<const std::uint64_t> symbols, std::size_t sigma);
Word make_word(std::span<const Symbol> symbols, std::size_t sigma);
inline Word make_word(std::initializer_list<Symbol> symbols, std::size_t sigma) {
    return make_word(std::span<const Symbol>(symbols.begin(), symbols.size()), sigma);
}

/// Lexicographic order on equal-length words over the same alphabet.
/// Throws LengthMismatch or AlphabetMismatch.
std::strong_ordering lex_compare(const Word& w, const Word& v);

/// Text form: digits concatenated when sigma <= 9, comma-separated decimals
/// otherwise. The empty word is the empty string in both forms.
std::string format_word(const Word& w);

/// Inverse of format_word. Throws ParseError or SymbolOutOfRange.
Word parse_word(std::string_view text, std::size_t sigma);

inline std::ostream& operator<<(std::ostream& os, const Word& w) { return os << format_word(w); }

}  // namespace suw
