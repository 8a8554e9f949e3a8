#include "suw/words.hpp"

#include <limits>
#include <stdexcept>

#include "suw/errors.hpp"

namespace suw {

Alphabet::Alphabet(std::size_t sigma) : sigma_(sigma) {
    if (sigma == 0) {
        throw std::invalid_argument("alphabet size must be at least 1");
    }
}

Word Word::factor(std::size_t from, std::size_t to) const {
    if (from > to) {
        return Word(alphabet_);
    }
    if (from == 0 || to > symbols_.size()) {
        throw IndexOutOfRange("factor [" + std::to_string(from) + ", " + std::to_string(to) +
                              "] outside word of length " + std::to_string(symbols_.size()));
    }
    return Word(alphabet_, std::vector<Symbol>(symbols_.begin() + static_cast<std::ptrdiff_t>(from - 1),
                                               symbols_.begin() + static_cast<std::ptrdiff_t>(to)));
}

namespace {

template <typename T>
std::vector<Symbol> validated(std::span<const T> symbols, const Alphabet& alphabet) {
    std::vector<Symbol> out;
    out.reserve(symbols.size());
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        const auto s = static_cast<std::uint64_t>(symbols[i]);
        if (!alphabet.contains(s)) {
            throw SymbolOutOfRange(i + 1, s);
        }
        out.push_back(static_cast<Symbol>(s));
    }
    return out;
}

}  // namespace

Word make_word(std::span<const std::uint64_t> symbols, std::size_t sigma) {
    const Alphabet alphabet(sigma);
    return Word(alphabet, validated(symbols, alphabet));
}

Word make_word(std::span<const Symbol> symbols, std::size_t sigma) {
    const Alphabet alphabet(sigma);
    return Word(alphabet, validated(symbols, alphabet));
}

std::strong_ordering lex_compare(const Word& w, const Word& v) {
    if (w.alphabet() != v.alphabet()) {
        throw AlphabetMismatch("cannot compare words over alphabets of size " +
                               std::to_string(w.sigma()) + " and " + std::to_string(v.sigma()));
    }
    if (w.size() != v.size()) {
        throw LengthMismatch("cannot compare words of length " + std::to_string(w.size()) +
                             " and " + std::to_string(v.size()));
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] != v[i]) {
            return w[i] < v[i] ? std::strong_ordering::less : std::strong_ordering::greater;
        }
    }
    return std::strong_ordering::equal;
}

std::string format_word(const Word& w) {
    std::string out;
    if (w.sigma() <= 9) {
        out.reserve(w.size());
        for (Symbol s : w) {
            out.push_back(static_cast<char>('0' + s));
        }
        return out;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i != 0) {
            out.push_back(',');
        }
        out += std::to_string(w[i]);
    }
    return out;
}

Word parse_word(std::string_view text, std::size_t sigma) {
    const Alphabet alphabet(sigma);
    std::vector<std::uint64_t> symbols;

    if (sigma <= 9) {
        symbols.reserve(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            const char ch = text[i];
            if (ch < '0' || ch > '9') {
                throw ParseError(i + 1, std::string("unexpected character '") + ch + "'");
            }
            symbols.push_back(static_cast<std::uint64_t>(ch - '0'));
        }
        return make_word(symbols, sigma);
    }

    if (text.empty()) {
        return Word(alphabet);
    }
    constexpr std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / 10 - 1;
    std::uint64_t value = 0;
    bool have_digit = false;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ',') {
            if (!have_digit) {
                throw ParseError(i + 1, "empty symbol");
            }
            symbols.push_back(value);
            value = 0;
            have_digit = false;
            continue;
        }
        const char ch = text[i];
        if (ch < '0' || ch > '9') {
            throw ParseError(i + 1, std::string("unexpected character '") + ch + "'");
        }
        if (value > limit) {
            throw ParseError(i + 1, "symbol value too large");
        }
        value = value * 10 + static_cast<std::uint64_t>(ch - '0');
        have_digit = true;
    }
    return make_word(symbols, sigma);
}

}  // namespace suw
