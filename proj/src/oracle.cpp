#include "suw/oracle.hpp"

#include <algorithm>
#include <span>
#include <string>

#include "suw/errors.hpp"

namespace suw::oracle {

namespace {

// sigma^e, or limit + 1 once it exceeds limit.
std::uint64_t capped_power(std::size_t sigma, std::size_t e, std::uint64_t limit) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < e; ++i) {
        v *= sigma;
        if (v > limit) {
            return limit + 1;
        }
    }
    return v;
}

void guard_words(std::size_t n, std::size_t sigma) {
    if (capped_power(sigma, n, kMaxWords) > kMaxWords) {
        throw GuardExceeded("brute force over " + std::to_string(sigma) + "^" + std::to_string(n) +
                            " words exceeds " + std::to_string(kMaxWords));
    }
}

bool subsequence(std::span<const Symbol> u, std::span<const Symbol> w) {
    std::size_t j = 0;
    for (std::size_t i = 0; i < w.size() && j < u.size(); ++i) {
        if (w[i] == u[j]) {
            ++j;
        }
    }
    return j == u.size();
}

// Advances `v` to its lexicographic successor in Sigma^|v|; false on wrap.
bool increment(std::vector<Symbol>& v, std::size_t sigma) {
    for (std::size_t i = v.size(); i-- > 0;) {
        if (v[i] < sigma) {
            ++v[i];
            return true;
        }
        v[i] = 1;
    }
    return false;
}

bool universal(std::span<const Symbol> w, std::size_t k, std::size_t sigma) {
    std::vector<Symbol> pattern(k, 1);
    do {
        if (!subsequence(pattern, w)) {
            return false;
        }
    } while (increment(pattern, sigma));
    return true;
}

}  // namespace

bool is_subsequence(const Word& u, const Word& w) { return subsequence(u.symbols(), w.symbols()); }

bool brute_is_k_universal(const Word& w, std::size_t k) {
    if (capped_power(w.sigma(), k, kMaxPatterns) > kMaxPatterns) {
        throw GuardExceeded("checking " + std::to_string(w.sigma()) + "^" + std::to_string(k) +
                            " patterns exceeds " + std::to_string(kMaxPatterns));
    }
    // Cheap necessary condition; no word shorter than k can contain 1^k.
    if (w.size() < k) {
        return false;
    }
    return universal(w.symbols(), k, w.sigma());
}

std::size_t brute_universality_index(const Word& w) {
    std::size_t k = 0;
    while (brute_is_k_universal(w, k + 1)) {
        ++k;
    }
    return k;
}

std::vector<Word> all_words(std::size_t n, std::size_t sigma) {
    guard_words(n, sigma);
    std::vector<Word> out;
    std::vector<Symbol> v(n, 1);
    do {
        out.push_back(make_word(std::span<const Symbol>(v), sigma));
    } while (increment(v, sigma));
    return out;
}

std::vector<Word> brute_enumerate(std::size_t n, std::size_t k, std::size_t sigma) {
    guard_words(n, sigma);
    if (capped_power(sigma, k, kMaxPatterns) > kMaxPatterns) {
        throw GuardExceeded("checking " + std::to_string(sigma) + "^" + std::to_string(k) +
                            " patterns exceeds " + std::to_string(kMaxPatterns));
    }
    std::vector<Word> out;
    std::vector<Symbol> v(n, 1);
    do {
        if (n >= k && universal(v, k, sigma)) {
            out.push_back(make_word(std::span<const Symbol>(v), sigma));
        }
    } while (increment(v, sigma));
    return out;
}

std::size_t insertion_index(const std::vector<Word>& sorted_members, const Word& w) {
    const auto it = std::lower_bound(
        sorted_members.begin(), sorted_members.end(), w,
        [](const Word& a, const Word& b) { return std::lexicographical_compare(
                                              a.begin(), a.end(), b.begin(), b.end()); });
    return static_cast<std::size_t>(it - sorted_members.begin());
}

BigCount brute_rank(const Word& w, std::size_t k) {
    const std::vector<Word> members = brute_enumerate(w.size(), k, w.sigma());
    return BigCount{insertion_index(members, w)};
}

std::uint64_t brute_count_index_zero(std::size_t n, std::size_t sigma) {
    guard_words(n, sigma);
    std::uint64_t count = 0;
    std::vector<Symbol> v(n, 1);
    std::vector<bool> present(sigma + 1);
    do {
        std::fill(present.begin(), present.end(), false);
        for (Symbol s : v) {
            present[s] = true;
        }
        if (std::count(present.begin() + 1, present.end(), true) < static_cast<long>(sigma)) {
            ++count;
        }
    } while (increment(v, sigma));
    return count;
}

std::uint64_t brute_count_arches(std::size_t n, std::size_t sigma) {
    guard_words(n, sigma);
    if (n == 0) {
        return 0;
    }
    std::uint64_t count = 0;
    std::vector<Symbol> v(n, 1);
    std::vector<bool> present(sigma + 1);
    do {
        std::fill(present.begin(), present.end(), false);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            present[v[i]] = true;
        }
        const bool last_unique = !present[v[n - 1]];
        present[v[n - 1]] = true;
        if (last_unique &&
            std::count(present.begin() + 1, present.end(), true) == static_cast<long>(sigma)) {
            ++count;
        }
    } while (increment(v, sigma));
    return count;
}

}  // namespace suw::oracle
