#include "suw/universal_dp.hpp"

#include <stdexcept>
#include <string>

#include "suw/closed_forms.hpp"
#include "suw/errors.hpp"

namespace suw {

const BigCount& SuffixCountTable::at(std::size_t q, std::size_t m, std::size_t c,
                                     LookupCounter* counter) const {
    if (q > sigma_ || m > n_ || c > k_) {
        throw IndexOutOfRange("suffix state (" + std::to_string(q) + ", " + std::to_string(m) +
                              ", " + std::to_string(c) + ") outside table for n=" +
                              std::to_string(n_) + " k=" + std::to_string(k_) +
                              " sigma=" + std::to_string(sigma_));
    }
    if (counter != nullptr) {
        ++counter->lookups;
    }
    return entries_[index(q, m, c)];
}

const BigCount& SuffixCountTable::power(std::size_t m, LookupCounter* counter) const {
    if (m > n_) {
        throw IndexOutOfRange("power " + std::to_string(m) + " beyond n=" + std::to_string(n_));
    }
    if (counter != nullptr) {
        ++counter->lookups;
    }
    return powers_[m];
}

BigCount SuffixCountTable::completions(std::size_t q, std::size_t remaining,
                                       std::size_t arches_left, LookupCounter* counter) const {
    if (arches_left == 0) {
        return power(remaining, counter);
    }
    if (q > sigma_) {
        throw IndexOutOfRange("q=" + std::to_string(q) + " exceeds sigma=" + std::to_string(sigma_));
    }
    const std::size_t forced = (sigma_ - q) + sigma_ * (arches_left - 1);
    if (remaining < forced) {
        return BigCount{0};
    }
    return at(q, remaining - forced, arches_left, counter);
}

BigCount SuffixCountTable::universal_count() const {
    if (k_ == 0) {
        return powers_[n_];
    }
    return completions(0, n_, k_);
}

void SuffixCountTable::fill(std::size_t q, std::size_t m, std::size_t c,
                            const std::vector<std::vector<BigCount>>& base) {
    BigCount& out = entries_[index(q, m, c)];
    if (c == 0) {
        out = powers_[m];
        construction_lookups_ += 1;
    } else if (m == 0) {
        out = base[q][c];
        construction_lookups_ += 1;
    } else if (q == sigma_) {
        // Arch just completed: the next symbol opens arch c-1 without
        // spending a free symbol. At c = 1 this is the unconstrained tail.
        out = entries_[index(0, m, c - 1)];
        construction_lookups_ += 1;
    } else {
        // Repeat one of the q seen symbols (spends a free symbol), or take
        // one of the sigma - q new ones.
        out = BigCount{0};
        out.add_product(entries_[index(q, m - 1, c)], q);
        out.add_product(entries_[index(q + 1, m, c)], sigma_ - q);
        construction_lookups_ += 2;
    }
}

SuffixCountTable build_table(std::size_t n, std::size_t k, std::size_t sigma, FillOrder order) {
    if (sigma == 0) {
        throw std::invalid_argument("alphabet size must be at least 1");
    }
    SuffixCountTable t;
    t.n_ = n;
    t.k_ = k;
    t.sigma_ = sigma;
    t.entries_.resize((sigma + 1) * (n + 1) * (k + 1));

    t.powers_.reserve(n + 1);
    t.powers_.emplace_back(1);
    for (std::size_t m = 1; m <= n; ++m) {
        t.powers_.push_back(t.powers_.back() * static_cast<std::uint64_t>(sigma));
    }

    // base[q][c] = (sigma - q)! (sigma!)^(c - 1) for c >= 1.
    std::vector<std::vector<BigCount>> base(sigma + 1, std::vector<BigCount>(k + 1));
    const BigCount sigma_factorial = factorial(sigma);
    for (std::size_t q = 0; q <= sigma; ++q) {
        BigCount value = factorial(sigma - q);
        for (std::size_t c = 1; c <= k; ++c) {
            base[q][c] = value;
            value *= sigma_factorial;
        }
    }

    auto fill_column = [&](std::size_t m, std::size_t c) {
        for (std::size_t q = sigma + 1; q-- > 0;) {
            t.fill(q, m, c, base);
        }
    };
    if (order == FillOrder::ArchesOuter) {
        for (std::size_t c = 0; c <= k; ++c) {
            for (std::size_t m = 0; m <= n; ++m) {
                fill_column(m, c);
            }
        }
    } else {
        for (std::size_t m = 0; m <= n; ++m) {
            for (std::size_t c = 0; c <= k; ++c) {
                fill_column(m, c);
            }
        }
    }
    return t;
}

BigCount count_suffixes(const SuffixCountTable& table, std::size_t q, std::size_t m,
                        std::size_t c) {
    return table.at(q, m, c);
}

BigCount count_universal(std::size_t n, std::size_t k, std::size_t sigma) {
    if (sigma == 0) {
        throw std::invalid_argument("alphabet size must be at least 1");
    }
    if (k == 0) {
        return BigCount::pow(sigma, n);
    }
    if (n < k * sigma) {
        return BigCount{0};
    }
    return build_table(n, k, sigma).universal_count();
}

}  // namespace suw
