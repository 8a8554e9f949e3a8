#include "suw/closed_forms.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace suw {

namespace {

// Factorials and Pascal rows, extended monotonically under a lock. Callers
// get copies, so growth never invalidates anything they hold.
class CombinatoricsCache {
public:
    BigCount factorial(std::size_t k) {
        std::lock_guard lock(mutex_);
        while (factorials_.size() <= k) {
            const std::size_t i = factorials_.size();
            factorials_.push_back(factorials_.back() * static_cast<std::uint64_t>(i));
        }
        return factorials_[k];
    }

    BigCount binomial(std::size_t n, std::size_t r) {
        if (r > n) {
            return BigCount{0};
        }
        std::lock_guard lock(mutex_);
        while (rows_.size() <= n) {
            const std::vector<BigCount>& prev = rows_.back();
            std::vector<BigCount> row(prev.size() + 1, BigCount{1});
            for (std::size_t j = 1; j < prev.size(); ++j) {
                row[j] = prev[j - 1] + prev[j];
            }
            rows_.push_back(std::move(row));
        }
        return rows_[n][r];
    }

private:
    std::mutex mutex_;
    std::vector<BigCount> factorials_{BigCount{1}};
    std::vector<std::vector<BigCount>> rows_{{BigCount{1}}};
};

CombinatoricsCache& cache() {
    static CombinatoricsCache instance;
    return instance;
}

void require_sigma(std::size_t sigma) {
    if (sigma == 0) {
        throw std::invalid_argument("alphabet size must be at least 1");
    }
}

}  // namespace

BigCount factorial(std::size_t k) { return cache().factorial(k); }

BigCount binomial(std::size_t n, std::size_t r) { return cache().binomial(n, r); }

BigCount count_index_zero(std::size_t n, std::size_t sigma) {
    require_sigma(sigma);
    // Positive (odd i) and negative (even i) terms are summed apart so the
    // running value never goes below zero.
    BigCount plus;
    BigCount minus;
    for (std::size_t i = 1; i <= sigma; ++i) {
        BigCount term = binomial(sigma, i) * BigCount::pow(sigma - i, n);
        (i % 2 == 1 ? plus : minus) += term;
    }
    return plus - minus;
}

BigCount count_one_universal(std::size_t n, std::size_t sigma) {
    return BigCount::pow(sigma, n) - count_index_zero(n, sigma);
}

BigCount count_arches(std::size_t n, std::size_t sigma) {
    require_sigma(sigma);
    if (n == 0) {
        throw std::invalid_argument("arch length must be at least 1");
    }
    // sigma (sigma-1)^(n-1) - sum_{i=2..sigma} (-1)^i i C(sigma,i) (sigma-i)^(n-1)
    BigCount plus = BigCount::pow(sigma - 1, n - 1) * static_cast<std::uint64_t>(sigma);
    BigCount minus;
    for (std::size_t i = 2; i <= sigma; ++i) {
        BigCount term = binomial(sigma, i) * BigCount::pow(sigma - i, n - 1);
        term *= static_cast<std::uint64_t>(i);
        (i % 2 == 0 ? minus : plus) += term;
    }
    return plus - minus;
}

}  // namespace suw
