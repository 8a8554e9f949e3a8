#pragma once

#include <cstddef>

#include "suw/bigcount.hpp"

namespace suw {

/// k! for k >= 0, from a process-wide table grown on demand.
BigCount factorial(std::size_t k);

/// Binomial coefficient C(n, r); zero when r > n.
BigCount binomial(std::size_t n, std::size_t r);

/// Number of n-length words over {1..sigma} with universality index 0, i.e.
/// missing at least one symbol. Inclusion-exclusion over the missing
/// symbols, with 0^0 = 1.
BigCount count_index_zero(std::size_t n, std::size_t sigma);

/// Number of n-length words containing every symbol: sigma^n - count_index_zero.
BigCount count_one_universal(std::size_t n, std::size_t sigma);

/// Number of n-length arches (n >= 1): words containing every symbol whose
/// last symbol occurs only at the last position.
BigCount count_arches(std::size_t n, std::size_t sigma);

}  // namespace suw
