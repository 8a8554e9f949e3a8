#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace suw {

// Arbitrary-precision non-negative integer. Counts in this library reach
// sigma^n, so every count and rank travels as a BigCount.
class BigCount {
public:
    BigCount() = default;
    BigCount(std::uint64_t v);  // NOLINT(google-explicit-constructor)

    /// Parses a non-empty string of decimal digits. Throws ParseError.
    static BigCount from_decimal(std::string_view text);

    static BigCount pow(std::uint64_t base, std::uint64_t exponent);

    std::string to_string() const;

    bool is_zero() const { return sgn(value_) == 0; }

    /// True when the value fits in std::uint64_t.
    bool fits_u64() const;
    /// Throws std::overflow_error when the value does not fit.
    std::uint64_t to_u64() const;

    /// Bits in the binary representation (0 for zero).
    std::size_t bit_length() const;

    BigCount& operator+=(const BigCount& rhs);
    BigCount& operator*=(const BigCount& rhs);
    BigCount& operator*=(std::uint64_t rhs);
    /// Throws std::domain_error if the result would be negative.
    BigCount& operator-=(const BigCount& rhs);

    /// this += a * b, without a temporary.
    void add_product(const BigCount& a, std::uint64_t b);

    friend BigCount operator+(BigCount lhs, const BigCount& rhs) { return lhs += rhs; }
    friend BigCount operator-(BigCount lhs, const BigCount& rhs) { return lhs -= rhs; }
    friend BigCount operator*(BigCount lhs, const BigCount& rhs) { return lhs *= rhs; }
    friend BigCount operator*(BigCount lhs, std::uint64_t rhs) { return lhs *= rhs; }

    friend bool operator==(const BigCount& a, const BigCount& b) {
        return cmp(a.value_, b.value_) == 0;
    }
    friend std::strong_ordering operator<=>(const BigCount& a, const BigCount& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const BigCount& v) {
        return os << v.to_string();
    }

private:
    explicit BigCount(mpz_class v) : value_(std::move(v)) {}

    mpz_class value_;
};

}  // namespace suw
