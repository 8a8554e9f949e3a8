#include "suw/bigcount.hpp"

#include <limits>
#include <stdexcept>

#include "suw/errors.hpp"

namespace suw {

static_assert(sizeof(unsigned long) == sizeof(std::uint64_t),
              "BigCount assumes an LP64 target");

BigCount::BigCount(std::uint64_t v) : value_(static_cast<unsigned long>(v)) {}

BigCount BigCount::from_decimal(std::string_view text) {
    if (text.empty()) {
        throw ParseError(0, "empty number");
    }
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') {
            throw ParseError(i + 1, std::string("expected decimal digit, found '") + text[i] + "'");
        }
    }
    return BigCount(mpz_class(std::string(text), 10));
}

BigCount BigCount::pow(std::uint64_t base, std::uint64_t exponent) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exponent));
    return BigCount(std::move(r));
}

std::string BigCount::to_string() const { return value_.get_str(10); }

bool BigCount::fits_u64() const { return value_.fits_ulong_p() != 0; }

std::uint64_t BigCount::to_u64() const {
    if (!fits_u64()) {
        throw std::overflow_error("BigCount does not fit in 64 bits: " + to_string());
    }
    return value_.get_ui();
}

std::size_t BigCount::bit_length() const {
    return is_zero() ? 0 : mpz_sizeinbase(value_.get_mpz_t(), 2);
}

BigCount& BigCount::operator+=(const BigCount& rhs) {
    value_ += rhs.value_;
    return *this;
}

BigCount& BigCount::operator*=(const BigCount& rhs) {
    value_ *= rhs.value_;
    return *this;
}

BigCount& BigCount::operator*=(std::uint64_t rhs) {
    value_ *= static_cast<unsigned long>(rhs);
    return *this;
}

BigCount& BigCount::operator-=(const BigCount& rhs) {
    if (cmp(value_, rhs.value_) < 0) {
        throw std::domain_error("BigCount subtraction would go negative");
    }
    value_ -= rhs.value_;
    return *this;
}

void BigCount::add_product(const BigCount& a, std::uint64_t b) {
    mpz_addmul_ui(value_.get_mpz_t(), a.value_.get_mpz_t(), static_cast<unsigned long>(b));
}

}  // namespace suw
