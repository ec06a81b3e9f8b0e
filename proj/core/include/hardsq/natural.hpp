#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hardsq {

// Arbitrary-precision nonnegative integer. The semiring operations never
// subtract, so a negative value can only enter through from_decimal, which
// rejects it.
class Natural {
 public:
  Natural() = default;
  Natural(std::uint64_t value);  // NOLINT(google-explicit-constructor)

  static Natural from_decimal(std::string_view text);

  Natural& operator+=(const Natural& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  Natural& operator*=(const Natural& rhs) {
    value_ *= rhs.value_;
    return *this;
  }
  friend Natural operator+(Natural lhs, const Natural& rhs) { return lhs += rhs; }
  friend Natural operator*(Natural lhs, const Natural& rhs) { return lhs *= rhs; }

  friend bool operator==(const Natural& a, const Natural& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  bool is_zero() const { return sgn(value_) == 0; }
  void set_zero() { value_ = 0u; }

  // Number of significant bits; 0 for zero.
  std::size_t bit_length() const;
  std::string to_string() const { return value_.get_str(); }

  Natural pow(unsigned long exponent) const;

  const mpz_class& mpz() const { return value_; }

 private:
  explicit Natural(mpz_class v) : value_(std::move(v)) {}
  mpz_class value_;
};

inline std::string to_string(const Natural& n) { return n.to_string(); }

}  // namespace hardsq
