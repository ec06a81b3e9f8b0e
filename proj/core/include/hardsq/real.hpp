#pragma once

#include <string>

#include <mpfr.h>

namespace hardsq {

// Owning wrapper around an MPFR value at a fixed working precision.
class Real {
 public:
  static constexpr mpfr_prec_t kPrecisionBits = 256;

  Real();
  explicit Real(double value);
  static Real from_decimal(const std::string& text);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(Real other) noexcept;
  ~Real();

  // Round-half-to-even at `decimals` places.
  std::string to_fixed(int decimals) const;
  // Digits after the first `decimals` places dropped.
  std::string truncated(int decimals) const;
  double to_double() const;

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.value_, b.value_) != 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

  mpfr_ptr raw() { return value_; }
  mpfr_srcptr raw() const { return value_; }

 private:
  mpfr_t value_;
};

}  // namespace hardsq
