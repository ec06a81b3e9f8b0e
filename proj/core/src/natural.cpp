#include "hardsq/natural.hpp"

#include <stdexcept>

namespace hardsq {

Natural::Natural(std::uint64_t value) {
  // mpz_class has no portable uint64_t constructor on every ABI.
  mpz_import(value_.get_mpz_t(), 1, 1, sizeof(value), 0, 0, &value);
}

Natural Natural::from_decimal(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty natural number literal");
  for (char ch : text) {
    if (ch < '0' || ch > '9') {
      throw std::invalid_argument("not a nonnegative decimal integer: " + std::string(text));
    }
  }
  return Natural(mpz_class(std::string(text), 10));
}

std::size_t Natural::bit_length() const {
  if (is_zero()) return 0;
  return mpz_sizeinbase(value_.get_mpz_t(), 2);
}

Natural Natural::pow(unsigned long exponent) const {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), value_.get_mpz_t(), exponent);
  return Natural(std::move(out));
}

}  // namespace hardsq
