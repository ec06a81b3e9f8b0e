#include "hardsq/real.hpp"

#include <memory>
#include <stdexcept>

namespace hardsq {

namespace {

std::string format(mpfr_srcptr value, int decimals, mpfr_rnd_t rounding) {
  if (decimals < 0) throw std::invalid_argument("negative decimal count");
  char* buffer = nullptr;
  const char spec[] = {'%', '.', '*', 'R', rounding == MPFR_RNDZ ? 'Z' : 'N', 'f', '\0'};
  if (mpfr_asprintf(&buffer, spec, decimals, value) < 0) throw std::runtime_error("mpfr_asprintf failed");
  std::unique_ptr<char, decltype(&mpfr_free_str)> owned(buffer, &mpfr_free_str);
  return std::string(owned.get());
}

}  // namespace

Real::Real() {
  mpfr_init2(value_, kPrecisionBits);
  mpfr_set_zero(value_, 1);
}

Real::Real(double value) {
  mpfr_init2(value_, kPrecisionBits);
  mpfr_set_d(value_, value, MPFR_RNDN);
}

Real Real::from_decimal(const std::string& text) {
  Real out;
  if (text.empty() || mpfr_set_str(out.value_, text.c_str(), 10, MPFR_RNDN) != 0) {
    throw std::invalid_argument("not a decimal number: " + text);
  }
  return out;
}

Real::Real(const Real& other) {
  mpfr_init2(value_, kPrecisionBits);
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, kPrecisionBits);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(Real other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

std::string Real::to_fixed(int decimals) const { return format(value_, decimals, MPFR_RNDN); }
std::string Real::truncated(int decimals) const { return format(value_, decimals, MPFR_RNDZ); }
double Real::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

}  // namespace hardsq
