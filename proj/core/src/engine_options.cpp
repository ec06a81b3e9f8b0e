#include "hardsq/engine_options.hpp"

#include <cstdlib>
#include <string_view>

#include "hardsq/parallel.hpp"

namespace hardsq {

void require_positive_dims(unsigned m, unsigned n) {
  if (m == 0 || n == 0) throw std::invalid_argument("grid dimensions must be positive integers");
}

void require_within_cap(unsigned m, unsigned cap, const char* what) {
  if (m > cap) {
    throw CapExceeded(std::string(what) + ": bar length " + std::to_string(m) + " exceeds cap " +
                      std::to_string(cap));
  }
}

unsigned threads_from_environment() {
  const char* raw = std::getenv("HARDSQ_THREADS");
  if (raw == nullptr) return 1;
  const std::string_view text(raw);
  if (text == "auto") return std::max(1u, std::thread::hardware_concurrency());
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || value < 1) return 1;
  return static_cast<unsigned>(value);
}

}  // namespace hardsq
