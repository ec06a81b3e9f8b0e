#pragma once

#include <stdexcept>
#include <string>

namespace hardsq {

// Raised when a request exceeds a configured state-space or enumeration cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when two routes that must agree do not (an implementation bug).
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Largest bar length accepted by each entry point. Memory grows like
// (number of states) x (coefficient size), so these are guards, not limits
// of the method.
struct Caps {
  unsigned ivs_genfunc = 14;
  unsigned ivs_count = 24;
  unsigned ivs_matrix = 10;
  unsigned bivs_genfunc = 9;
  unsigned bivs_count = 13;
  unsigned bivs_matrix = 6;
};

struct EngineOptions {
  unsigned threads = 1;
  Caps caps{};
};

void require_positive_dims(unsigned m, unsigned n);
void require_within_cap(unsigned m, unsigned cap, const char* what);

}  // namespace hardsq
