#pragma once

#include <string>
#include <vector>

#include "hardsq/engine_options.hpp"
#include "hardsq/grid_states.hpp"
#include "hardsq/natural.hpp"
#include "hardsq/real.hpp"

namespace hardsq {

// Best published estimate of the hard square constant, used as a sanity
// point that every valid IVS bracket must contain.
inline constexpr const char* kHardSquareEstimate = "1.5030480824753322";

// count^(1/r), from the base-2 logarithm of the count (exact bit length plus
// a Real::kPrecisionBits mantissa window), divided by r and exponentiated.
// Requires count >= 1 and r >= 1.
Real nth_root(const Natural& count, unsigned long r);

// Finite-grid bracket for the growth constant of the chosen mode:
//   count^(1/((m+1)(n+1))) <= constant <= count^(1/(mn)).
struct GrowthBracket {
  Mode mode;
  unsigned m;
  unsigned n;
  Natural count;
  Real lower;
  Real upper;
};

// Exact count of the mode: sigma for IVS, beta for BIVS. The transfer runs
// along the shorter side, so caps apply to min(m, n).
Natural grid_count(Mode mode, unsigned m, unsigned n, const EngineOptions& options = {});

GrowthBracket bracket(Mode mode, unsigned m, unsigned n, const EngineOptions& options = {});

// Which dimension a Fekete split cuts.
enum class SplitAxis { Rows, Cols };

// a(first+second) <= a(first) * a(second) <= a(first+second+1) along the
// split axis, with the other dimension held at `fixed`. Rows splits m (the
// bar length), Cols splits n.
struct FeketeWitness {
  Mode mode;
  SplitAxis axis;
  unsigned first;
  unsigned second;
  unsigned fixed;
  Natural joined;    // a at first + second
  Natural product;   // a at first times a at second
  Natural padded;    // a at first + second + 1

  std::string describe() const;
};

// Throws InternalInconsistency if either inequality fails.
FeketeWitness fekete_sandwich(Mode mode, SplitAxis axis, unsigned first, unsigned second, unsigned fixed,
                              const EngineOptions& options = {});

struct TableRow {
  unsigned n;
  Natural sigma;
  Real root_n2;    // sigma^(1/n^2)
  Real root_n1sq;  // sigma^(1/(n+1)^2)
};

// sigma(G_{n x n}) and its two roots for n = 1..max_n.
std::vector<TableRow> table_one(unsigned max_n, const EngineOptions& options = {});

}  // namespace hardsq
