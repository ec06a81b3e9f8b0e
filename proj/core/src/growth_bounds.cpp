#include "hardsq/growth_bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "hardsq/bivs_transfer.hpp"
#include "hardsq/ivs_transfer.hpp"

namespace hardsq {

Real nth_root(const Natural& count, unsigned long r) {
  if (count.is_zero()) throw std::invalid_argument("nth_root needs count >= 1");
  if (r == 0) throw std::invalid_argument("nth_root needs r >= 1");
  Real out;
  // Rounding the count to the working precision keeps the exact bit length
  // and the leading mantissa bits; the logarithm is taken from that.
  mpfr_set_z(out.raw(), count.mpz().get_mpz_t(), MPFR_RNDN);
  mpfr_log2(out.raw(), out.raw(), MPFR_RNDN);
  mpfr_div_ui(out.raw(), out.raw(), r, MPFR_RNDN);
  mpfr_exp2(out.raw(), out.raw(), MPFR_RNDN);
  return out;
}

Natural grid_count(Mode mode, unsigned m, unsigned n, const EngineOptions& options) {
  // G_{m x n} and G_{n x m} are isomorphic; run the transfer along the
  // shorter side.
  const unsigned bar = std::min(m, n);
  const unsigned length = std::max(m, n);
  return mode == Mode::Ivs ? ivs_count(bar, length, options) : bivs_count(bar, length, options);
}

GrowthBracket bracket(Mode mode, unsigned m, unsigned n, const EngineOptions& options) {
  Natural count = grid_count(mode, m, n, options);
  Real lower = nth_root(count, static_cast<unsigned long>(m + 1) * (n + 1));
  Real upper = nth_root(count, static_cast<unsigned long>(m) * n);
  if (!(lower <= upper)) throw InternalInconsistency("bracket lower end exceeds upper end");
  if (mode == Mode::Ivs && !(upper <= Real(3.0))) throw InternalInconsistency("IVS upper bound exceeds 3");
  return {mode, m, n, std::move(count), std::move(lower), std::move(upper)};
}

std::string FeketeWitness::describe() const {
  const char* dim = axis == SplitAxis::Rows ? "m" : "n";
  const char* other = axis == SplitAxis::Rows ? "n" : "m";
  const char* name = mode == Mode::Ivs ? "sigma" : "beta";
  return std::string(to_string(mode)) + " split " + dim + "=" + std::to_string(first) + "+" +
         std::to_string(second) + " " + other + "=" + std::to_string(fixed) + ": " + name + "(" +
         std::to_string(first + second) + ")=" + joined.to_string() + " <= " + product.to_string() +
         " <= " + name + "(" + std::to_string(first + second + 1) + ")=" + padded.to_string();
}

FeketeWitness fekete_sandwich(Mode mode, SplitAxis axis, unsigned first, unsigned second, unsigned fixed,
                              const EngineOptions& options) {
  if (first == 0 || second == 0 || fixed == 0) throw std::invalid_argument("split dimensions must be positive");
  auto count = [&](unsigned along) {
    return axis == SplitAxis::Rows ? grid_count(mode, along, fixed, options)
                                   : grid_count(mode, fixed, along, options);
  };
  FeketeWitness w{mode, axis, first, second, fixed, count(first + second), count(first) * count(second),
                  count(first + second + 1)};
  if (!(w.joined <= w.product) || !(w.product <= w.padded)) {
    throw InternalInconsistency("Fekete sandwich violated: " + w.describe());
  }
  return w;
}

std::vector<TableRow> table_one(unsigned max_n, const EngineOptions& options) {
  if (max_n == 0) throw std::invalid_argument("table needs max_n >= 1");
  require_within_cap(max_n, options.caps.ivs_count, "table");
  std::vector<TableRow> rows;
  for (unsigned n = 1; n <= max_n; ++n) {
    Natural sigma = ivs_count(n, n, options);
    Real root_n2 = nth_root(sigma, static_cast<unsigned long>(n) * n);
    Real root_n1sq = nth_root(sigma, static_cast<unsigned long>(n + 1) * (n + 1));
    rows.push_back({n, std::move(sigma), std::move(root_n2), std::move(root_n1sq)});
  }
  return rows;
}

}  // namespace hardsq
