#pragma once

#include <cstdint>

#include "hardsq/engine_options.hpp"
#include "hardsq/natural.hpp"
#include "hardsq/poly.hpp"
#include "hardsq/state_matrix.hpp"
#include "hardsq/transfer.hpp"

namespace hardsq {

using IvsMatrix = StateMatrix<UniPoly>;

// Bar state matrices for IVS bar mosaics of length p: entry (i, j) of a, b, c
// is the state polynomial for right letter a, b, c with bottom state i and top
// state j.
struct IvsMatrixTriple {
  unsigned p = 0;
  IvsMatrix a;
  IvsMatrix b;
  IvsMatrix c;

  IvsMatrix sum() const { return a + b + c; }
};

enum class BarSeed { One, Zero };

// Bar-matrix recursion. BarSeed::One starts from the 2x2 seed matrices,
// BarSeed::Zero from A_0 = [1], B_0 = C_0 = [0]; both give the same triple
// for p >= 1. p = 0 is accepted only with BarSeed::Zero.
IvsMatrixTriple ivs_bar_triple(unsigned p, BarSeed seed = BarSeed::One, const Caps& caps = {});

// Single transfer matrix built by the folded recursion
//   A' = [[A, B], [zC, 0]], B' = [[A, 0], [zC, 0]], C' = [[A, B], [0, 0]]
// from A_0 = B_0 = C_0 = [1].
struct IvsTheoremMatrix {
  unsigned m = 0;
  IvsMatrix a;
};
IvsTheoremMatrix ivs_theorem_matrix(unsigned m, const Caps& caps = {});

// z^(popcount of state i) when states i and j are row compatible, else 0.
// Indices are 1-based.
UniPoly ivs_closed_form_entry(std::uint64_t i, std::uint64_t j, unsigned m);
IvsMatrix ivs_closed_form_matrix(unsigned m, const Caps& caps = {});

// P_{m x n}(z).
UniPoly ivs_genfunc(unsigned m, unsigned n, GenfuncForm form = GenfuncForm::ColumnSum,
                    const EngineOptions& options = {});
inline UniPoly ivs_genfunc_alt(unsigned m, unsigned n, const EngineOptions& options = {}) {
  return ivs_genfunc(m, n, GenfuncForm::CornerEntry, options);
}

// sigma(G_{m x n}) = P_{m x n}(1).
Natural ivs_count(unsigned m, unsigned n, const EngineOptions& options = {});

}  // namespace hardsq
