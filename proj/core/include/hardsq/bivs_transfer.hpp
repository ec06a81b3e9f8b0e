#pragma once

#include <array>
#include <cstdint>

#include "hardsq/engine_options.hpp"
#include "hardsq/natural.hpp"
#include "hardsq/poly.hpp"
#include "hardsq/state_matrix.hpp"
#include "hardsq/transfer.hpp"

namespace hardsq {

using BivsMatrix = StateMatrix<BiPoly>;

// Bar state matrices A..G for BIVS bar mosaics of length p, one per right
// letter a..g. members[0] is A, members[6] is G.
struct BivsMatrixFamily {
  unsigned p = 0;
  std::array<BivsMatrix, 7> members;

  const BivsMatrix& operator[](char letter) const { return members.at(static_cast<std::size_t>(letter - 'a')); }
  BivsMatrix sum() const;
};

// Kronecker recursion X_{k+1} = X_1 (x) (sum of the members allowed to the
// left of letter x), from the seven 3x3 seed matrices.
BivsMatrixFamily bivs_bar_family(unsigned p, const Caps& caps = {});

struct BivsTheoremMatrix {
  unsigned m = 0;
  BivsMatrix a;
};
// Folded 3x3 block recursion from A_0 = ... = G_0 = [1].
BivsTheoremMatrix bivs_theorem_matrix(unsigned m, const Caps& caps = {});

// x^(#1 digits of state i) y^(#2 digits of state i) when states i and j are
// row compatible, else 0. Indices are 1-based.
BiPoly bivs_closed_form_entry(std::uint64_t i, std::uint64_t j, unsigned m);
BivsMatrix bivs_closed_form_matrix(unsigned m, const Caps& caps = {});

// Q_{m x n}(x, y).
BiPoly bivs_genfunc(unsigned m, unsigned n, GenfuncForm form = GenfuncForm::ColumnSum,
                    const EngineOptions& options = {});

// beta(G_{m x n}) = Q_{m x n}(1, 1).
Natural bivs_count(unsigned m, unsigned n, const EngineOptions& options = {});

}  // namespace hardsq
