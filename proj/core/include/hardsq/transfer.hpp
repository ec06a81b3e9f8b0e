#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "hardsq/grid_states.hpp"
#include "hardsq/natural.hpp"
#include "hardsq/parallel.hpp"
#include "hardsq/poly.hpp"

namespace hardsq {

// Coefficient semirings the transfer engine runs over. Natural is the
// all-variables-equal-one specialization, so tile weights are dropped.
template <class V>
struct TransferValue;

template <>
struct TransferValue<Natural> {
  static Natural one() { return Natural(1); }
  static void weigh(Natural&, Weight) {}
};

template <>
struct TransferValue<UniPoly> {
  static UniPoly one() { return UniPoly::constant(Natural(1)); }
  static void weigh(UniPoly& p, Weight w) {
    if (w.white != 0) p.shift(w.white);
  }
};

template <>
struct TransferValue<BiPoly> {
  static BiPoly one() { return BiPoly::constant(Natural(1)); }
  static void weigh(BiPoly& p, Weight w) {
    if (w.white != 0 || w.black != 0) p.shift({w.white, w.black});
  }
};

// Which entry of the n-th (resp. (n+1)-th) matrix power yields the
// generating function.
enum class GenfuncForm { ColumnSum, CornerEntry };

namespace detail {

struct TileRules {
  Mode mode;
  unsigned base;
  unsigned count;
  std::array<Tile, 7> tile{};
  // allowed[t] lists the tiles that may sit immediately left of tile t.
  std::array<std::array<std::uint8_t, 7>, 7> allowed{};
  std::array<unsigned, 7> allowed_count{};

  explicit TileRules(Mode m) : mode(m), base(state_base(m)), count(tile_count(m)) {
    auto set = tiles(m);
    for (unsigned t = 0; t < count; ++t) tile[t] = set[t];
    for (unsigned t = 0; t < count; ++t) {
      for (unsigned prev = 0; prev < count; ++prev) {
        if (horizontally_compatible(m, tile[prev], tile[t])) allowed[t][allowed_count[t]++] = static_cast<std::uint8_t>(prev);
      }
    }
  }
};

}  // namespace detail

// Computes out = (sum of the bar state matrices of length m) * column
// without materializing the matrix. The bar is assembled one tile at a time
// from the left, exactly as the bar-matrix recursion prepends one tile per
// step: after placing k tiles the working vector is indexed by the bottom
// digits of columns 0..k-1, the (not yet consumed) top digits of columns
// k..m-1, and the last tile placed. Each step is a gather, so every output
// entry is computed by one thread in a fixed order.
template <class V>
std::vector<V> apply_bar_transfer(Mode mode, unsigned m, std::span<const V> column, unsigned threads = 1) {
  const detail::TileRules rules(mode);
  const std::uint64_t states = state_count(mode, m);
  if (column.size() != states) throw std::invalid_argument("transfer input has wrong length");
  const unsigned tc = rules.count;

  std::vector<V> current(states * tc);
  std::vector<V> next(states * tc);
  std::uint64_t place = 1;
  for (unsigned k = 0; k < m; ++k, place *= rules.base) {
    parallel_for(states, threads, [&](std::uint64_t begin, std::uint64_t end) {
      for (std::uint64_t idx = begin; idx < end; ++idx) {
        const unsigned digit = static_cast<unsigned>((idx / place) % rules.base);
        for (unsigned t = 0; t < tc; ++t) {
          V& slot = next[idx * tc + t];
          slot.set_zero();
          const Tile& tl = rules.tile[t];
          if (tl.bottom != digit) continue;
          const std::uint64_t src = idx - digit * place + tl.top * place;
          if (k == 0) {
            slot += column[src];
          } else {
            for (unsigned a = 0; a < rules.allowed_count[t]; ++a) slot += current[src * tc + rules.allowed[t][a]];
          }
          TransferValue<V>::weigh(slot, tl.weight);
        }
      }
    });
    std::swap(current, next);
  }

  std::vector<V> out(states);
  parallel_for(states, threads, [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      for (unsigned t = 0; t < tc; ++t) out[idx] += current[idx * tc + t];
    }
  });
  return out;
}

// Iterates the transfer from the unit vector at the trivial state and reads
// either the sum of the n-th column vector or the trivial entry of the
// (n+1)-th.
template <class V>
V transfer_generating_value(Mode mode, unsigned m, unsigned n, GenfuncForm form, unsigned threads) {
  std::vector<V> v(state_count(mode, m));
  v[0] = TransferValue<V>::one();
  const unsigned steps = form == GenfuncForm::ColumnSum ? n : n + 1;
  for (unsigned s = 0; s < steps; ++s) v = apply_bar_transfer<V>(mode, m, v, threads);
  if (form == GenfuncForm::CornerEntry) return v[0];
  V sum;
  for (const auto& x : v) sum += x;
  return sum;
}

}  // namespace hardsq
