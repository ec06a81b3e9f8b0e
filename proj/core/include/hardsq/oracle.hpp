#pragma once

#include <cstdint>

#include "hardsq/grid_states.hpp"
#include "hardsq/poly.hpp"

namespace hardsq::oracle {

// Brute-force ground truth, independent of the transfer engines. Each guard
// is a hard error; the oracle never returns a partial answer.
constexpr unsigned kMaxIvsArea = 24;   // 2^(mn) vertex subsets
constexpr unsigned kMaxBivsArea = 15;  // 3^(mn) colourings
constexpr std::uint64_t kMaxMosaics = 100'000'000;

// m x n grid graph: m columns, n rows, 4-neighbour adjacency.
struct GridGraph {
  unsigned m;
  unsigned n;

  std::uint64_t vertex_count() const { return std::uint64_t{m} * n; }
  std::uint64_t edge_count() const { return std::uint64_t{m} * (n - 1) + std::uint64_t{n} * (m - 1); }
};

// P_{m x n}(z) by enumerating every vertex subset.
UniPoly brute_ivs(unsigned m, unsigned n, unsigned threads = 1);

// Q_{m x n}(x, y) by enumerating every {absent, white, black} assignment.
BiPoly brute_bivs(unsigned m, unsigned n);

// Weighted count of IVS resp. BIVS m x n mosaics, by enumerating tile
// assignments. IVS results are returned as a BiPoly with y-degree 0.
BiPoly brute_mosaics(Mode mode, unsigned m, unsigned n);

}  // namespace hardsq::oracle
