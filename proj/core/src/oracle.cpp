#include "hardsq/oracle.hpp"

#include <bit>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "hardsq/engine_options.hpp"
#include "hardsq/parallel.hpp"

namespace hardsq::oracle {

namespace {

void guard(bool ok, const std::string& what) {
  if (!ok) throw CapExceeded("oracle size guard: " + what);
}

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exponent, std::uint64_t limit) {
  std::uint64_t value = 1;
  for (std::uint64_t k = 0; k < exponent; ++k) {
    value *= base;
    if (value > limit) return limit + 1;
  }
  return value;
}

}  // namespace

UniPoly brute_ivs(unsigned m, unsigned n, unsigned threads) {
  require_positive_dims(m, n);
  const GridGraph g{m, n};
  guard(g.vertex_count() <= kMaxIvsArea, "IVS enumeration needs m*n <= 24");

  // Vertex (column i, row j) is bit j*m + i.
  const auto area = static_cast<unsigned>(g.vertex_count());
  std::uint64_t has_right_neighbour = 0;
  for (unsigned j = 0; j < n; ++j) {
    for (unsigned i = 0; i + 1 < m; ++i) has_right_neighbour |= std::uint64_t{1} << (j * m + i);
  }

  std::vector<std::uint64_t> by_size(area + 1, 0);
  std::mutex merge;
  parallel_for(std::uint64_t{1} << area, threads, [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<std::uint64_t> local(area + 1, 0);
    for (std::uint64_t set = begin; set < end; ++set) {
      if ((set & (set >> 1) & has_right_neighbour) != 0) continue;
      if ((set & (set >> m)) != 0) continue;
      ++local[std::popcount(set)];
    }
    std::lock_guard lock(merge);
    for (unsigned k = 0; k <= area; ++k) by_size[k] += local[k];
  });

  std::vector<UniPoly::Term> terms;
  for (unsigned k = 0; k <= area; ++k) terms.emplace_back(k, Natural(by_size[k]));
  return UniPoly::from_terms(std::move(terms));
}

BiPoly brute_bivs(unsigned m, unsigned n) {
  require_positive_dims(m, n);
  const GridGraph g{m, n};
  guard(g.vertex_count() <= kMaxBivsArea, "BIVS enumeration needs m*n <= 15");

  const auto area = static_cast<unsigned>(g.vertex_count());
  std::vector<std::uint8_t> colour(area, 0);  // 0 absent, 1 white, 2 black
  std::vector<std::vector<std::uint64_t>> count(area + 1, std::vector<std::uint64_t>(area + 1, 0));

  // Base-3 odometer over cells in row-major order, rejecting a prefix as soon
  // as the newest cell repeats the colour of its left or lower neighbour.
  auto clashes = [&](unsigned v) {
    if (colour[v] == 0) return false;
    if (v % m != 0 && colour[v - 1] == colour[v]) return true;
    return v >= m && colour[v - m] == colour[v];
  };
  unsigned whites = 0;
  unsigned blacks = 0;
  auto recurse = [&](auto&& self, unsigned v) -> void {
    if (v == area) {
      ++count[whites][blacks];
      return;
    }
    for (std::uint8_t c = 0; c < 3; ++c) {
      colour[v] = c;
      if (clashes(v)) continue;
      whites += c == 1;
      blacks += c == 2;
      self(self, v + 1);
      whites -= c == 1;
      blacks -= c == 2;
    }
    colour[v] = 0;
  };
  recurse(recurse, 0);

  std::vector<BiPoly::Term> terms;
  for (unsigned c = 0; c <= area; ++c) {
    for (unsigned d = 0; d <= area; ++d) {
      if (count[c][d] != 0) terms.emplace_back(BiExponent{c, d}, Natural(count[c][d]));
    }
  }
  return BiPoly::from_terms(std::move(terms));
}

BiPoly brute_mosaics(Mode mode, unsigned m, unsigned n) {
  require_positive_dims(m, n);
  guard(checked_power(tile_count(mode), std::uint64_t{m} * n, kMaxMosaics) <= kMaxMosaics,
        "mosaic enumeration needs tiles^(m*n) <= 1e8");

  const auto set = tiles(mode);
  Mosaic mosaic(mode, m, n);
  std::vector<BiPoly::Term> found;

  // Cells in row-major order from the bottom-left; each placement is checked
  // against its left and lower neighbours and, on the top row, the boundary.
  auto recurse = [&](auto&& self, unsigned cell) -> void {
    if (cell == m * n) {
      if (!mosaic.is_valid_mosaic()) throw InternalInconsistency("enumerated an invalid mosaic");
      const Weight w = mosaic.weight();
      found.emplace_back(BiExponent{w.white, w.black}, Natural(1));
      return;
    }
    const unsigned col = cell % m;
    const unsigned row = cell / m;
    for (const Tile& t : set) {
      if (col > 0 && !horizontally_compatible(mode, mosaic.at(col - 1, row), t)) continue;
      if (row > 0 && !vertically_compatible(mosaic.at(col, row - 1), t)) continue;
      if (row + 1 == n && t.top != 0) continue;
      mosaic.set(col, row, t.id);
      self(self, cell + 1);
    }
    mosaic.set(col, row, 1);
  };
  recurse(recurse, 0);
  return BiPoly::from_terms(std::move(found));
}

}  // namespace hardsq::oracle
