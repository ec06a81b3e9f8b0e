#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hardsq/poly.hpp"

namespace hardsq {

// IVS: independent vertex sets (binary states, tiles T1..T3).
// BIVS: bipartite independent vertex sets (ternary states, tiles T1..T7).
enum class Mode { Ivs, Bivs };

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);

// Number of digit values a bar state position can take: 2 or 3.
constexpr unsigned state_base(Mode mode) { return mode == Mode::Ivs ? 2 : 3; }
constexpr unsigned tile_count(Mode mode) { return mode == Mode::Ivs ? 3 : 7; }

// base^length, the number of bar states of the given length.
std::uint64_t state_count(Mode mode, unsigned length);

// A bar state. Digit k belongs to the (k+1)-th grid column counted from the
// left and has place value base^k, so the rightmost column is the most
// significant digit. The 1-based index is one more than the numeral's value;
// index 1 is the trivial all-zero state.
class BarState {
 public:
  BarState(Mode mode, std::vector<std::uint8_t> digits);

  static BarState from_index(Mode mode, unsigned length, std::uint64_t index);
  static BarState trivial(Mode mode, unsigned length);
  // Parses the boundary reading order: rightmost column first ("1010").
  static BarState parse(Mode mode, std::string_view reading);

  Mode mode() const { return mode_; }
  unsigned length() const { return static_cast<unsigned>(digits_.size()); }
  std::uint8_t digit(unsigned column) const { return digits_.at(column); }
  std::span<const std::uint8_t> digits() const { return digits_; }

  std::uint64_t index() const;
  bool is_trivial() const;
  // Boundary reading: rightmost column first.
  std::string reading() const;

  friend bool operator==(const BarState&, const BarState&) = default;

 private:
  Mode mode_;
  std::vector<std::uint8_t> digits_;
};

// Exponents of a weight monomial: IVS uses only `white` as the power of z;
// BIVS is x^white * y^black.
struct Weight {
  std::uint32_t white = 0;
  std::uint32_t black = 0;

  friend bool operator==(const Weight&, const Weight&) = default;
  Weight& operator+=(Weight w) {
    white += w.white;
    black += w.black;
    return *this;
  }
};

UniPoly to_unipoly(Weight w);
BiPoly to_bipoly(Weight w);

// A mosaic tile. Left and right edges carry the same letter; bottom and top
// edges carry digits. `id` is 1-based (T1, T2, ...).
struct Tile {
  std::uint8_t id;
  char letter;
  std::uint8_t bottom;
  std::uint8_t top;
  Weight weight;
};

// Fixed tile tables, indexed by id - 1.
std::span<const Tile> tiles(Mode mode);
const Tile& tile(Mode mode, unsigned id);

// True if `left` may sit immediately to the left of `right` in a row.
bool horizontally_compatible(Mode mode, const Tile& left, const Tile& right);
// True if `below` may sit immediately below `above` in a column.
inline bool vertically_compatible(const Tile& below, const Tile& above) { return below.top == above.bottom; }

// Closed form of "some suitably adjacent bar mosaic has bottom state s and
// top state t" (there is then exactly one).
//   IVS:  disjoint supports, no two adjacent 1s in either state.
//   BIVS: no position with s = t != 0, no two adjacent equal nonzero digits
//         in either state.
bool row_compatible(const BarState& s, const BarState& t);

enum class Side { Bottom, Top, Left, Right };

// m x n array of tiles; column i (left to right) and row j (bottom to top),
// both 0-based here, stored column-major.
class Mosaic {
 public:
  Mosaic(Mode mode, unsigned columns, unsigned rows, std::vector<std::uint8_t> tile_ids);
  Mosaic(Mode mode, unsigned columns, unsigned rows);  // all T1

  // One row per line, top row first, tiles "T1".."T7" separated by spaces.
  static Mosaic parse(Mode mode, std::string_view text);
  std::string to_text() const;

  Mode mode() const { return mode_; }
  unsigned columns() const { return columns_; }
  unsigned rows() const { return rows_; }

  const Tile& at(unsigned column, unsigned row) const;
  void set(unsigned column, unsigned row, unsigned tile_id);

  // Bottom/top: digits as a BarState. Left/right: letters read top to bottom.
  BarState read_bar_state(Side side) const;
  std::string read_letters(Side side) const;

  bool suitably_adjacent() const;
  // Suitably adjacent with trivial top state (an IVS resp. BIVS mosaic).
  bool is_valid_mosaic() const;
  Weight weight() const;

 private:
  Mode mode_;
  unsigned columns_;
  unsigned rows_;
  std::vector<std::uint8_t> ids_;
};

inline bool is_ivs_mosaic(const Mosaic& m) { return m.is_valid_mosaic(); }

}  // namespace hardsq
