#include "hardsq/grid_states.hpp"

#include <sstream>
#include <stdexcept>

namespace hardsq {

namespace {

constexpr std::array<Tile, 3> kIvsTiles{{
    {1, 'a', 0, 0, {0, 0}},
    {2, 'b', 1, 0, {1, 0}},
    {3, 'c', 0, 1, {0, 0}},
}};

// Bottom digit is the colour of the tile's own vertex (1 white, 2 black),
// top digit the colour of the vertex directly above.
constexpr std::array<Tile, 7> kBivsTiles{{
    {1, 'a', 0, 0, {0, 0}},
    {2, 'b', 0, 1, {0, 0}},
    {3, 'c', 0, 2, {0, 0}},
    {4, 'd', 1, 0, {1, 0}},
    {5, 'e', 1, 2, {1, 0}},
    {6, 'f', 2, 0, {0, 1}},
    {7, 'g', 2, 1, {0, 1}},
}};

constexpr std::array<std::string_view, 2> kIvsForbidden{"bb", "cc"};
constexpr std::array<std::string_view, 14> kBivsForbidden{"bb", "cc", "dd", "ee", "ff", "gg", "bg",
                                                           "gb", "ce", "ec", "de", "ed", "fg", "gf"};

bool adjacent_equal_nonzero(std::span<const std::uint8_t> digits) {
  for (std::size_t k = 1; k < digits.size(); ++k) {
    if (digits[k] != 0 && digits[k] == digits[k - 1]) return true;
  }
  return false;
}

}  // namespace

std::string_view to_string(Mode mode) { return mode == Mode::Ivs ? "ivs" : "bivs"; }

Mode parse_mode(std::string_view text) {
  if (text == "ivs") return Mode::Ivs;
  if (text == "bivs") return Mode::Bivs;
  throw std::invalid_argument("unknown mode: " + std::string(text));
}

std::uint64_t state_count(Mode mode, unsigned length) {
  std::uint64_t n = 1;
  for (unsigned k = 0; k < length; ++k) n *= state_base(mode);
  return n;
}

BarState::BarState(Mode mode, std::vector<std::uint8_t> digits) : mode_(mode), digits_(std::move(digits)) {
  for (auto d : digits_) {
    if (d >= state_base(mode_)) throw std::invalid_argument("bar state digit out of range");
  }
}

BarState BarState::from_index(Mode mode, unsigned length, std::uint64_t index) {
  if (index < 1 || index > state_count(mode, length)) throw std::out_of_range("bar state index out of range");
  std::vector<std::uint8_t> digits(length);
  std::uint64_t value = index - 1;
  for (auto& d : digits) {
    d = static_cast<std::uint8_t>(value % state_base(mode));
    value /= state_base(mode);
  }
  return BarState(mode, std::move(digits));
}

BarState BarState::trivial(Mode mode, unsigned length) {
  return BarState(mode, std::vector<std::uint8_t>(length, 0));
}

BarState BarState::parse(Mode mode, std::string_view reading) {
  std::vector<std::uint8_t> digits(reading.size());
  for (std::size_t k = 0; k < reading.size(); ++k) {
    const char ch = reading[reading.size() - 1 - k];
    if (ch < '0' || ch > '9') throw std::invalid_argument("bar state must be digits");
    digits[k] = static_cast<std::uint8_t>(ch - '0');
  }
  return BarState(mode, std::move(digits));
}

std::uint64_t BarState::index() const {
  std::uint64_t value = 0;
  for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) value = value * state_base(mode_) + *it;
  return value + 1;
}

bool BarState::is_trivial() const {
  for (auto d : digits_) {
    if (d != 0) return false;
  }
  return true;
}

std::string BarState::reading() const {
  std::string out;
  for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) out += static_cast<char>('0' + *it);
  return out;
}

UniPoly to_unipoly(Weight w) { return UniPoly::monomial(w.white); }
BiPoly to_bipoly(Weight w) { return BiPoly::monomial({w.white, w.black}); }

std::span<const Tile> tiles(Mode mode) {
  if (mode == Mode::Ivs) return kIvsTiles;
  return kBivsTiles;
}

const Tile& tile(Mode mode, unsigned id) {
  auto set = tiles(mode);
  if (id < 1 || id > set.size()) throw std::out_of_range("no tile T" + std::to_string(id));
  return set[id - 1];
}

bool horizontally_compatible(Mode mode, const Tile& left, const Tile& right) {
  const char pair[2] = {left.letter, right.letter};
  const std::string_view abutting(pair, 2);
  if (mode == Mode::Ivs) {
    for (auto f : kIvsForbidden) {
      if (f == abutting) return false;
    }
  } else {
    for (auto f : kBivsForbidden) {
      if (f == abutting) return false;
    }
  }
  return true;
}

bool row_compatible(const BarState& s, const BarState& t) {
  if (s.mode() != t.mode() || s.length() != t.length()) {
    throw std::invalid_argument("row_compatible needs states of equal length and mode");
  }
  for (unsigned k = 0; k < s.length(); ++k) {
    const auto a = s.digit(k);
    const auto b = t.digit(k);
    // IVS digits are 0/1, so "both nonzero" and "equal nonzero" coincide.
    if (a != 0 && a == b) return false;
  }
  return !adjacent_equal_nonzero(s.digits()) && !adjacent_equal_nonzero(t.digits());
}

Mosaic::Mosaic(Mode mode, unsigned columns, unsigned rows, std::vector<std::uint8_t> tile_ids)
    : mode_(mode), columns_(columns), rows_(rows), ids_(std::move(tile_ids)) {
  if (columns_ == 0 || rows_ == 0) throw std::invalid_argument("mosaic dimensions must be positive");
  if (ids_.size() != static_cast<std::size_t>(columns_) * rows_) {
    throw std::invalid_argument("mosaic tile count does not match dimensions");
  }
  for (auto id : ids_) (void)tile(mode_, id);
}

Mosaic::Mosaic(Mode mode, unsigned columns, unsigned rows)
    : Mosaic(mode, columns, rows, std::vector<std::uint8_t>(static_cast<std::size_t>(columns) * rows, 1)) {}

Mosaic Mosaic::parse(Mode mode, std::string_view text) {
  std::vector<std::vector<std::uint8_t>> lines;  // top row first
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream words(line);
    std::vector<std::uint8_t> row;
    std::string word;
    while (words >> word) {
      if (word.size() != 2 || word[0] != 'T' || word[1] < '1' || word[1] > '9') {
        throw std::invalid_argument("bad tile token: " + word);
      }
      row.push_back(static_cast<std::uint8_t>(word[1] - '0'));
    }
    if (!row.empty()) lines.push_back(std::move(row));
  }
  if (lines.empty()) throw std::invalid_argument("empty mosaic");
  const auto columns = static_cast<unsigned>(lines.front().size());
  const auto rows = static_cast<unsigned>(lines.size());
  std::vector<std::uint8_t> ids(static_cast<std::size_t>(columns) * rows);
  for (unsigned r = 0; r < rows; ++r) {
    const auto& line_ids = lines[rows - 1 - r];
    if (line_ids.size() != columns) throw std::invalid_argument("ragged mosaic rows");
    for (unsigned c = 0; c < columns; ++c) ids[static_cast<std::size_t>(c) * rows + r] = line_ids[c];
  }
  return Mosaic(mode, columns, rows, std::move(ids));
}

std::string Mosaic::to_text() const {
  std::string out;
  for (unsigned r = rows_; r-- > 0;) {
    for (unsigned c = 0; c < columns_; ++c) {
      if (c > 0) out += ' ';
      out += 'T';
      out += static_cast<char>('0' + at(c, r).id);
    }
    out += '\n';
  }
  return out;
}

const Tile& Mosaic::at(unsigned column, unsigned row) const {
  if (column >= columns_ || row >= rows_) throw std::out_of_range("mosaic position out of range");
  return tile(mode_, ids_[static_cast<std::size_t>(column) * rows_ + row]);
}

void Mosaic::set(unsigned column, unsigned row, unsigned tile_id) {
  if (column >= columns_ || row >= rows_) throw std::out_of_range("mosaic position out of range");
  (void)tile(mode_, tile_id);
  ids_[static_cast<std::size_t>(column) * rows_ + row] = static_cast<std::uint8_t>(tile_id);
}

BarState Mosaic::read_bar_state(Side side) const {
  if (side != Side::Bottom && side != Side::Top) throw std::invalid_argument("bar states live on bottom/top");
  std::vector<std::uint8_t> digits(columns_);
  for (unsigned c = 0; c < columns_; ++c) {
    digits[c] = side == Side::Bottom ? at(c, 0).bottom : at(c, rows_ - 1).top;
  }
  return BarState(mode_, std::move(digits));
}

std::string Mosaic::read_letters(Side side) const {
  if (side != Side::Left && side != Side::Right) throw std::invalid_argument("letter states live on left/right");
  const unsigned column = side == Side::Left ? 0 : columns_ - 1;
  std::string out;
  for (unsigned r = rows_; r-- > 0;) out += at(column, r).letter;
  return out;
}

bool Mosaic::suitably_adjacent() const {
  for (unsigned c = 0; c < columns_; ++c) {
    for (unsigned r = 0; r < rows_; ++r) {
      if (c + 1 < columns_ && !horizontally_compatible(mode_, at(c, r), at(c + 1, r))) return false;
      if (r + 1 < rows_ && !vertically_compatible(at(c, r), at(c, r + 1))) return false;
    }
  }
  return true;
}

bool Mosaic::is_valid_mosaic() const { return suitably_adjacent() && read_bar_state(Side::Top).is_trivial(); }

Weight Mosaic::weight() const {
  Weight w;
  for (unsigned c = 0; c < columns_; ++c) {
    for (unsigned r = 0; r < rows_; ++r) w += at(c, r).weight;
  }
  return w;
}

}  // namespace hardsq
