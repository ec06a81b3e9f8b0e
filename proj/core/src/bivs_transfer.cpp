#include "hardsq/bivs_transfer.hpp"

#include <optional>
#include <string_view>

namespace hardsq {

namespace {

const BiPoly kOne = BiPoly::constant(Natural(1));
const BiPoly kX = BiPoly::monomial({1, 0});
const BiPoly kY = BiPoly::monomial({0, 1});

// Seed cell of each letter in the 3x3 bar matrices: (bottom digit, top digit).
struct SeedCell {
  std::uint64_t row;
  std::uint64_t col;
  const BiPoly* value;
};
const std::array<SeedCell, 7> kSeeds{{
    {0, 0, &kOne},  // A
    {0, 1, &kOne},  // B
    {0, 2, &kOne},  // C
    {1, 0, &kX},    // D
    {1, 2, &kX},    // E
    {2, 0, &kY},    // F
    {2, 1, &kY},    // G
}};

// Members summed inside each Kronecker factor.
constexpr std::array<std::string_view, 7> kLeftNeighbours{
    "abcdefg",  // A
    "acdef",    // B
    "abdfg",    // C
    "abcfg",    // D
    "abfg",     // E
    "abcde",    // F
    "acde",     // G
};

// Block layout of the folded recursion: for each member, a 3x3 grid of
// (letter, weight) or empty.
struct Block {
  char letter;
  const BiPoly* weight;
};
using Layout = std::array<std::array<std::optional<Block>, 3>, 3>;

Layout layout_for(char member) {
  const Block a{'a', &kOne}, b{'b', &kOne}, c{'c', &kOne};
  const Block xd{'d', &kX}, xe{'e', &kX}, yf{'f', &kY}, yg{'g', &kY};
  const std::optional<Block> o;
  switch (member) {
    case 'a': return {{{a, b, c}, {xd, o, xe}, {yf, yg, o}}};
    case 'b': return {{{a, o, c}, {xd, o, xe}, {yf, o, o}}};
    case 'c': return {{{a, b, o}, {xd, o, o}, {yf, yg, o}}};
    case 'd': return {{{a, b, c}, {o, o, o}, {yf, yg, o}}};
    case 'e': return {{{a, b, o}, {o, o, o}, {yf, yg, o}}};
    case 'f': return {{{a, b, c}, {xd, o, xe}, {o, o, o}}};
    default: return {{{a, o, c}, {xd, o, xe}, {o, o, o}}};
  }
}

void check_matrix_cap(unsigned m, const Caps& caps) { require_within_cap(m, caps.bivs_matrix, "BIVS state matrix"); }

}  // namespace

BivsMatrix BivsMatrixFamily::sum() const {
  BivsMatrix out = members[0];
  for (std::size_t k = 1; k < members.size(); ++k) out += members[k];
  return out;
}

BivsMatrixFamily bivs_bar_family(unsigned p, const Caps& caps) {
  check_matrix_cap(p, caps);
  if (p == 0) throw std::invalid_argument("bar length must be positive");
  std::array<BivsMatrix, 7> seeds;
  for (std::size_t x = 0; x < 7; ++x) {
    seeds[x] = BivsMatrix(3);
    seeds[x].at(kSeeds[x].row, kSeeds[x].col) = *kSeeds[x].value;
  }
  BivsMatrixFamily family{1, seeds};
  while (family.p < p) {
    BivsMatrixFamily next{family.p + 1, {}};
    for (std::size_t x = 0; x < 7; ++x) {
      BivsMatrix inner(family.members[0].dim());
      for (char letter : kLeftNeighbours[x]) inner += family[letter];
      next.members[x] = kronecker(seeds[x], inner);
    }
    family = std::move(next);
  }
  return family;
}

BivsTheoremMatrix bivs_theorem_matrix(unsigned m, const Caps& caps) {
  check_matrix_cap(m, caps);
  if (m == 0) throw std::invalid_argument("bar length must be positive");
  std::array<BivsMatrix, 7> cur;
  cur.fill(BivsMatrix::scalar(kOne));
  for (unsigned k = 0; k < m; ++k) {
    const std::uint64_t d = cur[0].dim();
    std::array<BivsMatrix, 7> next;
    for (std::size_t x = 0; x < 7; ++x) {
      next[x] = BivsMatrix(3 * d);
      const Layout layout = layout_for(static_cast<char>('a' + x));
      for (std::uint64_t r = 0; r < 3; ++r) {
        for (std::uint64_t s = 0; s < 3; ++s) {
          if (const auto& blk = layout[r][s]) next[x].place_block(r, s, cur[blk->letter - 'a'], *blk->weight);
        }
      }
    }
    cur = std::move(next);
  }
  return {m, std::move(cur[0])};
}

BiPoly bivs_closed_form_entry(std::uint64_t i, std::uint64_t j, unsigned m) {
  const auto s = BarState::from_index(Mode::Bivs, m, i);
  const auto t = BarState::from_index(Mode::Bivs, m, j);
  if (!row_compatible(s, t)) return {};
  BiExponent e;
  for (auto d : s.digits()) {
    if (d == 1) ++e.c;
    if (d == 2) ++e.d;
  }
  return BiPoly::monomial(e);
}

BivsMatrix bivs_closed_form_matrix(unsigned m, const Caps& caps) {
  check_matrix_cap(m, caps);
  const std::uint64_t dim = state_count(Mode::Bivs, m);
  BivsMatrix out(dim);
  for (std::uint64_t i = 1; i <= dim; ++i) {
    for (std::uint64_t j = 1; j <= dim; ++j) out.at(i - 1, j - 1) = bivs_closed_form_entry(i, j, m);
  }
  return out;
}

BiPoly bivs_genfunc(unsigned m, unsigned n, GenfuncForm form, const EngineOptions& options) {
  require_positive_dims(m, n);
  require_within_cap(m, options.caps.bivs_genfunc, "BIVS generating function");
  return transfer_generating_value<BiPoly>(Mode::Bivs, m, n, form, options.threads);
}

Natural bivs_count(unsigned m, unsigned n, const EngineOptions& options) {
  require_positive_dims(m, n);
  require_within_cap(m, options.caps.bivs_count, "BIVS count");
  return transfer_generating_value<Natural>(Mode::Bivs, m, n, GenfuncForm::ColumnSum, options.threads);
}

}  // namespace hardsq
