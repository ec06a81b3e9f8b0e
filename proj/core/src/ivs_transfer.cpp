#include "hardsq/ivs_transfer.hpp"

#include <bit>

namespace hardsq {

namespace {

const UniPoly kOne = UniPoly::constant(Natural(1));
const UniPoly kZ = UniPoly::monomial(1);

IvsMatrix zero(std::uint64_t dim) { return IvsMatrix(dim); }

IvsMatrix seed(std::uint64_t row, std::uint64_t col, const UniPoly& value) {
  IvsMatrix out(2);
  out.at(row, col) = value;
  return out;
}

void check_matrix_cap(unsigned m, const Caps& caps) { require_within_cap(m, caps.ivs_matrix, "IVS state matrix"); }

}  // namespace

IvsMatrixTriple ivs_bar_triple(unsigned p, BarSeed start, const Caps& caps) {
  check_matrix_cap(p, caps);
  IvsMatrixTriple t;
  if (start == BarSeed::Zero) {
    t = {0, IvsMatrix::scalar(kOne), zero(1), zero(1)};
  } else {
    if (p == 0) throw std::invalid_argument("bar length must be positive for the 2x2 seeds");
    t = {1, seed(0, 0, kOne), seed(1, 0, kZ), seed(0, 1, kOne)};
  }
  while (t.p < p) {
    const std::uint64_t d = t.a.dim();
    IvsMatrixTriple next{t.p + 1, zero(2 * d), zero(2 * d), zero(2 * d)};
    // Rightmost tile T1 / T2 / T3 fixes which block is nonzero.
    next.a.place_block(0, 0, t.a + t.b + t.c, kOne);
    next.b.place_block(1, 0, t.a + t.c, kZ);
    next.c.place_block(0, 1, t.a + t.b, kOne);
    t = std::move(next);
  }
  return t;
}

IvsTheoremMatrix ivs_theorem_matrix(unsigned m, const Caps& caps) {
  check_matrix_cap(m, caps);
  if (m == 0) throw std::invalid_argument("bar length must be positive");
  IvsMatrix a = IvsMatrix::scalar(kOne);
  IvsMatrix b = a;
  IvsMatrix c = a;
  for (unsigned k = 0; k < m; ++k) {
    const std::uint64_t d = a.dim();
    IvsMatrix na(2 * d), nb(2 * d), nc(2 * d);
    na.place_block(0, 0, a, kOne);
    na.place_block(0, 1, b, kOne);
    na.place_block(1, 0, c, kZ);
    nb.place_block(0, 0, a, kOne);
    nb.place_block(1, 0, c, kZ);
    nc.place_block(0, 0, a, kOne);
    nc.place_block(0, 1, b, kOne);
    a = std::move(na);
    b = std::move(nb);
    c = std::move(nc);
  }
  return {m, std::move(a)};
}

UniPoly ivs_closed_form_entry(std::uint64_t i, std::uint64_t j, unsigned m) {
  const auto s = BarState::from_index(Mode::Ivs, m, i);
  const auto t = BarState::from_index(Mode::Ivs, m, j);
  if (!row_compatible(s, t)) return {};
  return UniPoly::monomial(static_cast<std::uint32_t>(std::popcount(i - 1)));
}

IvsMatrix ivs_closed_form_matrix(unsigned m, const Caps& caps) {
  check_matrix_cap(m, caps);
  const std::uint64_t dim = state_count(Mode::Ivs, m);
  IvsMatrix out(dim);
  for (std::uint64_t i = 1; i <= dim; ++i) {
    for (std::uint64_t j = 1; j <= dim; ++j) out.at(i - 1, j - 1) = ivs_closed_form_entry(i, j, m);
  }
  return out;
}

UniPoly ivs_genfunc(unsigned m, unsigned n, GenfuncForm form, const EngineOptions& options) {
  require_positive_dims(m, n);
  require_within_cap(m, options.caps.ivs_genfunc, "IVS generating function");
  return transfer_generating_value<UniPoly>(Mode::Ivs, m, n, form, options.threads);
}

Natural ivs_count(unsigned m, unsigned n, const EngineOptions& options) {
  require_positive_dims(m, n);
  require_within_cap(m, options.caps.ivs_count, "IVS count");
  return transfer_generating_value<Natural>(Mode::Ivs, m, n, GenfuncForm::ColumnSum, options.threads);
}

}  // namespace hardsq
