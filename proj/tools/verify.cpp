#include <algorithm>
#include <functional>
#include <string>

#include "cli.hpp"
#include "hardsq/bivs_transfer.hpp"
#include "hardsq/ivs_transfer.hpp"
#include "hardsq/oracle.hpp"

namespace hardsq::cli {

namespace {

std::string dims(unsigned m, unsigned n) { return std::to_string(m) + "x" + std::to_string(n); }

// Runs `body` for every (m, n) with m <= m_limit, n <= n_limit and
// m*n <= area_limit. `body` returns an empty string on success or a mismatch
// description.
CheckResult sweep(std::string name, unsigned m_limit, unsigned n_limit, unsigned area_limit,
                  const std::function<std::string(unsigned, unsigned)>& body) {
  CheckResult result;
  result.name = std::move(name);
  for (unsigned m = 1; m <= m_limit && m <= area_limit; ++m) {
    for (unsigned n = 1; n <= n_limit && m * n <= area_limit; ++n) {
      ++result.cases;
      if (auto failure = body(m, n); !failure.empty() && result.passed) {
        result.passed = false;
        result.detail = dims(m, n) + ": " + failure;
      }
    }
  }
  return result;
}

CheckResult sweep_bar(std::string name, unsigned max_length, const std::function<std::string(unsigned)>& body) {
  CheckResult result;
  result.name = std::move(name);
  for (unsigned m = 1; m <= max_length; ++m) {
    ++result.cases;
    if (auto failure = body(m); !failure.empty() && result.passed) {
      result.passed = false;
      result.detail = "m=" + std::to_string(m) + ": " + failure;
    }
  }
  return result;
}

template <class Poly>
std::string compare(const Poly& got, const Poly& want) {
  if (got == want) return {};
  return to_text(got) + " != " + to_text(want);
}

template <class Matrix>
Matrix power(const Matrix& a, unsigned n) {
  Matrix out = a;
  for (unsigned k = 1; k < n; ++k) out = out * a;
  return out;
}

template <class Matrix>
auto first_column_sum(const Matrix& y) {
  typename std::decay_t<decltype(y.at(0, 0))> sum;
  for (std::uint64_t i = 0; i < y.dim(); ++i) sum += y.at(i, 0);
  return sum;
}

void ivs_checks(const VerifyConfig& c, VerifyReport& report) {
  const auto& opt = c.options;
  const unsigned area = c.max_area;
  report.checks.push_back(sweep("ivs oracle equivalence", area, area, std::min(area, oracle::kMaxIvsArea),
                                [&](unsigned m, unsigned n) {
                                  return compare(ivs_genfunc(m, n, GenfuncForm::ColumnSum, opt),
                                                 oracle::brute_ivs(m, n, opt.threads));
                                }));
  report.checks.push_back(sweep("ivs mosaic conversion", area, area, std::min(area, 16u), [&](unsigned m, unsigned n) {
    return compare(project_y0(oracle::brute_mosaics(Mode::Ivs, m, n)), oracle::brute_ivs(m, n, opt.threads));
  }));
  report.checks.push_back(sweep_bar("ivs cross-form matrices", std::min(area, 8u), [&](unsigned m) -> std::string {
    const auto folded = ivs_theorem_matrix(m).a;
    if (folded != ivs_bar_triple(m).sum()) return "folded matrix != bar triple sum";
    if (folded != ivs_bar_triple(m, BarSeed::Zero).sum()) return "folded matrix != zero-seeded triple sum";
    if (folded != ivs_closed_form_matrix(m)) return "folded matrix != closed form";
    return {};
  }));
  report.checks.push_back(sweep("ivs column-sum vs corner-entry", 6, 6, area, [&](unsigned m, unsigned n) {
    return compare(ivs_genfunc(m, n, GenfuncForm::ColumnSum, opt), ivs_genfunc(m, n, GenfuncForm::CornerEntry, opt));
  }));
  report.checks.push_back(sweep("ivs matrix power", 4, 3, area, [&](unsigned m, unsigned n) {
    return compare(first_column_sum(power(ivs_theorem_matrix(m).a, n)), ivs_genfunc(m, n, GenfuncForm::ColumnSum, opt));
  }));
  report.checks.push_back(sweep("ivs symmetry", 8, 8, area, [&](unsigned m, unsigned n) -> std::string {
    const auto a = ivs_count(m, n, opt);
    const auto b = ivs_count(n, m, opt);
    return a == b ? std::string() : a.to_string() + " != " + b.to_string();
  }));
}

void bivs_checks(const VerifyConfig& c, VerifyReport& report) {
  const auto& opt = c.options;
  const unsigned area = c.max_area;
  report.checks.push_back(sweep("bivs oracle equivalence", area, area, std::min(area, oracle::kMaxBivsArea),
                                [&](unsigned m, unsigned n) {
                                  return compare(bivs_genfunc(m, n, GenfuncForm::ColumnSum, opt), oracle::brute_bivs(m, n));
                                }));
  report.checks.push_back(sweep("bivs mosaic conversion", area, area, std::min(area, 9u), [&](unsigned m, unsigned n) {
    return compare(oracle::brute_mosaics(Mode::Bivs, m, n), oracle::brute_bivs(m, n));
  }));
  report.checks.push_back(sweep_bar("bivs cross-form matrices", std::min(area, 5u), [&](unsigned m) -> std::string {
    const auto folded = bivs_theorem_matrix(m).a;
    if (folded != bivs_bar_family(m).sum()) return "folded matrix != bar family sum";
    if (folded != bivs_closed_form_matrix(m)) return "folded matrix != closed form";
    return {};
  }));
  report.checks.push_back(sweep("bivs column-sum vs corner-entry", 4, 4, area, [&](unsigned m, unsigned n) {
    return compare(bivs_genfunc(m, n, GenfuncForm::ColumnSum, opt), bivs_genfunc(m, n, GenfuncForm::CornerEntry, opt));
  }));
  report.checks.push_back(sweep("bivs projection Q(z,0) = P(z)", 4, 4, area, [&](unsigned m, unsigned n) {
    return compare(project_y0(bivs_genfunc(m, n, GenfuncForm::ColumnSum, opt)),
                   ivs_genfunc(m, n, GenfuncForm::ColumnSum, opt));
  }));
  report.checks.push_back(sweep("bivs colour swap", 4, 4, area, [&](unsigned m, unsigned n) {
    const auto q = bivs_genfunc(m, n, GenfuncForm::ColumnSum, opt);
    return compare(swap_xy(q), q);
  }));
  report.checks.push_back(sweep("bivs matrix power", 3, 3, area, [&](unsigned m, unsigned n) {
    return compare(first_column_sum(power(bivs_theorem_matrix(m).a, n)),
                   bivs_genfunc(m, n, GenfuncForm::ColumnSum, opt));
  }));
}

void fekete_checks(Mode mode, const VerifyConfig& c, VerifyReport& report) {
  CheckResult result;
  result.name = "fekete sandwiches [" + std::string(to_string(mode)) + "]";
  for (auto axis : {SplitAxis::Rows, SplitAxis::Cols}) {
    for (unsigned fixed = 1; 3 * fixed <= c.max_area; ++fixed) {
      for (unsigned first = 1; (first + 2) * fixed <= c.max_area; ++first) {
        for (unsigned second = 1; (first + second + 1) * fixed <= c.max_area; ++second) {
          ++result.cases;
          try {
            report.witnesses.push_back(fekete_sandwich(mode, axis, first, second, fixed, c.options));
          } catch (const InternalInconsistency& e) {
            if (result.passed) result.detail = e.what();
            result.passed = false;
          }
        }
      }
    }
  }
  report.checks.push_back(std::move(result));
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& r) { return r.passed; });
}

VerifyReport run_verification(const VerifyConfig& requested) {
  // Sweeps include tall bars such as m x 1, so the engine caps are lifted to
  // the requested area.
  VerifyConfig config = requested;
  auto& caps = config.options.caps;
  caps.ivs_genfunc = std::max(caps.ivs_genfunc, config.max_area);
  caps.bivs_genfunc = std::max(caps.bivs_genfunc, std::min(config.max_area, oracle::kMaxBivsArea));
  VerifyReport report;
  if (config.ivs) ivs_checks(config, report);
  if (config.bivs) bivs_checks(config, report);
  if (config.fekete) {
    if (config.ivs) fekete_checks(Mode::Ivs, config, report);
    if (config.bivs) fekete_checks(Mode::Bivs, config, report);
  }
  return report;
}

}  // namespace hardsq::cli
