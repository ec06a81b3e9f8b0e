#include "cli.hpp"

#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hardsq/bivs_transfer.hpp"
#include "hardsq/ivs_transfer.hpp"
#include "hardsq/parallel.hpp"

namespace hardsq::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

struct RunConfig {
  std::string mode = "ivs";
  unsigned m = 0;
  unsigned n = 0;
  std::string format = "text";
  std::optional<unsigned> threads;
  std::optional<unsigned> cap;

  Mode parsed_mode() const { return parse_mode(mode); }
  Format parsed_format() const {
    if (format == "json") return Format::Json;
    if (format == "csv") return Format::Csv;
    return Format::Text;
  }

  EngineOptions options(bool genfunc) const {
    EngineOptions o;
    o.threads = threads.value_or(threads_from_environment());
    if (cap) {
      const bool ivs = parsed_mode() == Mode::Ivs;
      unsigned& slot = genfunc ? (ivs ? o.caps.ivs_genfunc : o.caps.bivs_genfunc)
                               : (ivs ? o.caps.ivs_count : o.caps.bivs_count);
      slot = *cap;
    }
    return o;
  }
};

void add_grid_options(CLI::App& cmd, RunConfig& cfg, std::initializer_list<const char*> formats) {
  cmd.add_option("--mode", cfg.mode, "ivs or bivs")->check(CLI::IsMember({"ivs", "bivs"}));
  cmd.add_option("-m", cfg.m, "grid width (bar length)")->required();
  cmd.add_option("-n", cfg.n, "grid height")->required();
  cmd.add_option("--format", cfg.format, "output format")->check(CLI::IsMember(std::vector<std::string>(formats.begin(), formats.end())));
  cmd.add_option("--cap", cfg.cap, "override the bar length cap for this command");
}

void write_json(std::ostream& out, const ordered_json& doc) { out << doc.dump() << '\n'; }

void cmd_count(const RunConfig& cfg, std::ostream& out) {
  const Mode mode = cfg.parsed_mode();
  const auto opts = cfg.options(false);
  const Natural count = mode == Mode::Ivs ? ivs_count(cfg.m, cfg.n, opts) : bivs_count(cfg.m, cfg.n, opts);
  switch (cfg.parsed_format()) {
    case Format::Json:
      write_json(out, {{"mode", cfg.mode}, {"m", cfg.m}, {"n", cfg.n}, {"count", count.to_string()}});
      break;
    case Format::Csv:
      out << "mode,m,n,count\n" << cfg.mode << ',' << cfg.m << ',' << cfg.n << ',' << count.to_string() << '\n';
      break;
    case Format::Text:
      out << count.to_string() << '\n';
      break;
  }
}

void cmd_genfunc(const RunConfig& cfg, const std::string& form_name, std::ostream& out) {
  const Mode mode = cfg.parsed_mode();
  const auto opts = cfg.options(true);
  const GenfuncForm form = form_name == "corner-entry" ? GenfuncForm::CornerEntry : GenfuncForm::ColumnSum;
  std::string text;
  std::string json_terms;
  std::string csv;
  if (mode == Mode::Ivs) {
    const UniPoly p = ivs_genfunc(cfg.m, cfg.n, form, opts);
    text = to_text(p);
    json_terms = to_json(p);
    csv = "d,k\n";
    for (const auto& [e, k] : p.terms()) csv += std::to_string(e) + ',' + k.to_string() + '\n';
  } else {
    const BiPoly q = bivs_genfunc(cfg.m, cfg.n, form, opts);
    text = to_text(q);
    json_terms = to_json(q);
    csv = "c,d,k\n";
    for (const auto& [e, k] : q.terms()) {
      csv += std::to_string(e.c) + ',' + std::to_string(e.d) + ',' + k.to_string() + '\n';
    }
  }
  switch (cfg.parsed_format()) {
    case Format::Json:
      write_json(out, {{"mode", cfg.mode},
                       {"m", cfg.m},
                       {"n", cfg.n},
                       {"form", form_name},
                       {"terms", ordered_json::parse(json_terms)}});
      break;
    case Format::Csv:
      out << csv;
      break;
    case Format::Text:
      out << text << '\n';
      break;
  }
}

void cmd_bounds(const RunConfig& cfg, int precision, std::ostream& out) {
  auto opts = cfg.options(false);
  // bracket() transposes to the shorter side, so the cap applies to min(m, n).
  const GrowthBracket b = bracket(cfg.parsed_mode(), cfg.m, cfg.n, opts);
  const std::string lower = b.lower.to_fixed(precision);
  const std::string upper = b.upper.to_fixed(precision);
  switch (cfg.parsed_format()) {
    case Format::Json:
      write_json(out, {{"mode", cfg.mode},
                       {"m", cfg.m},
                       {"n", cfg.n},
                       {"count", b.count.to_string()},
                       {"lower", lower},
                       {"upper", upper}});
      break;
    case Format::Csv:
      out << "mode,m,n,count,lower,upper\n"
          << cfg.mode << ',' << cfg.m << ',' << cfg.n << ',' << b.count.to_string() << ',' << lower << ','
          << upper << '\n';
      break;
    case Format::Text:
      out << "mode  " << cfg.mode << "\nm     " << cfg.m << "\nn     " << cfg.n << "\ncount "
          << b.count.to_string() << "\nlower " << lower << "\nupper " << upper << '\n';
      break;
  }
}

void cmd_table(unsigned max_n, const RunConfig& cfg, std::ostream& out) {
  EngineOptions opts;
  opts.threads = cfg.threads.value_or(threads_from_environment());
  if (cfg.cap) opts.caps.ivs_count = *cfg.cap;
  const auto rows = table_one(max_n, opts);
  switch (cfg.parsed_format()) {
    case Format::Json: {
      auto arr = ordered_json::array();
      for (const auto& r : rows) {
        arr.push_back({{"n", r.n},
                       {"sigma", r.sigma.to_string()},
                       {"root_n2", r.root_n2.to_fixed(3)},
                       {"root_n1sq", r.root_n1sq.to_fixed(3)}});
      }
      write_json(out, arr);
      break;
    }
    case Format::Csv:
      out << "n,sigma,root_n2,root_n1sq\n";
      for (const auto& r : rows) {
        out << r.n << ',' << r.sigma.to_string() << ',' << r.root_n2.to_fixed(3) << ',' << r.root_n1sq.to_fixed(3)
            << '\n';
      }
      break;
    case Format::Text: {
      std::size_t width = 5;
      for (const auto& r : rows) width = std::max(width, r.sigma.to_string().size());
      out << std::left << std::setw(4) << "n" << std::setw(static_cast<int>(width) + 2) << "sigma" << std::setw(9)
          << "root_n2" << "root_n1sq\n";
      for (const auto& r : rows) {
        out << std::setw(4) << r.n << std::setw(static_cast<int>(width) + 2) << r.sigma.to_string() << std::setw(9)
            << r.root_n2.to_fixed(3) << r.root_n1sq.to_fixed(3) << '\n';
      }
      break;
    }
  }
}

int cmd_verify(const VerifyConfig& config, Format format, std::ostream& out) {
  const VerifyReport report = run_verification(config);
  if (format == Format::Json) {
    auto checks = ordered_json::array();
    for (const auto& c : report.checks) {
      checks.push_back({{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"cases", c.cases}, {"detail", c.detail}});
    }
    auto witnesses = ordered_json::array();
    for (const auto& w : report.witnesses) witnesses.push_back(w.describe());
    write_json(out, {{"passed", report.passed()}, {"checks", checks}, {"witnesses", witnesses}});
  } else {
    for (const auto& c : report.checks) {
      out << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases)";
      if (!c.passed) out << ": " << c.detail;
      out << '\n';
    }
    for (const auto& w : report.witnesses) out << "  " << w.describe() << '\n';
    out << (report.passed() ? "all checks passed\n" : "verification FAILED\n");
  }
  return report.passed() ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration of independent vertex sets in grid graphs", "hardsq"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--threads", cfg.threads, "worker threads (default: $HARDSQ_THREADS or 1)")
      ->check(CLI::PositiveNumber);
  app.fallthrough();

  auto* count = app.add_subcommand("count", "exact number of (bipartite) independent vertex sets");
  add_grid_options(*count, cfg, {"text", "json", "csv"});

  std::string form = "column-sum";
  auto* genfunc = app.add_subcommand("genfunc", "generating function P(z) or Q(x,y)");
  add_grid_options(*genfunc, cfg, {"text", "json", "csv"});
  genfunc->add_option("--form", form, "column-sum or corner-entry")
      ->check(CLI::IsMember({"column-sum", "corner-entry"}));

  int precision = 6;
  auto* bounds = app.add_subcommand("bounds", "bracket for the hard square constant");
  add_grid_options(*bounds, cfg, {"text", "json", "csv"});
  bounds->add_option("--precision", precision, "decimals printed")->check(CLI::Range(0, 60));

  unsigned max_n = 12;
  auto* table = app.add_subcommand("table", "sigma(G_nxn) with its 1/n^2 and 1/(n+1)^2 roots");
  table->add_option("--max-n", max_n, "largest n")->check(CLI::PositiveNumber);
  table->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  table->add_option("--cap", cfg.cap, "override the bar length cap");

  VerifyConfig vcfg;
  std::string vmode = "all";
  auto* verify = app.add_subcommand("verify", "cross-check engines against oracles and identities");
  verify->add_option("--mode", vmode, "ivs, bivs or all")->check(CLI::IsMember({"ivs", "bivs", "all"}));
  verify->add_option("--max-area", vcfg.max_area, "largest m*n exercised")->check(CLI::Range(1u, 24u));
  verify->add_flag("--fekete", vcfg.fekete, "also check Fekete sandwiches and print witnesses");
  verify->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kUsage;
  }

  try {
    if (*count) {
      cmd_count(cfg, out);
    } else if (*genfunc) {
      cmd_genfunc(cfg, form, out);
    } else if (*bounds) {
      cmd_bounds(cfg, precision, out);
    } else if (*table) {
      cmd_table(max_n, cfg, out);
    } else if (*verify) {
      vcfg.ivs = vmode != "bivs";
      vcfg.bivs = vmode != "ivs";
      vcfg.options.threads = cfg.threads.value_or(threads_from_environment());
      return cmd_verify(vcfg, cfg.parsed_format(), out);
    }
  } catch (const CapExceeded& e) {
    err << "refused: " << e.what() << '\n';
    return kCapRefused;
  } catch (const InternalInconsistency& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace hardsq::cli
