#include "hardsq/poly.hpp"

#include <stdexcept>

#include <json.hpp>

namespace hardsq {

namespace {

void append_factor(std::string& out, std::string_view var, std::uint32_t e) {
  if (e == 0) return;
  if (!out.empty()) out += '*';
  out += var;
  if (e > 1) out += '^' + std::to_string(e);
}

std::string render_term(const Natural& k, std::string_view v1, std::uint32_t e1, std::string_view v2,
                        std::uint32_t e2) {
  std::string out;
  const bool constant = e1 == 0 && e2 == 0;
  if (constant || k != Natural(1)) out = k.to_string();
  append_factor(out, v1, e1);
  append_factor(out, v2, e2);
  return out;
}

template <class Poly, class Render>
std::string join_terms(const Poly& p, Render render) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, k] : p.terms()) {
    if (!out.empty()) out += " + ";
    out += render(e, k);
  }
  return out;
}

Natural coefficient_from_json(const nlohmann::json& entry) {
  const auto& k = entry.at("k");
  if (!k.is_string()) throw std::invalid_argument("polynomial coefficient must be a decimal string");
  return Natural::from_decimal(k.get<std::string>());
}

nlohmann::json parse_term_array(std::string_view json) {
  auto doc = nlohmann::json::parse(json);
  if (!doc.is_array()) throw std::invalid_argument("polynomial JSON must be an array of terms");
  return doc;
}

}  // namespace

std::optional<std::uint32_t> degree(const UniPoly& p) {
  if (p.is_zero()) return std::nullopt;
  return p.terms().back().first;
}

UniPoly project_y0(const BiPoly& q) {
  std::vector<UniPoly::Term> terms;
  for (const auto& [e, k] : q.terms()) {
    if (e.d == 0) terms.emplace_back(e.c, k);
  }
  return UniPoly::from_terms(std::move(terms));
}

BiPoly swap_xy(const BiPoly& q) {
  std::vector<BiPoly::Term> terms;
  terms.reserve(q.term_count());
  for (const auto& [e, k] : q.terms()) terms.emplace_back(BiExponent{e.d, e.c}, k);
  return BiPoly::from_terms(std::move(terms));
}

std::string to_text(const UniPoly& p, std::string_view var) {
  return join_terms(p, [&](std::uint32_t e, const Natural& k) { return render_term(k, var, e, "", 0); });
}

std::string to_text(const BiPoly& q) {
  return join_terms(q, [](BiExponent e, const Natural& k) { return render_term(k, "x", e.c, "y", e.d); });
}

std::string to_json(const UniPoly& p) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [e, k] : p.terms()) arr.push_back({{"d", e}, {"k", k.to_string()}});
  return arr.dump();
}

std::string to_json(const BiPoly& q) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [e, k] : q.terms()) arr.push_back({{"c", e.c}, {"d", e.d}, {"k", k.to_string()}});
  return arr.dump();
}

UniPoly unipoly_from_json(std::string_view json) {
  std::vector<UniPoly::Term> terms;
  for (const auto& entry : parse_term_array(json)) {
    terms.emplace_back(entry.at("d").get<std::uint32_t>(), coefficient_from_json(entry));
  }
  return UniPoly::from_terms(std::move(terms));
}

BiPoly bipoly_from_json(std::string_view json) {
  std::vector<BiPoly::Term> terms;
  for (const auto& entry : parse_term_array(json)) {
    terms.emplace_back(BiExponent{entry.at("c").get<std::uint32_t>(), entry.at("d").get<std::uint32_t>()},
                       coefficient_from_json(entry));
  }
  return BiPoly::from_terms(std::move(terms));
}

}  // namespace hardsq
