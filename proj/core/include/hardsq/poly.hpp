#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hardsq/natural.hpp"

namespace hardsq {

// Exponent of a bivariate monomial x^c y^d. Ordered by total degree, then by
// descending power of x: 1, x, y, x^2, x*y, y^2, ... Adding a fixed exponent
// to every term preserves this order.
struct BiExponent {
  std::uint32_t c = 0;
  std::uint32_t d = 0;

  friend bool operator==(const BiExponent&, const BiExponent&) = default;
  friend std::strong_ordering operator<=>(const BiExponent& a, const BiExponent& b) {
    if (auto by_degree = (a.c + a.d) <=> (b.c + b.d); by_degree != 0) return by_degree;
    return b.c <=> a.c;
  }
  friend BiExponent operator+(BiExponent a, BiExponent b) { return {a.c + b.c, a.d + b.d}; }
};

// Sparse polynomial with Natural coefficients. Terms are kept sorted by
// ascending exponent and zero coefficients are never stored, so structural
// equality is value equality.
template <class Exponent>
class SparsePoly {
 public:
  using exponent_type = Exponent;
  using Term = std::pair<Exponent, Natural>;

  SparsePoly() = default;

  static SparsePoly constant(Natural k) { return monomial(Exponent{}, std::move(k)); }
  static SparsePoly monomial(Exponent e, Natural k = Natural(1)) {
    SparsePoly p;
    if (!k.is_zero()) p.terms_.emplace_back(e, std::move(k));
    return p;
  }
  // Builds from arbitrary (exponent, coefficient) pairs; duplicates are summed.
  static SparsePoly from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    SparsePoly p;
    for (auto& [e, k] : terms) {
      if (k.is_zero()) continue;
      if (!p.terms_.empty() && p.terms_.back().first == e) {
        p.terms_.back().second += k;
      } else {
        p.terms_.emplace_back(e, std::move(k));
      }
    }
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  void set_zero() { terms_.clear(); }
  std::span<const Term> terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  Natural coefficient(Exponent e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const Exponent& x) { return t.first < x; });
    return (it != terms_.end() && it->first == e) ? it->second : Natural();
  }

  SparsePoly& operator+=(const SparsePoly& rhs) {
    if (rhs.terms_.empty()) return *this;
    if (terms_.empty()) {
      terms_ = rhs.terms_;
      return *this;
    }
    std::vector<Term> merged;
    merged.reserve(terms_.size() + rhs.terms_.size());
    auto a = terms_.begin();
    auto b = rhs.terms_.begin();
    while (a != terms_.end() && b != rhs.terms_.end()) {
      if (a->first < b->first) {
        merged.push_back(std::move(*a++));
      } else if (b->first < a->first) {
        merged.push_back(*b++);
      } else {
        a->second += b->second;
        merged.push_back(std::move(*a++));
        ++b;
      }
    }
    for (; a != terms_.end(); ++a) merged.push_back(std::move(*a));
    for (; b != rhs.terms_.end(); ++b) merged.push_back(*b);
    terms_ = std::move(merged);
    return *this;
  }

  // Multiplies in place by the monic monomial with exponent e.
  SparsePoly& shift(Exponent e) {
    for (auto& t : terms_) t.first = t.first + e;
    return *this;
  }

  friend SparsePoly operator+(SparsePoly lhs, const SparsePoly& rhs) { return lhs += rhs; }

  friend SparsePoly operator*(const SparsePoly& p, const SparsePoly& q) {
    std::vector<Term> products;
    products.reserve(p.terms_.size() * q.terms_.size());
    for (const auto& [ep, kp] : p.terms_) {
      for (const auto& [eq, kq] : q.terms_) products.emplace_back(ep + eq, kp * kq);
    }
    return from_terms(std::move(products));
  }
  SparsePoly& operator*=(const SparsePoly& rhs) { return *this = *this * rhs; }

  // Evaluation with every variable set to 1.
  Natural eval_ones() const {
    Natural sum;
    for (const auto& t : terms_) sum += t.second;
    return sum;
  }

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

 private:
  std::vector<Term> terms_;
};

using UniPoly = SparsePoly<std::uint32_t>;
using BiPoly = SparsePoly<BiExponent>;

// Highest stored exponent; nullopt for the zero polynomial.
std::optional<std::uint32_t> degree(const UniPoly& p);

// Substitutes y = 0 and renames x to the univariate variable.
UniPoly project_y0(const BiPoly& q);
// Exchanges the roles of x and y.
BiPoly swap_xy(const BiPoly& q);

// "1 + 4*z + 2*z^2": ascending powers, zero terms omitted, unit coefficients
// omitted on nonconstant terms. The zero polynomial renders as "0".
std::string to_text(const UniPoly& p, std::string_view var = "z");
std::string to_text(const BiPoly& q);

// JSON arrays of terms with decimal-string coefficients:
//   UniPoly: [{"d":2,"k":"2"}, ...]   BiPoly: [{"c":1,"d":0,"k":"2"}, ...]
std::string to_json(const UniPoly& p);
std::string to_json(const BiPoly& q);
UniPoly unipoly_from_json(std::string_view json);
BiPoly bipoly_from_json(std::string_view json);

}  // namespace hardsq
