#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tutte/error.hpp"
#include "tutte/rational.hpp"

namespace tutte {

/// The fixed global variable order. Monomials compare lexicographically over it.
enum class Var : std::size_t { T = 0, X = 1, Y = 2, Zeta = 3, S = 4 };

inline constexpr std::size_t kNumVars = 5;
inline constexpr std::array<Var, kNumVars> kAllVars{Var::T, Var::X, Var::Y, Var::Zeta, Var::S};

constexpr std::string_view var_name(Var v) {
  constexpr std::array<std::string_view, kNumVars> names{"t", "x", "y", "zeta", "s"};
  return names[static_cast<std::size_t>(v)];
}

inline std::optional<Var> var_from_name(std::string_view name) {
  for (Var v : kAllVars)
    if (var_name(v) == name) return v;
  return std::nullopt;
}

using Monomial = std::array<unsigned, kNumVars>;

/// Point assignment for evaluation. Unset entries are "not assigned".
class Assignment {
 public:
  Assignment() = default;
  Assignment(std::initializer_list<std::pair<Var, Rational>> init) {
    for (const auto& [v, r] : init) set(v, r);
  }
  Assignment& set(Var v, Rational r) {
    values_[static_cast<std::size_t>(v)] = std::move(r);
    return *this;
  }
  const std::optional<Rational>& get(Var v) const { return values_[static_cast<std::size_t>(v)]; }

 private:
  std::array<std::optional<Rational>, kNumVars> values_{};
};

/// Sparse multivariate polynomial with rational coefficients in the variables
/// t, x, y, zeta, s. Zero coefficients are never stored, so structural
/// equality of the term maps is polynomial equality.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Rational>;

  MultiPoly() = default;
  MultiPoly(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
  }
  MultiPoly(int c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static MultiPoly variable(Var v, unsigned power = 1) { return monomial(Rational(1), v, power); }

  static MultiPoly monomial(const Rational& c, Var v, unsigned power = 1) {
    Monomial m{};
    m[static_cast<std::size_t>(v)] = power;
    return term(c, m);
  }

  static MultiPoly term(const Rational& c, const Monomial& m) {
    MultiPoly p;
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Variables that occur with a positive exponent, in global order.
  std::vector<Var> variables() const {
    std::array<bool, kNumVars> used{};
    for (const auto& [m, c] : terms_)
      for (std::size_t i = 0; i < kNumVars; ++i) used[i] = used[i] || m[i] > 0;
    std::vector<Var> out;
    for (std::size_t i = 0; i < kNumVars; ++i)
      if (used[i]) out.push_back(static_cast<Var>(i));
    return out;
  }

  unsigned degree(Var v) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[static_cast<std::size_t>(v)]);
    return d;
  }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Rational constant_term() const { return coefficient(Monomial{}); }

  void add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly& operator*=(const Rational& r) {
    if (r.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= r;
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(MultiPoly a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
  }
  friend MultiPoly operator*(MultiPoly a, const Rational& r) { return a *= r; }
  friend MultiPoly operator*(const Rational& r, MultiPoly a) { return a *= r; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m;
        for (std::size_t i = 0; i < kNumVars; ++i) m[i] = ma[i] + mb[i];
        out.add_term(m, ca * cb);
      }
    return out;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

  friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

 private:
  Terms terms_;
};

inline MultiPoly pow(const MultiPoly& base, unsigned exponent) {
  MultiPoly result(1);
  MultiPoly b = base;
  while (exponent) {
    if (exponent & 1U) result *= b;
    exponent >>= 1;
    if (exponent) b *= b;
  }
  return result;
}

/// Exact evaluation. Throws MissingVariable when a variable that occurs in `p`
/// has no value in `a`.
inline Rational evaluate(const MultiPoly& p, const Assignment& a) {
  for (Var v : p.variables())
    if (!a.get(v)) throw Error(ErrorCode::MissingVariable, std::string(var_name(v)) + " is not assigned");
  Rational sum(0);
  for (const auto& [m, c] : p.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < kNumVars; ++i)
      if (m[i]) term *= pow(*a.get(static_cast<Var>(i)), static_cast<long>(m[i]));
    sum += term;
  }
  return sum;
}

/// Simultaneous substitution: every variable with an entry in `images` is
/// replaced by its image; other variables are kept.
inline MultiPoly substitute(const MultiPoly& p,
                            const std::array<std::optional<MultiPoly>, kNumVars>& images) {
  // Powers of each image are reused across terms.
  std::array<std::vector<MultiPoly>, kNumVars> powers;
  auto power_of = [&](std::size_t i, unsigned e) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.emplace_back(1);
    while (cache.size() <= e) cache.push_back(cache.back() * *images[i]);
    return cache[e];
  };
  MultiPoly out;
  for (const auto& [m, c] : p.terms()) {
    Monomial kept{};
    MultiPoly factor(c);
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (images[i]) {
        if (m[i]) factor *= power_of(i, m[i]);
      } else {
        kept[i] = m[i];
      }
    }
    out += factor * MultiPoly::term(Rational(1), kept);
  }
  return out;
}

inline MultiPoly substitute(const MultiPoly& p, Var v, const MultiPoly& image) {
  std::array<std::optional<MultiPoly>, kNumVars> images;
  images[static_cast<std::size_t>(v)] = image;
  return substitute(p, images);
}

/// Coefficient of v^k, as a polynomial in the remaining variables.
inline MultiPoly coefficient(const MultiPoly& p, Var v, unsigned k) {
  const auto idx = static_cast<std::size_t>(v);
  MultiPoly out;
  for (const auto& [m, c] : p.terms()) {
    if (m[idx] != k) continue;
    Monomial rest = m;
    rest[idx] = 0;
    out.add_term(rest, c);
  }
  return out;
}

namespace detail {

// Display order: (x,y)-degree descending, then x-degree descending, then the
// remaining variables (t, zeta, s) by descending exponent.
inline bool display_before(const Monomial& a, const Monomial& b) {
  auto key = [](const Monomial& m) {
    return std::array<unsigned, 5>{m[1] + m[2], m[1], m[0], m[3], m[4]};
  };
  return key(a) > key(b);
}

}  // namespace detail

inline std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Rational>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return detail::display_before(a.first, b.first); });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : sorted) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    std::string vars;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (!m[i]) continue;
      if (!vars.empty()) vars += "*";
      vars += var_name(static_cast<Var>(i));
      if (m[i] > 1) vars += "^" + std::to_string(m[i]);
    }
    if (vars.empty()) {
      out += mag.to_string();
    } else if (mag == Rational(1)) {
      out += vars;
    } else {
      out += mag.to_string() + "*" + vars;
    }
  }
  return out;
}

}  // namespace tutte
