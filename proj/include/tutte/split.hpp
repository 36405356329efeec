#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "tutte/error.hpp"
#include "tutte/graph.hpp"
#include "tutte/matrix.hpp"
#include "tutte/partition.hpp"
#include "tutte/polynomial.hpp"
#include "tutte/polynomials.hpp"
#include "tutte/rational.hpp"

namespace tutte {

// ---------------------------------------------------------------------------
// Lattice matrices

/// T_n(t): entry (i,j) = t^|γ_i ∧ γ_j| over the canonical order.
inline RatMatrix build_Tn(const LatticeIndex& lattice, const Rational& t) {
  std::vector<Rational> powers{Rational(1)};
  while (powers.size() <= lattice.n()) powers.push_back(powers.back() * t);
  return RatMatrix::generate(lattice.size(), lattice.size(),
                             [&](std::size_t i, std::size_t j) { return powers[lattice.meet_blocks(i, j)]; });
}

inline RatMatrix build_Tn(std::size_t n, const Rational& t) { return build_Tn(LatticeIndex::over_positions(n), t); }

inline PolyMatrix build_Tn_symbolic(std::size_t n) {
  const auto lattice = LatticeIndex::over_positions(n);
  return PolyMatrix::generate(lattice.size(), lattice.size(), [&](std::size_t i, std::size_t j) {
    return MultiPoly::variable(Var::T, static_cast<unsigned>(lattice.meet_blocks(i, j)));
  });
}

/// prod over partitions A of prod_{q < |A|} (t - q).
inline Rational det_Tn_closed_form(std::size_t n, const Rational& t) {
  const auto lattice = LatticeIndex::over_positions(n);
  Rational det(1);
  for (const auto& a : lattice.ordered())
    for (std::size_t q = 0; q < a.blocks(); ++q) det *= t - Rational(static_cast<long>(q));
  return det;
}

/// Connectivity matrix: 1 where the common coarsening is a single block.
inline RatMatrix build_An(std::size_t n) {
  const auto lattice = LatticeIndex::over_positions(n);
  return RatMatrix::generate(lattice.size(), lattice.size(), [&](std::size_t i, std::size_t j) {
    return Rational(lattice.meet_blocks(i, j) == 1 ? 1 : 0);
  });
}

namespace detail {

// l_AB is nonzero only when |A∧B| + n - |A| - |B| = 0; then it is (x-1)^(|A∧B|-1).
template <typename Scalar, typename PowerFn>
Matrix<Scalar> build_L(const LatticeIndex& lattice, PowerFn&& power) {
  const auto n = static_cast<long>(lattice.n());
  return Matrix<Scalar>::generate(lattice.size(), lattice.size(), [&](std::size_t i, std::size_t j) {
    const auto m = static_cast<long>(lattice.meet_blocks(i, j));
    const auto a = static_cast<long>(lattice[i].blocks());
    const auto b = static_cast<long>(lattice[j].blocks());
    return m + n - a - b == 0 ? power(static_cast<unsigned>(m - 1)) : Scalar(0);
  });
}

}  // namespace detail

inline RatMatrix build_Ln(std::size_t n, const Rational& x) {
  const Rational base = x - Rational(1);
  return detail::build_L<Rational>(LatticeIndex::over_positions(n),
                                   [&](unsigned e) { return pow(base, static_cast<long>(e)); });
}

inline PolyMatrix build_Ln_symbolic(std::size_t n) {
  const MultiPoly base = MultiPoly::variable(Var::X) - MultiPoly(1);
  return detail::build_L<MultiPoly>(LatticeIndex::over_positions(n), [&](unsigned e) { return pow(base, e); });
}

// ---------------------------------------------------------------------------
// Regions

enum class RegionKind { Generic, HyperbolaSingular, XOneLine, YOneLine, PointOneOne };

struct Region {
  RegionKind kind = RegionKind::Generic;
  long q = 0;  // the hyperbola level for HyperbolaSingular

  std::string to_string() const {
    switch (kind) {
      case RegionKind::Generic: return "generic";
      case RegionKind::HyperbolaSingular: return "hyperbola_singular(" + std::to_string(q) + ")";
      case RegionKind::XOneLine: return "x_one_line";
      case RegionKind::YOneLine: return "y_one_line";
      case RegionKind::PointOneOne: return "point_one_one";
    }
    return "?";
  }
  friend bool operator==(const Region&, const Region&) = default;
};

inline Region classify_region(std::size_t n, const Rational& x, const Rational& y) {
  const Rational one(1);
  if (x == one && y == one) return {RegionKind::PointOneOne, 0};
  if (x == one) return {RegionKind::XOneLine, 0};
  if (y == one) return {RegionKind::YOneLine, 0};
  const Rational t = (x - one) * (y - one);
  if (t.is_integer() && t >= one && t <= Rational(static_cast<long>(n) - 1))
    return {RegionKind::HyperbolaSingular, t.numerator().get_si()};
  return {RegionKind::Generic, 0};
}

inline bool needs_connected_parts(const Region& r) {
  return r.kind == RegionKind::XOneLine || r.kind == RegionKind::YOneLine || r.kind == RegionKind::PointOneOne;
}

// ---------------------------------------------------------------------------
// Coefficient synthesis

/// Memo of the base matrices (B_n(t), A_n^{-1}, D_n(x)) per (n, region, parameter).
class CoeffCache {
 public:
  template <typename F>
  RatMatrix get_or_compute(const std::string& key, F&& compute) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    RatMatrix m = compute();
    std::lock_guard lock(mutex_);
    return cache_.try_emplace(key, std::move(m)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<std::string, RatMatrix> cache_;
};

/// The region's base matrix: the solution of its defining matrix equation
/// (T_n(t) B T_n(t) = T_n(t), B' = A_n^{-1}, or L_n(x) D L_n(x) = L_n(x)).
inline RatMatrix base_matrix(std::size_t n, const Region& region, const Rational& x, const Rational& y,
                             CoeffCache* cache = nullptr) {
  auto compute = [&]() -> RatMatrix {
    switch (region.kind) {
      case RegionKind::Generic: {
        const Rational t = (x - Rational(1)) * (y - Rational(1));
        return inverse(build_Tn(n, t));
      }
      case RegionKind::HyperbolaSingular: {
        RatMatrix tn = build_Tn(n, Rational(region.q));
        RatMatrix b = one_inverse(tn);
        if (!is_one_inverse(tn, b)) throw Error(ErrorCode::SingularInverse, "{1}-inverse of T_n failed its check");
        return b;
      }
      case RegionKind::XOneLine: return inverse(build_An(n));
      case RegionKind::YOneLine:
      case RegionKind::PointOneOne: {
        RatMatrix ln = build_Ln(n, x);
        RatMatrix d = one_inverse(ln);
        if (!is_one_inverse(ln, d)) throw Error(ErrorCode::SingularInverse, "{1}-inverse of L_n failed its check");
        return d;
      }
    }
    throw Error(ErrorCode::RegionPrecondition, "unknown region");
  };
  if (!cache) return compute();
  std::string key = std::to_string(n) + "|" + region.to_string() + "|";
  switch (region.kind) {
    case RegionKind::Generic: key += ((x - Rational(1)) * (y - Rational(1))).to_string(); break;
    case RegionKind::YOneLine:
    case RegionKind::PointOneOne: key += x.to_string(); break;
    default: break;
  }
  return cache->get_or_compute(key, compute);
}

/// ω(K/A) + ω(H/B) - ω(G) for a pair of canonical indices.
using ConnectivityExponent = std::function<long(std::size_t, std::size_t)>;

/// Splitting coefficients c_AB at a point.
struct CoeffMatrix {
  std::size_t n = 0;
  Region region;
  std::vector<std::string> order;
  RatMatrix entries;
};

/// Applies the region's prefactors to a base matrix.
inline RatMatrix apply_prefactors(const LatticeIndex& lattice, const Region& region, const RatMatrix& base,
                                  const Rational& x, const Rational& y, const ConnectivityExponent& exponent) {
  const auto n = static_cast<long>(lattice.n());
  const Rational xm = x - Rational(1);
  const Rational ym = y - Rational(1);
  return RatMatrix::generate(base.rows(), base.cols(), [&](std::size_t i, std::size_t j) {
    const Rational& b = base(i, j);
    if (b.is_zero()) return Rational(0);
    const auto a_blocks = static_cast<long>(lattice[i].blocks());
    const auto b_blocks = static_cast<long>(lattice[j].blocks());
    switch (region.kind) {
      case RegionKind::Generic:
      case RegionKind::HyperbolaSingular: {
        const long conn = exponent ? exponent(i, j) : 1;
        return b * pow(xm, conn) * pow(ym, a_blocks + b_blocks - n);
      }
      case RegionKind::XOneLine: return b * pow(ym, a_blocks + b_blocks - n - 1);
      case RegionKind::YOneLine:
      case RegionKind::PointOneOne: return b;
    }
    return Rational(0);
  });
}

inline CoeffMatrix coeffs_at_point(std::size_t n, const Rational& x, const Rational& y,
                                   const ConnectivityExponent& exponent = nullptr, CoeffCache* cache = nullptr) {
  const auto lattice = LatticeIndex::over_positions(n);
  const Region region = classify_region(n, x, y);
  CoeffMatrix out{n, region, {}, apply_prefactors(lattice, region, base_matrix(n, region, x, y, cache), x, y, exponent)};
  for (const auto& p : lattice.ordered()) out.order.push_back(p.to_string());
  return out;
}

// ---------------------------------------------------------------------------
// Splitting evaluation

/// Tutte polynomials and component counts of every contraction K/A and H/B
/// of a split instance. Built once and evaluated at any number of points.
class SplitTables {
 public:
  explicit SplitTables(const SplitInstance& inst)
      : lattice_(inst.terminals),
        k_connected_(inst.k.components() == 1),
        h_connected_(inst.h.components() == 1),
        omega_g_(inst.glued().components()) {
    for (const auto& a : lattice_.ordered()) {
      Multigraph kq = inst.k.identify(a);
      Multigraph hq = inst.h.identify(a);
      k_poly_.push_back(tutte_dc(kq));
      h_poly_.push_back(tutte_dc(hq));
      k_omega_.push_back(kq.components());
      h_omega_.push_back(hq.components());
    }
  }

  const LatticeIndex& lattice() const { return lattice_; }
  std::size_t n() const { return lattice_.n(); }
  bool parts_connected() const { return k_connected_ && h_connected_; }

  /// sum_{A,B} c_AB T(K/A) T(H/B) with the region prefactors applied to `base`.
  Rational evaluate_with(const Rational& x, const Rational& y, const RatMatrix& base) const {
    const Region region = classify_region(n(), x, y);
    if (needs_connected_parts(region) && !parts_connected())
      throw Error(ErrorCode::RegionPrecondition, region.to_string() + " splitting needs connected parts");
    if (base.rows() != lattice_.size() || base.cols() != lattice_.size())
      throw Error(ErrorCode::DimensionMismatch, "base matrix does not match the lattice size");
    const RatMatrix c = apply_prefactors(lattice_, region, base, x, y, exponent());
    std::vector<Rational> kv, hv;
    for (std::size_t i = 0; i < lattice_.size(); ++i) {
      kv.push_back(k_poly_[i].evaluate(x, y));
      hv.push_back(h_poly_[i].evaluate(x, y));
    }
    Rational sum(0);
    for (std::size_t i = 0; i < lattice_.size(); ++i)
      for (std::size_t j = 0; j < lattice_.size(); ++j)
        if (!c(i, j).is_zero()) sum += c(i, j) * kv[i] * hv[j];
    return sum;
  }

  /// c_AB at a point for this instance.
  CoeffMatrix coefficients(const Rational& x, const Rational& y, CoeffCache* cache = nullptr) const {
    const Region region = classify_region(n(), x, y);
    if (needs_connected_parts(region) && !parts_connected())
      throw Error(ErrorCode::RegionPrecondition, region.to_string() + " splitting needs connected parts");
    const RatMatrix base = base_matrix(n(), region, x, y, cache);
    CoeffMatrix out{n(), region, {}, apply_prefactors(lattice_, region, base, x, y, exponent())};
    for (const auto& p : lattice_.ordered()) out.order.push_back(p.to_string());
    return out;
  }

  Rational evaluate(const Rational& x, const Rational& y, CoeffCache* cache = nullptr) const {
    const Region region = classify_region(n(), x, y);
    if (needs_connected_parts(region) && !parts_connected())
      throw Error(ErrorCode::RegionPrecondition, region.to_string() + " splitting needs connected parts");
    return evaluate_with(x, y, base_matrix(n(), region, x, y, cache));
  }

 private:
  ConnectivityExponent exponent() const {
    return [this](std::size_t i, std::size_t j) {
      return static_cast<long>(k_omega_[i] + h_omega_[j]) - static_cast<long>(omega_g_);
    };
  }

  LatticeIndex lattice_;
  bool k_connected_;
  bool h_connected_;
  std::size_t omega_g_;
  std::vector<TuttePoly> k_poly_, h_poly_;
  std::vector<std::size_t> k_omega_, h_omega_;
};

/// Splitting evaluation with a caller-chosen solution `base` of the region's
/// defining matrix equation.
inline Rational split_eval_with(const SplitInstance& inst, const Rational& x, const Rational& y, const RatMatrix& base) {
  return SplitTables(inst).evaluate_with(x, y, base);
}

inline Rational split_eval(const SplitInstance& inst, const Rational& x, const Rational& y, CoeffCache* cache = nullptr) {
  return SplitTables(inst).evaluate(x, y, cache);
}

/// The four-term 2-sum formula with denominator (x-1)(y-1) - 1.
inline Rational brylawski_eval(const SplitInstance& inst, const Rational& x, const Rational& y) {
  if (inst.terminals.size() != 2) throw Error(ErrorCode::OutOfRange, "the four-term formula needs exactly 2 terminals");
  if (inst.k.components() != 1 || inst.h.components() != 1)
    throw Error(ErrorCode::RegionPrecondition, "the four-term formula needs connected parts");
  const Rational xm = x - Rational(1);
  const Rational ym = y - Rational(1);
  const Rational denom = xm * ym - Rational(1);
  if (denom.is_zero()) throw Error(ErrorCode::OnSingularHyperbola, "(x-1)(y-1) = 1");
  const Partition whole = Partition::minimal(inst.terminals);
  const Rational tk = tutte_value(inst.k, x, y);
  const Rational th = tutte_value(inst.h, x, y);
  const Rational tka = tutte_value(inst.k.identify(whole), x, y);
  const Rational tha = tutte_value(inst.h.identify(whole), x, y);
  return (ym * tk * th - tk * tha - tka * th + xm * tka * tha) / denom;
}

// ---------------------------------------------------------------------------
// Solution-space structure

/// |Γ|^2 - (sum_{i<=t} S(n,i))^2 for t in {0..n-1}; 0 otherwise.
inline std::uint64_t solution_dim_formula(std::size_t n, const Rational& t) {
  if (!t.is_integer() || t.sign() < 0 || t >= Rational(static_cast<long>(n))) return 0;
  const auto q = static_cast<std::size_t>(t.numerator().get_ui());
  const std::uint64_t size = bell(n);
  std::uint64_t r = 0;
  for (std::size_t i = 0; i <= q; ++i) r += stirling2(n, i);
  return size * size - r * r;
}

inline bool ln_invertibility(std::size_t n, const Rational& x) {
  const RatMatrix l = build_Ln(n, x);
  return rank(l) == l.rows();
}

/// Two different solutions of L_n(x) D L_n(x) = L_n(x): the deterministic
/// {1}-inverse and the one obtained by setting one entry of its free block.
inline std::pair<RatMatrix, RatMatrix> two_solutions_demo(std::size_t n, const Rational& x) {
  const RatMatrix l = build_Ln(n, x);
  const auto dec = rank_decomposition(l);
  const std::size_t free = l.rows() - dec.rank;
  if (free == 0) throw Error(ErrorCode::OutOfRange, "L_n(x) is invertible; the solution is unique");
  RatMatrix block(free);
  RatMatrix first = one_inverse_with_free_block(dec, block);
  block(0, 0) = Rational(1);
  RatMatrix second = one_inverse_with_free_block(dec, block);
  return {std::move(first), std::move(second)};
}

}  // namespace tutte
