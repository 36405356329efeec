#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tutte/graph.hpp"
#include "tutte/matrix.hpp"
#include "tutte/partition.hpp"
#include "tutte/polynomial.hpp"
#include "tutte/polynomials.hpp"
#include "tutte/rational.hpp"
#include "tutte/reference.hpp"
#include "tutte/split.hpp"

namespace tutte::verify {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

inline bool all_ok(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.ok) return false;
  return true;
}

/// Reproduces the reference lattice matrices.
inline std::vector<CheckResult> fixture_checks() {
  std::vector<CheckResult> out;
  const RatMatrix a4 = build_An(4);
  out.push_back({"A_4 matches reference", a4 == reference::a4(), ""});
  out.push_back({"A_4^-1 matches reference B'_4", inverse(a4) == reference::a4_inverse(), ""});
  out.push_back({"L_2(x) matches reference", build_Ln_symbolic(2) == reference::l2(), ""});
  out.push_back({"L_3(x) matches reference", build_Ln_symbolic(3) == reference::l3(), ""});
  out.push_back({"L_2(x) D_2(x) = I", build_Ln_symbolic(2) * reference::d2() == PolyMatrix::identity(2), ""});
  out.push_back({"L_3(x) D_3(x) = I", build_Ln_symbolic(3) * reference::d3() == PolyMatrix::identity(5), ""});
  const RatMatrix l4 = build_Ln(4, Rational(1));
  out.push_back({"L_4(1) matches reference", l4 == reference::l4_at_one(), ""});
  out.push_back({"reference D_4 solves L_4(1) D L_4(1) = L_4(1)", is_one_inverse(l4, reference::d4()), ""});
  return out;
}

/// Evaluation points exercising every region for n terminals: 5 generic
/// points, 2 points on each singular hyperbola, 3 on x = 1, 3 on y = 1 and (1,1).
inline std::vector<std::pair<Rational, Rational>> sweep_points(std::size_t n) {
  std::vector<std::pair<Rational, Rational>> pts;
  const std::vector<std::pair<Rational, Rational>> generic_candidates{
      {Rational(2), Rational(3, 2)}, {Rational(1, 2), Rational(3)},  {Rational(2), Rational(5, 2)},
      {Rational(-1), Rational(1, 3)}, {Rational(3), Rational(-1)},   {Rational(7), Rational(9, 4)},
      {Rational(5, 3), Rational(-2, 7)}};
  std::size_t generic = 0;
  for (const auto& p : generic_candidates)
    if (generic < 5 && classify_region(n, p.first, p.second).kind == RegionKind::Generic) {
      pts.push_back(p);
      ++generic;
    }
  for (long q = 1; q < static_cast<long>(n); ++q) {
    pts.emplace_back(Rational(1 + q), Rational(2));
    pts.emplace_back(Rational(-1), Rational(1) - Rational(q, 2));
  }
  for (auto y : {Rational(2), Rational(-1), Rational(5, 3)}) pts.emplace_back(Rational(1), y);
  for (auto x : {Rational(2), Rational(0), Rational(7, 2)}) pts.emplace_back(x, Rational(1));
  pts.emplace_back(Rational(1), Rational(1));
  return pts;
}

/// split_eval against direct evaluation of the glued graph at every sweep point.
inline std::vector<CheckResult> sweep_checks(const SplitInstance& inst, const std::string& label,
                                             CoeffCache* cache = nullptr) {
  std::vector<CheckResult> out;
  const SplitTables tables(inst);
  const TuttePoly direct = tutte_dc(inst.glued());
  for (const auto& [x, y] : sweep_points(inst.terminals.size())) {
    const Region region = classify_region(inst.terminals.size(), x, y);
    const Rational expected = direct.evaluate(x, y);
    const Rational got = tables.evaluate(x, y, cache);
    out.push_back({label + " split at (" + x.to_string() + "," + y.to_string() + ") " + region.to_string(),
                   got == expected, "split " + got.to_string() + " direct " + expected.to_string()});
  }
  return out;
}

/// Identities that involve one graph only.
inline std::vector<CheckResult> graph_checks(const Multigraph& g, const std::string& label) {
  std::vector<CheckResult> out;
  const TuttePoly t = tutte_dc(g);
  if (g.edge_count() <= max_oracle_edges()) {
    out.push_back({label + " deletion-contraction = subset expansion", t == tutte_oracle(g), ""});
    const MultiPoly xm = MultiPoly::variable(Var::X) - MultiPoly(1);
    const MultiPoly lhs = forest_generating_poly(forest_counts(g), xm);
    const MultiPoly rhs = pow(xm, static_cast<unsigned>(g.components())) * substitute(t.poly, Var::Y, MultiPoly(1));
    out.push_back({label + " forest counts generate (x-1)^w T(x,1)", lhs == rhs, ""});
    out.push_back({label + " limit coefficient = forest polynomial", limit_lemma_check(g), ""});
  }
  out.push_back({label + " Negami-Tutte relation", negami_tutte_check(g), ""});
  return out;
}

namespace detail {

inline MultiPoly at_y_one(const TuttePoly& t) { return substitute(t.poly, Var::Y, MultiPoly(1)); }

}  // namespace detail

/// The auxiliary-polynomial identities with `part` playing K and `other`
/// playing H.
inline std::vector<CheckResult> aux_identity_checks(const Multigraph& part, const Multigraph& other,
                                                    const std::vector<std::string>& u, const std::string& label) {
  std::vector<CheckResult> out;
  const LatticeIndex lattice(u);
  const auto f_aux = aux_f_all(part);
  const auto t_aux = aux_T_all(part);
  const Multigraph g = glue(part, other, u);

  MultiPoly sum_f;
  MultiPoly sum_t;
  for (std::size_t a = 0; a < lattice.size(); ++a) {
    const Multigraph oa = other.identify(lattice[a]);
    sum_f += f_aux[a] * negami_recurrence(oa).poly;
    sum_t += t_aux[a] * detail::at_y_one(tutte_dc(oa));
  }
  out.push_back({label + " f(G) = sum_A f_A(K) f(H/A)", sum_f == negami_recurrence(g).poly, ""});
  out.push_back({label + " T(G;x,1) = sum_A T_A(K) T(H/A;x,1)", sum_t == detail::at_y_one(tutte_dc(g)), ""});

  bool f_ok = true;
  bool t_ok = true;
  bool lemma_ok = true;
  const bool connected = part.components() == 1;
  const PolyMatrix l = build_Ln_symbolic(lattice.n());
  for (std::size_t a = 0; a < lattice.size(); ++a) {
    const Multigraph pa = part.identify(lattice[a]);
    MultiPoly rhs_f;
    MultiPoly rhs_t;
    for (std::size_t b = 0; b < lattice.size(); ++b) {
      rhs_f += MultiPoly::variable(Var::T, static_cast<unsigned>(lattice.meet_blocks(a, b))) * f_aux[b];
      rhs_t += l(a, b) * t_aux[b];
    }
    f_ok = f_ok && negami_recurrence(pa).poly == rhs_f;
    if (connected) t_ok = t_ok && detail::at_y_one(tutte_dc(pa)) == rhs_t;
    lemma_ok = lemma_ok && limit_lemma_check(part, lattice[a]);
  }
  out.push_back({label + " f(K/A) = sum_B t^|A^B| f_B(K)", f_ok, ""});
  if (connected) out.push_back({label + " T(K/A;x,1) = sum_B l_AB(x) T_B(K)", t_ok, ""});
  out.push_back({label + " limit coefficient of f_A = T_A(s+1)", lemma_ok, ""});
  return out;
}

}  // namespace tutte::verify
