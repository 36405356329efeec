#pragma once

// Known lattice matrices for small terminal counts. The n = 4 matrices
// are given in the listing order of reference_listing_n4(); use
// from_listing_order() to move them into canonical lattice order. For n = 2
// and n = 3 the listing order already agrees with the canonical one (the
// matrices are invariant under permuting partitions of equal block count).

#include <cstddef>
#include <vector>

#include "tutte/matrix.hpp"
#include "tutte/partition.hpp"
#include "tutte/polynomial.hpp"
#include "tutte/rational.hpp"

namespace tutte::reference {

using IntRows = std::vector<std::vector<int>>;

inline RatMatrix from_ints(const IntRows& rows, long denominator = 1) {
  return RatMatrix::generate(rows.size(), rows.size(), [&](std::size_t i, std::size_t j) {
    return Rational(static_cast<long>(rows[i][j]), denominator);
  });
}

/// Conjugates a matrix given in the reference listing order into canonical order.
inline RatMatrix from_listing_order(const RatMatrix& listed) {
  const auto perm = reference_listing_permutation();
  RatMatrix out(listed.rows());
  for (std::size_t i = 0; i < listed.rows(); ++i)
    for (std::size_t j = 0; j < listed.cols(); ++j) out(perm[i], perm[j]) = listed(i, j);
  return out;
}

inline const IntRows& a4_listed() {
  static const IntRows rows{
      {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
      {1, 0, 1, 1, 1, 1, 1, 1, 0, 0, 1, 1, 0, 1, 0},
      {1, 1, 0, 1, 1, 1, 1, 1, 0, 1, 0, 0, 1, 1, 0},
      {1, 1, 1, 0, 1, 1, 1, 1, 1, 0, 0, 1, 1, 0, 0},
      {1, 1, 1, 1, 0, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0},
      {1, 1, 1, 1, 1, 0, 1, 1, 0, 1, 1, 1, 1, 0, 0},
      {1, 1, 1, 1, 1, 1, 0, 1, 1, 1, 0, 1, 0, 1, 0},
      {1, 1, 1, 1, 1, 1, 1, 0, 1, 0, 1, 0, 1, 1, 0},
      {1, 0, 0, 1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0},
      {1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
      {1, 1, 0, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0},
      {1, 1, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
      {1, 0, 1, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0},
      {1, 1, 1, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0},
      {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
  };
  return rows;
}

/// Entries of A_4^{-1}, scaled by 6.
inline const IntRows& a4_inverse_times6_listed() {
  static const IntRows rows{
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 6},
      {0, -1, -1, -1, -1, 1, 1, 1, -1, -1, 2, 2, -1, 2, -2},
      {0, -1, -1, -1, -1, 1, 1, 1, -1, 2, -1, -1, 2, 2, -2},
      {0, -1, -1, -1, -1, 1, 1, 1, 2, -1, -1, 2, 2, -1, -2},
      {0, -1, -1, -1, -1, 1, 1, 1, 2, 2, 2, -1, -1, -1, -2},
      {0, 1, 1, 1, 1, -1, -1, -1, -2, 1, 1, 1, 1, -2, -1},
      {0, 1, 1, 1, 1, -1, -1, -1, 1, 1, -2, 1, -2, 1, -1},
      {0, 1, 1, 1, 1, -1, -1, -1, 1, -2, 1, -2, 1, 1, -1},
      {0, -1, -1, 2, 2, -2, 1, 1, 2, -1, -1, -1, -1, -1, 1},
      {0, -1, 2, -1, 2, 1, 1, -2, -1, 2, -1, -1, -1, -1, 1},
      {0, 2, -1, -1, 2, 1, -2, 1, -1, -1, 2, -1, -1, -1, 1},
      {0, 2, -1, 2, -1, 1, 1, -2, -1, -1, -1, 2, -1, -1, 1},
      {0, -1, 2, 2, -1, 1, -2, 1, -1, -1, -1, -1, 2, -1, 1},
      {0, 2, 2, -1, -1, -2, 1, 1, -1, -1, -1, -1, -1, 2, 1},
      {6, -2, -2, -2, -2, -1, -1, -1, 1, 1, 1, 1, 1, 1, -1},
  };
  return rows;
}

inline const IntRows& l4_at_one_listed() {
  static const IntRows rows{
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 1, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 1, 0},
      {0, 0, 0, 1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 1, 0, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0},
      {0, 1, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 1, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0},
      {0, 1, 1, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0},
      {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
  };
  return rows;
}

/// A solution D_4 of L_4(1) D L_4(1) = L_4(1), scaled by 14.
inline const IntRows& d4_times14_listed() {
  static const IntRows rows{
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 14},
      {0, 0, 0, 0, 0, 0, 0, 0, -3, -3, 4, 4, -3, 4, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, -3, 4, -3, -3, 4, 4, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 4, -3, -3, 4, 4, -3, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 4, 4, 4, -3, -3, -3, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, -4, 3, 3, 3, 3, -4, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 3, 3, -4, 3, -4, 3, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 3, -4, 3, -4, 3, 3, 0},
      {0, -3, -3, 4, 4, -4, 3, 3, 0, 0, 0, 0, 0, 0, 0},
      {0, -3, 4, -3, 4, 3, 3, -4, 0, 0, 0, 0, 0, 0, 0},
      {0, 4, -3, -3, 4, 3, -4, 3, 0, 0, 0, 0, 0, 0, 0},
      {0, 4, -3, 4, -3, 3, 3, -4, 0, 0, 0, 0, 0, 0, 0},
      {0, -3, 4, 4, -3, 3, -4, 3, 0, 0, 0, 0, 0, 0, 0},
      {0, 4, 4, -3, -3, -4, 3, 3, 0, 0, 0, 0, 0, 0, 0},
      {14, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
  };
  return rows;
}

inline RatMatrix a4() { return from_listing_order(from_ints(a4_listed())); }
inline RatMatrix a4_inverse() { return from_listing_order(from_ints(a4_inverse_times6_listed(), 6)); }
inline RatMatrix l4_at_one() { return from_listing_order(from_ints(l4_at_one_listed())); }
inline RatMatrix d4() { return from_listing_order(from_ints(d4_times14_listed(), 14)); }

inline PolyMatrix l2() {
  const MultiPoly xm = MultiPoly::variable(Var::X) - MultiPoly(1);
  return {{MultiPoly(0), MultiPoly(1)}, {MultiPoly(1), xm}};
}

inline PolyMatrix l3() {
  const MultiPoly o(1), z(0);
  const MultiPoly xm = MultiPoly::variable(Var::X) - MultiPoly(1);
  return {
      {z, z, z, z, o},
      {z, z, o, o, xm},
      {z, o, z, o, xm},
      {z, o, o, z, xm},
      {o, xm, xm, xm, xm * xm},
  };
}

inline PolyMatrix d2() {
  const MultiPoly omx = MultiPoly(1) - MultiPoly::variable(Var::X);
  return {{omx, MultiPoly(1)}, {MultiPoly(1), MultiPoly(0)}};
}

inline PolyMatrix d3() {
  const MultiPoly omx = MultiPoly(1) - MultiPoly::variable(Var::X);
  const MultiPoly o(1), m(-1), z(0), two(2);
  PolyMatrix twice{
      {omx * omx, omx, omx, omx, two},
      {omx, m, o, o, z},
      {omx, o, m, o, z},
      {omx, o, o, m, z},
      {two, z, z, z, z},
  };
  return MultiPoly(Rational(1, 2)) * twice;
}

}  // namespace tutte::reference
