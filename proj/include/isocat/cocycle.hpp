// Copyright 2026 The isocat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Core>
#include <span>
#include <string>
#include <vector>

#include "isocat/group.hpp"

namespace isocat {

// Small integer matrices and vectors, at most 4 x 4.
template <typename Scalar>
using SmallMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, 0, 4, 4>;
template <typename Scalar>
using SmallVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1, 0, 4, 1>;

using IntMatrix = SmallMatrix<int>;
using DualChar = SmallVector<int>;
using ActionMatrix = IntMatrix;

/// Entrywise representative in [0, q).
template <typename Derived>
auto reduce_mod(const Eigen::MatrixBase<Derived>& m, typename Derived::Scalar q) {
  return m.unaryExpr([q](typename Derived::Scalar v) { return ((v % q) + q) % q; });
}

/// Determinant mod q by cofactor expansion over the integers (exact for the
/// small sizes used here).
template <typename Derived>
typename Derived::Scalar det_mod(const Eigen::MatrixBase<Derived>& m,
                                 typename Derived::Scalar q) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = m.rows();
  if (n == 0) return 1 % q;
  if (n == 1) return ((m(0, 0) % q) + q) % q;
  Scalar det = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    SmallMatrix<Scalar> minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r) {
      for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
        if (c != j) minor(r - 1, cc++) = m(r, c);
      }
    }
    const Scalar term = (m(0, j) % q) * det_mod(minor, q) % q;
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return ((det % q) + q) % q;
}

/// Rank over F2.
template <typename Derived>
int rank_mod2(const Eigen::MatrixBase<Derived>& m) {
  SmallMatrix<typename Derived::Scalar> a = reduce_mod(m, typename Derived::Scalar(2));
  int rank = 0;
  for (Eigen::Index col = 0; col < a.cols() && rank < a.rows(); ++col) {
    Eigen::Index pivot = rank;
    while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    a.row(pivot).swap(a.row(rank));
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (r != rank && a(r, col) != 0) {
        a.row(r) = reduce_mod(a.row(r) + a.row(rank), typename Derived::Scalar(2));
      }
    }
    ++rank;
  }
  return rank;
}

enum class CocycleKind { kC2xC2, kC4xC4, kC2x4 };

CocycleKind kind_of(const AbelianType& t);  // UnsupportedType otherwise
AbelianType type_of(CocycleKind kind);
/// Exponent of each cyclic factor: 2 or 4.
int factor_order(CocycleKind kind);
int rank_of(CocycleKind kind);
/// Number of characters: factor_order^rank.
int dual_size(CocycleKind kind);

/// Coordinates of a normal abelian subgroup N in a chosen basis.
struct AbelianBasis {
  Subgroup subgroup;
  CocycleKind kind;
  std::vector<Element> basis;
  // index_of[x] for x in N is sum_i c_i * o^i, -1 outside N.
  std::vector<int> index_of;
  // element_at[index] inverts index_of.
  std::vector<Element> element_at;

  DualChar coord(Element x) const;
};

/// Lexicographically least basis by element id. TypeMismatch if the
/// subgroup is not of type `t`.
AbelianBasis standard_basis(const Subgroup& n, const AbelianType& t);
/// Basis given explicitly; TypeMismatch unless it realizes the type.
AbelianBasis make_basis(const Subgroup& n, const AbelianType& t,
                        std::vector<Element> basis);

DualChar dual_from_index(CocycleKind kind, int index);
int dual_index(CocycleKind kind, const DualChar& sigma);

struct CocycleRep {
  CocycleKind kind;
  // Power of the cyclic cocycle for C2xC2 and C4xC4.
  int k = 1;
  // Symmetric, zero diagonal, for C2^4.
  IntMatrix lambda;
  // 1-based position in the C2^4 census, 0 when not from the census.
  int index = 0;

  std::string to_string() const;
};

/// The 28 C2^4 matrices in the order of the published census.
const std::vector<IntMatrix>& c2x4_census();

/// [2,2]: k=1. [4,4]: k=1,3. [2,2,2,2]: the 28 census entries.
std::vector<CocycleRep> nondegenerate_reps(const AbelianType& t);
CocycleRep cyclic_cocycle(CocycleKind kind, int k);
CocycleRep lambda_cocycle(const IntMatrix& lambda, int index = 0);

/// Exponent of omega(sigma, tau) as a power of a primitive o-th root of
/// unity, o = factor_order.
int cocycle_value(const CocycleRep& w, const DualChar& sigma, const DualChar& tau);
/// beta(sigma, tau) = omega(sigma, tau) / omega(tau, sigma), same units.
int bicharacter_value(const CocycleRep& w, const DualChar& sigma,
                      const DualChar& tau);
/// Matrix B with beta(sigma, tau) = sigma^T B tau mod o.
IntMatrix bicharacter_matrix(const CocycleRep& w);

/// Radical of beta is trivial, by exhaustive search over the dual.
bool is_nondegenerate(const CocycleRep& w);

/// A(g): the dual of g acts by sigma -> A(g) sigma (mod o). Column j of
/// A(g)^T is the coordinate vector of g b_j g^-1. NotNormal if N is not
/// normalized by g.
ActionMatrix action_matrix(const GroupTable& g, const AbelianBasis& b, Element x);

/// A(x)^T B A(x) = B (mod o) for every x in G.
bool is_g_invariant(const GroupTable& g, const AbelianBasis& b, const CocycleRep& w);

}  // namespace isocat
