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

#include "isocat/cocycle.hpp"

#include <algorithm>
#include <sstream>

#include "isocat/error.hpp"

namespace isocat {
namespace {

int mod(int v, int q) { return ((v % q) + q) % q; }

IntMatrix from_rows(const char* const rows[4]) {
  IntMatrix m(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m(i, j) = rows[i][j] - '0';
  }
  return m;
}

bool try_basis(const Subgroup& n, CocycleKind kind,
               const std::vector<Element>& basis, AbelianBasis* out) {
  const GroupTable& g = n.parent();
  const int o = factor_order(kind);
  const int size = dual_size(kind);
  if (static_cast<int>(basis.size()) != rank_of(kind) || n.order() != size) {
    return false;
  }
  for (Element b : basis) {
    if (!n.contains(b)) return false;
    for (Element c : basis) {
      if (g.mul(b, c) != g.mul(c, b)) return false;
    }
  }
  std::vector<int> index_of(g.order(), -1);
  std::vector<Element> element_at(size, -1);
  for (int idx = 0; idx < size; ++idx) {
    Element x = g.identity();
    for (int i = 0, rest = idx; i < rank_of(kind); ++i, rest /= o) {
      x = g.mul(x, g.power(basis[i], rest % o));
    }
    if (index_of[x] >= 0) return false;
    index_of[x] = idx;
    element_at[idx] = x;
  }
  if (out) {
    out->kind = kind;
    out->basis = basis;
    out->index_of = std::move(index_of);
    out->element_at = std::move(element_at);
  }
  return true;
}

bool search_basis(const Subgroup& n, CocycleKind kind, std::vector<Element>& partial,
                  AbelianBasis* out) {
  if (static_cast<int>(partial.size()) == rank_of(kind)) {
    return try_basis(n, kind, partial, out);
  }
  const GroupTable& g = n.parent();
  for (Element x : n.members()) {
    if (element_order(g, x) != factor_order(kind)) continue;
    if (std::find(partial.begin(), partial.end(), x) != partial.end()) continue;
    partial.push_back(x);
    if (search_basis(n, kind, partial, out)) return true;
    partial.pop_back();
  }
  return false;
}

}  // namespace

CocycleKind kind_of(const AbelianType& t) {
  if (t.factors == std::vector<int>{2, 2}) return CocycleKind::kC2xC2;
  if (t.factors == std::vector<int>{4, 4}) return CocycleKind::kC4xC4;
  if (t.factors == std::vector<int>{2, 2, 2, 2}) return CocycleKind::kC2x4;
  throw UnsupportedType("no non-degenerate cocycles handled for " + t.to_string());
}

AbelianType type_of(CocycleKind kind) {
  switch (kind) {
    case CocycleKind::kC2xC2: return {{2, 2}};
    case CocycleKind::kC4xC4: return {{4, 4}};
    case CocycleKind::kC2x4: return {{2, 2, 2, 2}};
  }
  return {};
}

int factor_order(CocycleKind kind) { return kind == CocycleKind::kC4xC4 ? 4 : 2; }

int rank_of(CocycleKind kind) { return kind == CocycleKind::kC2x4 ? 4 : 2; }

int dual_size(CocycleKind kind) {
  int s = 1;
  for (int i = 0; i < rank_of(kind); ++i) s *= factor_order(kind);
  return s;
}

DualChar AbelianBasis::coord(Element x) const {
  const int idx = index_of[x];
  if (idx < 0) throw Error("element " + std::to_string(x) + " is not in the subgroup");
  return dual_from_index(kind, idx);
}

AbelianBasis standard_basis(const Subgroup& n, const AbelianType& t) {
  const CocycleKind kind = kind_of(t);
  AbelianBasis b{n, kind, {}, {}, {}};
  std::vector<Element> partial;
  if (!search_basis(n, kind, partial, &b)) {
    throw TypeMismatch("subgroup is not of type " + t.to_string());
  }
  return b;
}

AbelianBasis make_basis(const Subgroup& n, const AbelianType& t,
                        std::vector<Element> basis) {
  const CocycleKind kind = kind_of(t);
  AbelianBasis b{n, kind, {}, {}, {}};
  for (Element x : basis) {
    if (element_order(n.parent(), x) != factor_order(kind)) {
      throw TypeMismatch("basis element of wrong order");
    }
  }
  if (!try_basis(n, kind, basis, &b)) {
    throw TypeMismatch("elements do not form a basis of type " + t.to_string());
  }
  return b;
}

DualChar dual_from_index(CocycleKind kind, int index) {
  const int o = factor_order(kind);
  DualChar s(rank_of(kind));
  for (int i = 0; i < rank_of(kind); ++i, index /= o) s(i) = index % o;
  return s;
}

int dual_index(CocycleKind kind, const DualChar& sigma) {
  const int o = factor_order(kind);
  int idx = 0;
  for (int i = rank_of(kind) - 1; i >= 0; --i) idx = idx * o + mod(sigma(i), o);
  return idx;
}

std::string CocycleRep::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case CocycleKind::kC2xC2: os << "C2xC2 k=" << k; break;
    case CocycleKind::kC4xC4: os << "C4xC4 k=" << k; break;
    case CocycleKind::kC2x4:
      os << "C2xC2xC2xC2";
      if (index) os << " #" << index;
      os << " lambda=";
      for (int i = 0; i < 4; ++i) {
        if (i) os << "/";
        for (int j = 0; j < 4; ++j) os << lambda(i, j);
      }
      break;
  }
  return os.str();
}

const std::vector<IntMatrix>& c2x4_census() {
  static const std::vector<IntMatrix> census = [] {
    static const char* const rows[28][4] = {
        {"0001", "0010", "0100", "1000"}, {"0001", "0010", "0101", "1010"},
        {"0001", "0011", "0100", "1100"}, {"0001", "0011", "0101", "1110"},
        {"0010", "0001", "1000", "0100"}, {"0010", "0001", "1001", "0110"},
        {"0010", "0011", "1100", "0100"}, {"0010", "0011", "1101", "0110"},
        {"0011", "0001", "1000", "1100"}, {"0011", "0001", "1001", "1110"},
        {"0011", "0010", "1100", "1000"}, {"0011", "0010", "1101", "1010"},
        {"0100", "1000", "0001", "0010"}, {"0100", "1001", "0001", "0110"},
        {"0100", "1010", "0101", "0010"}, {"0100", "1011", "0101", "0110"},
        {"0101", "1000", "0001", "1010"}, {"0101", "1001", "0001", "1110"},
        {"0101", "1010", "0100", "1000"}, {"0101", "1011", "0100", "1100"},
        {"0110", "1000", "1001", "0010"}, {"0110", "1001", "1000", "0100"},
        {"0110", "1010", "1101", "0010"}, {"0110", "1011", "1100", "0100"},
        {"0111", "1000", "1001", "1010"}, {"0111", "1001", "1000", "1100"},
        {"0111", "1010", "1100", "1000"}, {"0111", "1011", "1101", "1110"},
    };
    std::vector<IntMatrix> out;
    for (const auto& r : rows) out.push_back(from_rows(r));
    return out;
  }();
  return census;
}

CocycleRep cyclic_cocycle(CocycleKind kind, int k) {
  if (kind == CocycleKind::kC2x4) throw UnsupportedType("C2^4 cocycles use a matrix");
  return CocycleRep{kind, mod(k, factor_order(kind)), IntMatrix(), 0};
}

CocycleRep lambda_cocycle(const IntMatrix& lambda, int index) {
  if (lambda.rows() != 4 || lambda.cols() != 4) throw Error("lambda must be 4 x 4");
  return CocycleRep{CocycleKind::kC2x4, 1, reduce_mod(lambda, 2), index};
}

std::vector<CocycleRep> nondegenerate_reps(const AbelianType& t) {
  switch (kind_of(t)) {
    case CocycleKind::kC2xC2:
      return {cyclic_cocycle(CocycleKind::kC2xC2, 1)};
    case CocycleKind::kC4xC4:
      return {cyclic_cocycle(CocycleKind::kC4xC4, 1),
              cyclic_cocycle(CocycleKind::kC4xC4, 3)};
    case CocycleKind::kC2x4: {
      std::vector<CocycleRep> reps;
      const auto& census = c2x4_census();
      for (std::size_t i = 0; i < census.size(); ++i) {
        reps.push_back(lambda_cocycle(census[i], static_cast<int>(i) + 1));
      }
      return reps;
    }
  }
  return {};
}

int cocycle_value(const CocycleRep& w, const DualChar& sigma, const DualChar& tau) {
  const int o = factor_order(w.kind);
  if (w.kind != CocycleKind::kC2x4) return mod(w.k * sigma(0) * tau(1), o);
  int e = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) e += w.lambda(i, j) * sigma(i) * tau(j);
  }
  return mod(e, o);
}

int bicharacter_value(const CocycleRep& w, const DualChar& sigma,
                      const DualChar& tau) {
  return mod(cocycle_value(w, sigma, tau) - cocycle_value(w, tau, sigma),
             factor_order(w.kind));
}

IntMatrix bicharacter_matrix(const CocycleRep& w) {
  if (w.kind == CocycleKind::kC2x4) return w.lambda;
  IntMatrix b(2, 2);
  b << 0, w.k, -w.k, 0;
  return reduce_mod(b, factor_order(w.kind));
}

bool is_nondegenerate(const CocycleRep& w) {
  const int size = dual_size(w.kind);
  for (int s = 1; s < size; ++s) {
    const DualChar sigma = dual_from_index(w.kind, s);
    bool radical = true;
    for (int t = 0; t < size && radical; ++t) {
      radical = bicharacter_value(w, sigma, dual_from_index(w.kind, t)) == 0;
    }
    if (radical) return false;
  }
  return true;
}

ActionMatrix action_matrix(const GroupTable& g, const AbelianBasis& b, Element x) {
  const int r = rank_of(b.kind);
  ActionMatrix c(r, r);
  for (int j = 0; j < r; ++j) {
    const Element y = conjugate(g, x, b.basis[j]);
    if (b.index_of[y] < 0) throw NotNormal("subgroup is not normalized by element " + std::to_string(x));
    c.col(j) = b.coord(y);
  }
  return c.transpose();
}

bool is_g_invariant(const GroupTable& g, const AbelianBasis& b, const CocycleRep& w) {
  const int o = factor_order(w.kind);
  for (Element x = 0; x < g.order(); ++x) {
    const ActionMatrix a = action_matrix(g, b, x);
    if (w.kind == CocycleKind::kC2x4) {
      const IntMatrix lhs = a.transpose() * w.lambda * a;
      if (reduce_mod(lhs, 2) != w.lambda) return false;
    } else if (mod(w.k * det_mod(a, o), o) != mod(w.k, o)) {
      return false;
    }
  }
  return true;
}

}  // namespace isocat
