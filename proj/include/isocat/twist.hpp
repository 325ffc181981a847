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

#include <span>
#include <string>
#include <vector>

#include "isocat/cocycle.hpp"
#include "isocat/group.hpp"

namespace isocat {

/// Phases of 1-cochains are exponents of a primitive 2o-th root of unity,
/// o = factor_order. The finer unit is needed because xi can take square
/// roots of cocycle values.
int phase_modulus(CocycleKind kind);

/// xi_g(sigma) for every g and every character sigma (by dual index).
/// Constant on cosets of N; xi_e = 0.
struct XiTable {
  CocycleKind kind;
  int dual_size = 0;
  std::vector<int> values;

  int operator()(Element g, int sigma) const {
    return values[static_cast<std::size_t>(g) * dual_size + sigma];
  }
};

/// eta(g, h) in N for all pairs of elements.
struct EtaTable {
  int order = 0;
  std::vector<Element> values;

  Element operator()(Element g, Element h) const {
    return values[static_cast<std::size_t>(g) * order + h];
  }
};

/// rep[x] = least element id in the coset xN.
std::vector<Element> coset_representatives(const GroupTable& g, const Subgroup& n);

/// Closed form for C2xC2 and C4xC4, read off the entries of A(g).
XiTable xi_closed_form(const GroupTable& g, const AbelianBasis& b, const CocycleRep& w);
/// Solves the coboundary equation character by character; works for every
/// kind. Picks the lexicographically least solution with xi(0) = 0.
/// NotInvariant if no solution exists.
XiTable xi_solved(const GroupTable& g, const AbelianBasis& b, const CocycleRep& w);
/// Closed form where available, solver otherwise.
XiTable xi_table(const GroupTable& g, const AbelianBasis& b, const CocycleRep& w);

/// eta(g, h) from xi_g(e_i) xi_h(A(g) e_i) / xi_gh(e_i) on the basis
/// characters. NoSuchElement if a ratio is not a character value.
EtaTable eta_ratio(const GroupTable& g, const AbelianBasis& b, const XiTable& xi);
/// Closed form for C2xC2 and C4xC4 from the action matrices of g, h and gh.
/// OddNumerator if a numerator is odd.
EtaTable eta_closed_form(const GroupTable& g, const AbelianBasis& b,
                         const CocycleRep& w);

/// Checks xi_g(sigma) + xi_h(sigma^g) = <sigma, eta(g,h)> + xi_gh(sigma)
/// for all g, h, sigma. Returns the number of failing triples.
long functional_equation_failures(const GroupTable& g, const AbelianBasis& b,
                                  const XiTable& xi, const EtaTable& eta);

struct TwistedGroup {
  GroupTable table;
  std::string source;
  std::vector<Element> subgroup_basis;
  CocycleRep cocycle;
};

/// G^w on the ids of G with product (g, h) -> eta(g, h) g h. For the cyclic
/// kinds the closed-form and ratio-method eta tables must agree, otherwise
/// InvariantViolation.
TwistedGroup twisted_group(const GroupTable& g, const AbelianBasis& b,
                           const CocycleRep& w);
/// Same, from a precomputed eta table.
GroupTable twisted_table(const GroupTable& g, const EtaTable& eta, std::string name);

struct NamedElement {
  std::string name;
  Element id;
};

struct TwistRelation {
  std::string lhs;  // "a~ * b~"; names other than a letter and digits get parentheses
  std::string rhs;  // collected word in the generators, e.g. "x~^2 t~"
  // Exponents of the generators in the collected word.
  std::vector<int> exponents;
};

/// Products a~ * b~ in the twisted group for all ordered pairs of `gens`
/// and `extra`, written as the collected word g1~^e1 ... gk~^ek over `gens`
/// with least total exponent; ties go to the word putting more weight on
/// earlier generators (lexicographically greatest exponent vector).
std::vector<TwistRelation> twist_relations(const GroupTable& twisted,
                                           std::span<const NamedElement> gens,
                                           std::span<const NamedElement> extra = {});

}  // namespace isocat
