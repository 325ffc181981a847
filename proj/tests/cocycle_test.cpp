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

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <random>
#include <set>

#include "isocat/cocycle.hpp"
#include "isocat/error.hpp"
#include "isocat/presentation.hpp"
#include "oracles.hpp"
#include "reference.hpp"

namespace isocat {
namespace {

using testing::corpus_group;

constexpr const char* kPairGroup = "1-19-44-0-0-0-0_5";

std::vector<Element> elements(const GroupTable& g, std::initializer_list<const char*> words) {
  std::vector<Element> out;
  for (const char* w : words) out.push_back(evaluate(g, parse_word(w, 6)));
  return out;
}

AbelianBasis basis_of(const GroupTable& g, std::initializer_list<const char*> words) {
  const std::vector<Element> gens = elements(g, words);
  const Subgroup n = generated_subgroup(g, gens);
  return make_basis(n, *abelian_type(n), gens);
}

std::vector<DualChar> all_chars(CocycleKind kind) {
  std::vector<DualChar> out;
  for (int s = 0; s < dual_size(kind); ++s) out.push_back(dual_from_index(kind, s));
  return out;
}

// Determinant over F2 by the permutation expansion.
int det_f2(const IntMatrix& m) {
  std::array<int, 4> p = {0, 1, 2, 3};
  int det = 0;
  do {
    int term = 1;
    for (int i = 0; i < 4; ++i) term &= m(i, p[i]) & 1;
    det ^= term;
  } while (std::next_permutation(p.begin(), p.end()));
  return det;
}

std::string key(const IntMatrix& m) {
  std::string s;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) s += static_cast<char>('0' + m(i, j));
  }
  return s;
}

// Non-zero sigma pairing trivially with the whole dual.
bool radical_is_trivial(const CocycleRep& w) {
  const auto chars = all_chars(w.kind);
  for (std::size_t s = 1; s < chars.size(); ++s) {
    bool in_radical = true;
    for (const auto& t : chars) in_radical = in_radical && bicharacter_value(w, chars[s], t) == 0;
    if (in_radical) return false;
  }
  return true;
}

std::vector<CocycleRep> every_rep_tried() {
  std::vector<CocycleRep> out;
  for (int k = 0; k < 2; ++k) out.push_back(cyclic_cocycle(CocycleKind::kC2xC2, k));
  for (int k = 0; k < 4; ++k) out.push_back(cyclic_cocycle(CocycleKind::kC4xC4, k));
  for (const auto& m : testing::all_zero_diagonal_symmetric()) out.push_back(lambda_cocycle(m));
  return out;
}

TEST(Census, CountsPerType) {
  EXPECT_EQ(nondegenerate_reps(AbelianType{{2, 2}}).size(), 1u);
  const auto c4 = nondegenerate_reps(AbelianType{{4, 4}});
  ASSERT_EQ(c4.size(), 2u);
  EXPECT_EQ(c4[0].k, 1);
  EXPECT_EQ(c4[1].k, 3);
  EXPECT_EQ(nondegenerate_reps(AbelianType{{2, 2, 2, 2}}).size(), 28u);
  EXPECT_THROW(nondegenerate_reps(AbelianType{{2, 2, 4}}), UnsupportedType);
  EXPECT_THROW(nondegenerate_reps(AbelianType{{2}}), UnsupportedType);
}

TEST(Census, EqualsFullRankZeroDiagonalSymmetricMatrices) {
  std::set<std::string> brute;
  for (const auto& m : testing::all_zero_diagonal_symmetric()) {
    if (det_f2(m) == 1) brute.insert(key(m));
  }
  EXPECT_EQ(brute.size(), 28u);
  std::set<std::string> census;
  for (const auto& m : c2x4_census()) {
    EXPECT_EQ(m, m.transpose());
    EXPECT_EQ(m.diagonal(), IntMatrix::Zero(4, 1));
    census.insert(key(m));
  }
  EXPECT_EQ(census, brute);
}

TEST(Census, IndicesFollowPrintedOrder) {
  const auto reps = nondegenerate_reps(AbelianType{{2, 2, 2, 2}});
  for (std::size_t i = 0; i < reps.size(); ++i) EXPECT_EQ(reps[i].index, static_cast<int>(i) + 1);
}

TEST(CocycleValue, FirstCensusEntry) {
  const IntMatrix& m = c2x4_census()[0];
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) EXPECT_EQ(m(i, j), i + j == 3 ? 1 : 0);
  }
  const CocycleRep w = nondegenerate_reps(AbelianType{{2, 2, 2, 2}})[0];
  for (const auto& s : all_chars(CocycleKind::kC2x4)) {
    for (const auto& t : all_chars(CocycleKind::kC2x4)) {
      EXPECT_EQ(cocycle_value(w, s, t), (s(0) * t(3) + s(1) * t(2)) % 2);
    }
  }
}

TEST(CocycleValue, SecondCensusEntry) {
  const CocycleRep w = nondegenerate_reps(AbelianType{{2, 2, 2, 2}})[1];
  DualChar e3 = DualChar::Zero(4), e4 = DualChar::Zero(4);
  e3(2) = 1;
  e4(3) = 1;
  EXPECT_EQ(cocycle_value(w, e3, e4), 1);
  for (const auto& s : all_chars(CocycleKind::kC2x4)) {
    for (const auto& t : all_chars(CocycleKind::kC2x4)) {
      EXPECT_EQ(cocycle_value(w, s, t), (s(0) * t(3) + s(1) * t(2) + s(2) * t(3)) % 2);
    }
  }
}

TEST(CocycleValue, CyclicFormulas) {
  DualChar s(2), t(2);
  s << 1, 0;
  t << 0, 1;
  EXPECT_EQ(cocycle_value(cyclic_cocycle(CocycleKind::kC4xC4, 1), s, t), 1);
  EXPECT_EQ(cocycle_value(cyclic_cocycle(CocycleKind::kC4xC4, 3), s, t), 3);
  EXPECT_EQ(cocycle_value(cyclic_cocycle(CocycleKind::kC2xC2, 1), s, t), 1);
  for (const auto& w : every_rep_tried()) {
    const DualChar zero = DualChar::Zero(rank_of(w.kind));
    for (const auto& u : all_chars(w.kind)) {
      EXPECT_EQ(cocycle_value(w, zero, u), 0);
      EXPECT_EQ(cocycle_value(w, u, zero), 0);
    }
  }
}

// w(s,t) + w(s+t,u) = w(t,u) + w(s,t+u) on every triple.
TEST(CocycleValue, CocycleIdentity) {
  for (const auto& w : every_rep_tried()) {
    const int o = factor_order(w.kind);
    const auto chars = all_chars(w.kind);
    long failures = 0;
    for (const auto& s : chars) {
      for (const auto& t : chars) {
        for (const auto& u : chars) {
          const DualChar st = reduce_mod(DualChar(s + t), o);
          const DualChar tu = reduce_mod(DualChar(t + u), o);
          const int lhs = cocycle_value(w, s, t) + cocycle_value(w, st, u);
          const int rhs = cocycle_value(w, t, u) + cocycle_value(w, s, tu);
          failures += ((lhs - rhs) % o + o) % o != 0;
        }
      }
    }
    EXPECT_EQ(failures, 0) << w.to_string();
  }
}

TEST(Bicharacter, SkewAndAlternating) {
  for (const auto& w : every_rep_tried()) {
    const int o = factor_order(w.kind);
    const IntMatrix b = bicharacter_matrix(w);
    for (const auto& s : all_chars(w.kind)) {
      EXPECT_EQ(bicharacter_value(w, s, s), 0);
      for (const auto& t : all_chars(w.kind)) {
        EXPECT_EQ((bicharacter_value(w, s, t) + bicharacter_value(w, t, s)) % o, 0);
        const int diff = cocycle_value(w, s, t) - cocycle_value(w, t, s);
        EXPECT_EQ(bicharacter_value(w, s, t), (diff % o + o) % o);
        EXPECT_EQ(bicharacter_value(w, s, t), static_cast<int>((s.transpose() * b * t)(0, 0) % o + o) % o);
      }
    }
  }
}

TEST(Nondegenerate, AgreesWithRadicalAndRank) {
  for (const auto& w : every_rep_tried()) {
    EXPECT_EQ(is_nondegenerate(w), radical_is_trivial(w)) << w.to_string();
    if (w.kind == CocycleKind::kC2x4) EXPECT_EQ(is_nondegenerate(w), rank_mod2(w.lambda) == 4);
  }
  EXPECT_FALSE(is_nondegenerate(cyclic_cocycle(CocycleKind::kC4xC4, 0)));
  EXPECT_FALSE(is_nondegenerate(cyclic_cocycle(CocycleKind::kC4xC4, 2)));
  DualChar s(2);
  s << 2, 0;
  for (const auto& t : all_chars(CocycleKind::kC4xC4)) {
    EXPECT_EQ(bicharacter_value(cyclic_cocycle(CocycleKind::kC4xC4, 2), s, t), 0);
  }
  for (const auto& t : {AbelianType{{2, 2}}, AbelianType{{4, 4}}, AbelianType{{2, 2, 2, 2}}}) {
    for (const auto& w : nondegenerate_reps(t)) EXPECT_TRUE(is_nondegenerate(w));
  }
}

TEST(Nondegenerate, NoAlternatingFormOnC4xC2xC2) {
  EXPECT_EQ(testing::count_nondegenerate_alternating({2, 2}), 1);
  EXPECT_EQ(testing::count_nondegenerate_alternating({4, 4}), 2);
  EXPECT_EQ(testing::count_nondegenerate_alternating({2, 2, 2, 2}), 28);
  EXPECT_EQ(testing::count_nondegenerate_alternating({4, 2, 2}), 0);
}

TEST(MatrixHelpers, TemplatedOnScalar) {
  SmallMatrix<long long> a(2, 2);
  a << 5, -3, 7, 10;
  EXPECT_EQ(reduce_mod(a, 4LL)(0, 1), 1);
  EXPECT_EQ(det_mod(a, 4LL), (5 * 10 + 3 * 7) % 4);
  IntMatrix b(3, 3);
  b << 1, 1, 0, 0, 1, 1, 1, 0, 1;
  EXPECT_EQ(det_mod(b, 2), 0);
  EXPECT_EQ(rank_mod2(b), 2);
  EXPECT_EQ(rank_mod2(IntMatrix::Identity(4, 4)), 4);
}

TEST(Dual, IndexRoundTrip) {
  for (auto kind : {CocycleKind::kC2xC2, CocycleKind::kC4xC4, CocycleKind::kC2x4}) {
    for (int s = 0; s < dual_size(kind); ++s) EXPECT_EQ(dual_index(kind, dual_from_index(kind, s)), s);
  }
  EXPECT_EQ(dual_size(CocycleKind::kC4xC4), 16);
  EXPECT_EQ(dual_size(CocycleKind::kC2x4), 16);
}

void expect_coordinates(const AbelianBasis& b) {
  const int o = factor_order(b.kind);
  std::set<int> seen;
  for (Element x : b.subgroup.members()) {
    ASSERT_GE(b.index_of[x], 0);
    seen.insert(b.index_of[x]);
    EXPECT_EQ(b.element_at[b.index_of[x]], x);
    for (Element y : b.subgroup.members()) {
      const GroupTable& g = b.subgroup.parent();
      EXPECT_EQ(b.coord(g.mul(x, y)), reduce_mod(DualChar(b.coord(x) + b.coord(y)), o));
    }
  }
  EXPECT_EQ(static_cast<int>(seen.size()), dual_size(b.kind));
}

TEST(Basis, KleinFour) {
  const GroupTable g = testing::group_from_text(
      "group V\ngens 2\nrel f1^2\nrel f2^2\nrel f1f2f1^-1f2^-1\n");
  const Subgroup n = generated_subgroup(g, g.gen_ids());
  const AbelianBasis b = standard_basis(n, AbelianType{{2, 2}});
  EXPECT_EQ(b.basis, (std::vector<Element>{1, 2}));
  DualChar one(2);
  one << 1, 1;
  EXPECT_EQ(b.coord(g.mul(1, 2)), one);
  expect_coordinates(b);
}

TEST(Basis, CorpusSubgroupsAreBijective) {
  const GroupTable c4c4_group = corpus_group("1-3-12-16-32-0-0_2");
  expect_coordinates(basis_of(c4c4_group, {"f2", "f5"}));
  const GroupTable pg = corpus_group(kPairGroup);
  expect_coordinates(basis_of(pg, {"f3", "f4", "f5", "f6"}));
  expect_coordinates(basis_of(pg, {"f1f4", "f2"}));
  for (const auto& c : enumerate_candidate_subgroups(pg)) expect_coordinates(standard_basis(c.subgroup, c.type));
}

TEST(Basis, TypeMismatch) {
  const GroupTable pg = corpus_group(kPairGroup);
  const std::vector<Element> gens = elements(pg, {"f1f4", "f2"});
  const Subgroup n = generated_subgroup(pg, gens);
  EXPECT_THROW(standard_basis(n, AbelianType{{2, 2, 2, 2}}), TypeMismatch);
  EXPECT_THROW(make_basis(n, AbelianType{{4, 4}}, {gens[0], gens[0]}), TypeMismatch);
  EXPECT_THROW(make_basis(n, AbelianType{{4, 4}}, {gens[0]}), TypeMismatch);
}

TEST(ActionMatrix, IdentityAndCentralElements) {
  const GroupTable pg = corpus_group(kPairGroup);
  const Subgroup z_pg = center(pg);
  for (const auto& c : enumerate_candidate_subgroups(pg)) {
    const AbelianBasis b = standard_basis(c.subgroup, c.type);
    const int r = rank_of(b.kind);
    EXPECT_EQ(action_matrix(pg, b, pg.identity()), IntMatrix::Identity(r, r));
    for (Element z : z_pg.members()) EXPECT_EQ(action_matrix(pg, b, z), IntMatrix::Identity(r, r));
  }
}

TEST(ActionMatrix, NotNormal) {
  const GroupTable pg = corpus_group(kPairGroup);
  for (Element x = 1; x < pg.order(); ++x) {
    for (Element y = 1; y < pg.order(); ++y) {
      const Element gens[] = {x, y};
      const Subgroup h = generated_subgroup(pg, gens);
      const auto t = abelian_type(h);
      if (!t || *t != AbelianType{{2, 2}} || is_normal(pg, h)) continue;
      const AbelianBasis b = standard_basis(h, *t);
      bool threw = false;
      for (Element g = 0; g < pg.order() && !threw; ++g) {
        try {
          action_matrix(pg, b, g);
        } catch (const NotNormal&) {
          threw = true;
        }
      }
      EXPECT_TRUE(threw);
      return;
    }
  }
  FAIL() << "no non-normal Klein subgroup found";
}

// sigma^g = A(g) sigma against characters moved by explicit conjugation,
// and the composition law A(gh) = A(h) A(g) on 100 random pairs.
TEST(ActionMatrix, ConjugationOracle) {
  std::mt19937 rng(11);
  for (const char* stem : {kPairGroup, "1-31-32-0-0-0-0_5", "1-3-12-16-32-0-0_2"}) {
    const GroupTable g = corpus_group(stem);
    for (const auto& c : enumerate_candidate_subgroups(g)) {
      const AbelianBasis b = standard_basis(c.subgroup, c.type);
      const int o = factor_order(b.kind);
      for (Element x = 0; x < g.order(); ++x) {
        const std::vector<int> moved = testing::dual_action_oracle(g, b, x);
        const ActionMatrix a = action_matrix(g, b, x);
        for (int s = 0; s < dual_size(b.kind); ++s) {
          EXPECT_EQ(dual_index(b.kind, reduce_mod(DualChar(a * dual_from_index(b.kind, s)), o)), moved[s]);
        }
      }
      std::uniform_int_distribution<Element> pick(0, g.order() - 1);
      for (int i = 0; i < 100; ++i) {
        const Element x = pick(rng), y = pick(rng);
        const IntMatrix lhs = action_matrix(g, b, g.mul(x, y));
        const IntMatrix rhs = reduce_mod(IntMatrix(action_matrix(g, b, y) * action_matrix(g, b, x)), o);
        EXPECT_EQ(lhs, rhs);
        EXPECT_EQ(det_mod(lhs, o), det_mod(action_matrix(g, b, x), o) * det_mod(action_matrix(g, b, y), o) % o);
      }
    }
  }
}

TEST(Invariance, PairGroupExamples) {
  const GroupTable pg = corpus_group(kPairGroup);
  const AbelianBasis b = basis_of(pg, {"f1f4", "f2"});
  for (Element x = 0; x < pg.order(); ++x) EXPECT_EQ(det_mod(action_matrix(pg, b, x), 4), 1);
  EXPECT_TRUE(is_g_invariant(pg, b, cyclic_cocycle(CocycleKind::kC4xC4, 1)));
  EXPECT_FALSE(is_g_invariant(pg, basis_of(pg, {"f1f3f4f6", "f2"}), cyclic_cocycle(CocycleKind::kC4xC4, 1)));
  const AbelianBasis b16 = basis_of(pg, {"f3", "f4", "f5", "f6"});
  std::vector<int> invariant;
  for (const auto& w : nondegenerate_reps(AbelianType{{2, 2, 2, 2}})) {
    if (is_g_invariant(pg, b16, w)) invariant.push_back(w.index);
  }
  EXPECT_EQ(invariant, (std::vector<int>{1, 2}));
}

TEST(Invariance, AbelianGroupsAlwaysInvariant) {
  for (const char* stem : {"1-63-0-0-0-0-0_1", "1-7-56-0-0-0-0_1"}) {
    const GroupTable g = corpus_group(stem);
    ASSERT_TRUE(g.is_abelian());
    const auto cands = enumerate_candidate_subgroups(g);
    for (std::size_t i = 0; i < cands.size(); i += 7) {
      const AbelianBasis b = standard_basis(cands[i].subgroup, cands[i].type);
      for (const auto& w : nondegenerate_reps(cands[i].type)) EXPECT_TRUE(is_g_invariant(g, b, w));
    }
  }
}

TEST(Invariance, AgreesWithBetaOracle) {
  for (const char* stem : {kPairGroup, "1-19-44-0-0-0-0_7", "1-31-32-0-0-0-0_1", "1-31-32-0-0-0-0_5",
                           "1-31-32-0-0-0-0_6", "1-3-12-16-32-0-0_2"}) {
    const GroupTable g = corpus_group(stem);
    for (const auto& c : enumerate_candidate_subgroups(g)) {
      const AbelianBasis b = standard_basis(c.subgroup, c.type);
      for (const auto& w : nondegenerate_reps(c.type)) {
        EXPECT_EQ(is_g_invariant(g, b, w), testing::invariance_oracle(g, b, w)) << stem << " " << w.to_string();
      }
    }
  }
}

// Random bases of the same subgroup: the verdict for C2xC2 and C4xC4 and the
// number of invariant census entries for C2^4 do not depend on the basis.
TEST(Invariance, BasisIndependence) {
  std::mt19937 rng(5);
  for (const char* stem : {kPairGroup, "1-31-32-0-0-0-0_1", "1-31-32-0-0-0-0_3", "1-19-44-0-0-0-0_7"}) {
    const GroupTable g = corpus_group(stem);
    for (const auto& c : enumerate_candidate_subgroups(g)) {
      const AbelianBasis std_b = standard_basis(c.subgroup, c.type);
      auto profile = [&](const AbelianBasis& b) {
        std::vector<int> out;
        for (const auto& w : nondegenerate_reps(c.type)) {
          out.push_back(is_g_invariant(g, b, w));
          EXPECT_EQ(out.back() != 0, testing::invariance_oracle(g, b, w));
        }
        if (b.kind == CocycleKind::kC2x4) return std::vector<int>{static_cast<int>(std::count(out.begin(), out.end(), 1))};
        return out;
      };
      const std::vector<int> want = profile(std_b);
      const auto members = c.subgroup.members();
      std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
      int tried = 0;
      while (tried < 3) {
        std::vector<Element> gens(rank_of(std_b.kind));
        for (auto& x : gens) x = members[pick(rng)];
        AbelianBasis b = std_b;
        try {
          b = make_basis(c.subgroup, c.type, gens);
        } catch (const TypeMismatch&) {
          continue;
        }
        ++tried;
        EXPECT_EQ(profile(b), want) << stem;
      }
    }
  }
}

}  // namespace
}  // namespace isocat
