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

#include "isocat/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "isocat/error.hpp"

namespace isocat {
namespace {

std::string triple(Element a, Element b, Element c) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << ")";
  return os.str();
}

std::vector<int> divisors_of(int n) {
  std::vector<int> d;
  for (int k = 1; k <= n; ++k) {
    if (n % k == 0) d.push_back(k);
  }
  return d;
}

std::vector<int> prime_factors(int n) {
  std::vector<int> ps;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace

GroupTable GroupTable::from_cayley(std::string name,
                                   const std::vector<std::vector<Element>>& mul,
                                   std::vector<Element> gen_ids) {
  const int n = static_cast<int>(mul.size());
  std::vector<Element> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : mul) {
    if (static_cast<int>(row.size()) != n) {
      throw NotAGroup("table is not square");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return from_flat(std::move(name), n, std::move(flat), std::move(gen_ids));
}

GroupTable GroupTable::from_flat(std::string name, int n,
                                 std::vector<Element> mul,
                                 std::vector<Element> gen_ids) {
  if (n <= 0) throw NotAGroup("empty table");
  if (mul.size() != static_cast<std::size_t>(n) * n) {
    throw NotAGroup("table is not square");
  }
  for (Element v : mul) {
    if (v < 0 || v >= n) {
      throw NotAGroup("closure: entry " + std::to_string(v) + " out of range");
    }
  }
  GroupTable g;
  g.name_ = std::move(name);
  g.n_ = n;
  g.mul_ = std::move(mul);

  g.identity_ = -1;
  for (Element e = 0; e < n && g.identity_ < 0; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) {
      ok = g.mul(e, x) == x && g.mul(x, e) == x;
    }
    if (ok) g.identity_ = e;
  }
  if (g.identity_ < 0) throw NotAGroup("identity: no two-sided identity");

  g.inv_.assign(n, -1);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (g.mul(x, y) == g.identity_ && g.mul(y, x) == g.identity_) {
        g.inv_[x] = y;
        break;
      }
    }
    if (g.inv_[x] < 0) {
      throw NotAGroup("inverse: element " + std::to_string(x) +
                      " has no two-sided inverse");
    }
  }

  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const Element ab = g.mul(a, b);
      for (Element c = 0; c < n; ++c) {
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) {
          throw NotAGroup("associativity fails at " + triple(a, b, c));
        }
      }
    }
  }

  for (Element x : gen_ids) {
    if (x < 0 || x >= n) throw NotAGroup("generator id out of range");
  }
  g.gen_ids_ = std::move(gen_ids);
  return g;
}

bool GroupTable::is_abelian() const {
  for (Element a = 0; a < n_; ++a) {
    for (Element b = a + 1; b < n_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

Element GroupTable::power(Element x, long long k) const {
  if (k < 0) {
    x = inv(x);
    k = -k;
  }
  Element r = identity_;
  Element base = x;
  while (k > 0) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

GroupTable GroupTable::renamed(std::string name) const {
  GroupTable g = *this;
  g.name_ = std::move(name);
  return g;
}

Subgroup::Subgroup(const GroupTable& parent, std::vector<Element> members,
                   std::vector<Element> gens)
    : parent_(&parent), members_(std::move(members)), gens_(std::move(gens)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  mask_.assign(parent.order(), 0);
  for (Element x : members_) mask_[x] = 1;
}

int AbelianType::order() const {
  return std::accumulate(factors.begin(), factors.end(), 1,
                         std::multiplies<>());
}

std::string AbelianType::to_string() const {
  if (factors.empty()) return "1";
  std::string s;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    if (!s.empty()) s += "x";
    s += "C" + std::to_string(*it);
  }
  return s;
}

std::string OrderList::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(counts[i]);
  }
  return s + "]";
}

std::string OrderList::to_stem() const {
  std::string s;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) s += "-";
    s += std::to_string(counts[i]);
  }
  return s;
}

int element_order(const GroupTable& g, Element x) {
  int k = 1;
  for (Element y = x; y != g.identity(); y = g.mul(y, x)) ++k;
  return k;
}

std::vector<int> element_orders(const GroupTable& g) {
  std::vector<int> orders(g.order());
  for (Element x = 0; x < g.order(); ++x) orders[x] = element_order(g, x);
  return orders;
}

OrderList order_list(const GroupTable& g) {
  OrderList ol;
  ol.divisors = divisors_of(g.order());
  ol.counts.assign(ol.divisors.size(), 0);
  for (int o : element_orders(g)) {
    auto it = std::lower_bound(ol.divisors.begin(), ol.divisors.end(), o);
    ++ol.counts[it - ol.divisors.begin()];
  }
  return ol;
}

Element conjugate(const GroupTable& g, Element by, Element x) {
  return g.mul(g.mul(by, x), g.inv(by));
}

Element commutator(const GroupTable& g, Element a, Element b) {
  return g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
}

Subgroup generated_subgroup(const GroupTable& g,
                            std::span<const Element> gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Element> members{g.identity()};
  in[g.identity()] = 1;
  std::vector<Element> kept;
  for (Element s : gens) {
    if (in[s]) continue;
    kept.push_back(s);
    // Re-close under right multiplication by all kept generators.
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (Element t : kept) {
        const Element y = g.mul(members[i], t);
        if (!in[y]) {
          in[y] = 1;
          members.push_back(y);
        }
      }
    }
  }
  return Subgroup(g, std::move(members), std::move(kept));
}

AbelianType abelian_type_from_orders(std::span<const int> orders) {
  const int n = static_cast<int>(orders.size());
  // exps[p] lists the exponents of the cyclic p-factors, largest first.
  std::vector<std::vector<int>> per_prime;
  std::vector<int> primes = prime_factors(n);
  for (int p : primes) {
    std::vector<int> r;  // r[k-1] = #{factors with exponent >= k}
    long long prev = 1;
    for (long long pk = p;; pk *= p) {
      long long c = 0;
      for (int o : orders) {
        if (pk % o == 0) ++c;
      }
      int rank = 0;
      for (long long q = c / prev; q > 1; q /= p) ++rank;
      if (rank == 0) break;
      r.push_back(rank);
      prev = c;
    }
    std::vector<int> exps;
    for (std::size_t k = 0; k < r.size(); ++k) {
      const int next = k + 1 < r.size() ? r[k + 1] : 0;
      for (int i = 0; i < r[k] - next; ++i) exps.push_back(static_cast<int>(k) + 1);
    }
    std::sort(exps.rbegin(), exps.rend());
    per_prime.push_back(exps);
  }
  std::size_t width = 0;
  for (const auto& e : per_prime) width = std::max(width, e.size());
  AbelianType t;
  for (std::size_t j = 0; j < width; ++j) {
    int f = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (j < per_prime[i].size()) {
        for (int k = 0; k < per_prime[i][j]; ++k) f *= primes[i];
      }
    }
    t.factors.push_back(f);
  }
  std::sort(t.factors.begin(), t.factors.end());
  return t;
}

std::optional<AbelianType> abelian_type(const Subgroup& h) {
  const GroupTable& g = h.parent();
  for (Element a : h.gens()) {
    for (Element b : h.gens()) {
      if (g.mul(a, b) != g.mul(b, a)) return std::nullopt;
    }
  }
  std::vector<int> orders;
  orders.reserve(h.order());
  for (Element x : h.members()) orders.push_back(element_order(g, x));
  return abelian_type_from_orders(orders);
}

bool is_normal(const GroupTable& g, const Subgroup& h) {
  for (Element x = 0; x < g.order(); ++x) {
    for (Element s : h.gens()) {
      if (!h.contains(conjugate(g, x, s))) return false;
    }
  }
  return true;
}

Subgroup center(const GroupTable& g) {
  std::vector<Element> z;
  for (Element x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Element y = 0; y < g.order() && central; ++y) {
      central = g.mul(x, y) == g.mul(y, x);
    }
    if (central) z.push_back(x);
  }
  return generated_subgroup(g, z);
}

Subgroup derived_subgroup(const GroupTable& g) {
  std::vector<Element> comms;
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) comms.push_back(commutator(g, a, b));
  }
  return generated_subgroup(g, comms);
}

int centralizer_order(const GroupTable& g, Element x) {
  int c = 0;
  for (Element y = 0; y < g.order(); ++y) {
    if (g.mul(x, y) == g.mul(y, x)) ++c;
  }
  return c;
}

std::vector<int> conjugacy_classes(const GroupTable& g) {
  std::vector<int> cls(g.order(), -1);
  int next = 0;
  for (Element x = 0; x < g.order(); ++x) {
    if (cls[x] >= 0) continue;
    for (Element y = 0; y < g.order(); ++y) cls[conjugate(g, y, x)] = next;
    ++next;
  }
  return cls;
}

std::vector<CandidateSubgroup> enumerate_candidate_subgroups(
    const GroupTable& g) {
  const int n = g.order();
  const auto orders = element_orders(g);
  auto commute = [&](Element a, Element b) {
    return g.mul(a, b) == g.mul(b, a);
  };
  std::vector<Element> inv2, ord4;
  for (Element x = 0; x < n; ++x) {
    if (orders[x] == 2) inv2.push_back(x);
    if (orders[x] == 4) ord4.push_back(x);
  }

  std::map<std::vector<Element>, std::vector<Element>> klein, c44, c2222;

  for (std::size_t i = 0; i < inv2.size(); ++i) {
    for (std::size_t j = i + 1; j < inv2.size(); ++j) {
      const Element a = inv2[i], b = inv2[j];
      if (!commute(a, b)) continue;
      const Element pair[] = {a, b};
      Subgroup h = generated_subgroup(g, pair);
      klein.emplace(std::vector<Element>(h.members().begin(), h.members().end()),
                    std::vector<Element>{a, b});
    }
  }

  for (std::size_t i = 0; i < ord4.size(); ++i) {
    for (std::size_t j = i + 1; j < ord4.size(); ++j) {
      const Element a = ord4[i], b = ord4[j];
      if (!commute(a, b) || g.mul(a, a) == g.mul(b, b)) continue;
      const Element pair[] = {a, b};
      Subgroup h = generated_subgroup(g, pair);
      c44.emplace(std::vector<Element>(h.members().begin(), h.members().end()),
                  std::vector<Element>{a, b});
    }
  }

  // Elementary abelian subgroups grown one involution at a time.
  auto extend = [&](const std::map<std::vector<Element>, std::vector<Element>>& from) {
    std::map<std::vector<Element>, std::vector<Element>> out;
    for (const auto& [members, gens] : from) {
      for (Element c : inv2) {
        if (std::binary_search(members.begin(), members.end(), c)) continue;
        bool ok = true;
        for (Element s : gens) ok = ok && commute(s, c);
        if (!ok) continue;
        std::vector<Element> ng = gens;
        ng.push_back(c);
        Subgroup h = generated_subgroup(g, ng);
        out.emplace(std::vector<Element>(h.members().begin(), h.members().end()),
                    std::move(ng));
      }
    }
    return out;
  };
  c2222 = extend(extend(klein));

  std::vector<CandidateSubgroup> result;
  auto collect = [&](const auto& m, std::vector<int> factors) {
    for (const auto& [members, gens] : m) {
      Subgroup h(g, members, gens);
      if (is_normal(g, h)) result.push_back({std::move(h), AbelianType{factors}});
    }
  };
  collect(klein, {2, 2});
  collect(c44, {4, 4});
  collect(c2222, {2, 2, 2, 2});
  std::sort(result.begin(), result.end(),
            [](const CandidateSubgroup& a, const CandidateSubgroup& b) {
              return std::lexicographical_compare(
                  a.subgroup.members().begin(), a.subgroup.members().end(),
                  b.subgroup.members().begin(), b.subgroup.members().end());
            });
  return result;
}

Fingerprint fingerprint(const GroupTable& g) {
  Fingerprint f;
  f.order_list = order_list(g);
  f.center_order = center(g).order();
  const Subgroup d = derived_subgroup(g);
  f.derived_order = d.order();

  // Abelianization: orders of cosets xG' in G/G'.
  std::vector<int> quotient_orders;
  std::vector<char> seen(g.order(), 0);
  for (Element x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    for (Element k : d.members()) seen[g.mul(x, k)] = 1;
    int o = 1;
    for (Element y = x; !d.contains(y); y = g.mul(y, x)) ++o;
    quotient_orders.push_back(o);
  }
  f.abelianization = abelian_type_from_orders(quotient_orders);

  const auto cls = conjugacy_classes(g);
  std::map<int, int> class_size;
  for (int c : cls) ++class_size[c];
  for (const auto& [c, s] : class_size) f.class_sizes.push_back(s);
  std::sort(f.class_sizes.begin(), f.class_sizes.end());

  for (Element x = 0; x < g.order(); ++x) {
    f.order_centralizer.emplace_back(element_order(g, x), centralizer_order(g, x));
  }
  std::sort(f.order_centralizer.begin(), f.order_centralizer.end());
  return f;
}

GroupTable relabel(const GroupTable& g, std::span<const Element> perm) {
  const int n = g.order();
  std::vector<Element> flat(static_cast<std::size_t>(n) * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      flat[static_cast<std::size_t>(perm[a]) * n + perm[b]] = perm[g.mul(a, b)];
    }
  }
  std::vector<Element> gens;
  for (Element s : g.gen_ids()) gens.push_back(perm[s]);
  return GroupTable::from_flat(g.name(), n, std::move(flat), std::move(gens));
}

}  // namespace isocat
