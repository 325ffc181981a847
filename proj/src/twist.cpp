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

#include "isocat/twist.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "isocat/error.hpp"

namespace isocat {
namespace {

int mod(long long v, int q) { return static_cast<int>(((v % q) + q) % q); }

// 2 (omega(A sigma, A tau) - omega(sigma, tau)) in units of the phase modulus.
int coboundary_target(const CocycleRep& w, const ActionMatrix& a,
                      const DualChar& s, const DualChar& t) {
  const int o = factor_order(w.kind);
  const DualChar as = reduce_mod(a * s, o);
  const DualChar at = reduce_mod(a * t, o);
  return mod(2 * (cocycle_value(w, as, at) - cocycle_value(w, s, t)), 2 * o);
}

template <typename F>
XiTable fill_by_coset(const GroupTable& g, const AbelianBasis& b, F&& per_rep) {
  XiTable xi{b.kind, dual_size(b.kind), {}};
  xi.values.assign(static_cast<std::size_t>(g.order()) * xi.dual_size, 0);
  const auto rep = coset_representatives(g, b.subgroup);
  for (Element x = 0; x < g.order(); ++x) {
    if (rep[x] != x) continue;
    const std::vector<int> row = per_rep(x);
    for (Element y = 0; y < g.order(); ++y) {
      if (rep[y] == x) {
        std::copy(row.begin(), row.end(),
                  xi.values.begin() + static_cast<std::ptrdiff_t>(y) * xi.dual_size);
      }
    }
  }
  return xi;
}

}  // namespace

int phase_modulus(CocycleKind kind) { return 2 * factor_order(kind); }

std::vector<Element> coset_representatives(const GroupTable& g, const Subgroup& n) {
  std::vector<Element> rep(g.order(), -1);
  for (Element x = 0; x < g.order(); ++x) {
    if (rep[x] >= 0) continue;
    for (Element m : n.members()) rep[g.mul(x, m)] = x;
  }
  return rep;
}

XiTable xi_closed_form(const GroupTable& g, const AbelianBasis& b, const CocycleRep& w) {
  if (w.kind == CocycleKind::kC2x4) throw UnsupportedType("no closed form for C2^4");
  const int q = phase_modulus(w.kind);
  return fill_by_coset(g, b, [&](Element x) {
    const ActionMatrix a = action_matrix(g, b, x);
    const long long k = a(0, 0), l = a(0, 1), m = a(1, 0), n = a(1, 1);
    std::vector<int> row(dual_size(w.kind));
    for (int idx = 0; idx < static_cast<int>(row.size()); ++idx) {
      const DualChar s = dual_from_index(w.kind, idx);
      const long long s1 = s(0), s2 = s(1);
      row[idx] = mod(-w.k * (k * m * s1 * s1 + l * n * s2 * s2 + 2 * l * m * s1 * s2), q);
    }
    return row;
  });
}

XiTable xi_solved(const GroupTable& g, const AbelianBasis& b, const CocycleRep& w) {
  const int o = factor_order(w.kind);
  const int q = phase_modulus(w.kind);
  const int r = rank_of(w.kind);
  const int size = dual_size(w.kind);
  return fill_by_coset(g, b, [&](Element x) {
    const ActionMatrix a = action_matrix(g, b, x);
    std::vector<int> row(size, -1);
    row[0] = 0;
    std::vector<int> on_basis(r);
    std::vector<DualChar> unit(r);
    for (int i = 0; i < r; ++i) {
      unit[i] = DualChar::Zero(r);
      unit[i](i) = 1;
      // Going once around the cyclic factor: o xi(e_i) = sum_t c(t e_i, e_i).
      long long total = 0;
      for (int t = 0; t < o; ++t) {
        total += coboundary_target(w, a, reduce_mod(DualChar(t * unit[i]), o), unit[i]);
      }
      if (mod(total, q) % o != 0) {
        throw NotInvariant("coboundary equation has no solution at element " +
                           std::to_string(x));
      }
      on_basis[i] = (mod(total, q) / o) % 2;
    }
    // xi(sigma + e_i) = xi(sigma) + xi(e_i) - c(sigma, e_i), by increasing index.
    std::vector<int> frontier{0};
    for (std::size_t f = 0; f < frontier.size(); ++f) {
      const DualChar s = dual_from_index(w.kind, frontier[f]);
      for (int i = 0; i < r; ++i) {
        const int next = dual_index(w.kind, reduce_mod(DualChar(s + unit[i]), o));
        if (row[next] >= 0) continue;
        row[next] = mod(row[frontier[f]] + on_basis[i] - coboundary_target(w, a, s, unit[i]), q);
        frontier.push_back(next);
      }
    }
    for (int si = 0; si < size; ++si) {
      const DualChar s = dual_from_index(w.kind, si);
      for (int ti = 0; ti < size; ++ti) {
        const DualChar t = dual_from_index(w.kind, ti);
        const int sum = dual_index(w.kind, reduce_mod(DualChar(s + t), o));
        if (mod(row[si] + row[ti] - row[sum], q) != coboundary_target(w, a, s, t)) {
          throw NotInvariant("coboundary equation has no solution at element " +
                             std::to_string(x));
        }
      }
    }
    return row;
  });
}

XiTable xi_table(const GroupTable& g, const AbelianBasis& b, const CocycleRep& w) {
  return w.kind == CocycleKind::kC2x4 ? xi_solved(g, b, w) : xi_closed_form(g, b, w);
}

EtaTable eta_ratio(const GroupTable& g, const AbelianBasis& b, const XiTable& xi) {
  const int o = factor_order(b.kind);
  const int q = phase_modulus(b.kind);
  const int r = rank_of(b.kind);
  const int n = g.order();
  std::vector<ActionMatrix> a(n);
  for (Element x = 0; x < n; ++x) a[x] = action_matrix(g, b, x);

  EtaTable eta{n, std::vector<Element>(static_cast<std::size_t>(n) * n)};
  DualChar coords(r);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element xy = g.mul(x, y);
      for (int i = 0; i < r; ++i) {
        DualChar e = DualChar::Zero(r);
        e(i) = 1;
        const int moved = dual_index(b.kind, reduce_mod(DualChar(a[x] * e), o));
        const int v = mod(xi(x, dual_index(b.kind, e)) + xi(y, moved) -
                              xi(xy, dual_index(b.kind, e)), q);
        if (v % 2 != 0) {
          throw NoSuchElement("xi ratio is not a character value at (" +
                              std::to_string(x) + ", " + std::to_string(y) + ")");
        }
        coords(i) = v / 2;
      }
      eta.values[static_cast<std::size_t>(x) * n + y] =
          b.element_at[dual_index(b.kind, coords)];
    }
  }
  return eta;
}

EtaTable eta_closed_form(const GroupTable& g, const AbelianBasis& b,
                         const CocycleRep& w) {
  if (w.kind == CocycleKind::kC2x4) throw UnsupportedType("no closed form for C2^4");
  const int o = factor_order(w.kind);
  const int n = g.order();
  std::vector<ActionMatrix> a(n);
  for (Element x = 0; x < n; ++x) a[x] = action_matrix(g, b, x);

  EtaTable eta{n, std::vector<Element>(static_cast<std::size_t>(n) * n)};
  for (Element x = 0; x < n; ++x) {
    const long long k = a[x](0, 0), l = a[x](0, 1), m = a[x](1, 0), nn = a[x](1, 1);
    for (Element y = 0; y < n; ++y) {
      const long long ha = a[y](0, 0), hb = a[y](0, 1), hc = a[y](1, 0), hd = a[y](1, 1);
      const ActionMatrix& p = a[g.mul(x, y)];
      const long long e1 = -k * m - ha * hc * k * k - hb * hd * m * m -
                           2 * hb * hc * k * m + static_cast<long long>(p(0, 0)) * p(1, 0);
      const long long e2 = -l * nn - ha * hc * l * l - hb * hd * nn * nn -
                           2 * hb * hc * l * nn + static_cast<long long>(p(0, 1)) * p(1, 1);
      if (e1 % 2 != 0 || e2 % 2 != 0) {
        throw OddNumerator("odd numerator at (" + std::to_string(x) + ", " +
                           std::to_string(y) + ")");
      }
      DualChar c(2);
      c << mod(w.k * (e1 / 2), o), mod(w.k * (e2 / 2), o);
      eta.values[static_cast<std::size_t>(x) * n + y] =
          b.element_at[dual_index(b.kind, c)];
    }
  }
  return eta;
}

long functional_equation_failures(const GroupTable& g, const AbelianBasis& b,
                                  const XiTable& xi, const EtaTable& eta) {
  const int o = factor_order(b.kind);
  const int q = phase_modulus(b.kind);
  const int size = dual_size(b.kind);
  const int n = g.order();
  std::vector<ActionMatrix> a(n);
  for (Element x = 0; x < n; ++x) a[x] = action_matrix(g, b, x);
  std::vector<DualChar> chars(size);
  for (int s = 0; s < size; ++s) chars[s] = dual_from_index(b.kind, s);

  long failures = 0;
  for (Element x = 0; x < n; ++x) {
    std::vector<int> moved(size);
    for (int s = 0; s < size; ++s) {
      moved[s] = dual_index(b.kind, reduce_mod(DualChar(a[x] * chars[s]), o));
    }
    for (Element y = 0; y < n; ++y) {
      const Element xy = g.mul(x, y);
      const DualChar nc = b.coord(eta(x, y));
      for (int s = 0; s < size; ++s) {
        const int pairing = 2 * static_cast<int>(chars[s].dot(nc));
        if (mod(xi(x, s) + xi(y, moved[s]) - pairing - xi(xy, s), q) != 0) ++failures;
      }
    }
  }
  return failures;
}

GroupTable twisted_table(const GroupTable& g, const EtaTable& eta, std::string name) {
  const int n = g.order();
  std::vector<Element> flat(static_cast<std::size_t>(n) * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      flat[static_cast<std::size_t>(x) * n + y] = g.mul(eta(x, y), g.mul(x, y));
    }
  }
  return GroupTable::from_flat(std::move(name), n, std::move(flat),
                               std::vector<Element>(g.gen_ids().begin(), g.gen_ids().end()));
}

TwistedGroup twisted_group(const GroupTable& g, const AbelianBasis& b,
                           const CocycleRep& w) {
  const XiTable xi = xi_table(g, b, w);
  const EtaTable eta = eta_ratio(g, b, xi);
  if (w.kind != CocycleKind::kC2x4 && eta_closed_form(g, b, w).values != eta.values) {
    throw InvariantViolation(g.name() + ": closed-form and ratio eta disagree");
  }
  return TwistedGroup{twisted_table(g, eta, g.name() + "^w"), g.name(), b.basis, w};
}

std::vector<TwistRelation> twist_relations(const GroupTable& twisted,
                                           std::span<const NamedElement> gens,
                                           std::span<const NamedElement> extra) {
  const std::size_t k = gens.size();
  std::vector<int> orders(k);
  for (std::size_t i = 0; i < k; ++i) orders[i] = element_order(twisted, gens[i].id);

  // Best collected word for every element reachable as g1^e1 ... gk^ek.
  std::vector<std::vector<int>> best(twisted.order());
  std::vector<int> e(k, 0);
  auto total = [](const std::vector<int>& v) {
    int s = 0;
    for (int x : v) s += x;
    return s;
  };
  while (true) {
    Element x = twisted.identity();
    for (std::size_t i = 0; i < k; ++i) {
      x = twisted.mul(x, twisted.power(gens[i].id, e[i]));
    }
    auto& cur = best[x];
    if (cur.empty() || total(e) < total(cur) || (total(e) == total(cur) && e > cur)) cur = e;
    std::size_t i = k;
    while (i > 0 && ++e[i - 1] == orders[i - 1]) e[--i] = 0;
    if (i == 0) break;
  }

  // "s~", "f3~", but "(st)~" for a product.
  auto tilde = [](const std::string& name) {
    const bool atom = !name.empty() && std::isalpha(static_cast<unsigned char>(name[0])) &&
                      std::all_of(name.begin() + 1, name.end(),
                                  [](unsigned char ch) { return std::isdigit(ch); });
    return atom ? name + "~" : "(" + name + ")~";
  };
  std::vector<NamedElement> all(gens.begin(), gens.end());
  all.insert(all.end(), extra.begin(), extra.end());
  std::vector<TwistRelation> out;
  for (const auto& a : all) {
    for (const auto& c : all) {
      const Element p = twisted.mul(a.id, c.id);
      TwistRelation rel{tilde(a.name) + " * " + tilde(c.name), "", best[p]};
      if (rel.exponents.empty()) {
        rel.rhs = "?";
      } else {
        for (std::size_t i = 0; i < k; ++i) {
          if (rel.exponents[i] == 0) continue;
          if (!rel.rhs.empty()) rel.rhs += " ";
          rel.rhs += tilde(gens[i].name);
          if (rel.exponents[i] > 1) rel.rhs += "^" + std::to_string(rel.exponents[i]);
        }
        if (rel.rhs.empty()) rel.rhs = "e";
      }
      out.push_back(std::move(rel));
    }
  }
  return out;
}

}  // namespace isocat
