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

#include "isocat/iso.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "isocat/error.hpp"

namespace isocat {
namespace {

using Label = std::array<int, 8>;

std::vector<Label> element_labels(const GroupTable& g) {
  const int n = g.order();
  const auto orders = element_orders(g);
  const auto cls = conjugacy_classes(g);
  std::vector<int> class_size(n, 0), roots(n, 0), cent(n);
  for (Element x = 0; x < n; ++x) {
    ++class_size[cls[x]];
    ++roots[g.mul(x, x)];
    cent[x] = centralizer_order(g, x);
  }
  std::vector<Label> labels(n);
  for (Element x = 0; x < n; ++x) {
    const Element sq = g.mul(x, x);
    labels[x] = {orders[x], cent[x], class_size[cls[x]], roots[x],
                 orders[sq], cent[sq], class_size[cls[sq]], roots[sq]};
  }
  return labels;
}

// Partial map grown by closure under right multiplication by the assigned
// generators. Every assignment is logged so a level can be undone.
class Search {
 public:
  Search(const GroupTable& g, const GroupTable& h, std::vector<Element> gens,
         const std::vector<Label>* lg, const std::vector<Label>* lh)
      : g_(g), h_(h), gens_(std::move(gens)), lg_(lg), lh_(lh),
        fwd_(g.order(), -1), back_(h.order(), -1) {}

  std::optional<IsoWitness> run() {
    assign(g_.identity(), h_.identity());
    if (recurse(0)) return fwd_;
    return std::nullopt;
  }

 private:
  bool assign(Element x, Element y) {
    if (fwd_[x] >= 0) return fwd_[x] == y;
    if (back_[y] >= 0) return false;
    if (lg_ && (*lg_)[x] != (*lh_)[y]) return false;
    fwd_[x] = y;
    back_[y] = x;
    log_.push_back(x);
    domain_.push_back(x);
    return true;
  }

  void undo(std::size_t log_size, std::size_t domain_size) {
    while (log_.size() > log_size) {
      back_[fwd_[log_.back()]] = -1;
      fwd_[log_.back()] = -1;
      log_.pop_back();
    }
    domain_.resize(domain_size);
  }

  // Closes the domain under right multiplication by gens_[0..level].
  bool close(std::size_t level) {
    for (std::size_t i = 0; i < domain_.size(); ++i) {
      const Element x = domain_[i];
      for (std::size_t j = 0; j <= level; ++j) {
        const Element s = gens_[j];
        if (!assign(g_.mul(x, s), h_.mul(fwd_[x], fwd_[s]))) return false;
      }
    }
    return true;
  }

  bool recurse(std::size_t level) {
    if (level == gens_.size()) {
      return static_cast<int>(domain_.size()) == g_.order() &&
             is_isomorphism(g_, h_, fwd_);
    }
    const Element s = gens_[level];
    const std::size_t log_size = log_.size(), domain_size = domain_.size();
    for (Element t = 0; t < h_.order(); ++t) {
      if (back_[t] >= 0) continue;
      if (lg_ && (*lg_)[s] != (*lh_)[t]) continue;
      if (assign(s, t) && close(level) && recurse(level + 1)) return true;
      undo(log_size, domain_size);
    }
    return false;
  }

  const GroupTable& g_;
  const GroupTable& h_;
  std::vector<Element> gens_;
  const std::vector<Label>* lg_;
  const std::vector<Label>* lh_;
  std::vector<Element> fwd_, back_, log_, domain_;
};

}  // namespace

bool is_isomorphism(const GroupTable& g, const GroupTable& h,
                    std::span<const Element> witness) {
  const int n = g.order();
  if (h.order() != n || static_cast<int>(witness.size()) != n) return false;
  std::vector<char> hit(n, 0);
  for (Element y : witness) {
    if (y < 0 || y >= n || hit[y]) return false;
    hit[y] = 1;
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (witness[g.mul(a, b)] != h.mul(witness[a], witness[b])) return false;
    }
  }
  return true;
}

std::vector<Element> minimal_generating_sequence(const GroupTable& g) {
  std::vector<Element> gens;
  int current = 1;
  while (current < g.order()) {
    Element best = -1;
    int best_order = current;
    for (Element x = 0; x < g.order(); ++x) {
      std::vector<Element> trial = gens;
      trial.push_back(x);
      const int o = generated_subgroup(g, trial).order();
      if (o > best_order) {
        best_order = o;
        best = x;
      }
    }
    gens.push_back(best);
    current = best_order;
  }
  return gens;
}

std::optional<IsoWitness> are_isomorphic(const GroupTable& g, const GroupTable& h,
                                         IsoOptions options) {
  if (g.order() != h.order()) return std::nullopt;
  if (options.use_fingerprint && !(fingerprint(g) == fingerprint(h))) return std::nullopt;
  const auto lg = element_labels(g);
  const auto lh = element_labels(h);
  auto sorted = [](std::vector<Label> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  if (sorted(lg) != sorted(lh)) return std::nullopt;
  Search search(g, h, minimal_generating_sequence(g), &lg, &lh);
  auto w = search.run();
  if (w && !is_isomorphism(g, h, *w)) {
    throw InvariantViolation("isomorphism search returned an invalid witness");
  }
  return w;
}

bool brute_force_isomorphic(const GroupTable& g, const GroupTable& h) {
  if (g.order() > 16 || h.order() > 16) {
    throw SizeLimit("brute-force isomorphism is limited to order 16");
  }
  if (g.order() != h.order()) return false;
  const auto gens = minimal_generating_sequence(g);
  const int n = g.order();
  const int k = static_cast<int>(gens.size());

  // Spanning tree of the Cayley graph: parent[x] * gens[via[x]] = x.
  std::vector<Element> parent(n, -1), order{g.identity()};
  std::vector<int> via(n, -1);
  parent[g.identity()] = g.identity();
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int j = 0; j < k; ++j) {
      const Element y = g.mul(order[i], gens[j]);
      if (parent[y] < 0) {
        parent[y] = order[i];
        via[y] = j;
        order.push_back(y);
      }
    }
  }

  std::vector<Element> images(k, 0), map(n);
  while (true) {
    map[g.identity()] = h.identity();
    for (std::size_t i = 1; i < order.size(); ++i) {
      const Element x = order[i];
      map[x] = h.mul(map[parent[x]], images[via[x]]);
    }
    if (is_isomorphism(g, h, map)) return true;
    int i = k;
    while (i > 0 && ++images[i - 1] == n) images[--i] = 0;
    if (i == 0) return false;
  }
}

}  // namespace isocat
