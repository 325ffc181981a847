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

#include "isocat/classify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <set>
#include <thread>

#include "isocat/cocycle.hpp"
#include "isocat/error.hpp"
#include "isocat/iso.hpp"
#include "isocat/twist.hpp"

namespace isocat {
namespace {

// Runs body(i) for i in [0, n) on up to `jobs` threads. The first exception
// in index order is rethrown after all workers finish.
template <typename F>
void parallel_for(std::size_t n, int jobs, F&& body) {
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(n)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

long stem_index(const std::string& path) {
  const std::string stem = std::filesystem::path(path).stem().string();
  const auto us = stem.rfind('_');
  if (us == std::string::npos) return -1;
  try {
    return std::stol(stem.substr(us + 1));
  } catch (const std::exception&) {
    return -1;
  }
}

// Builds G^w and runs the inline self-checks.
GroupTable checked_twist(const GroupTable& g, const AbelianBasis& b,
                         const CocycleRep& w, const OrderList& source_list,
                         ClassifyStats& stats) {
  const XiTable xi = xi_table(g, b, w);
  const EtaTable eta = eta_ratio(g, b, xi);
  const std::string where = g.name() + " [" + w.to_string() + "]";
  if (w.kind != CocycleKind::kC2x4) {
    if (eta_closed_form(g, b, w).values != eta.values) {
      throw InvariantViolation(where + ": closed-form and ratio eta disagree");
    }
    ++stats.closed_form_checks;
  }
  if (const long f = functional_equation_failures(g, b, xi, eta); f != 0) {
    throw InvariantViolation(where + ": functional equation fails on " +
                             std::to_string(f) + " triples");
  }
  ++stats.functional_equation_checks;
  GroupTable t = [&] {
    try {
      return twisted_table(g, eta, g.name() + "^w");
    } catch (const NotAGroup& e) {
      throw InvariantViolation(where + ": twisted product is not a group: " + e.what());
    }
  }();
  ++stats.twists;
  if (order_list(t) != source_list) {
    throw InvariantViolation(where + ": twist changes the order list to " +
                             order_list(t).to_string());
  }
  ++stats.order_list_checks;
  return t;
}

}  // namespace

ClassifyStats& ClassifyStats::operator+=(const ClassifyStats& o) {
  twists += o.twists;
  order_list_checks += o.order_list_checks;
  functional_equation_checks += o.functional_equation_checks;
  closed_form_checks += o.closed_form_checks;
  k1_k3_checks += o.k1_k3_checks;
  return *this;
}

std::vector<CorpusEntry> load_corpus(const std::string& dir, int jobs) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw Error("corpus directory not found: " + dir);
  std::vector<std::string> paths;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".grp") {
      paths.push_back(e.path().string());
    }
  }
  std::sort(paths.begin(), paths.end());
  std::vector<std::optional<CorpusEntry>> loaded(paths.size());
  parallel_for(paths.size(), jobs, [&](std::size_t i) {
    try {
      Presentation p = load_group_file(paths[i]);
      GroupTable g = realize(p);
      loaded[i].emplace(CorpusEntry{paths[i], std::move(p), std::move(g)});
    } catch (const ParseError&) {
      throw;
    } catch (const Overflow& e) {
      throw Error(paths[i] + ": " + e.what());
    } catch (const NotAGroup& e) {
      throw Error(paths[i] + ": " + e.what());
    }
  });
  std::vector<CorpusEntry> out;
  std::vector<OrderList> lists;
  for (auto& e : loaded) out.push_back(std::move(*e));
  std::vector<std::size_t> idx(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    idx[i] = i;
    lists.push_back(order_list(out[i].group));
  }
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (lists[a] != lists[b]) return lists[a] < lists[b];
    const long ia = stem_index(out[a].path), ib = stem_index(out[b].path);
    if (ia != ib) return ia < ib;
    return out[a].group.name() < out[b].group.name();
  });
  std::vector<CorpusEntry> sorted;
  for (std::size_t i : idx) sorted.push_back(std::move(out[i]));
  return sorted;
}

std::vector<std::string> element_words(const GroupTable& g) {
  const auto gens = g.gen_ids();
  const std::size_t k = gens.size();
  std::vector<std::string> words(g.order());
  if (k < 20 && (std::size_t{1} << k) == static_cast<std::size_t>(g.order())) {
    std::vector<char> hit(g.order(), 0);
    bool exact = true;
    for (std::size_t mask = 0; mask < (std::size_t{1} << k) && exact; ++mask) {
      Element x = g.identity();
      std::string w;
      for (std::size_t i = 0; i < k; ++i) {
        if (mask >> i & 1) {
          x = g.mul(x, gens[i]);
          w += "f" + std::to_string(i + 1);
        }
      }
      if (hit[x]) exact = false;
      hit[x] = 1;
      words[x] = w.empty() ? "e" : w;
    }
    if (exact) return words;
  }
  const auto nw = normal_words(g);
  for (Element x = 0; x < g.order(); ++x) words[x] = word_to_string(nw[x]);
  return words;
}

std::vector<ClassificationRecord> classify_group(
    const GroupTable& g, std::span<const GroupTable* const> bucket,
    ClassifyStats* stats, std::vector<std::string>* partners) {
  std::vector<ClassificationRecord> records;
  if (g.is_abelian()) return records;
  ClassifyStats local;
  const OrderList source_list = order_list(g);
  const auto words = element_words(g);

  auto find_partner = [&](const GroupTable& t) {
    for (const GroupTable* h : bucket) {
      if (h == &g || h->name() == g.name()) continue;
      if (are_isomorphic(t, *h)) {
        if (partners) partners->push_back(h->name());
        return h->name();
      }
    }
    throw PartnerNotFound(g.name() + ": a twist matches no group with order list " +
                          source_list.to_string());
  };

  for (const auto& cand : enumerate_candidate_subgroups(g)) {
    const AbelianBasis b = standard_basis(cand.subgroup, cand.type);
    ClassificationRecord rec;
    for (Element x : b.basis) rec.subgroup.push_back(words[x]);
    rec.type = cand.type.to_string();

    if (b.kind != CocycleKind::kC2x4) {
      const CocycleRep w = cyclic_cocycle(b.kind, 1);
      const bool inv = is_g_invariant(g, b, w);
      rec.invariant = inv;
      if (inv) {
        const GroupTable t = checked_twist(g, b, w, source_list, local);
        if (b.kind == CocycleKind::kC4xC4) {
          const GroupTable t3 =
              checked_twist(g, b, cyclic_cocycle(b.kind, 3), source_list, local);
          if (!are_isomorphic(t, t3)) {
            throw InvariantViolation(g.name() + ": k=1 and k=3 twists differ");
          }
          ++local.k1_k3_checks;
        }
        rec.twist_isomorphic = are_isomorphic(t, g).has_value();
        if (!*rec.twist_isomorphic) rec.partner = find_partner(t);
      }
    } else {
      std::vector<int> indices;
      bool all_iso = true;
      for (const CocycleRep& w : nondegenerate_reps(cand.type)) {
        if (!is_g_invariant(g, b, w)) continue;
        indices.push_back(w.index);
        const GroupTable t = checked_twist(g, b, w, source_list, local);
        if (!are_isomorphic(t, g)) {
          all_iso = false;
          std::string p = find_partner(t);
          if (!rec.partner) rec.partner = p;
        }
      }
      if (!indices.empty()) rec.twist_isomorphic = all_iso;
      rec.invariant = indices;
    }
    records.push_back(std::move(rec));
  }
  if (stats) *stats += local;
  return records;
}

std::map<OrderList, std::vector<std::size_t>> bucket_by_order_list(
    std::span<const CorpusEntry> corpus) {
  std::map<OrderList, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    buckets[order_list(corpus[i].group)].push_back(i);
  }
  return buckets;
}

Report classify_entries(std::span<const CorpusEntry> corpus, int jobs) {
  const auto buckets = bucket_by_order_list(corpus);
  std::vector<std::vector<const GroupTable*>> bucket_of(corpus.size());
  for (const auto& [list, members] : buckets) {
    std::vector<const GroupTable*> tables;
    for (std::size_t i : members) tables.push_back(&corpus[i].group);
    for (std::size_t i : members) bucket_of[i] = tables;
  }

  std::vector<GroupReport> reports(corpus.size());
  std::vector<ClassifyStats> stats(corpus.size());
  std::vector<std::vector<std::string>> partners(corpus.size());
  parallel_for(corpus.size(), jobs, [&](std::size_t i) {
    const GroupTable& g = corpus[i].group;
    GroupReport& r = reports[i];
    r.name = g.name();
    r.annotations = corpus[i].presentation.annotations;
    const auto words = element_words(g);
    for (Element a : g.gen_ids()) {
      std::vector<std::string> row;
      for (Element b : g.gen_ids()) row.push_back(words[g.mul(a, b)]);
      r.generator_table.push_back(std::move(row));
    }
    try {
      r.records = classify_group(g, bucket_of[i], &stats[i], &partners[i]);
    } catch (const Error& e) {
      const std::string msg = corpus[i].path + ": " + e.what();
      if (dynamic_cast<const PartnerNotFound*>(&e)) throw PartnerNotFound(msg);
      throw InvariantViolation(msg);
    }
    r.rigid = partners[i].empty();
  });

  Report report;
  std::set<std::array<std::string, 2>> pairs;
  for (const auto& [list, members] : buckets) {
    Bucket b{list, {}};
    for (std::size_t i : members) {
      b.groups.push_back(reports[i]);
      report.stats += stats[i];
      for (const auto& p : partners[i]) {
        std::array<std::string, 2> pair{corpus[i].group.name(), p};
        std::sort(pair.begin(), pair.end());
        pairs.insert(pair);
      }
    }
    report.buckets.push_back(std::move(b));
  }
  report.pairs.assign(pairs.begin(), pairs.end());
  return report;
}

Report classify_corpus(const std::string& dir, int jobs) {
  const auto corpus = load_corpus(dir, jobs);
  return classify_entries(corpus, jobs);
}

}  // namespace isocat
