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

#include "reference.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "isocat/error.hpp"
#include "isocat/iso.hpp"
#include "isocat/presentation.hpp"
#include "isocat/twist.hpp"
#include "json.hpp"

namespace isocat::testing {

Reference load_reference(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open " + path);
  const auto doc = nlohmann::json::parse(f);
  Reference ref;
  ref.census_annotations = doc.at("census_annotations").get<std::vector<std::string>>();
  for (const auto& [stem, jg] : doc.at("groups").items()) {
    ReferenceGroup g;
    g.stem = stem;
    g.structure = jg.at("structure").get<std::string>();
    g.order_list = jg.at("order_list").get<std::vector<int>>();
    g.bucket_index = jg.at("bucket_index").get<int>();
    if (!jg.at("label").is_null()) g.label = jg.at("label").get<std::string>();
    g.has_table = jg.at("has_table").get<bool>();
    g.annotations = jg.at("annotations").get<std::vector<std::string>>();
    for (const auto& jr : jg.at("rows")) {
      ReferenceRow r;
      r.subgroup = jr.at("subgroup").get<std::vector<std::string>>();
      r.type = jr.at("type").get<std::string>();
      if (jr.at("invariant").is_boolean()) {
        r.invariant = jr.at("invariant").get<bool>();
      } else {
        r.invariant = jr.at("invariant").get<std::vector<int>>();
      }
      if (!jr.at("twist_isomorphic").is_null()) {
        r.twist_isomorphic = jr.at("twist_isomorphic").get<bool>();
      }
      if (!jr.at("number").is_null()) r.number = jr.at("number").get<int>();
      g.rows.push_back(std::move(r));
    }
    for (const auto& jc : jg.at("corrections")) {
      Correction c;
      c.kind = jc.at("kind").get<std::string>();
      c.subgroup = jc.at("subgroup").get<std::vector<std::string>>();
      if (c.kind == "invariant") c.value = jc.at("value").get<std::vector<int>>();
      if (c.kind == "missing_row") {
        ReferenceRow r;
        r.subgroup = c.subgroup;
        r.type = jc.at("type").get<std::string>();
        r.invariant = jc.at("invariant").get<bool>();
        r.twist_isomorphic = jc.at("twist_isomorphic").get<bool>();
        c.row = std::move(r);
      }
      g.corrections.push_back(std::move(c));
    }
    ref.groups.emplace(stem, std::move(g));
  }
  return ref;
}

RowResult evaluate_row(const GroupTable& g, int num_gens, const ReferenceRow& row) {
  RowResult out;
  // Basis order: listed words sorted by the index of their first generator.
  std::vector<Word> words;
  for (const auto& w : row.subgroup) words.push_back(parse_word(w, num_gens));
  std::stable_sort(words.begin(), words.end(), [](const Word& a, const Word& b) {
    return (a.empty() ? 0 : std::abs(a[0])) < (b.empty() ? 0 : std::abs(b[0]));
  });
  std::vector<Element> gens;
  for (const auto& w : words) gens.push_back(evaluate(g, w));
  const Subgroup n = generated_subgroup(g, gens);
  out.members.assign(n.members().begin(), n.members().end());
  out.type = abelian_type(n);
  out.normal = is_normal(g, n);
  if (!out.type || !out.normal) return out;
  const AbelianBasis b = make_basis(n, *out.type, gens);
  if (b.kind != CocycleKind::kC2x4) {
    const CocycleRep w = cyclic_cocycle(b.kind, 1);
    const bool inv = is_g_invariant(g, b, w);
    out.invariant = inv;
    if (inv) out.twist_isomorphic = are_isomorphic(twisted_group(g, b, w).table, g).has_value();
    return out;
  }
  std::vector<int> indices;
  bool all_iso = true;
  for (const CocycleRep& w : nondegenerate_reps(*out.type)) {
    if (!is_g_invariant(g, b, w)) continue;
    indices.push_back(w.index);
    all_iso = all_iso && are_isomorphic(twisted_group(g, b, w).table, g).has_value();
  }
  if (!indices.empty()) out.twist_isomorphic = all_iso;
  out.invariant = indices;
  return out;
}

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& x : v) out += (out.empty() ? "" : ",") + x;
  return "[" + out + "]";
}

std::string show(const std::variant<bool, std::vector<int>>& v) {
  if (const bool* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  std::string out;
  for (int x : std::get<std::vector<int>>(v)) out += (out.empty() ? "" : ",") + std::to_string(x);
  return "{" + out + "}";
}

std::string show(const std::optional<bool>& v) {
  return v ? (*v ? "true" : "false") : "null";
}

const Correction* find_correction(const ReferenceGroup& ref, const std::string& kind,
                                  const std::vector<std::string>& subgroup) {
  for (const auto& c : ref.corrections) {
    if (c.kind == kind && c.subgroup == subgroup) return &c;
  }
  return nullptr;
}

// Compares one row; `label` prefixes every mismatch.
void compare_row(const GroupTable& g, int num_gens, const ReferenceRow& row,
                 const ReferenceGroup& ref, TableCheck& out) {
  const std::string label = ref.stem + " " + join(row.subgroup) + ": ";
  const RowResult got = evaluate_row(g, num_gens, row);
  ++out.rows;
  if (!got.normal) out.mismatches.push_back(label + "not normal");
  if (!got.type || got.type->to_string() != row.type) {
    out.mismatches.push_back(label + "type " + (got.type ? got.type->to_string() : "non-abelian") +
                             ", printed " + row.type);
    return;
  }
  std::variant<bool, std::vector<int>> want = row.invariant;
  // The table prints a C2^4 row without invariant cocycles as a plain "no".
  if (row.type == "C2xC2xC2xC2" && want == std::variant<bool, std::vector<int>>(false)) {
    want = std::vector<int>{};
  }
  if (const Correction* c = find_correction(ref, "invariant", row.subgroup)) {
    if (got.invariant == want) {
      out.mismatches.push_back(label + "correction no longer needed");
    }
    want = c->value;
    ++out.corrections_applied;
  }
  if (got.invariant != want) {
    out.mismatches.push_back(label + "invariant " + show(got.invariant) + ", expected " +
                             show(want));
  }
  if (find_correction(ref, "blank_verdict", row.subgroup)) {
    ++out.corrections_applied;
    return;
  }
  if (got.twist_isomorphic != row.twist_isomorphic) {
    out.mismatches.push_back(label + "isomorphism " + show(got.twist_isomorphic) +
                             ", expected " + show(row.twist_isomorphic));
  }
}

}  // namespace

TableCheck check_table(const GroupTable& g, int num_gens, const ReferenceGroup& ref) {
  TableCheck out;
  std::vector<std::vector<Element>> listed;
  for (const auto& row : ref.rows) {
    compare_row(g, num_gens, row, ref, out);
    listed.push_back(evaluate_row(g, num_gens, row).members);
  }
  for (const auto& c : ref.corrections) {
    if (c.kind != "missing_row") continue;
    compare_row(g, num_gens, *c.row, ref, out);
    ++out.corrections_applied;
    listed.push_back(evaluate_row(g, num_gens, *c.row).members);
  }
  std::sort(listed.begin(), listed.end());
  std::vector<std::vector<Element>> found;
  for (const auto& cand : enumerate_candidate_subgroups(g)) {
    found.emplace_back(cand.subgroup.members().begin(), cand.subgroup.members().end());
  }
  if (listed != found) {
    out.mismatches.push_back(ref.stem + ": candidate set has " + std::to_string(found.size()) +
                             " subgroups, table (with corrections) lists " +
                             std::to_string(listed.size()));
  }
  return out;
}

std::string reference_path() {
  return std::string(ISOCAT_CORPUS_DIR) + "/reference_tables.json";
}

std::string corpus_path(const std::string& stem) {
  return std::string(ISOCAT_CORPUS_DIR) + "/" + stem + ".grp";
}

GroupTable corpus_group(const std::string& stem) {
  return realize(load_group_file(corpus_path(stem)));
}

}  // namespace isocat::testing
