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

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "isocat/group.hpp"
#include "isocat/presentation.hpp"

namespace isocat {

struct CorpusEntry {
  std::string path;
  Presentation presentation;
  GroupTable group;
};

/// Reads every `*.grp` file in `dir`, realizes it and sorts the entries by
/// order list, then by the trailing `_<index>` of the file stem, then by
/// name. Errors name the offending file.
std::vector<CorpusEntry> load_corpus(const std::string& dir, int jobs = 1);

struct ClassificationRecord {
  std::vector<std::string> subgroup;  // basis elements as words
  std::string type;                   // "C4xC4"
  // C2xC2 and C4xC4: the single cocycle class up to the k=1/k=3 symmetry.
  // C2^4: 1-based census indices of the invariant cocycles.
  std::variant<bool, std::vector<int>> invariant;
  // Null when nothing is invariant.
  std::optional<bool> twist_isomorphic;
  std::optional<std::string> partner;
};

struct GroupReport {
  std::string name;
  bool rigid = true;
  std::vector<ClassificationRecord> records;
  // Products of the distinguished generators, as words.
  std::vector<std::vector<std::string>> generator_table;
  std::vector<std::string> annotations;
};

struct Bucket {
  OrderList order_list;
  std::vector<GroupReport> groups;
};

/// Counts of the self-checks run during classification. Not serialized.
struct ClassifyStats {
  long twists = 0;
  long order_list_checks = 0;
  long functional_equation_checks = 0;
  long closed_form_checks = 0;
  long k1_k3_checks = 0;

  ClassifyStats& operator+=(const ClassifyStats& o);
};

struct Report {
  std::vector<Bucket> buckets;
  std::vector<std::array<std::string, 2>> pairs;
  ClassifyStats stats;
};

/// Display words for every element: collected words f1^e1 ... fk^ek with
/// e_i in {0,1} when these cover the group exactly once, shortest words
/// otherwise.
std::vector<std::string> element_words(const GroupTable& g);

/// One record per candidate subgroup of G; empty for abelian G. `bucket`
/// holds every group with G's order list (G included). Each invariant twist
/// is checked inline (order list, functional equation, closed form against
/// ratio, k=1 against k=3) and InvariantViolation is thrown on failure.
/// PartnerNotFound if a twist is neither G nor any bucket member.
/// `partners`, when given, receives the name of every bucket member that
/// some twist is isomorphic to (the records keep only the first one).
std::vector<ClassificationRecord> classify_group(
    const GroupTable& g, std::span<const GroupTable* const> bucket,
    ClassifyStats* stats = nullptr, std::vector<std::string>* partners = nullptr);

/// Group indices (into `corpus`) per order list, in corpus order.
std::map<OrderList, std::vector<std::size_t>> bucket_by_order_list(
    std::span<const CorpusEntry> corpus);

Report classify_entries(std::span<const CorpusEntry> corpus, int jobs = 1);
Report classify_corpus(const std::string& dir, int jobs = 1);

enum class ReportFormat { kText, kJson };

std::string emit_report(const Report& r, ReportFormat format);
/// Parses the JSON form back. Generator tables and annotations are not part
/// of the JSON schema and come back empty.
Report report_from_json(const std::string& text);

}  // namespace isocat
