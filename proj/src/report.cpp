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

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "isocat/classify.hpp"
#include "isocat/error.hpp"
#include "json.hpp"

namespace isocat {
namespace {

using nlohmann::ordered_json;

std::string invariant_text(const ClassificationRecord& r) {
  if (const bool* b = std::get_if<bool>(&r.invariant)) return *b ? "yes" : "no";
  const auto& v = std::get<std::vector<int>>(r.invariant);
  if (v.empty()) return "none";
  std::string s;
  for (int i : v) s += (s.empty() ? "" : ",") + std::to_string(i);
  return s;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : sep) + x;
  return s;
}

std::string emit_text(const Report& r) {
  std::ostringstream os;
  os << "# isocat classification report\n";
  os << "# Partners are named by corpus file; within a bucket the groups are\n";
  os << "# numbered by position in corpus order.\n\n";
  for (const Bucket& b : r.buckets) {
    os << "== order list " << b.order_list.to_string() << " ("
       << b.groups.size() << (b.groups.size() == 1 ? " group" : " groups") << ")\n\n";
    int number = 0;
    for (const GroupReport& g : b.groups) {
      os << "-- " << ++number << ". " << g.name << (g.rigid ? "  rigid" : "  NOT rigid")
         << "\n";
      for (const auto& a : g.annotations) os << "   note: " << a << "\n";
      if (!g.generator_table.empty()) {
        std::size_t width = 1;
        for (const auto& row : g.generator_table) {
          for (const auto& c : row) width = std::max(width, c.size());
        }
        os << "   generator products (row * column)\n";
        for (const auto& row : g.generator_table) {
          os << "   ";
          for (const auto& c : row) os << " " << std::setw(static_cast<int>(width)) << c;
          os << "\n";
        }
      }
      if (g.records.empty()) {
        os << "   no candidate subgroups"
           << (g.generator_table.empty() ? "" : " examined (abelian or none found)") << "\n\n";
        continue;
      }
      os << "   candidate subgroups\n";
      for (const auto& rec : g.records) {
        os << "    [" << join(rec.subgroup, ", ") << "]  " << rec.type
           << "  G-inv: " << invariant_text(rec) << "  twist ~ G: "
           << (rec.twist_isomorphic ? (*rec.twist_isomorphic ? "yes" : "no") : "-");
        if (rec.partner) os << "  partner: " << *rec.partner;
        os << "\n";
      }
      os << "\n";
    }
  }
  os << "== isocategorical non-isomorphic pairs: " << r.pairs.size() << "\n";
  for (const auto& p : r.pairs) os << "   " << p[0] << " <-> " << p[1] << "\n";
  return os.str();
}

std::string emit_json(const Report& r) {
  ordered_json doc;
  doc["buckets"] = ordered_json::array();
  for (const Bucket& b : r.buckets) {
    ordered_json jb;
    jb["order_list"] = b.order_list.counts;
    jb["groups"] = ordered_json::array();
    for (const GroupReport& g : b.groups) {
      ordered_json jg;
      jg["name"] = g.name;
      jg["rigid"] = g.rigid;
      jg["records"] = ordered_json::array();
      for (const auto& rec : g.records) {
        ordered_json jr;
        jr["subgroup"] = rec.subgroup;
        jr["type"] = rec.type;
        if (const bool* v = std::get_if<bool>(&rec.invariant)) {
          jr["invariant"] = *v;
        } else {
          jr["invariant"] = std::get<std::vector<int>>(rec.invariant);
        }
        jr["twist_isomorphic"] =
            rec.twist_isomorphic ? ordered_json(*rec.twist_isomorphic) : ordered_json();
        jr["partner"] = rec.partner ? ordered_json(*rec.partner) : ordered_json();
        jg["records"].push_back(std::move(jr));
      }
      jb["groups"].push_back(std::move(jg));
    }
    doc["buckets"].push_back(std::move(jb));
  }
  doc["pairs"] = ordered_json::array();
  for (const auto& p : r.pairs) doc["pairs"].push_back({p[0], p[1]});
  return doc.dump(2) + "\n";
}

}  // namespace

std::string emit_report(const Report& r, ReportFormat format) {
  return format == ReportFormat::kJson ? emit_json(r) : emit_text(r);
}

Report report_from_json(const std::string& text) {
  Report r;
  try {
    const auto doc = nlohmann::json::parse(text);
    for (const auto& jb : doc.at("buckets")) {
      Bucket b;
      b.order_list.counts = jb.at("order_list").get<std::vector<int>>();
      const int n = std::accumulate(b.order_list.counts.begin(), b.order_list.counts.end(), 0);
      for (int d = 1; d <= n; ++d) {
        if (n % d == 0) b.order_list.divisors.push_back(d);
      }
      for (const auto& jg : jb.at("groups")) {
        GroupReport g;
        g.name = jg.at("name").get<std::string>();
        g.rigid = jg.at("rigid").get<bool>();
        for (const auto& jr : jg.at("records")) {
          ClassificationRecord rec;
          rec.subgroup = jr.at("subgroup").get<std::vector<std::string>>();
          rec.type = jr.at("type").get<std::string>();
          const auto& inv = jr.at("invariant");
          if (inv.is_boolean()) {
            rec.invariant = inv.get<bool>();
          } else {
            rec.invariant = inv.get<std::vector<int>>();
          }
          if (!jr.at("twist_isomorphic").is_null()) {
            rec.twist_isomorphic = jr.at("twist_isomorphic").get<bool>();
          }
          if (!jr.at("partner").is_null()) rec.partner = jr.at("partner").get<std::string>();
          g.records.push_back(std::move(rec));
        }
        b.groups.push_back(std::move(g));
      }
      r.buckets.push_back(std::move(b));
    }
    for (const auto& p : doc.at("pairs")) {
      r.pairs.push_back({p.at(0).get<std::string>(), p.at(1).get<std::string>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed report: ") + e.what());
  }
  return r;
}

}  // namespace isocat
