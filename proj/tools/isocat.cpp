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

// Command-line front end: cocycles, twist, iso, classify, orderlist.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "isocat/classify.hpp"
#include "isocat/cocycle.hpp"
#include "isocat/error.hpp"
#include "isocat/iso.hpp"
#include "isocat/presentation.hpp"
#include "isocat/twist.hpp"

namespace {

using namespace isocat;

constexpr int kCorpusError = 2;
constexpr int kInvariantError = 3;

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path);
  f << text;
  if (!f) throw Error("error writing " + path);
}

int cmd_cocycles(const std::string& type) {
  AbelianType t;
  if (type == "c2x2") t = {{2, 2}};
  else if (type == "c4x4") t = {{4, 4}};
  else t = {{2, 2, 2, 2}};
  const auto reps = nondegenerate_reps(t);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const CocycleRep& w = reps[i];
    if (w.kind != CocycleKind::kC2x4) {
      std::cout << i + 1 << ": omega(s,t) = zeta" << factor_order(w.kind) << "^("
                << (w.k == 1 ? "" : std::to_string(w.k)) << "s1 t2)\n";
      continue;
    }
    std::cout << w.index << ":\n";
    for (int r = 0; r < 4; ++r) {
      std::cout << "  ";
      for (int c = 0; c < 4; ++c) std::cout << w.lambda(r, c) << (c < 3 ? " " : "\n");
    }
  }
  return 0;
}

std::vector<Element> parse_subgroup(const GroupTable& g, int num_gens,
                                    const std::string& spec) {
  std::vector<Element> out;
  std::string s = spec;
  for (char& c : s) {
    if (c == '[' || c == ']') c = ' ';
  }
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(evaluate(g, parse_word(item, num_gens)));
  return out;
}

int cmd_twist(const std::string& file, const std::string& subgroup, int index,
              bool emit_relations, bool emit_table, const std::string& out) {
  const Presentation p = load_group_file(file);
  const GroupTable g = realize(p);
  const auto gens = parse_subgroup(g, p.num_gens, subgroup);
  const Subgroup n = generated_subgroup(g, gens);
  const auto type = abelian_type(n);
  if (!type) throw TypeMismatch("subgroup is not abelian");
  if (!is_normal(g, n)) throw NotNormal("subgroup is not normal");
  AbelianBasis b = [&] {
    try {
      return make_basis(n, *type, gens);
    } catch (const TypeMismatch&) {
      return standard_basis(n, *type);
    }
  }();
  const auto reps = nondegenerate_reps(*type);
  if (index < 1 || index > static_cast<int>(reps.size())) {
    throw Error("cocycle index must be between 1 and " + std::to_string(reps.size()));
  }
  const CocycleRep& w = reps[index - 1];
  if (!is_g_invariant(g, b, w)) throw NotInvariant("cocycle is not G-invariant");
  const TwistedGroup tw = twisted_group(g, b, w);

  // Keep the source generators when they still generate the twisted group.
  std::vector<Element> tgens(g.gen_ids().begin(), g.gen_ids().end());
  if (generated_subgroup(tw.table, tgens).order() != g.order()) {
    tgens = minimal_generating_sequence(tw.table);
  }
  const std::vector<Element> flat(tw.table.flat_table().begin(), tw.table.flat_table().end());
  const GroupTable t = GroupTable::from_flat(p.name + "^w", g.order(), flat, tgens);

  std::string text = emit_group_file(t);
  if (emit_relations) {
    std::vector<NamedElement> named;
    for (std::size_t i = 0; i < tgens.size(); ++i) {
      named.push_back({"f" + std::to_string(i + 1), tgens[i]});
    }
    for (const auto& r : twist_relations(t, named)) {
      text += "# " + r.lhs + " = " + r.rhs + "\n";
    }
  }
  if (emit_table) {
    for (Element a = 0; a < t.order(); ++a) {
      text += "#";
      for (Element c = 0; c < t.order(); ++c) text += " " + std::to_string(t.mul(a, c));
      text += "\n";
    }
  }
  write_output(text, out);
  return 0;
}

int cmd_iso(const std::string& f1, const std::string& f2, bool witness) {
  const GroupTable g = realize(load_group_file(f1));
  const GroupTable h = realize(load_group_file(f2));
  const auto w = are_isomorphic(g, h);
  std::cout << (w ? "isomorphic" : "not-isomorphic") << "\n";
  if (w && witness) {
    for (std::size_t i = 0; i < w->size(); ++i) std::cout << (i ? " " : "") << (*w)[i];
    std::cout << "\n";
  }
  return 0;
}

int cmd_orderlist(const std::string& file) {
  std::cout << order_list(realize(load_group_file(file))).to_string() << "\n";
  return 0;
}

int cmd_classify(const std::string& dir, const std::string& format,
                 const std::string& out, int jobs) {
  const Report r = classify_corpus(dir, jobs);
  write_output(emit_report(r, format == "json" ? ReportFormat::kJson : ReportFormat::kText),
               out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Isocategorical classification of small groups"};
  app.require_subcommand(1);

  std::string type;
  auto* cocycles = app.add_subcommand("cocycles", "List non-degenerate cocycle representatives");
  cocycles->add_option("--type", type)->required()->check(
      CLI::IsMember({"c2x2", "c4x4", "c2x4"}));

  std::string group_file, subgroup, out;
  int cocycle = 1;
  bool emit_relations = false, emit_table = false;
  auto* twist = app.add_subcommand("twist", "Twist a group by a cocycle on a normal subgroup");
  twist->add_option("--group", group_file)->required()->check(CLI::ExistingFile);
  twist->add_option("--subgroup", subgroup, "Comma-separated generator words, e.g. f1f4,f2")
      ->required();
  twist->add_option("--cocycle", cocycle, "1-based representative index")->required();
  twist->add_flag("--emit-relations", emit_relations);
  twist->add_flag("--emit-table", emit_table);
  twist->add_option("--out", out);

  std::string f1, f2;
  bool witness = false;
  auto* iso = app.add_subcommand("iso", "Decide isomorphism of two groups");
  iso->add_option("file1", f1)->required()->check(CLI::ExistingFile);
  iso->add_option("file2", f2)->required()->check(CLI::ExistingFile);
  iso->add_flag("--witness", witness);

  std::string corpus, format = "text";
  int jobs = 1;
  auto* classify = app.add_subcommand("classify", "Classify a corpus of group files");
  classify->add_option("--corpus", corpus)->required();
  classify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  classify->add_option("--out", out);
  classify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  std::string ol_file;
  auto* orderlist = app.add_subcommand("orderlist", "Print the order list of a group");
  orderlist->add_option("file", ol_file)->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version exit 0; usage errors count as input errors.
    return app.exit(e) == 0 ? 0 : kCorpusError;
  }

  try {
    if (*cocycles) return cmd_cocycles(type);
    if (*twist) return cmd_twist(group_file, subgroup, cocycle, emit_relations, emit_table, out);
    if (*iso) return cmd_iso(f1, f2, witness);
    if (*classify) return cmd_classify(corpus, format, out, jobs);
    if (*orderlist) return cmd_orderlist(ol_file);
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kInvariantError;
  } catch (const NotInvariant& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvariantError;
  } catch (const OddNumerator& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kInvariantError;
  } catch (const NoSuchElement& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kInvariantError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCorpusError;
  }
  return 0;
}
