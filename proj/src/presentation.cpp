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

#include "isocat/presentation.hpp"

#include <cctype>
#include <deque>
#include <fstream>
#include <sstream>
#include <utility>

#include "isocat/error.hpp"

namespace isocat {
namespace {

constexpr int kUndef = -1;

int column_of(int letter) {
  return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
}

int inverse_column(int col) { return col ^ 1; }

// Coset enumeration state. Dead cosets keep a forwarding pointer in parent_.
class Enumerator {
 public:
  Enumerator(const Presentation& p, std::size_t max_cosets)
      : ncols_(2 * p.num_gens), max_cosets_(max_cosets) {
    for (const Word& r : p.relators) {
      if (r.empty()) continue;
      std::vector<int> cols;
      for (int letter : r) cols.push_back(column_of(letter));
      relators_.push_back(cols);
    }
    // Every cyclic rotation of every relator and of its inverse, indexed by
    // first column, for deduction processing.
    by_first_.resize(ncols_);
    for (const auto& r : relators_) {
      std::vector<int> inv(r.rbegin(), r.rend());
      for (int& c : inv) c = inverse_column(c);
      for (const std::vector<int>* w : {&r, static_cast<const std::vector<int>*>(&inv)}) {
        for (std::size_t k = 0; k < w->size(); ++k) {
          std::vector<int> rot(w->begin() + k, w->end());
          rot.insert(rot.end(), w->begin(), w->begin() + k);
          by_first_[rot[0]].push_back(std::move(rot));
        }
      }
    }
    new_coset();
  }

  void run() {
    for (int c = 0; c < static_cast<int>(parent_.size()); ++c) {
      for (const auto& r : relators_) {
        if (!alive(c)) break;
        scan_and_fill(c, r);
        process_deductions();
      }
      for (int x = 0; x < ncols_ && alive(c); ++x) {
        if (get(c, x) == kUndef) {
          define(c, x);
          process_deductions();
        }
      }
    }
  }

  CosetTable standardized() const {
    // Breadth-first renumbering from coset 0 along positive generators.
    const int total = static_cast<int>(parent_.size());
    std::vector<int> newid(total, kUndef);
    std::vector<int> order{0};
    newid[0] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (int x = 0; x < ncols_; x += 2) {
        const int d = get(order[i], x);
        if (newid[d] == kUndef) {
          newid[d] = static_cast<int>(order.size());
          order.push_back(d);
        }
      }
    }
    CosetTable t;
    t.num_cosets = static_cast<int>(order.size());
    t.num_gens = ncols_ / 2;
    t.table.resize(static_cast<std::size_t>(t.num_cosets) * ncols_);
    for (int i = 0; i < t.num_cosets; ++i) {
      for (int x = 0; x < ncols_; ++x) {
        t.table[static_cast<std::size_t>(i) * ncols_ + x] = newid[get(order[i], x)];
      }
    }
    t.complete = true;
    return t;
  }

  bool complete() const {
    for (int c = 0; c < static_cast<int>(parent_.size()); ++c) {
      if (!alive(c)) continue;
      for (int x = 0; x < ncols_; ++x) {
        if (get(c, x) == kUndef) return false;
      }
      for (const auto& r : relators_) {
        int f = c;
        for (int x : r) f = get(f, x);
        if (f != c) return false;
      }
    }
    return true;
  }

 private:
  bool alive(int c) const { return parent_[c] == c; }
  int get(int c, int x) const { return table_[static_cast<std::size_t>(c) * ncols_ + x]; }
  void set(int c, int x, int d) { table_[static_cast<std::size_t>(c) * ncols_ + x] = d; }

  int new_coset() {
    if (parent_.size() >= max_cosets_) throw Overflow(max_cosets_);
    const int d = static_cast<int>(parent_.size());
    parent_.push_back(d);
    table_.resize(table_.size() + ncols_, kUndef);
    return d;
  }

  void define(int c, int x) {
    const int d = new_coset();
    set(c, x, d);
    set(d, inverse_column(x), c);
    deductions_.emplace_back(c, x);
  }

  void deduce(int f, int x, int b) {
    set(f, x, b);
    set(b, inverse_column(x), f);
    deductions_.emplace_back(f, x);
  }

  // Traces w from c forwards and backwards; returns the gap (i, j, f, b).
  struct Gap {
    std::size_t i;
    std::ptrdiff_t j;
    int f, b;
  };

  Gap trace(int c, const std::vector<int>& w) const {
    Gap g{0, static_cast<std::ptrdiff_t>(w.size()) - 1, c, c};
    while (static_cast<std::ptrdiff_t>(g.i) <= g.j && get(g.f, w[g.i]) != kUndef) {
      g.f = get(g.f, w[g.i]);
      ++g.i;
    }
    if (static_cast<std::ptrdiff_t>(g.i) > g.j) return g;
    while (g.j >= static_cast<std::ptrdiff_t>(g.i) &&
           get(g.b, inverse_column(w[g.j])) != kUndef) {
      g.b = get(g.b, inverse_column(w[g.j]));
      --g.j;
    }
    return g;
  }

  // Returns true when the scan closed, made a deduction or a coincidence.
  bool scan(int c, const std::vector<int>& w) {
    Gap g = trace(c, w);
    const auto i = static_cast<std::ptrdiff_t>(g.i);
    if (i > g.j) {
      if (g.f != g.b) coincidence(g.f, g.b);
      return true;
    }
    if (i == g.j) {
      deduce(g.f, w[g.i], g.b);
      return true;
    }
    return false;
  }

  void scan_and_fill(int c, const std::vector<int>& w) {
    while (alive(c) && !scan(c, w)) {
      Gap g = trace(c, w);
      define(g.f, w[g.i]);
    }
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      auto [c, x] = deductions_.back();
      deductions_.pop_back();
      for (const auto& w : by_first_[x]) {
        if (!alive(c)) break;
        scan(c, w);
      }
      if (!alive(c)) continue;
      const int d = get(c, x);
      if (d == kUndef || !alive(d)) continue;
      for (const auto& w : by_first_[inverse_column(x)]) {
        if (!alive(d)) break;
        scan(d, w);
      }
    }
  }

  int rep(int k) {
    int r = k;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[k] != r) {
      const int next = parent_[k];
      parent_[k] = r;
      k = next;
    }
    return r;
  }

  void merge(int k, int l, std::deque<int>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    parent_[l] = k;
    queue.push_back(l);
  }

  void coincidence(int a, int b) {
    std::deque<int> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      const int e = queue.front();
      queue.pop_front();
      for (int x = 0; x < ncols_; ++x) {
        const int f = get(e, x);
        if (f == kUndef) continue;
        const int xi = inverse_column(x);
        if (get(f, xi) == e) set(f, xi, kUndef);
        const int e1 = rep(e);
        const int f1 = rep(f);
        if (get(e1, x) != kUndef) {
          merge(f1, get(e1, x), queue);
        } else if (get(f1, xi) != kUndef) {
          merge(e1, get(f1, xi), queue);
        } else {
          set(e1, x, f1);
          set(f1, xi, e1);
          deductions_.emplace_back(e1, x);
        }
      }
    }
  }

  int ncols_;
  std::size_t max_cosets_;
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<std::vector<int>>> by_first_;
  std::vector<int> table_;
  std::vector<int> parent_;
  std::vector<std::pair<int, int>> deductions_;
};

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace

Word parse_word(std::string_view text, int num_gens, int line, int column0) {
  Word w;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&](bool allow_sign) -> long {
    const std::size_t start = i;
    if (allow_sign && i < text.size() && text[i] == '-') ++i;
    const std::size_t digits = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits) {
      throw ParseError("expected a number", line, column0 + static_cast<int>(start));
    }
    return std::stol(std::string(text.substr(start, i - start)));
  };
  skip_space();
  if (i < text.size() && text[i] == 'e' && trim(text.substr(i)) == "e") return w;
  if (i >= text.size()) throw ParseError("empty word", line, column0);
  while (true) {
    skip_space();
    if (i >= text.size()) break;
    const int col = column0 + static_cast<int>(i);
    if (text[i] != 'f') {
      throw ParseError(std::string("unexpected character '") + text[i] + "'",
                       line, col);
    }
    ++i;
    const long m = read_int(false);
    if (m < 1 || m > num_gens) {
      throw UnknownGenerator("unknown generator f" + std::to_string(m), line, col);
    }
    long e = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      e = read_int(true);
    }
    const int letter = e < 0 ? -static_cast<int>(m) : static_cast<int>(m);
    for (long k = 0; k < (e < 0 ? -e : e); ++k) w.push_back(letter);
  }
  return w;
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (int letter : w) {
    s += "f" + std::to_string(letter > 0 ? letter : -letter);
    if (letter < 0) s += "^-1";
  }
  return s;
}

Word inverse_word(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (int& x : r) x = -x;
  return r;
}

Presentation parse_group_file(std::string_view text) {
  Presentation p;
  bool have_name = false, have_gens = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) {
      if (raw.compare(hash, 2, "#!") == 0) p.annotations.push_back(trim(raw.substr(hash + 2)));
      raw.erase(hash);
    }
    const std::string body = trim(raw);
    if (body.empty()) continue;
    const int indent = static_cast<int>(raw.find_first_not_of(" \t")) + 1;
    std::istringstream ls(body);
    std::string kw;
    ls >> kw;
    if (kw == "group") {
      if (have_name) throw ParseError("duplicate 'group' line", line, indent);
      std::string rest;
      std::getline(ls, rest);
      p.name = trim(rest);
      if (p.name.empty()) throw ParseError("missing group name", line, indent + 6);
      have_name = true;
    } else if (kw == "gens") {
      if (!have_name) throw ParseError("'gens' before 'group'", line, indent);
      if (have_gens) throw ParseError("duplicate 'gens' line", line, indent);
      int k = 0;
      std::string extra;
      if (!(ls >> k) || (ls >> extra) || k < 1 || k > 8) {
        throw ParseError("'gens' expects a count between 1 and 8", line, indent + 5);
      }
      p.num_gens = k;
      have_gens = true;
    } else if (kw == "prod" || kw == "rel") {
      if (!have_gens) throw ParseError("'" + kw + "' before 'gens'", line, indent);
      const std::size_t after_kw = raw.find(kw, indent - 1) + kw.size();
      if (kw == "rel") {
        p.relators.push_back(parse_word(std::string_view(raw).substr(after_kw),
                                        p.num_gens, line,
                                        static_cast<int>(after_kw) + 1));
        continue;
      }
      const std::size_t eq = raw.find('=', after_kw);
      if (eq == std::string::npos) {
        throw ParseError("'prod' needs '='", line, static_cast<int>(raw.size()) + 1);
      }
      std::istringstream lhs(raw.substr(after_kw, eq - after_kw));
      int i = 0, j = 0;
      std::string extra;
      if (!(lhs >> i >> j) || (lhs >> extra)) {
        throw ParseError("'prod' expects two generator indices", line,
                         static_cast<int>(after_kw) + 1);
      }
      for (int idx : {i, j}) {
        if (idx < 1 || idx > p.num_gens) {
          throw UnknownGenerator("unknown generator index " + std::to_string(idx),
                                 line, static_cast<int>(after_kw) + 1);
        }
      }
      const Word rhs = parse_word(std::string_view(raw).substr(eq + 1), p.num_gens,
                                  line, static_cast<int>(eq) + 2);
      Word r{i, j};
      const Word ri = inverse_word(rhs);
      r.insert(r.end(), ri.begin(), ri.end());
      p.relators.push_back(std::move(r));
    } else {
      throw ParseError("unknown keyword '" + kw + "'", line, indent);
    }
  }
  if (!have_name) throw ParseError("missing 'group' line", line + 1, 1);
  if (!have_gens) throw ParseError("missing 'gens' line", line + 1, 1);
  return p;
}

Presentation load_group_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  try {
    return parse_group_file(ss.str());
  } catch (const UnknownGenerator& e) {
    throw UnknownGenerator(path, e.detail(), e.line(), e.column());
  } catch (const ParseError& e) {
    throw ParseError(path, e.detail(), e.line(), e.column());
  }
}

CosetTable todd_coxeter(const Presentation& p, std::size_t max_cosets) {
  if (max_cosets < 1) throw Error("max_cosets must be positive");
  Enumerator en(p, max_cosets);
  en.run();
  while (!en.complete()) en.run();
  return en.standardized();
}

GroupTable realize(const Presentation& p, std::size_t max_cosets) {
  const CosetTable t = todd_coxeter(p, max_cosets);
  const int n = t.num_cosets;
  const int k = t.num_gens;

  // parent[b] and gen[b] give the BFS tree edge into coset b.
  std::vector<int> parent(n, -1), gen(n, -1), order{0};
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int x = 0; x < k; ++x) {
      const int d = t.at(order[i], 2 * x);
      if (!seen[d]) {
        seen[d] = 1;
        parent[d] = order[i];
        gen[d] = x;
        order.push_back(d);
      }
    }
  }
  std::vector<Element> mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    mul[static_cast<std::size_t>(a) * n] = a;
    for (std::size_t i = 1; i < order.size(); ++i) {
      const int b = order[i];
      mul[static_cast<std::size_t>(a) * n + b] =
          t.at(mul[static_cast<std::size_t>(a) * n + parent[b]], 2 * gen[b]);
    }
  }
  std::vector<Element> gen_ids;
  for (int x = 0; x < k; ++x) gen_ids.push_back(t.at(0, 2 * x));
  return GroupTable::from_flat(p.name, n, std::move(mul), std::move(gen_ids));
}

Element evaluate(const GroupTable& g, const Word& w) {
  Element r = g.identity();
  for (int letter : w) {
    const int idx = (letter > 0 ? letter : -letter) - 1;
    if (idx < 0 || idx >= static_cast<int>(g.gen_ids().size())) {
      throw Error("word uses generator f" + std::to_string(idx + 1) + " but " +
                  g.name() + " has " + std::to_string(g.gen_ids().size()));
    }
    const Element s = g.gen_ids()[idx];
    r = g.mul(r, letter > 0 ? s : g.inv(s));
  }
  return r;
}

std::vector<Word> normal_words(const GroupTable& g) {
  std::vector<Word> words(g.order());
  std::vector<char> seen(g.order(), 0);
  std::vector<Element> queue{g.identity()};
  seen[g.identity()] = 1;
  const auto gens = g.gen_ids();
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (std::size_t x = 0; x < gens.size(); ++x) {
      const Element y = g.mul(queue[i], gens[x]);
      if (seen[y]) continue;
      seen[y] = 1;
      words[y] = words[queue[i]];
      words[y].push_back(static_cast<int>(x) + 1);
      queue.push_back(y);
    }
  }
  if (queue.size() != static_cast<std::size_t>(g.order())) {
    throw Error(g.name() + ": gen_ids do not generate the group");
  }
  return words;
}

std::string emit_group_file(const GroupTable& g) {
  const auto words = normal_words(g);
  const auto gens = g.gen_ids();
  std::ostringstream os;
  os << "group " << g.name() << "\n";
  os << "gens " << gens.size() << "\n";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      os << "prod " << i + 1 << " " << j + 1 << " = "
         << word_to_string(words[g.mul(gens[i], gens[j])]) << "\n";
    }
  }
  for (Element x = 0; x < g.order(); ++x) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const Element y = g.mul(x, gens[s]);
      Word lhs = words[x];
      lhs.push_back(static_cast<int>(s) + 1);
      if (lhs == words[y]) continue;
      const Word rhs = inverse_word(words[y]);
      lhs.insert(lhs.end(), rhs.begin(), rhs.end());
      os << "rel " << word_to_string(lhs) << "\n";
    }
  }
  return os.str();
}

}  // namespace isocat
