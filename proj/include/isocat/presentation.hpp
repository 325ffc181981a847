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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "isocat/group.hpp"

namespace isocat {

// Signed 1-based generator indices: +m is f_m, -m its inverse. Empty is e.
using Word = std::vector<int>;

struct Presentation {
  std::string name;
  int num_gens = 0;
  std::vector<Word> relators;
  // Text of `#!` lines, in file order. Used to carry transcription notes.
  std::vector<std::string> annotations;
};

struct CosetTable {
  int num_cosets = 0;
  int num_gens = 0;
  // Row-major; column 2i is f_{i+1}, column 2i+1 its inverse.
  std::vector<int> table;
  bool complete = false;

  int at(int coset, int column) const { return table[coset * 2 * num_gens + column]; }
};

inline constexpr std::size_t kDefaultMaxCosets = 100000;

/// Parses `f1f2^-1f5` or `e`. Throws ParseError / UnknownGenerator; `line`
/// and `column0` only affect error positions.
Word parse_word(std::string_view text, int num_gens, int line = 1,
                int column0 = 1);
std::string word_to_string(const Word& w);
Word inverse_word(const Word& w);

/// Group file format:
///   group <name>
///   gens <k>                 (k <= 8)
///   prod <i> <j> = <word>    f_i f_j = word
///   rel <word>               word = e
///   # comment, #! annotation
Presentation parse_group_file(std::string_view text);
Presentation load_group_file(const std::string& path);

/// HLT coset enumeration over the trivial subgroup, with deduction
/// processing and coincidence collapse. Cosets are renumbered breadth-first
/// over the generator columns before returning.
CosetTable todd_coxeter(const Presentation& p,
                        std::size_t max_cosets = kDefaultMaxCosets);

/// Regular representation of the enumerated group. Element 0 is the
/// identity and gen_ids()[i] is the image of f_{i+1}.
GroupTable realize(const Presentation& p,
                   std::size_t max_cosets = kDefaultMaxCosets);

/// Value of `w` in `g`, reading f_m as g.gen_ids()[m-1].
Element evaluate(const GroupTable& g, const Word& w);

/// Shortest positive word for every element (ties broken by BFS order over
/// the generators).
std::vector<Word> normal_words(const GroupTable& g);

/// A group file that defines `g` on its generators: every pairwise product
/// as a `prod` line plus the non-tree edges of the Cayley graph as `rel`
/// lines.
std::string emit_group_file(const GroupTable& g);

}  // namespace isocat
