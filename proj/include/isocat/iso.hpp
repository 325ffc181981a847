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

#include <optional>
#include <span>
#include <vector>

#include "isocat/group.hpp"

namespace isocat {

// witness[x] is the image in H of element x of G.
using IsoWitness = std::vector<Element>;

struct IsoOptions {
  // Compare fingerprints before searching. Off only in tests that check the
  // search on its own.
  bool use_fingerprint = true;
};

/// Bijective homomorphism check on all n^2 pairs.
bool is_isomorphism(const GroupTable& g, const GroupTable& h,
                    std::span<const Element> witness);

/// Greedy: repeatedly add the least id that enlarges the generated
/// subgroup the most.
std::vector<Element> minimal_generating_sequence(const GroupTable& g);

/// Backtracking over generator images, filtered by element labels (order,
/// centralizer order, class size, square-root count, label of the square)
/// and extended by closure. Returns a verified witness or nullopt.
std::optional<IsoWitness> are_isomorphic(const GroupTable& g, const GroupTable& h,
                                         IsoOptions options = {});

/// Exhaustive search over all generator images with no pruning. Test
/// oracle; SizeLimit above order 16.
bool brute_force_isomorphic(const GroupTable& g, const GroupTable& h);

}  // namespace isocat
