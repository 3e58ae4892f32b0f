// Copyright 2026 The mcpaths Authors
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

#ifndef MCPATHS_LEX_WEIGHTS_HPP_
#define MCPATHS_LEX_WEIGHTS_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "mcpaths/big_uint.hpp"
#include "mcpaths/graph.hpp"

namespace mcpaths {

// Single integer carrying all criteria in disjoint bit segments, the most
// important criterion in the most significant segment.
using EnsembledWeight = BigUint;

class MalformedWeightError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Segment geometry for packing criteria vectors of one graph.
//
// Criterion i gets l_i = ceil(log2(W_i + 1)) bits, where W_i is the sum of
// w_i over all edges, so no simple path can overflow its segment. Segment i
// starts at bit r_i = l_{i+1} + ... + l_q; the last criterion sits at bit 0.
struct BitLayout {
  std::vector<std::uint64_t> totals;      // W_i
  std::vector<std::size_t> segment_bits;  // l_i
  std::vector<std::size_t> offsets;       // r_i

  std::size_t q() const { return totals.size(); }
  // Sum of all l_i; every simple path weight is below 2^bit_budget().
  std::size_t bit_budget() const;
};

// Layout for explicit per-criterion totals.
BitLayout layout_from_totals(std::span<const std::uint64_t> totals);

// Throws std::invalid_argument when q == 0 and std::overflow_error when a
// criterion total exceeds the signed 64-bit range.
BitLayout compute_layout(const Graph& g);

EnsembledWeight pack(const BitLayout& layout, std::span<const Weight> v);

// Splits a packed value into per-criterion sums. Throws MalformedWeightError
// when bits above the layout's bit budget are set.
CriteriaVector unpack(const BitLayout& layout, const EnsembledWeight& w);

// Lexicographic order, position 0 most significant.
std::strong_ordering compare_lex(std::span<const Weight> a,
                                 std::span<const Weight> b);

// EW(e) for every edge of g, indexed by edge position.
std::vector<EnsembledWeight> pack_edges(const Graph& g,
                                        const BitLayout& layout);

}  // namespace mcpaths

#endif  // MCPATHS_LEX_WEIGHTS_HPP_
