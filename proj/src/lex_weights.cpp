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

#include "mcpaths/lex_weights.hpp"

#include <bit>
#include <limits>
#include <numeric>
#include <string>

namespace mcpaths {

std::size_t BitLayout::bit_budget() const {
  return std::accumulate(segment_bits.begin(), segment_bits.end(),
                         std::size_t{0});
}

BitLayout layout_from_totals(std::span<const std::uint64_t> totals) {
  BitLayout layout;
  layout.totals.assign(totals.begin(), totals.end());
  const std::size_t q = totals.size();
  layout.segment_bits.resize(q);
  layout.offsets.assign(q, 0);
  for (std::size_t i = 0; i < q; ++i) {
    // bit_width(W) == ceil(log2(W + 1)) for every W >= 0.
    layout.segment_bits[i] = static_cast<std::size_t>(std::bit_width(totals[i]));
  }
  for (std::size_t i = q; i-- > 1;) {
    layout.offsets[i - 1] = layout.offsets[i] + layout.segment_bits[i];
  }
  return layout;
}

BitLayout compute_layout(const Graph& g) {
  const std::size_t q = g.criteria_count();
  if (q == 0) throw std::invalid_argument("compute_layout: graph has no criteria");
  constexpr auto kMax = static_cast<std::uint64_t>(std::numeric_limits<Weight>::max());
  std::vector<std::uint64_t> totals(q, 0);
  for (const Edge& e : g.edges()) {
    for (std::size_t i = 0; i < q; ++i) {
      totals[i] += static_cast<std::uint64_t>(e.weights[i]);
      if (totals[i] > kMax) {
        throw std::overflow_error("compute_layout: total of criterion " +
                                  std::to_string(i + 1) +
                                  " exceeds 64-bit signed range");
      }
    }
  }
  return layout_from_totals(totals);
}

EnsembledWeight pack(const BitLayout& layout, std::span<const Weight> v) {
  if (v.size() != layout.q()) {
    throw std::invalid_argument("pack: vector length " + std::to_string(v.size()) +
                                " does not match q = " + std::to_string(layout.q()));
  }
  EnsembledWeight out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) throw std::invalid_argument("pack: negative criterion weight");
    if (v[i] != 0) {
      out += BigUint::shifted(static_cast<std::uint64_t>(v[i]), layout.offsets[i]);
    }
  }
  return out;
}

CriteriaVector unpack(const BitLayout& layout, const EnsembledWeight& w) {
  const std::size_t budget = layout.bit_budget();
  if (w.bit_length() > budget) {
    throw MalformedWeightError("unpack: value " + w.to_decimal() + " uses " +
                               std::to_string(w.bit_length()) +
                               " bits, layout budget is " + std::to_string(budget));
  }
  CriteriaVector out(layout.q(), 0);
  for (std::size_t i = 0; i < layout.q(); ++i) {
    out[i] = static_cast<Weight>(
        w.extract_bits(layout.offsets[i], layout.segment_bits[i]));
  }
  return out;
}

std::strong_ordering compare_lex(std::span<const Weight> a,
                                 std::span<const Weight> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("compare_lex: length mismatch");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

std::vector<EnsembledWeight> pack_edges(const Graph& g,
                                        const BitLayout& layout) {
  std::vector<EnsembledWeight> out;
  out.reserve(g.edge_count());
  for (const Edge& e : g.edges()) out.push_back(pack(layout, e.weights));
  return out;
}

}  // namespace mcpaths
