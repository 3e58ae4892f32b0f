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

#ifndef MCPATHS_YEN_KSP_HPP_
#define MCPATHS_YEN_KSP_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "mcpaths/graph.hpp"
#include "mcpaths/lex_weights.hpp"
#include "mcpaths/shortest_path.hpp"

namespace mcpaths {

struct KspResult {
  std::vector<Path> paths;
  bool exhausted = false;  // fewer than k simple s-t paths exist
};

// The k smallest simple s-t paths ordered by (ensembled length, node
// sequence). Edges with ensembled weight >= threshold are dropped first.
// s == t yields the single empty path. Throws std::invalid_argument for k == 0
// or out-of-range nodes.
KspResult yen_ksp(const Graph& g, const BitLayout& layout, NodeId s, NodeId t,
                  std::size_t k,
                  const std::optional<EnsembledWeight>& threshold = std::nullopt);

}  // namespace mcpaths

#endif  // MCPATHS_YEN_KSP_HPP_
