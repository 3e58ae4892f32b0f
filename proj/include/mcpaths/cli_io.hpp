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

#ifndef MCPATHS_CLI_IO_HPP_
#define MCPATHS_CLI_IO_HPP_

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mcpaths/graph.hpp"

namespace mcpaths {

// Graph file:
//
//   # comment
//   mcgraph <directed|undirected> <node_count> <q>
//   u v w_1 ... w_q
//
// Tokens are whitespace separated base-10 non-negative integers; '#' starts a
// comment that runs to the end of the line.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

Graph parse_graph_file(std::string_view text);
std::string format_graph_file(const Graph& g);

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitNoPaths = 2;
inline constexpr int kExitVerifyMismatch = 3;

// Runs one command line (args excludes the program name) and writes the
// result document to `out`, diagnostics to `err`.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace mcpaths

#endif  // MCPATHS_CLI_IO_HPP_
