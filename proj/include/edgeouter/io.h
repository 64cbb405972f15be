// Copyright 2026 The Edgeouter Authors.
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

// Line-oriented text formats.
//
// Graph file:
//   graph <n> <m>
//   edge <id> <u> <v>          (m lines, ids 0..m-1 each once, any order)
//   rot <v> <e.s> <e.s> ...    (optional; if present, one per vertex)
// Walk file:
//   walk closed <k>
//   <e.s> ... (k dart tokens, any whitespace)
// Gadget map file:
//   map <stage> <vertices> <edges>
//   vertex <id> <name>
//   edge <id> <name>
//   bracing <u> <v> <w>
// Lines starting with '#' and blank lines are ignored everywhere.

#ifndef EDGEOUTER_IO_H_
#define EDGEOUTER_IO_H_

#include <optional>
#include <string>
#include <string_view>

#include "edgeouter/embedding.h"
#include "edgeouter/gadgets.h"
#include "edgeouter/multigraph.h"
#include "edgeouter/walks.h"

namespace edgeouter {

struct GraphFile {
  Graph graph;
  std::optional<Embedding> embedding;
};

// Throws ParseError naming the offending line.
GraphFile ParseGraph(std::string_view text);

// Canonical form: edges by id, rotations anchored at their smallest dart.
std::string SerializeGraph(const Graph& g, const Embedding* emb = nullptr);

std::string FormatDart(Dart d);

// Throws ParseError. If `g` is given the walk is also checked to be a closed
// walk of g (InvalidInput otherwise).
Walk ParseWalk(std::string_view text, const Graph* g = nullptr);
std::string SerializeWalk(const Walk& w);

GadgetMap ParseGadgetMap(std::string_view text);
std::string SerializeGadgetMap(const GadgetMap& map);

// Undirected DOT, one statement per edge in id order. With a walk, solo
// edges are drawn solid, double edges bold red and unused edges dashed grey.
// With an embedding, each vertex carries its rotation in a comment
// attribute. Throws InvalidInput if the walk is not a closed walk of g.
std::string ExportDot(const Graph& g, const Walk* w = nullptr,
                      const Embedding* emb = nullptr);

}  // namespace edgeouter

#endif  // EDGEOUTER_IO_H_
