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

// Reporter strand walks by repeated flipping.
//
// Starting from any embedding, pick a face f. While some edge e misses f but
// has an end d at a vertex of f, move d into a corner of f. The face through
// the new corner contains every edge of f and uses e twice, so f grows
// strictly and the loop ends after at most |E| flips with a face that uses
// every edge. Its boundary is a reporter strand walk.
//
// Choices made here, all deterministic: the initial face holds dart 0.0;
// e is the smallest edge id missing f with an end on f; d is the smaller of
// e's darts whose vertex is on f; the corner is the first corner of f at that
// vertex in boundary order.

#ifndef EDGEOUTER_REPORTER_H_
#define EDGEOUTER_REPORTER_H_

#include <cstdint>
#include <vector>

#include "edgeouter/embedding.h"
#include "edgeouter/optimal.h"
#include "edgeouter/walks.h"

namespace edgeouter {

struct FlipStep {
  Dart dart;
  Corner corner;
  std::vector<int> face_edges_before;
  std::vector<int> face_edges_after;
  int genus_before = 0;
  int genus_after = 0;
};

struct ReporterResult {
  Embedding embedding;
  int face = 0;  // index into TraceFaces(embedding)
  Walk walk;     // boundary of that face
  std::vector<FlipStep> steps;
};

// Throws InvalidInput if the graph of `start` is disconnected or edgeless.
ReporterResult ReporterStrandWalk(const Embedding& start);

// Runs ReporterStrandWalk from a maximum genus embedding found by
// MaxGenusExhaustive, so the result has maximum genus as well.
ReporterResult ReporterStrandWalkMaxGenus(
    const Graph& g, std::int64_t budget = kDefaultRotationBudget);

}  // namespace edgeouter

#endif  // EDGEOUTER_REPORTER_H_
