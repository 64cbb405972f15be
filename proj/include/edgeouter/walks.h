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

// Closed directed walks and the predicates that decide whether a walk can be
// the boundary of a face in some orientable embedding.

#ifndef EDGEOUTER_WALKS_H_
#define EDGEOUTER_WALKS_H_

#include <span>
#include <utility>
#include <vector>

#include "edgeouter/embedding.h"
#include "edgeouter/multigraph.h"

namespace edgeouter {

// A walk is a sequence of darts; dart d is traversed from Tail(d) to Head(d).
struct Walk {
  std::vector<Dart> darts;
  bool closed = true;

  int length() const { return static_cast<int>(darts.size()); }

  friend bool operator==(const Walk&, const Walk&) = default;
};

// Throws InvalidInput unless w is a nonempty closed walk of g whose
// consecutive darts (cyclically) meet at a common vertex.
void CheckClosedWalk(const Graph& g, const Walk& w);

// rev(W): the same edges in the opposite order and direction.
Walk Reverse(const Walk& w);

// Lexicographically least dart sequence among all cyclic rotations of w and
// of Reverse(w). Two closed walks are the same up to symmetry iff their
// canonical forms are equal.
Walk Canonical(const Walk& w);
bool SameClosedWalk(const Walk& a, const Walk& b);

// Vertices visited, one per dart: entry i is Tail(darts[i]).
std::vector<int> VertexSequence(const Graph& g, const Walk& w);

// Closed walk through the given vertices of a simple graph. The sequence may
// or may not repeat its first vertex at the end. Throws InvalidInput if two
// consecutive vertices are not joined by exactly one edge.
Walk WalkFromVertices(const Graph& g, std::span<const int> vertices);

// Boundary walk of face f.
Walk FaceWalk(const FaceSet& faces, int f);

struct WalkReport {
  bool edge_spanning = false;
  bool edge_2_bounded = false;
  bool orientable = false;
  bool retraction_free = false;
  bool rotation_compatible = false;
  std::vector<int> solo_edges;    // used exactly once, sorted
  std::vector<int> double_edges;  // used exactly twice, sorted

  bool IsReporterStrandWalk() const {
    return edge_spanning && orientable && rotation_compatible;
  }
};

// Throws InvalidInput if w is not a closed walk of g.
WalkReport ValidateWalk(const Graph& g, const Walk& w);

// The local transition graph of w at v: its nodes are the darts at v and
// every pass of w through v links the dart it arrives on with the dart it
// leaves along.
struct RotGraph {
  int vertex = 0;
  std::vector<Dart> nodes;
  std::vector<std::pair<Dart, Dart>> links;  // (arrival end, departure end)

  // A single cycle through every node, or vertex-disjoint paths.
  bool IsCompatible() const;
};

RotGraph BuildRotGraph(const Graph& g, const Walk& w, int v);

bool IsReporterStrandWalk(const Graph& g, const Walk& w);

// Reporter strand walk whose length equals `chinese_postman_length`. Kept
// separate from module optimal so callers can supply a known cp value.
bool IsCprsWalk(const Graph& g, const Walk& w, int chinese_postman_length);

// An embedding in which w (or, equivalently up to mirror image, rev(w)) is
// the boundary of a face. Each vertex rotation chains the transitions of w
// at that vertex in order of first use, then appends unused darts in
// increasing order. Throws InvalidInput unless w is orientable and
// rotation-compatible.
Embedding RealizeAsFace(const Graph& g, const Walk& w);

// Splits the closed walk at every visit to a vertex outside `inside` and
// returns the pieces that touch `inside`, as vertex sequences running from an
// outside vertex to an outside vertex. Pieces appear in walk order starting
// from the first outside visit. Throws InvalidInput if w never leaves the set.
std::vector<std::vector<int>> PassagesThrough(const Graph& g, const Walk& w,
                                              const std::vector<char>& inside);

}  // namespace edgeouter

#endif  // EDGEOUTER_WALKS_H_
