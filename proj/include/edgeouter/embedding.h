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

// Rotation systems (orientable cellular embeddings), face tracing and the
// edge-end flip.
//
// Face tracing convention used throughout the library: after traversing dart
// d, a face continues with the rotation successor of d's opposite dart at
// the vertex just reached, next(d) = succ(opposite(d)). "Clockwise" in the
// gadget constructions always means "rotation successor".

#ifndef EDGEOUTER_EMBEDDING_H_
#define EDGEOUTER_EMBEDDING_H_

#include <span>
#include <vector>

#include "edgeouter/multigraph.h"

namespace edgeouter {

class Embedding {
 public:
  Embedding() = default;

  // `rotation[v]` is the cyclic order of the darts at v. Throws InvalidInput
  // unless each rotation is a permutation of exactly v's darts.
  Embedding(Graph graph, std::vector<std::vector<Dart>> rotation);

  const Graph& graph() const { return graph_; }
  std::span<const Dart> rotation(int v) const { return rotation_[v]; }
  const std::vector<std::vector<Dart>>& rotations() const { return rotation_; }

  Dart Successor(Dart d) const { return successor_[d.index()]; }
  Dart Predecessor(Dart d) const { return predecessor_[d.index()]; }

  // Face-tracing permutation.
  Dart Next(Dart d) const { return Successor(d.opposite()); }

  // Same embedding with every rotation list starting at its smallest dart.
  Embedding Anchored() const;

  // Every rotation reversed (the mirror image).
  Embedding Mirrored() const;

  friend bool operator==(const Embedding& a, const Embedding& b) {
    return a.successor_ == b.successor_ && a.graph_.edges() == b.graph_.edges();
  }

 private:
  Graph graph_;
  std::vector<std::vector<Dart>> rotation_;
  std::vector<Dart> successor_;
  std::vector<Dart> predecessor_;
};

// Rotation of each vertex = its incidence list in stored order.
Embedding IdentityEmbedding(const Graph& g);

// Builds an embedding of a simple graph from cyclic neighbour orders.
// Throws InvalidInput if an order does not list each neighbour once.
Embedding EmbeddingFromNeighborOrder(const Graph& g,
                                     const std::vector<std::vector<int>>& order);

struct Face {
  std::vector<Dart> darts;  // boundary walk, starting at its smallest dart
  std::vector<int> edges;   // sorted, without repetition

  int length() const { return static_cast<int>(darts.size()); }
  bool HasEdge(int e) const;
};

struct FaceSet {
  std::vector<Face> faces;
  std::vector<int> face_of;  // indexed by Dart::index()

  int FaceOf(Dart d) const { return face_of[d.index()]; }
  int size() const { return static_cast<int>(faces.size()); }
};

// Orbits of Embedding::Next, each started at its smallest dart, ordered by
// that starting dart.
FaceSet TraceFaces(const Embedding& emb);

// Euler genus (2 - V + E - F) / 2. Throws InvalidInput if the graph is not
// connected. An edgeless single vertex has genus 0.
int Genus(const Embedding& emb);
int Genus(const Embedding& emb, const FaceSet& faces);

// A place in the rotation at one vertex: `after` is the rotation successor
// of `before`. The corner belongs to the face that traverses `after`, which
// arrives on `before` and leaves along `after`.
struct Corner {
  Dart before;
  Dart after;

  friend bool operator==(const Corner&, const Corner&) = default;
};

// Corners of face f at vertex v, in boundary order starting from the face's
// first dart.
std::vector<Corner> CornersOfFace(const Embedding& emb, const FaceSet& faces,
                                  int f, int v);

// Moves dart d to sit between corner.before and corner.after. `faces` must be
// TraceFaces(emb). Throws InvalidInput if d's edge lies on face f, if the
// corner is not a corner of f, or if the corner is not at d's vertex.
Embedding Flip(const Embedding& emb, const FaceSet& faces, Dart d, int f,
               Corner corner);

// Neighbour of u that follows v in the rotation at u, in a simple graph.
// Throws InvalidInput if u and v are not joined by exactly one edge.
int ClockwiseNeighbor(const Embedding& emb, int u, int v);

}  // namespace edgeouter

#endif  // EDGEOUTER_EMBEDDING_H_
