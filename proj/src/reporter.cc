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

#include "edgeouter/reporter.h"

#include <stdexcept>

#include "edgeouter/errors.h"

namespace edgeouter {

ReporterResult ReporterStrandWalk(const Embedding& start) {
  const Graph& g = start.graph();
  if (!IsConnected(g)) throw InvalidInput("graph is not connected");
  if (g.edge_count() == 0) throw InvalidInput("graph has no edges");

  ReporterResult result;
  result.embedding = start;
  FaceSet faces = TraceFaces(result.embedding);
  int f = faces.FaceOf(Dart{0, 0});

  while (faces.faces[f].length() > 0 &&
         static_cast<int>(faces.faces[f].edges.size()) < g.edge_count()) {
    const Face& face = faces.faces[f];
    std::vector<char> on_face(g.vertex_count(), 0);
    for (Dart d : face.darts) on_face[g.Tail(d)] = 1;

    Dart chosen{-1, 0};
    for (int e = 0; e < g.edge_count() && chosen.edge < 0; ++e) {
      if (face.HasEdge(e)) continue;
      for (Dart d : {Dart{e, 0}, Dart{e, 1}}) {
        if (on_face[g.Tail(d)]) {
          chosen = d;
          break;
        }
      }
    }
    if (chosen.edge < 0) throw std::logic_error("no edge reaches the face");

    FlipStep step;
    step.dart = chosen;
    step.corner = CornersOfFace(result.embedding, faces, f, g.Tail(chosen)).front();
    step.face_edges_before = face.edges;
    step.genus_before = Genus(result.embedding, faces);

    result.embedding = Flip(result.embedding, faces, chosen, f, step.corner);
    faces = TraceFaces(result.embedding);
    f = faces.FaceOf(chosen);
    if (faces.FaceOf(chosen.opposite()) != f) {
      throw std::logic_error("flipped edge is not used twice by the new face");
    }
    step.face_edges_after = faces.faces[f].edges;
    step.genus_after = Genus(result.embedding, faces);
    result.steps.push_back(std::move(step));
  }

  result.face = f;
  result.walk = FaceWalk(faces, f);
  return result;
}

ReporterResult ReporterStrandWalkMaxGenus(const Graph& g, std::int64_t budget) {
  MaxGenusResult best = MaxGenusExhaustive(g, budget);
  return ReporterStrandWalk(best.embedding);
}

}  // namespace edgeouter
