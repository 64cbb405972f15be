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

// Gadget graphs that turn hamilton cycles of a 3-connected cubic plane graph
// N into Chinese postman reporter strand (CPRS) walks, and back.
//
//   P  replaces every edge uv of N by the edge gadget P_uv: a 4-cycle
//      a(uv) d(uv) a(vu) d(vu), the chord d(uv) d(vu), and the edges
//      u a(uv), v a(vu). P is 2-connected, cubic, planar and simple.
//   Q  subdivides every a(uv) d(uv) into a(uv) b(uv) c(uv) d(uv) and adds a
//      bracing edge c(uv) b(vw) with w = ClockwiseNeighbor(N, v, u). Q is
//      3-connected.
//   R  replaces every b(uv) of Q by a copy B(u,v) of the 19-vertex vertex
//      gadget B, attached as a(uv) p, c(tu) q and c(uv) p'.
//
// Gadget A has vertices p, x1..x4, y1..y4 and edges p x1, p y1, the rungs
// x_i y_i and the rails x_i x_{i+1}, y_i y_{i+1}; its attachment vertices are
// p, x4 and y4. B is A plus a mirrored copy A' (primed names) plus a vertex
// q, joined by x4 x4', y4 q and y4' q; its attachments are p, q and p'.
//
// Every builder threads a plane embedding through the construction. In P the
// triangles d(vu) d(uv) a(uv) and d(uv) d(vu) a(vu) are faces traced in that
// order, which is what makes the bracing edges of Q planar.
//
// Vertex names: n(u) for vertices of N, a(u,v) b(u,v) c(u,v) d(u,v) for new
// vertices, B(u,v).x1' and friends inside gadget copies, z for the apex of a
// cubic completion. Edge names join their endpoint names with '~'.

#ifndef EDGEOUTER_GADGETS_H_
#define EDGEOUTER_GADGETS_H_

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "edgeouter/embedding.h"
#include "edgeouter/multigraph.h"
#include "edgeouter/walks.h"

namespace edgeouter {

namespace gadget_names {
std::string Original(int u);
std::string A(int u, int v);
std::string B(int u, int v);
std::string C(int u, int v);
std::string D(int u, int v);
// Vertex `part` (e.g. "x3'" or "q") of the gadget copy replacing b(u,v).
std::string InB(int u, int v, std::string_view part);
}  // namespace gadget_names

enum class GadgetStage { kP, kQ, kR, kAPlus, kBPlus };

std::string_view StageName(GadgetStage stage);

class GadgetMap {
 public:
  GadgetMap() = default;
  explicit GadgetMap(GadgetStage stage) : stage_(stage) {}

  GadgetStage stage() const { return stage_; }

  // Appends a vertex or edge; ids are assigned densely in call order.
  int AddVertex(const std::string& name);
  int AddEdge(const std::string& name);

  // Throws InvalidInput for unknown names.
  int Vertex(std::string_view name) const;
  int Edge(std::string_view name) const;
  std::optional<int> FindVertex(std::string_view name) const;

  const std::string& VertexName(int v) const { return vertex_names_.at(v); }
  const std::string& EdgeName(int e) const { return edge_names_.at(e); }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  const std::vector<std::string>& edge_names() const { return edge_names_; }

  // For stages Q and R: ordered edge (u, v) of N -> w, the vertex such that
  // c(uv) is braced to b(vw) (or to q of B(v,w)).
  std::map<std::pair<int, int>, int>& bracing() { return bracing_; }
  const std::map<std::pair<int, int>, int>& bracing() const { return bracing_; }

 private:
  GadgetStage stage_ = GadgetStage::kP;
  std::vector<std::string> vertex_names_;
  std::vector<std::string> edge_names_;
  std::map<std::string, int, std::less<>> vertex_ids_;
  std::map<std::string, int, std::less<>> edge_ids_;
  std::map<std::pair<int, int>, int> bracing_;
};

struct GadgetGraph {
  Graph graph;
  Embedding embedding;
  GadgetMap map;
};

// Each builder expects a genus 0 embedding of a simple cubic 3-connected
// graph N and throws InvalidInput otherwise.
GadgetGraph BuildP(const Embedding& n);
GadgetGraph BuildQ(const Embedding& n);
GadgetGraph BuildR(const Embedding& n);

// A vertex gadget without its three outside edges.
struct VertexGadget {
  Graph fragment;
  GadgetMap map;
  std::array<std::string, 3> attachments;  // the degree-2 vertices
};

VertexGadget BuildA();
VertexGadget BuildB();

// Cubic completions A+ and B+: the gadget plus an apex z joined to its
// attachment vertices, with a plane embedding.
GadgetGraph BuildAPlus();
GadgetGraph BuildBPlus();

struct StageCheck {
  std::string stage;
  int vertices = 0;
  int edges = 0;
  bool cubic = false;
  bool simple = false;
  int genus = -1;
  bool two_connected = false;
  bool three_connected = false;
};

StageCheck CheckStage(const GadgetGraph& built);

// How a CPRS walk of P passes through one edge gadget P_uv, where (u, v) is
// the edge of N as stored.
enum class PassageKind {
  kSingle,  // one pass u ... v: w1_uv, its d-swapped image, or reversals
  kPair,    // two closed detours w2_uv and w2_vu, or both reversed
};

struct PassageForm {
  int edge = 0;  // edge id in N
  int u = 0;
  int v = 0;
  PassageKind kind = PassageKind::kSingle;
  bool reversed = false;  // kSingle: runs v to u; kPair: both detours reversed
  bool swapped = false;   // kSingle: d(uv) and d(vu) exchanged
};

// Throws InvalidInput if w is not a CPRS walk of P or some gadget is passed
// in an unexpected way.
std::vector<PassageForm> ClassifyPPassages(const Graph& n, const GadgetGraph& p,
                                           const Walk& w);

// Walks the cycle through the w1 passages and splices a w2 detour at both
// ends of every chord. Throws InvalidInput if `cycle` is not a hamilton cycle.
Walk HamiltonToCprsP(const Graph& n, const GadgetGraph& p,
                     std::span<const int> cycle);

// Reads the hamilton cycle of N off the single passages of a CPRS walk of P.
std::vector<int> CprsPToHamilton(const Graph& n, const GadgetGraph& p,
                                 const Walk& w);

// Exchanges d(uv) and d(vu) inside every single passage that uses a(uv) d(uv)
// twice, so that every a(uv) d(uv) becomes a solo edge.
Walk MakeAdEdgesSolo(const Graph& n, const GadgetGraph& p, const Walk& w);

// Replaces every traversal of a(uv) d(uv) by the matching route through
// B(u,v) and B(v,w). Requires a CPRS walk of P in which every a(uv) d(uv) is
// solo; throws InvalidInput otherwise.
Walk LiftPToR(const Graph& n, const GadgetGraph& p, const GadgetGraph& r,
              const Walk& w);

// Inverse of LiftPToR. Throws InvalidInput if w is not a CPRS walk of R or a
// gadget is passed in an unexpected way.
Walk ProjectRToP(const Graph& n, const GadgetGraph& p, const GadgetGraph& r,
                 const Walk& w);

// True iff w passes through the copy of A whose vertices are named
// prefix + {p, x1.., y1..} + prime as the two forced walks (or their mirror
// or reversal). `outside` names the far ends of the edges at p, x4 and y4.
bool ConformsToGadgetA(const GadgetGraph& host, const Walk& w,
                       const std::string& prefix, const std::string& prime,
                       const std::array<std::string, 3>& outside);

// Same for a copy of B named prefix + {...}; `outside` names the far ends of
// the edges at p, q and p'.
bool ConformsToGadgetB(const GadgetGraph& host, const Walk& w,
                       const std::string& prefix,
                       const std::array<std::string, 3>& outside);

// True iff w is a CPRS walk of the 2-connected cubic graph g, i.e. a reporter
// strand walk of length 2|V|.
bool IsCubicCprsWalk(const Graph& g, const Walk& w);

}  // namespace edgeouter

#endif  // EDGEOUTER_GADGETS_H_
