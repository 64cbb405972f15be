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

#include "edgeouter/gadgets.h"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "edgeouter/errors.h"
#include "edgeouter/optimal.h"

namespace edgeouter {

namespace gadget_names {

namespace {
std::string Pair(char kind, int u, int v) {
  return std::string(1, kind) + "(" + std::to_string(u) + "," +
         std::to_string(v) + ")";
}
}  // namespace

std::string Original(int u) { return "n(" + std::to_string(u) + ")"; }
std::string A(int u, int v) { return Pair('a', u, v); }
std::string B(int u, int v) { return Pair('b', u, v); }
std::string C(int u, int v) { return Pair('c', u, v); }
std::string D(int u, int v) { return Pair('d', u, v); }
std::string InB(int u, int v, std::string_view part) {
  return Pair('B', u, v) + "." + std::string(part);
}

}  // namespace gadget_names

namespace gn = gadget_names;

std::string_view StageName(GadgetStage stage) {
  switch (stage) {
    case GadgetStage::kP: return "P";
    case GadgetStage::kQ: return "Q";
    case GadgetStage::kR: return "R";
    case GadgetStage::kAPlus: return "A+";
    case GadgetStage::kBPlus: return "B+";
  }
  return "?";
}

int GadgetMap::AddVertex(const std::string& name) {
  auto [it, inserted] =
      vertex_ids_.emplace(name, static_cast<int>(vertex_names_.size()));
  if (!inserted) throw InvalidInput("duplicate vertex name " + name);
  vertex_names_.push_back(name);
  return it->second;
}

int GadgetMap::AddEdge(const std::string& name) {
  auto [it, inserted] =
      edge_ids_.emplace(name, static_cast<int>(edge_names_.size()));
  if (!inserted) throw InvalidInput("duplicate edge name " + name);
  edge_names_.push_back(name);
  return it->second;
}

std::optional<int> GadgetMap::FindVertex(std::string_view name) const {
  auto it = vertex_ids_.find(name);
  if (it == vertex_ids_.end()) return std::nullopt;
  return it->second;
}

int GadgetMap::Vertex(std::string_view name) const {
  auto it = vertex_ids_.find(name);
  if (it == vertex_ids_.end()) {
    throw InvalidInput("unknown vertex name " + std::string(name));
  }
  return it->second;
}

int GadgetMap::Edge(std::string_view name) const {
  auto it = edge_ids_.find(name);
  if (it == edge_ids_.end()) {
    throw InvalidInput("unknown edge name " + std::string(name));
  }
  return it->second;
}

namespace {

// A named graph with neighbour-order rotations, edited in place and turned
// into a Graph once complete.
class Blueprint {
 public:
  void AddVertex(const std::string& name, std::vector<std::string> rotation) {
    if (rotation_.contains(name)) throw std::logic_error("duplicate " + name);
    order_.push_back(name);
    rotation_[name] = std::move(rotation);
  }

  void SetRotation(const std::string& name, std::vector<std::string> rotation) {
    rotation_.at(name) = std::move(rotation);
  }

  void AddEdge(const std::string& a, const std::string& b) {
    edges_.emplace_back(a, b);
  }

  void RemoveEdge(const std::string& a, const std::string& b) {
    auto it = std::find_if(edges_.begin(), edges_.end(), [&](const auto& e) {
      return (e.first == a && e.second == b) || (e.first == b && e.second == a);
    });
    if (it == edges_.end()) throw std::logic_error("no edge " + a + "~" + b);
    edges_.erase(it);
  }

  void RemoveVertex(const std::string& name) { removed_.insert(name); }

  void ReplaceNeighbor(const std::string& v, const std::string& from,
                       const std::string& to) {
    auto& rot = rotation_.at(v);
    auto it = std::find(rot.begin(), rot.end(), from);
    if (it == rot.end()) throw std::logic_error(from + " not around " + v);
    *it = to;
  }

  GadgetGraph Build(GadgetStage stage) const {
    GadgetMap map(stage);
    for (const std::string& name : order_) {
      if (!removed_.contains(name)) map.AddVertex(name);
    }
    std::vector<Edge> edges;
    for (const auto& [a, b] : edges_) {
      if (removed_.contains(a) || removed_.contains(b)) continue;
      edges.emplace_back(map.Vertex(a), map.Vertex(b));
      map.AddEdge(a + "~" + b);
    }
    Graph g(static_cast<int>(map.vertex_names().size()), edges);
    std::vector<std::vector<int>> order(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
      for (const std::string& name : rotation_.at(map.VertexName(v))) {
        if (!removed_.contains(name)) order[v].push_back(map.Vertex(name));
      }
    }
    Embedding emb = EmbeddingFromNeighborOrder(g, order);
    return GadgetGraph{std::move(g), std::move(emb), std::move(map)};
  }

 private:
  std::vector<std::string> order_;
  std::map<std::string, std::vector<std::string>> rotation_;
  std::vector<std::pair<std::string, std::string>> edges_;
  std::set<std::string> removed_;
};

// Copy of A named prefix + part + prime. p0, x5 and y5 are the far ends of
// the edges at p, x4 and y4; those edges are left to the caller.
void AddGadgetA(Blueprint& bp, const std::string& prefix,
                const std::string& prime, const std::string& p0,
                const std::string& x5, const std::string& y5, bool mirrored) {
  auto n = [&](const std::string& part) { return prefix + part + prime; };
  auto x = [&](int i) { return n("x" + std::to_string(i)); };
  auto y = [&](int i) { return n("y" + std::to_string(i)); };
  auto add = [&](const std::string& name, std::vector<std::string> rot) {
    if (mirrored) std::reverse(rot.begin(), rot.end());
    bp.AddVertex(name, std::move(rot));
  };
  add(n("p"), {p0, y(1), x(1)});
  add(x(1), {n("p"), y(1), x(2)});
  add(y(1), {n("p"), y(2), x(1)});
  for (int i = 2; i <= 4; ++i) {
    std::string xn = i < 4 ? x(i + 1) : x5;
    std::string yn = i < 4 ? y(i + 1) : y5;
    add(x(i), {x(i - 1), y(i), xn});
    add(y(i), {y(i - 1), yn, x(i)});
  }
  bp.AddEdge(n("p"), x(1));
  bp.AddEdge(n("p"), y(1));
  for (int i = 1; i <= 4; ++i) {
    bp.AddEdge(x(i), y(i));
    if (i < 4) {
      bp.AddEdge(x(i), x(i + 1));
      bp.AddEdge(y(i), y(i + 1));
    }
  }
}

// Copy of B named prefix + part, attached to p0 (at p), q0 (at q) and
// p0p (at p').
void AddGadgetB(Blueprint& bp, const std::string& prefix,
                const std::string& p0, const std::string& q0,
                const std::string& p0p) {
  const std::string q = prefix + "q";
  AddGadgetA(bp, prefix, "", p0, prefix + "x4'", q, false);
  AddGadgetA(bp, prefix, "'", p0p, prefix + "x4", q, true);
  bp.AddVertex(q, {q0, prefix + "y4'", prefix + "y4"});
  bp.AddEdge(prefix + "x4", prefix + "x4'");
  bp.AddEdge(prefix + "y4", q);
  bp.AddEdge(prefix + "y4'", q);
  bp.AddEdge(prefix + "p", p0);
  bp.AddEdge(q, q0);
  bp.AddEdge(prefix + "p'", p0p);
}

void CheckSeed(const Embedding& n) {
  const Graph& g = n.graph();
  DegreeProfile profile = GetDegreeProfile(g);
  if (!profile.is_cubic) throw InvalidInput("N is not cubic");
  if (!profile.is_simple) throw InvalidInput("N is not simple");
  if (!VertexConnectivityAtLeast(g, 3)) {
    throw InvalidInput("N is not 3-connected");
  }
  if (Genus(n) != 0) throw InvalidInput("embedding of N is not planar");
}

int HeadOf(const Embedding& n, Dart d) { return n.graph().Head(d); }

Blueprint PBlueprint(const Embedding& n) {
  const Graph& g = n.graph();
  Blueprint bp;
  for (int u = 0; u < g.vertex_count(); ++u) {
    std::vector<std::string> rot;
    for (Dart d : n.rotation(u)) rot.push_back(gn::A(u, HeadOf(n, d)));
    bp.AddVertex(gn::Original(u), std::move(rot));
  }
  for (const auto& [u, v] : g.edges()) {
    for (auto [x, y] : {std::pair{u, v}, std::pair{v, u}}) {
      bp.AddVertex(gn::A(x, y), {gn::Original(x), gn::D(x, y), gn::D(y, x)});
      bp.AddVertex(gn::D(x, y), {gn::A(y, x), gn::D(y, x), gn::A(x, y)});
    }
    bp.AddEdge(gn::Original(u), gn::A(u, v));
    bp.AddEdge(gn::Original(v), gn::A(v, u));
    bp.AddEdge(gn::A(u, v), gn::D(u, v));
    bp.AddEdge(gn::D(u, v), gn::A(v, u));
    bp.AddEdge(gn::A(v, u), gn::D(v, u));
    bp.AddEdge(gn::D(v, u), gn::A(u, v));
    bp.AddEdge(gn::D(u, v), gn::D(v, u));
  }
  return bp;
}

// Ordered edge (x, y) of N -> t, the rotation predecessor of y at x, so that
// ClockwiseNeighbor(n, x, t) == y.
int PredecessorNeighbor(const Embedding& n, int x, int y) {
  const Graph& g = n.graph();
  for (Dart d : n.rotation(x)) {
    if (g.Head(d) == y) return g.Head(n.Predecessor(d));
  }
  throw InvalidInput("no edge " + std::to_string(x) + "-" + std::to_string(y));
}

Blueprint QBlueprint(const Embedding& n, std::map<std::pair<int, int>, int>& bracing) {
  const Graph& g = n.graph();
  Blueprint bp = PBlueprint(n);
  for (const auto& [u, v] : g.edges()) {
    for (auto [x, y] : {std::pair{u, v}, std::pair{v, u}}) {
      int t = PredecessorNeighbor(n, x, y);
      int w = ClockwiseNeighbor(n, y, x);
      bracing[{x, y}] = w;
      bp.RemoveEdge(gn::A(x, y), gn::D(x, y));
      bp.ReplaceNeighbor(gn::A(x, y), gn::D(x, y), gn::B(x, y));
      bp.ReplaceNeighbor(gn::D(x, y), gn::A(x, y), gn::C(x, y));
      bp.AddVertex(gn::B(x, y), {gn::C(x, y), gn::A(x, y), gn::C(t, x)});
      bp.AddVertex(gn::C(x, y), {gn::D(x, y), gn::B(x, y), gn::B(y, w)});
    }
  }
  for (const auto& [u, v] : g.edges()) {
    for (auto [x, y] : {std::pair{u, v}, std::pair{v, u}}) {
      bp.AddEdge(gn::A(x, y), gn::B(x, y));
      bp.AddEdge(gn::B(x, y), gn::C(x, y));
      bp.AddEdge(gn::C(x, y), gn::D(x, y));
    }
  }
  for (const auto& [u, v] : g.edges()) {
    for (auto [x, y] : {std::pair{u, v}, std::pair{v, u}}) {
      bp.AddEdge(gn::C(x, y), gn::B(y, bracing.at({x, y})));
    }
  }
  return bp;
}

std::vector<int> Ids(const GadgetMap& map, const std::vector<std::string>& names) {
  std::vector<int> ids;
  ids.reserve(names.size());
  for (const std::string& name : names) ids.push_back(map.Vertex(name));
  return ids;
}

std::vector<int> Reversed(std::vector<int> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

std::vector<char> InsideMask(const GadgetMap& map, int vertex_count,
                             const std::vector<std::string>& names) {
  std::vector<char> inside(vertex_count, 0);
  for (int v : Ids(map, names)) inside[v] = 1;
  return inside;
}

bool SamePassagePair(const std::vector<std::vector<int>>& got,
                     const std::vector<int>& a, const std::vector<int>& b) {
  if (got.size() != 2) return false;
  return (got[0] == a && got[1] == b) || (got[0] == b && got[1] == a);
}

void RequireCprs(const Graph& g, const Walk& w, std::string_view what) {
  if (!IsCubicCprsWalk(g, w)) {
    throw InvalidInput("walk is not a CPRS walk of " + std::string(what));
  }
}

// Vertex names of the forced walks through B, prefixed.
std::vector<std::string> Wt1(const std::string& prefix) {
  std::vector<std::string> s = {"p", "x1", "x2", "x3", "x4",
                                "x4'", "x3'", "x2'", "x1'", "p'"};
  for (auto& name : s) name = prefix + name;
  return s;
}

std::vector<std::string> Wt2(const std::string& prefix) {
  std::vector<std::string> s = {
      "q",   "y4'", "y3'", "y2'", "y1'", "p'", "x1'", "y1'", "y2'", "x2'",
      "x3'", "y3'", "y4'", "x4'", "x4",  "y4", "y3",  "x3",  "x2",  "y2",
      "y1",  "x1",  "p",   "y1",  "y2",  "y3", "y4",  "q"};
  for (auto& name : s) name = prefix + name;
  return s;
}

std::vector<std::string> BPartNames() {
  std::vector<std::string> parts;
  for (std::string prime : {"", "'"}) {
    parts.push_back("p" + prime);
    for (int i = 1; i <= 4; ++i) {
      parts.push_back("x" + std::to_string(i) + prime);
      parts.push_back("y" + std::to_string(i) + prime);
    }
  }
  parts.push_back("q");
  return parts;
}

}  // namespace

GadgetGraph BuildP(const Embedding& n) {
  CheckSeed(n);
  return PBlueprint(n).Build(GadgetStage::kP);
}

GadgetGraph BuildQ(const Embedding& n) {
  CheckSeed(n);
  std::map<std::pair<int, int>, int> bracing;
  GadgetGraph q = QBlueprint(n, bracing).Build(GadgetStage::kQ);
  q.map.bracing() = std::move(bracing);
  return q;
}

GadgetGraph BuildR(const Embedding& n) {
  CheckSeed(n);
  const Graph& g = n.graph();
  std::map<std::pair<int, int>, int> bracing;
  Blueprint bp = QBlueprint(n, bracing);
  for (const auto& [u, v] : g.edges()) {
    for (auto [x, y] : {std::pair{u, v}, std::pair{v, u}}) {
      int t = PredecessorNeighbor(n, x, y);
      const std::string b = gn::B(x, y);
      const std::string prefix = gn::InB(x, y, "");
      bp.RemoveVertex(b);
      bp.ReplaceNeighbor(gn::A(x, y), b, prefix + "p");
      bp.ReplaceNeighbor(gn::C(t, x), b, prefix + "q");
      bp.ReplaceNeighbor(gn::C(x, y), b, prefix + "p'");
      AddGadgetB(bp, prefix, gn::A(x, y), gn::C(t, x), gn::C(x, y));
    }
  }
  GadgetGraph r = bp.Build(GadgetStage::kR);
  r.map.bracing() = std::move(bracing);
  return r;
}

GadgetGraph BuildAPlus() {
  Blueprint bp;
  AddGadgetA(bp, "", "", "z", "z", "z", false);
  bp.AddVertex("z", {"p", "x4", "y4"});
  bp.AddEdge("p", "z");
  bp.AddEdge("x4", "z");
  bp.AddEdge("y4", "z");
  return bp.Build(GadgetStage::kAPlus);
}

GadgetGraph BuildBPlus() {
  Blueprint bp;
  AddGadgetB(bp, "", "z", "z", "z");
  bp.AddVertex("z", {"q", "p", "p'"});
  return bp.Build(GadgetStage::kBPlus);
}

namespace {
VertexGadget Fragment(const GadgetGraph& plus,
                      std::array<std::string, 3> attachments) {
  const int apex = plus.map.Vertex("z");
  VertexGadget out;
  out.map = GadgetMap(plus.map.stage());
  std::vector<int> id(plus.graph.vertex_count(), -1);
  for (int v = 0; v < plus.graph.vertex_count(); ++v) {
    if (v != apex) id[v] = out.map.AddVertex(plus.map.VertexName(v));
  }
  std::vector<Edge> edges;
  for (int e = 0; e < plus.graph.edge_count(); ++e) {
    auto [a, b] = plus.graph.edge(e);
    if (a == apex || b == apex) continue;
    edges.emplace_back(id[a], id[b]);
    out.map.AddEdge(plus.map.EdgeName(e));
  }
  out.fragment = Graph(static_cast<int>(out.map.vertex_names().size()), edges);
  out.attachments = std::move(attachments);
  return out;
}
}  // namespace

VertexGadget BuildA() { return Fragment(BuildAPlus(), {"p", "x4", "y4"}); }
VertexGadget BuildB() { return Fragment(BuildBPlus(), {"p", "q", "p'"}); }

StageCheck CheckStage(const GadgetGraph& built) {
  StageCheck check;
  check.stage = std::string(StageName(built.map.stage()));
  check.vertices = built.graph.vertex_count();
  check.edges = built.graph.edge_count();
  DegreeProfile profile = GetDegreeProfile(built.graph);
  check.cubic = profile.is_cubic;
  check.simple = profile.is_simple;
  check.genus = Genus(built.embedding);
  check.two_connected = VertexConnectivityAtLeast(built.graph, 2);
  check.three_connected =
      check.two_connected && VertexConnectivityAtLeast(built.graph, 3);
  return check;
}

bool IsCubicCprsWalk(const Graph& g, const Walk& w) {
  if (!GetDegreeProfile(g).is_cubic) return false;
  return IsCprsWalk(g, w, 2 * g.vertex_count());
}

std::vector<PassageForm> ClassifyPPassages(const Graph& n, const GadgetGraph& p,
                                           const Walk& w) {
  RequireCprs(p.graph, w, "P");
  const GadgetMap& map = p.map;
  std::vector<PassageForm> forms;
  for (int e = 0; e < n.edge_count(); ++e) {
    auto [u, v] = n.edge(e);
    std::vector<char> inside = InsideMask(
        map, p.graph.vertex_count(),
        {gn::A(u, v), gn::D(u, v), gn::A(v, u), gn::D(v, u)});
    std::vector<std::vector<int>> got = PassagesThrough(p.graph, w, inside);

    PassageForm form;
    form.edge = e;
    form.u = u;
    form.v = v;
    bool matched = false;
    if (got.size() == 1) {
      form.kind = PassageKind::kSingle;
      for (bool swapped : {false, true}) {
        std::string du = gn::D(u, v), dv = gn::D(v, u);
        if (swapped) std::swap(du, dv);
        std::vector<int> w1 = Ids(map, {gn::Original(u), gn::A(u, v), du,
                                        gn::A(v, u), dv, du, gn::A(u, v), dv,
                                        gn::A(v, u), gn::Original(v)});
        for (bool reversed : {false, true}) {
          if (got[0] == (reversed ? Reversed(w1) : w1)) {
            form.swapped = swapped;
            form.reversed = reversed;
            matched = true;
          }
        }
      }
    } else if (got.size() == 2) {
      form.kind = PassageKind::kPair;
      std::vector<int> w2u = Ids(map, {gn::Original(u), gn::A(u, v), gn::D(u, v),
                                       gn::D(v, u), gn::A(u, v), gn::Original(u)});
      std::vector<int> w2v = Ids(map, {gn::Original(v), gn::A(v, u), gn::D(v, u),
                                       gn::D(u, v), gn::A(v, u), gn::Original(v)});
      if (SamePassagePair(got, w2u, w2v)) {
        matched = true;
      } else if (SamePassagePair(got, Reversed(w2u), Reversed(w2v))) {
        form.reversed = true;
        matched = true;
      }
    }
    if (!matched) {
      throw InvalidInput("unclassifiable passage through P_" +
                         std::to_string(u) + "," + std::to_string(v));
    }
    forms.push_back(form);
  }
  return forms;
}

Walk HamiltonToCprsP(const Graph& n, const GadgetGraph& p,
                     std::span<const int> cycle) {
  if (!IsHamiltonCycle(n, cycle)) throw InvalidInput("not a hamilton cycle");
  const int k = static_cast<int>(cycle.size());
  std::vector<std::vector<int>> adj = AdjacencyLists(n);
  std::vector<std::string> seq;
  for (int i = 0; i < k; ++i) {
    int u = cycle[i];
    int prev = cycle[(i + k - 1) % k];
    int v = cycle[(i + 1) % k];
    seq.push_back(gn::Original(u));
    for (int x : adj[u]) {
      if (x == prev || x == v) continue;
      for (const std::string& s :
           {gn::A(u, x), gn::D(u, x), gn::D(x, u), gn::A(u, x), gn::Original(u)}) {
        seq.push_back(s);
      }
    }
    for (const std::string& s :
         {gn::A(u, v), gn::D(u, v), gn::A(v, u), gn::D(v, u), gn::D(u, v),
          gn::A(u, v), gn::D(v, u), gn::A(v, u)}) {
      seq.push_back(s);
    }
  }
  std::vector<int> ids = Ids(p.map, seq);
  return WalkFromVertices(p.graph, ids);
}

std::vector<int> CprsPToHamilton(const Graph& n, const GadgetGraph& p,
                                 const Walk& w) {
  std::vector<PassageForm> forms = ClassifyPPassages(n, p, w);
  std::vector<int> next(n.vertex_count(), -1);
  for (const PassageForm& f : forms) {
    if (f.kind != PassageKind::kSingle) continue;
    int from = f.reversed ? f.v : f.u;
    int to = f.reversed ? f.u : f.v;
    if (next[from] >= 0) throw InvalidInput("two single passages leave a vertex");
    next[from] = to;
  }
  std::vector<int> cycle;
  int v = 0;
  for (int i = 0; i < n.vertex_count(); ++i) {
    if (v < 0) break;
    cycle.push_back(v);
    v = next[v];
  }
  if (!IsHamiltonCycle(n, cycle) || v != 0) {
    throw InvalidInput("single passages do not form a hamilton cycle");
  }
  return cycle;
}

Walk MakeAdEdgesSolo(const Graph& n, const GadgetGraph& p, const Walk& w) {
  std::vector<PassageForm> forms = ClassifyPPassages(n, p, w);
  std::vector<int> seq = VertexSequence(p.graph, w);
  for (const PassageForm& f : forms) {
    if (f.kind != PassageKind::kSingle || f.swapped) continue;
    // Every visit to P_uv lies inside its single passage.
    int du = p.map.Vertex(gn::D(f.u, f.v));
    int dv = p.map.Vertex(gn::D(f.v, f.u));
    for (int& x : seq) {
      if (x == du) {
        x = dv;
      } else if (x == dv) {
        x = du;
      }
    }
  }
  return WalkFromVertices(p.graph, seq);
}

Walk LiftPToR(const Graph& n, const GadgetGraph& p, const GadgetGraph& r,
              const Walk& w) {
  RequireCprs(p.graph, w, "P");
  const GadgetMap& pm = p.map;
  WalkReport report = ValidateWalk(p.graph, w);

  // Direction of each a(xy) d(xy): true if traversed from a(xy) to d(xy).
  std::map<std::pair<int, int>, bool> forward;
  std::map<int, std::pair<int, int>> ad_edge;
  for (const auto& [u, v] : n.edges()) {
    for (auto [x, y] : {std::pair{u, v}, std::pair{v, u}}) {
      int e = FindUniqueEdge(p.graph, pm.Vertex(gn::A(x, y)), pm.Vertex(gn::D(x, y)));
      if (std::binary_search(report.double_edges.begin(),
                             report.double_edges.end(), e)) {
        throw InvalidInput("edge " + gn::A(x, y) + " " + gn::D(x, y) +
                           " is not solo");
      }
      ad_edge[e] = {x, y};
    }
  }
  for (Dart d : w.darts) {
    auto it = ad_edge.find(d.edge);
    if (it == ad_edge.end()) continue;
    auto [x, y] = it->second;
    forward[{x, y}] = p.graph.Tail(d) == pm.Vertex(gn::A(x, y));
  }

  std::vector<std::string> seq;
  for (Dart d : w.darts) {
    const std::string& tail = pm.VertexName(p.graph.Tail(d));
    auto it = ad_edge.find(d.edge);
    if (it == ad_edge.end()) {
      seq.push_back(tail);
      continue;
    }
    auto [x, y] = it->second;
    int z = r.map.bracing().at({x, y});
    std::vector<std::string> t1 = Wt1(gn::InB(x, y, ""));
    std::vector<std::string> t2 = Wt2(gn::InB(y, z, ""));
    if (!forward.at({y, z})) std::reverse(t2.begin(), t2.end());
    if (forward.at({x, y})) {
      seq.push_back(gn::A(x, y));
      seq.insert(seq.end(), t1.begin(), t1.end());
      seq.push_back(gn::C(x, y));
      seq.insert(seq.end(), t2.begin(), t2.end());
      seq.push_back(gn::C(x, y));
    } else {
      seq.push_back(gn::D(x, y));
      seq.push_back(gn::C(x, y));
      seq.insert(seq.end(), t2.begin(), t2.end());
      seq.push_back(gn::C(x, y));
      seq.insert(seq.end(), t1.rbegin(), t1.rend());
    }
  }
  std::vector<int> ids = Ids(r.map, seq);
  return WalkFromVertices(r.graph, ids);
}

Walk ProjectRToP(const Graph& n, const GadgetGraph& p, const GadgetGraph& r,
                 const Walk& w) {
  RequireCprs(r.graph, w, "R");
  const int rv = r.graph.vertex_count();
  std::vector<int> to_p(rv, -1);
  for (int v = 0; v < rv; ++v) {
    if (auto id = p.map.FindVertex(r.map.VertexName(v))) to_p[v] = *id;
  }
  std::unordered_map<int, std::pair<int, int>> a_of, d_of;
  for (const auto& [u, v] : n.edges()) {
    for (auto [x, y] : {std::pair{u, v}, std::pair{v, u}}) {
      a_of[r.map.Vertex(gn::A(x, y))] = {x, y};
      d_of[r.map.Vertex(gn::D(x, y))] = {x, y};
    }
  }

  std::vector<int> seq = VertexSequence(r.graph, w);
  const int len = static_cast<int>(seq.size());
  auto at = [&](int i) { return seq[i % len]; };
  int start = 0;
  while (start < len && to_p[seq[start]] < 0) ++start;
  if (start == len) throw InvalidInput("walk never visits a vertex of P");

  auto matches = [&](int i, const std::vector<std::string>& names) {
    for (std::size_t k = 0; k < names.size(); ++k) {
      if (r.map.VertexName(at(i + static_cast<int>(k))) != names[k]) return false;
    }
    return true;
  };

  std::vector<int> out;
  int pos = 0;
  while (pos < len) {
    int i = start + pos;
    int x = at(i);
    int y = at(i + 1);
    if (to_p[x] < 0) throw InvalidInput("walk leaves P at an unexpected vertex");
    out.push_back(to_p[x]);
    if (to_p[y] >= 0) {
      ++pos;
      continue;
    }
    std::vector<std::vector<std::string>> candidates;
    if (auto it = a_of.find(x); it != a_of.end()) {
      auto [u, v] = it->second;
      int z = r.map.bracing().at({u, v});
      std::vector<std::string> t2 = Wt2(gn::InB(v, z, ""));
      for (bool rev : {false, true}) {
        std::vector<std::string> t = {gn::A(u, v)};
        std::vector<std::string> t1 = Wt1(gn::InB(u, v, ""));
        t.insert(t.end(), t1.begin(), t1.end());
        t.push_back(gn::C(u, v));
        if (rev) {
          t.insert(t.end(), t2.rbegin(), t2.rend());
        } else {
          t.insert(t.end(), t2.begin(), t2.end());
        }
        t.push_back(gn::C(u, v));
        t.push_back(gn::D(u, v));
        candidates.push_back(std::move(t));
      }
    }
    if (auto it = d_of.find(x); it != d_of.end()) {
      auto [u, v] = it->second;
      int z = r.map.bracing().at({u, v});
      std::vector<std::string> t2 = Wt2(gn::InB(v, z, ""));
      for (bool rev : {false, true}) {
        std::vector<std::string> t = {gn::D(u, v), gn::C(u, v)};
        if (rev) {
          t.insert(t.end(), t2.rbegin(), t2.rend());
        } else {
          t.insert(t.end(), t2.begin(), t2.end());
        }
        t.push_back(gn::C(u, v));
        std::vector<std::string> t1 = Wt1(gn::InB(u, v, ""));
        t.insert(t.end(), t1.rbegin(), t1.rend());
        t.push_back(gn::A(u, v));
        candidates.push_back(std::move(t));
      }
    }
    bool found = false;
    for (const auto& t : candidates) {
      if (matches(i, t)) {
        pos += static_cast<int>(t.size()) - 1;
        found = true;
        break;
      }
    }
    if (!found) throw InvalidInput("subwalk matches no replacement rule");
  }
  if (pos != len) throw InvalidInput("replacement runs past the walk's start");
  return WalkFromVertices(p.graph, out);
}

bool ConformsToGadgetA(const GadgetGraph& host, const Walk& w,
                       const std::string& prefix, const std::string& prime,
                       const std::array<std::string, 3>& outside) {
  auto name = [&](const std::string& part) {
    if (part == "x5") return outside[1];
    if (part == "y5") return outside[2];
    if (part == "p0") return outside[0];
    return prefix + part + prime;
  };
  std::vector<std::string> inner = {"p"};
  for (int i = 1; i <= 4; ++i) {
    inner.push_back("x" + std::to_string(i));
    inner.push_back("y" + std::to_string(i));
  }
  std::vector<std::string> inner_names;
  for (const auto& part : inner) inner_names.push_back(name(part));
  std::vector<char> inside =
      InsideMask(host.map, host.graph.vertex_count(), inner_names);
  std::vector<std::vector<int>> got = PassagesThrough(host.graph, w, inside);

  const std::vector<std::string> ws1 = {"p0", "p", "x1", "x2", "x3", "x4", "x5"};
  const std::vector<std::string> ws2 = {"x5", "x4", "y4", "y3", "x3",
                                        "x2", "y2", "y1", "x1", "p",
                                        "y1", "y2", "y3", "y4", "y5"};
  auto swap_xy = [](std::string part) {
    if (part[0] == 'x') {
      part[0] = 'y';
    } else if (part[0] == 'y') {
      part[0] = 'x';
    }
    return part;
  };
  for (bool swapped : {false, true}) {
    std::vector<std::string> s1, s2;
    for (const auto& part : ws1) s1.push_back(name(swapped ? swap_xy(part) : part));
    for (const auto& part : ws2) s2.push_back(name(swapped ? swap_xy(part) : part));
    std::vector<int> a = Ids(host.map, s1), b = Ids(host.map, s2);
    if (SamePassagePair(got, a, b)) return true;
    if (SamePassagePair(got, Reversed(a), Reversed(b))) return true;
  }
  return false;
}

bool ConformsToGadgetB(const GadgetGraph& host, const Walk& w,
                       const std::string& prefix,
                       const std::array<std::string, 3>& outside) {
  std::vector<std::string> inner;
  for (const auto& part : BPartNames()) inner.push_back(prefix + part);
  std::vector<char> inside =
      InsideMask(host.map, host.graph.vertex_count(), inner);
  std::vector<std::vector<int>> got = PassagesThrough(host.graph, w, inside);

  std::vector<std::string> s1 = {outside[0]};
  for (const auto& s : Wt1(prefix)) s1.push_back(s);
  s1.push_back(outside[2]);
  std::vector<std::string> s2 = {outside[1]};
  for (const auto& s : Wt2(prefix)) s2.push_back(s);
  s2.push_back(outside[1]);
  std::vector<int> a = Ids(host.map, s1), b = Ids(host.map, s2);
  return SamePassagePair(got, a, b) ||
         SamePassagePair(got, Reversed(a), Reversed(b));
}

}  // namespace edgeouter
