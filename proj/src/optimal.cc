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

#include "edgeouter/optimal.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <set>
#include <string>

#include "edgeouter/errors.h"

namespace edgeouter {

namespace {

std::vector<int> BfsDistances(const Graph& g, int source) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::vector<int> queue{source};
  dist[source] = 0;
  for (size_t i = 0; i < queue.size(); ++i) {
    int v = queue[i];
    for (Dart d : g.incident(v)) {
      int w = g.Head(d);
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

// Odometer over rotation systems. Each vertex keeps its first incident dart
// as anchor and permutes the rest, so every cyclic order appears once.
class RotationOdometer {
 public:
  explicit RotationOdometer(const Graph& g) : g_(g), successor_(g.dart_count()) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      std::vector<int> rot;
      for (Dart d : g.incident(v)) rot.push_back(d.index());
      std::sort(rot.begin() + (rot.empty() ? 0 : 1), rot.end());
      if (rot.size() > 2) movable_.push_back(v);
      current_.push_back(std::move(rot));
      Apply(v);
    }
  }

  // Advances to the next system; false once all have been produced.
  bool Advance() {
    for (int v : movable_) {
      auto& rot = current_[v];
      bool more = std::next_permutation(rot.begin() + 1, rot.end());
      Apply(v);
      if (more) return true;
    }
    return false;
  }

  // Face-tracing permutation of the current system: next(d) = succ(d ^ 1).
  int Next(int dart) const { return successor_[dart ^ 1]; }

  Embedding Current() const {
    std::vector<std::vector<Dart>> rotation;
    for (const auto& rot : current_) {
      std::vector<Dart> darts;
      for (int x : rot) darts.push_back(Dart::FromIndex(x));
      rotation.push_back(std::move(darts));
    }
    return Embedding(g_, std::move(rotation));
  }

 private:
  void Apply(int v) {
    const auto& rot = current_[v];
    for (size_t i = 0; i < rot.size(); ++i) {
      successor_[rot[i]] = rot[(i + 1) % rot.size()];
    }
  }

  const Graph& g_;
  std::vector<int> successor_;
  std::vector<std::vector<int>> current_;
  std::vector<int> movable_;
};

void CheckSearchable(const Graph& g, std::int64_t budget) {
  if (!IsConnected(g)) throw InvalidInput("graph is not connected");
  if (g.edge_count() == 0) throw InvalidInput("graph has no edges");
  std::int64_t count = RotationSystemCount(g);
  if (count > budget) {
    throw BudgetExceeded("graph has " + std::to_string(count) +
                         " rotation systems, budget is " + std::to_string(budget));
  }
}

}  // namespace

int ChinesePostmanLength(const Graph& g) {
  if (!IsConnected(g)) throw InvalidInput("graph is not connected");
  std::vector<int> odd;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) % 2 == 1) odd.push_back(v);
  }
  const int t = static_cast<int>(odd.size());
  if (t > kMaxOddVertices) {
    throw InvalidInput("graph has " + std::to_string(t) + " odd vertices, at most " +
                       std::to_string(kMaxOddVertices) + " supported");
  }
  std::vector<std::vector<int>> dist(t);
  for (int i = 0; i < t; ++i) {
    auto all = BfsDistances(g, odd[i]);
    for (int j = 0; j < t; ++j) dist[i].push_back(all[odd[j]]);
  }
  // best[mask] = cheapest pairing of the odd vertices in mask.
  constexpr int kInf = std::numeric_limits<int>::max() / 2;
  std::vector<int> best(1u << t, kInf);
  best[0] = 0;
  for (unsigned mask = 1; mask < (1u << t); ++mask) {
    if (std::popcount(mask) % 2 != 0) continue;
    int i = std::countr_zero(mask);
    unsigned rest = mask & ~(1u << i);
    for (int j = i + 1; j < t; ++j) {
      if (!(rest & (1u << j))) continue;
      int candidate = best[rest & ~(1u << j)] + dist[i][j];
      best[mask] = std::min(best[mask], candidate);
    }
  }
  return g.edge_count() + best[(1u << t) - 1];
}

std::int64_t RotationSystemCount(const Graph& g) {
  constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
  std::int64_t total = 1;
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int f = 2; f < g.degree(v); ++f) {
      if (total > kMax / f) return kMax;
      total *= f;
    }
  }
  return total;
}

SrsResult ExactShortestReporterStrand(const Graph& g, std::int64_t budget) {
  CheckSearchable(g, budget);
  int lower_bound = g.edge_count();
  try {
    lower_bound = ChinesePostmanLength(g);
  } catch (const InvalidInput&) {
    // Too many odd vertices for the exact pairing; |E| still bounds srs.
  }
  const int darts = g.dart_count();
  const int edges = g.edge_count();
  RotationOdometer odometer(g);
  std::vector<char> visited(darts);
  std::vector<int> edge_stamp(edges, -1);
  int best = std::numeric_limits<int>::max();
  SrsResult result;
  int stamp = 0;
  do {
    std::fill(visited.begin(), visited.end(), 0);
    for (int start = 0; start < darts; ++start) {
      if (visited[start]) continue;
      int length = 0;
      int distinct = 0;
      ++stamp;
      int d = start;
      do {
        visited[d] = 1;
        ++length;
        if (edge_stamp[d >> 1] != stamp) {
          edge_stamp[d >> 1] = stamp;
          ++distinct;
        }
        d = odometer.Next(d);
      } while (d != start);
      if (distinct == edges && length < best) {
        best = length;
        result.embedding = odometer.Current();
        result.walk.darts.clear();
        int x = start;
        do {
          result.walk.darts.push_back(Dart::FromIndex(x));
          x = odometer.Next(x);
        } while (x != start);
      }
    }
    if (best == lower_bound) break;
  } while (odometer.Advance());
  result.length = best;
  return result;
}

MaxGenusResult MaxGenusExhaustive(const Graph& g, std::int64_t budget) {
  CheckSearchable(g, budget);
  const int darts = g.dart_count();
  const int cycle_rank = g.edge_count() - g.vertex_count() + 1;
  // genus = (cycle_rank + 1 - faces) / 2 and faces has the parity of
  // cycle_rank + 1, so one face (or two) is the best conceivable.
  const int fewest_possible = cycle_rank % 2 == 0 ? 1 : 2;
  RotationOdometer odometer(g);
  std::vector<char> visited(darts);
  int fewest = std::numeric_limits<int>::max();
  MaxGenusResult result;
  do {
    std::fill(visited.begin(), visited.end(), 0);
    int faces = 0;
    for (int start = 0; start < darts && faces < fewest; ++start) {
      if (visited[start]) continue;
      ++faces;
      int d = start;
      do {
        visited[d] = 1;
        d = odometer.Next(d);
      } while (d != start);
    }
    bool complete = std::all_of(visited.begin(), visited.end(), [](char c) { return c; });
    if (complete && faces < fewest) {
      fewest = faces;
      result.embedding = odometer.Current();
    }
    if (fewest == fewest_possible) break;
  } while (odometer.Advance());
  result.genus = (cycle_rank + 1 - fewest) / 2;
  return result;
}

namespace {

void CheckCubicLoopless(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 3) throw InvalidInput("graph is not cubic");
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.IsLoop(e)) throw InvalidInput("graph has a loop");
  }
}

// For each vertex, the id of its matched edge; throws unless perfect.
std::vector<int> MatchedEdgeAt(const Graph& g, std::span<const int> matching) {
  std::vector<int> at(g.vertex_count(), -1);
  for (int e : matching) {
    if (e < 0 || e >= g.edge_count() || g.IsLoop(e)) {
      throw InvalidInput("matching contains an invalid edge");
    }
    auto [u, v] = g.edge(e);
    if (at[u] >= 0 || at[v] >= 0) throw InvalidInput("edges of the matching touch");
    at[u] = at[v] = e;
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (at[v] < 0) throw InvalidInput("matching is not perfect");
  }
  return at;
}

}  // namespace

std::vector<std::vector<Dart>> SoloCycles(const Graph& g,
                                          std::span<const int> matching) {
  CheckCubicLoopless(g);
  std::vector<int> matched_at = MatchedEdgeAt(g, matching);
  std::vector<char> in_matching(g.edge_count(), 0);
  for (int e : matching) in_matching[e] = 1;
  std::vector<char> done(g.edge_count(), 0);
  std::vector<std::vector<Dart>> cycles;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (in_matching[e] || done[e]) continue;
    std::vector<Dart> cycle;
    Dart d{e, 0};
    while (!done[d.edge]) {
      done[d.edge] = 1;
      cycle.push_back(d);
      // Leave the head along its other solo dart.
      int h = g.Head(d);
      Dart arrived = d.opposite();
      for (Dart x : g.incident(h)) {
        if (x != arrived && !in_matching[x.edge]) {
          d = x;
          break;
        }
      }
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

CprsTraceResult CprsTrace(const Graph& g, const CprsCandidate& candidate) {
  auto cycles = SoloCycles(g, candidate.matching);
  if (candidate.cycle_orientations.size() != cycles.size()) {
    throw InvalidInput("one orientation per solo cycle is required");
  }
  std::vector<int> matched_at = MatchedEdgeAt(g, candidate.matching);
  const int n = g.vertex_count();
  std::vector<Dart> solo_out(n);
  std::vector<char> forward(g.dart_count(), 0);
  for (size_t c = 0; c < cycles.size(); ++c) {
    for (Dart d : cycles[c]) {
      Dart oriented = candidate.cycle_orientations[c] ? d.opposite() : d;
      forward[oriented.index()] = 1;
      solo_out[g.Tail(oriented)] = oriented;
    }
  }
  auto matched_dart_from = [&](int v) {
    int e = matched_at[v];
    return g.edge(e).first == v ? Dart{e, 0} : Dart{e, 1};
  };
  int start = -1;
  for (int x = 0; x < g.dart_count(); ++x) {
    if (forward[x]) {
      start = x;
      break;
    }
  }
  CprsTraceResult result;
  if (start < 0) return result;  // no solo edges: impossible for cubic graphs
  Dart d = Dart::FromIndex(start);
  do {
    result.walk.darts.push_back(d);
    int h = g.Head(d);
    d = (matched_at[h] == d.edge) ? solo_out[h] : matched_dart_from(h);
  } while (d.index() != start);
  const int full = g.edge_count() + static_cast<int>(candidate.matching.size());
  result.success = result.walk.length() == full;
  return result;
}

std::int64_t ForEachPerfectMatching(
    const Graph& g, std::int64_t budget,
    const std::function<void(std::span<const int>)>& visit) {
  const int n = g.vertex_count();
  std::vector<char> used(n, 0);
  std::vector<int> matching;
  std::int64_t count = 0;
  std::function<void(int)> extend = [&](int from) {
    int v = from;
    while (v < n && used[v]) ++v;
    if (v == n) {
      if (++count > budget) {
        throw BudgetExceeded("more than " + std::to_string(budget) +
                             " perfect matchings");
      }
      visit(matching);
      return;
    }
    used[v] = 1;
    for (Dart d : g.incident(v)) {
      if (g.IsLoop(d.edge)) continue;
      int w = g.Head(d);
      if (used[w]) continue;
      used[w] = 1;
      matching.push_back(d.edge);
      extend(v + 1);
      matching.pop_back();
      used[w] = 0;
    }
    used[v] = 0;
  };
  if (n % 2 == 0) extend(0);
  return count;
}

std::vector<Walk> EnumerateCprs(const Graph& g, std::int64_t budget) {
  CheckCubicLoopless(g);
  if (!VertexConnectivityAtLeast(g, 2)) throw InvalidInput("graph is not 2-connected");
  std::set<std::vector<Dart>> found;
  ForEachPerfectMatching(g, budget, [&](std::span<const int> matching) {
    CprsCandidate candidate;
    candidate.matching.assign(matching.begin(), matching.end());
    const size_t cycles = SoloCycles(g, matching).size();
    // Reversing every cycle traces the reversed walk, so cycle 0 keeps its
    // reference orientation.
    const std::uint64_t combos = std::uint64_t{1} << (cycles - 1);
    for (std::uint64_t mask = 0; mask < combos; ++mask) {
      candidate.cycle_orientations.assign(cycles, false);
      for (size_t c = 1; c < cycles; ++c) {
        candidate.cycle_orientations[c] = (mask >> (c - 1)) & 1;
      }
      CprsTraceResult traced = CprsTrace(g, candidate);
      if (traced.success) found.insert(Canonical(traced.walk).darts);
    }
  });
  std::vector<Walk> walks;
  for (const auto& darts : found) walks.push_back(Walk{darts, true});
  return walks;
}

std::optional<std::vector<int>> HamiltonCycle(const Graph& g) {
  if (!GetDegreeProfile(g).is_simple) throw InvalidInput("graph is not simple");
  const int n = g.vertex_count();
  if (n < 3) return std::nullopt;
  auto adj = AdjacencyLists(g);
  for (auto& list : adj) std::sort(list.begin(), list.end());
  std::vector<char> on_path(n, 0);
  std::vector<int> path{0};
  on_path[0] = 1;
  // An unvisited vertex needs two neighbours that are unvisited or are the
  // path's endpoints.
  auto feasible = [&]() {
    int tail = path.back();
    for (int v = 0; v < n; ++v) {
      if (on_path[v]) continue;
      int free = 0;
      for (int w : adj[v]) {
        if (!on_path[w] || w == tail || w == 0) ++free;
      }
      if (free < 2) return false;
    }
    return true;
  };
  std::function<bool()> extend = [&]() {
    int tail = path.back();
    if (static_cast<int>(path.size()) == n) {
      return std::binary_search(adj[tail].begin(), adj[tail].end(), 0);
    }
    for (int w : adj[tail]) {
      if (on_path[w]) continue;
      on_path[w] = 1;
      path.push_back(w);
      if (feasible() && extend()) return true;
      path.pop_back();
      on_path[w] = 0;
    }
    return false;
  };
  if (extend()) return path;
  return std::nullopt;
}

bool IsHamiltonCycle(const Graph& g, std::span<const int> cycle) {
  const int n = g.vertex_count();
  if (static_cast<int>(cycle.size()) != n || n < 3) return false;
  std::vector<char> seen(n, 0);
  for (int v : cycle) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  for (int i = 0; i < n; ++i) {
    int u = cycle[i];
    int v = cycle[(i + 1) % n];
    bool adjacent = false;
    for (Dart d : g.incident(u)) adjacent = adjacent || g.Head(d) == v;
    if (!adjacent) return false;
  }
  return true;
}

}  // namespace edgeouter
