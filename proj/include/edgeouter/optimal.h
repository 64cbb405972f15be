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

// Exact solvers for small graphs: Chinese postman length, shortest reporter
// strand walk and maximum genus by rotation-system enumeration, CPRS walks of
// cubic graphs by matching enumeration, and hamilton cycles.
//
// Every exhaustive search takes a budget. Exceeding it throws BudgetExceeded;
// a search never returns a partial answer.

#ifndef EDGEOUTER_OPTIMAL_H_
#define EDGEOUTER_OPTIMAL_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "edgeouter/embedding.h"
#include "edgeouter/multigraph.h"
#include "edgeouter/walks.h"

namespace edgeouter {

inline constexpr int kMaxOddVertices = 16;
inline constexpr std::int64_t kDefaultRotationBudget = 1'000'000;
inline constexpr std::int64_t kDefaultMatchingBudget = 10'000'000;

// cp(G) = |E| + the cheapest pairing of odd-degree vertices by shortest
// paths. Throws InvalidInput for a disconnected graph or more than
// kMaxOddVertices odd vertices.
int ChinesePostmanLength(const Graph& g);

// Product over vertices of (deg - 1)!, saturating at INT64_MAX.
std::int64_t RotationSystemCount(const Graph& g);

struct SrsResult {
  int length = 0;
  Walk walk;
  Embedding embedding;
};

// srs(G) with a witness face. Throws BudgetExceeded if RotationSystemCount
// exceeds `budget`, InvalidInput if g is disconnected or has no edges.
SrsResult ExactShortestReporterStrand(const Graph& g,
                                      std::int64_t budget = kDefaultRotationBudget);

struct MaxGenusResult {
  int genus = 0;
  Embedding embedding;
};

MaxGenusResult MaxGenusExhaustive(const Graph& g,
                                  std::int64_t budget = kDefaultRotationBudget);

// Solo cycles of a cubic graph once the matched (double) edges are removed.
// Each cycle is a dart sequence in its reference orientation, starting with
// side 0 of its smallest edge.
std::vector<std::vector<Dart>> SoloCycles(const Graph& g,
                                          std::span<const int> matching);

struct CprsCandidate {
  std::vector<int> matching;            // edge ids of the intended double edges
  std::vector<bool> cycle_orientations;  // per SoloCycles entry; true = reversed
};

struct CprsTraceResult {
  bool success = false;
  // The full CPRS walk on success; otherwise the short closed walk that the
  // tracing closed up on.
  Walk walk;
};

// Follows the forced transitions (solo in -> double, double -> solo out)
// from the smallest forward solo dart. Throws InvalidInput unless g is a
// loopless cubic graph and the matching is perfect.
CprsTraceResult CprsTrace(const Graph& g, const CprsCandidate& candidate);

// Calls `visit` with every perfect matching (edge ids, increasing by the
// lower endpoint that picked them). Returns the number visited; throws
// BudgetExceeded once more than `budget` matchings have been produced.
std::int64_t ForEachPerfectMatching(
    const Graph& g, std::int64_t budget,
    const std::function<void(std::span<const int>)>& visit);

// All CPRS walks of a 2-connected loopless cubic graph, one per canonical
// form, sorted. Throws InvalidInput for other graphs.
std::vector<Walk> EnumerateCprs(const Graph& g,
                                std::int64_t budget = kDefaultMatchingBudget);

// A hamilton cycle as a vertex sequence (first vertex not repeated), or
// nullopt. Throws InvalidInput if g is not simple.
std::optional<std::vector<int>> HamiltonCycle(const Graph& g);

// True iff `cycle` visits every vertex of g exactly once along edges of g.
bool IsHamiltonCycle(const Graph& g, std::span<const int> cycle);

}  // namespace edgeouter

#endif  // EDGEOUTER_OPTIMAL_H_
