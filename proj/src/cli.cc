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

#include "edgeouter/cli.h"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "edgeouter/errors.h"
#include "edgeouter/gadgets.h"
#include "edgeouter/io.h"
#include "edgeouter/optimal.h"
#include "edgeouter/reporter.h"
#include "edgeouter/walks.h"

namespace edgeouter {
namespace {

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
}

GraphFile LoadGraph(const std::string& path) { return ParseGraph(ReadFile(path)); }

Embedding EmbeddingOf(const GraphFile& file) {
  return file.embedding ? *file.embedding : IdentityEmbedding(file.graph);
}

Embedding RequireEmbedding(const GraphFile& file) {
  if (!file.embedding) throw InvalidInput("graph file has no rot lines");
  return *file.embedding;
}

std::string Join(const std::vector<int>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    s += (i ? " " : "") + std::to_string(values[i]);
  }
  return s;
}

std::string Yes(bool b) { return b ? "yes" : "no"; }

void PrintReport(std::ostream& out, const WalkReport& r) {
  out << "edge_spanning " << Yes(r.edge_spanning) << "\n"
      << "edge_2_bounded " << Yes(r.edge_2_bounded) << "\n"
      << "orientable " << Yes(r.orientable) << "\n"
      << "retraction_free " << Yes(r.retraction_free) << "\n"
      << "rotation_compatible " << Yes(r.rotation_compatible) << "\n"
      << "solo_edges " << Join(r.solo_edges) << "\n"
      << "double_edges " << Join(r.double_edges) << "\n";
}

void PrintStage(std::ostream& out, const StageCheck& c) {
  out << "stage " << c.stage << ": vertices " << c.vertices << " edges "
      << c.edges << " cubic " << Yes(c.cubic) << " simple " << Yes(c.simple)
      << " genus " << c.genus << " 2-connected " << Yes(c.two_connected)
      << " 3-connected " << Yes(c.three_connected) << "\n";
}

bool StageValid(const StageCheck& c) {
  bool connectivity =
      c.stage == "P" ? c.two_connected && !c.three_connected : c.three_connected;
  return c.cubic && c.simple && c.genus == 0 && connectivity;
}

int Faces(std::ostream& out, const std::string& path) {
  Embedding emb = EmbeddingOf(LoadGraph(path));
  FaceSet faces = TraceFaces(emb);
  for (int f = 0; f < faces.size(); ++f) {
    out << "face " << f << " length " << faces.faces[f].length() << ":";
    for (Dart d : faces.faces[f].darts) out << " " << FormatDart(d);
    out << "\n";
  }
  out << "faces " << faces.size() << "\n";
  out << "genus " << Genus(emb, faces) << "\n";
  return kExitOk;
}

int Rsw(std::ostream& out, const std::string& path, bool max_genus_start,
        std::int64_t budget) {
  GraphFile file = LoadGraph(path);
  ReporterResult result = max_genus_start
                              ? ReporterStrandWalkMaxGenus(file.graph, budget)
                              : ReporterStrandWalk(EmbeddingOf(file));
  out << "flips " << result.steps.size() << "\n";
  out << "genus " << Genus(result.embedding) << "\n";
  out << "length " << result.walk.length() << "\n";
  out << SerializeGraph(file.graph, &result.embedding);
  out << SerializeWalk(result.walk);
  return kExitOk;
}

int Srs(std::ostream& out, const std::string& path, std::int64_t budget) {
  GraphFile file = LoadGraph(path);
  SrsResult result = ExactShortestReporterStrand(file.graph, budget);
  out << "srs " << result.length << "\n";
  out << SerializeGraph(file.graph, &result.embedding);
  out << SerializeWalk(result.walk);
  return kExitOk;
}

int Cprs(std::ostream& out, const std::string& path, std::int64_t budget) {
  GraphFile file = LoadGraph(path);
  std::vector<Walk> walks = EnumerateCprs(file.graph, budget);
  if (walks.empty()) {
    out << "none\n";
    return kExitFalse;
  }
  out << "cprs " << walks.size() << "\n";
  for (const Walk& w : walks) out << SerializeWalk(w);
  return kExitOk;
}

int MaxGenus(std::ostream& out, const std::string& path, std::int64_t budget) {
  GraphFile file = LoadGraph(path);
  MaxGenusResult result = MaxGenusExhaustive(file.graph, budget);
  out << "max_genus " << result.genus << "\n";
  out << SerializeGraph(file.graph, &result.embedding);
  return kExitOk;
}

int Hamilton(std::ostream& out, const std::string& path) {
  GraphFile file = LoadGraph(path);
  auto cycle = HamiltonCycle(file.graph);
  if (!cycle) {
    out << "none\n";
    return kExitFalse;
  }
  out << "cycle " << Join(*cycle) << "\n";
  return kExitOk;
}

int Gadget(std::ostream& out, const std::string& stage, const std::string& path,
           const std::string& out_path, const std::string& map_path) {
  Embedding n = RequireEmbedding(LoadGraph(path));
  GadgetGraph built = stage == "p"   ? BuildP(n)
                      : stage == "q" ? BuildQ(n)
                                     : BuildR(n);
  StageCheck check = CheckStage(built);
  std::string graph_text = SerializeGraph(built.graph, &built.embedding);
  std::string map_text = SerializeGadgetMap(built.map);
  if (out_path.empty()) {
    out << graph_text;
  } else {
    WriteFile(out_path, graph_text);
  }
  if (map_path.empty()) {
    if (out_path.empty()) out << map_text;
  } else {
    WriteFile(map_path, map_text);
  }
  PrintStage(out, check);
  return StageValid(check) ? kExitOk : kExitFalse;
}

int VerifyWalk(std::ostream& out, const std::string& graph_path,
               const std::string& walk_path) {
  GraphFile file = LoadGraph(graph_path);
  Walk w = ParseWalk(ReadFile(walk_path), &file.graph);
  WalkReport report = ValidateWalk(file.graph, w);
  PrintReport(out, report);
  out << "length " << w.length() << "\n";
  bool rsw = report.IsReporterStrandWalk();
  out << "reporter_strand_walk " << Yes(rsw) << "\n";
  try {
    int cp = ChinesePostmanLength(file.graph);
    out << "cp " << cp << "\n";
    out << "cprs " << Yes(IsCprsWalk(file.graph, w, cp)) << "\n";
  } catch (const InvalidInput& e) {
    out << "cprs unknown (" << e.what() << ")\n";
  }
  return rsw ? kExitOk : kExitFalse;
}

int Reduce(std::ostream& out, const std::string& path) {
  Embedding n = RequireEmbedding(LoadGraph(path));
  const Graph& g = n.graph();
  auto cycle = HamiltonCycle(g);
  if (!cycle) {
    out << "hamilton none\n";
    return kExitFalse;
  }
  out << "hamilton " << Join(*cycle) << "\n";

  GadgetGraph p = BuildP(n);
  PrintStage(out, CheckStage(p));
  Walk wp = HamiltonToCprsP(g, p, *cycle);
  out << "P walk length " << wp.length() << " cprs "
      << Yes(IsCubicCprsWalk(p.graph, wp)) << "\n";
  Walk solo = MakeAdEdgesSolo(g, p, wp);
  out << "P walk normalized cprs " << Yes(IsCubicCprsWalk(p.graph, solo)) << "\n";

  GadgetGraph r = BuildR(n);
  PrintStage(out, CheckStage(r));
  Walk wr = LiftPToR(g, p, r, solo);
  bool r_ok = IsCubicCprsWalk(r.graph, wr);
  out << "R walk length " << wr.length() << " cprs " << Yes(r_ok) << "\n";

  Walk back = ProjectRToP(g, p, r, wr);
  bool round_trip = SameClosedWalk(back, solo);
  out << "projected P walk length " << back.length() << " round trip "
      << Yes(round_trip) << "\n";
  std::vector<int> recovered = CprsPToHamilton(g, p, back);
  out << "recovered hamilton " << Join(recovered) << "\n";
  return r_ok && round_trip ? kExitOk : kExitFalse;
}

int Dot(std::ostream& out, const std::string& path, const std::string& walk_path) {
  GraphFile file = LoadGraph(path);
  std::optional<Walk> w;
  if (!walk_path.empty()) w = ParseWalk(ReadFile(walk_path), &file.graph);
  out << ExportDot(file.graph, w ? &*w : nullptr,
                   file.embedding ? &*file.embedding : nullptr);
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Edge-outer embeddings and reporter strand walks", "edgeouter"};
  app.require_subcommand(1);

  std::function<int()> action;
  std::string graph, walk, stage, out_path, map_path;
  std::int64_t budget = kDefaultRotationBudget;
  std::int64_t matching_budget = kDefaultMatchingBudget;
  bool max_genus_start = false;

  auto graph_arg = [&](CLI::App* sub) {
    sub->add_option("graph", graph, "graph file")->required();
  };

  auto* faces = app.add_subcommand("faces", "face walks and genus");
  graph_arg(faces);
  faces->callback([&] { action = [&] { return Faces(out, graph); }; });

  auto* rsw = app.add_subcommand("rsw", "reporter strand walk by flipping");
  graph_arg(rsw);
  rsw->add_flag("--max-genus-start", max_genus_start,
                "start from a maximum genus embedding");
  rsw->add_option("--budget", budget, "rotation systems to examine");
  rsw->callback([&] {
    action = [&] { return Rsw(out, graph, max_genus_start, budget); };
  });

  auto* cp = app.add_subcommand("cp", "Chinese postman length");
  graph_arg(cp);
  cp->callback([&] {
    action = [&] {
      out << ChinesePostmanLength(LoadGraph(graph).graph) << "\n";
      return kExitOk;
    };
  });

  auto* srs = app.add_subcommand("srs", "shortest reporter strand walk");
  graph_arg(srs);
  srs->add_option("--budget", budget, "rotation systems to examine");
  srs->callback([&] { action = [&] { return Srs(out, graph, budget); }; });

  auto* cprs = app.add_subcommand("cprs", "CPRS walks of a cubic graph");
  graph_arg(cprs);
  cprs->add_option("--budget", matching_budget, "perfect matchings to examine");
  cprs->callback([&] { action = [&] { return Cprs(out, graph, matching_budget); }; });

  auto* maxgenus = app.add_subcommand("maxgenus", "maximum genus embedding");
  graph_arg(maxgenus);
  maxgenus->add_option("--budget", budget, "rotation systems to examine");
  maxgenus->callback([&] { action = [&] { return MaxGenus(out, graph, budget); }; });

  auto* hamilton = app.add_subcommand("hamilton", "hamilton cycle");
  graph_arg(hamilton);
  hamilton->callback([&] { action = [&] { return Hamilton(out, graph); }; });

  auto* gadget = app.add_subcommand("gadget", "build gadget graph P, Q or R");
  gadget->add_option("stage", stage, "p, q or r")
      ->required()
      ->check(CLI::IsMember({"p", "q", "r"}));
  graph_arg(gadget);
  gadget->add_option("--out", out_path, "write the graph here");
  gadget->add_option("--map", map_path, "write the name map here");
  gadget->callback([&] {
    action = [&] { return Gadget(out, stage, graph, out_path, map_path); };
  });

  auto* verify = app.add_subcommand("verify-walk", "check a walk");
  graph_arg(verify);
  verify->add_option("walk", walk, "walk file")->required();
  verify->callback([&] { action = [&] { return VerifyWalk(out, graph, walk); }; });

  auto* reduce = app.add_subcommand("reduce", "end-to-end reduction demo");
  graph_arg(reduce);
  reduce->callback([&] { action = [&] { return Reduce(out, graph); }; });

  auto* dot = app.add_subcommand("dot", "DOT export");
  graph_arg(dot);
  dot->add_option("--walk", walk, "walk file to style edges by");
  dot->callback([&] { action = [&] { return Dot(out, graph, walk); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    return action();
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  }
}

}  // namespace edgeouter
