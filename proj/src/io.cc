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

#include "edgeouter/io.h"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <vector>

#include "edgeouter/errors.h"

namespace edgeouter {
namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

// Non-blank, non-comment lines split on whitespace.
std::vector<Line> Tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream words(raw);
    Line line{number, {}};
    std::string word;
    while (words >> word) line.tokens.push_back(word);
    if (line.tokens.empty() || line.tokens[0][0] == '#') continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

int ParseInt(const std::string& token, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected an integer, got '" + token + "'");
  }
  return value;
}

int ParseCount(const std::string& token, int line) {
  int value = ParseInt(token, line);
  if (value < 0) throw ParseError(line, "negative count " + token);
  return value;
}

Dart ParseDart(const std::string& token, int line, int edge_count) {
  auto dot = token.find('.');
  if (dot == std::string::npos) {
    throw ParseError(line, "malformed dart token '" + token + "'");
  }
  int e = 0, s = 0;
  try {
    e = ParseInt(token.substr(0, dot), line);
    s = ParseInt(token.substr(dot + 1), line);
  } catch (const ParseError&) {
    throw ParseError(line, "malformed dart token '" + token + "'");
  }
  if (s != 0 && s != 1) throw ParseError(line, "dart side must be 0 or 1: " + token);
  if (e < 0 || (edge_count >= 0 && e >= edge_count)) {
    throw ParseError(line, "dart edge out of range: " + token);
  }
  return Dart{e, s};
}

void ExpectTokens(const Line& line, std::size_t count, const char* what) {
  if (line.tokens.size() != count) {
    throw ParseError(line.number, std::string("malformed ") + what + " line");
  }
}

}  // namespace

std::string FormatDart(Dart d) {
  return std::to_string(d.edge) + "." + std::to_string(d.side);
}

GraphFile ParseGraph(std::string_view text) {
  std::vector<Line> lines = Tokenize(text);
  if (lines.empty() || lines[0].tokens[0] != "graph") {
    throw ParseError(lines.empty() ? 0 : lines[0].number,
                     "expected 'graph <n> <m>' header");
  }
  ExpectTokens(lines[0], 3, "graph");
  const int n = ParseCount(lines[0].tokens[1], lines[0].number);
  const int m = ParseCount(lines[0].tokens[2], lines[0].number);

  std::vector<Edge> edges(m);
  std::vector<int> edge_line(m, 0);
  std::vector<std::vector<Dart>> rotation(n);
  std::vector<int> rot_line(n, 0);
  int rot_count = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string& kind = line.tokens[0];
    if (kind == "edge") {
      ExpectTokens(line, 4, "edge");
      int id = ParseInt(line.tokens[1], line.number);
      if (id < 0 || id >= m) throw ParseError(line.number, "edge id out of range");
      if (edge_line[id]) {
        throw ParseError(line.number, "duplicate edge id " + std::to_string(id));
      }
      int u = ParseInt(line.tokens[2], line.number);
      int v = ParseInt(line.tokens[3], line.number);
      if (u < 0 || u >= n || v < 0 || v >= n) {
        throw ParseError(line.number, "vertex index out of range");
      }
      edges[id] = {u, v};
      edge_line[id] = line.number;
    } else if (kind == "rot") {
      if (line.tokens.size() < 2) throw ParseError(line.number, "malformed rot line");
      int v = ParseInt(line.tokens[1], line.number);
      if (v < 0 || v >= n) throw ParseError(line.number, "vertex index out of range");
      if (rot_line[v]) throw ParseError(line.number, "duplicate rot line");
      for (std::size_t k = 2; k < line.tokens.size(); ++k) {
        rotation[v].push_back(ParseDart(line.tokens[k], line.number, m));
      }
      rot_line[v] = line.number;
      ++rot_count;
    } else {
      throw ParseError(line.number, "unknown statement '" + kind + "'");
    }
  }
  for (int e = 0; e < m; ++e) {
    if (!edge_line[e]) {
      throw ParseError(lines.back().number, "missing edge " + std::to_string(e));
    }
  }

  GraphFile out;
  out.graph = Graph(n, edges);
  if (rot_count > 0) {
    for (int v = 0; v < n; ++v) {
      if (!rot_line[v] && out.graph.degree(v) > 0) {
        throw ParseError(lines.back().number,
                         "missing rot line for vertex " + std::to_string(v));
      }
      std::vector<Dart> got = rotation[v];
      std::vector<Dart> want(out.graph.incident(v).begin(),
                             out.graph.incident(v).end());
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      if (got != want) {
        throw ParseError(rot_line[v] ? rot_line[v] : lines.back().number,
                         "rot line does not list the darts of vertex " +
                             std::to_string(v));
      }
    }
    out.embedding = Embedding(out.graph, rotation);
  }
  return out;
}

std::string SerializeGraph(const Graph& g, const Embedding* emb) {
  std::ostringstream out;
  out << "graph " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (int e = 0; e < g.edge_count(); ++e) {
    out << "edge " << e << " " << g.edge(e).first << " " << g.edge(e).second
        << "\n";
  }
  if (emb != nullptr) {
    Embedding anchored = emb->Anchored();
    for (int v = 0; v < g.vertex_count(); ++v) {
      out << "rot " << v;
      for (Dart d : anchored.rotation(v)) out << " " << FormatDart(d);
      out << "\n";
    }
  }
  return out.str();
}

Walk ParseWalk(std::string_view text, const Graph* g) {
  std::vector<Line> lines = Tokenize(text);
  if (lines.empty() || lines[0].tokens.size() < 3 ||
      lines[0].tokens[0] != "walk" || lines[0].tokens[1] != "closed") {
    throw ParseError(lines.empty() ? 0 : lines[0].number,
                     "expected 'walk closed <k>' header");
  }
  const int k = ParseCount(lines[0].tokens[2], lines[0].number);
  Walk w;
  w.closed = true;
  const int m = g ? g->edge_count() : -1;
  for (std::size_t t = 3; t < lines[0].tokens.size(); ++t) {
    w.darts.push_back(ParseDart(lines[0].tokens[t], lines[0].number, m));
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    for (const std::string& token : lines[i].tokens) {
      w.darts.push_back(ParseDart(token, lines[i].number, m));
    }
  }
  if (w.length() != k) {
    throw ParseError(lines.back().number,
                     "expected " + std::to_string(k) + " darts, got " +
                         std::to_string(w.length()));
  }
  if (g != nullptr) CheckClosedWalk(*g, w);
  return w;
}

std::string SerializeWalk(const Walk& w) {
  std::ostringstream out;
  out << "walk closed " << w.length() << "\n";
  for (int i = 0; i < w.length(); ++i) {
    out << (i ? " " : "") << FormatDart(w.darts[i]);
  }
  out << "\n";
  return out.str();
}

GadgetMap ParseGadgetMap(std::string_view text) {
  std::vector<Line> lines = Tokenize(text);
  if (lines.empty() || lines[0].tokens[0] != "map") {
    throw ParseError(lines.empty() ? 0 : lines[0].number,
                     "expected 'map <stage> <vertices> <edges>' header");
  }
  ExpectTokens(lines[0], 4, "map");
  std::optional<GadgetStage> stage;
  for (GadgetStage s : {GadgetStage::kP, GadgetStage::kQ, GadgetStage::kR,
                        GadgetStage::kAPlus, GadgetStage::kBPlus}) {
    if (StageName(s) == lines[0].tokens[1]) stage = s;
  }
  if (!stage) throw ParseError(lines[0].number, "unknown stage");
  const int nv = ParseCount(lines[0].tokens[2], lines[0].number);
  const int ne = ParseCount(lines[0].tokens[3], lines[0].number);
  GadgetMap map(*stage);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string& kind = line.tokens[0];
    try {
      if (kind == "vertex" || kind == "edge") {
        ExpectTokens(line, 3, kind.c_str());
        int id = ParseInt(line.tokens[1], line.number);
        int expected = kind == "vertex"
                           ? static_cast<int>(map.vertex_names().size())
                           : static_cast<int>(map.edge_names().size());
        if (id != expected) throw ParseError(line.number, "ids must be consecutive");
        if (kind == "vertex") {
          map.AddVertex(line.tokens[2]);
        } else {
          map.AddEdge(line.tokens[2]);
        }
      } else if (kind == "bracing") {
        ExpectTokens(line, 4, "bracing");
        map.bracing()[{ParseInt(line.tokens[1], line.number),
                       ParseInt(line.tokens[2], line.number)}] =
            ParseInt(line.tokens[3], line.number);
      } else {
        throw ParseError(line.number, "unknown statement '" + kind + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const InvalidInput& e) {
      throw ParseError(line.number, e.what());
    }
  }
  if (static_cast<int>(map.vertex_names().size()) != nv ||
      static_cast<int>(map.edge_names().size()) != ne) {
    throw ParseError(lines.back().number, "name counts disagree with header");
  }
  return map;
}

std::string SerializeGadgetMap(const GadgetMap& map) {
  std::ostringstream out;
  out << "map " << StageName(map.stage()) << " " << map.vertex_names().size()
      << " " << map.edge_names().size() << "\n";
  for (std::size_t v = 0; v < map.vertex_names().size(); ++v) {
    out << "vertex " << v << " " << map.vertex_names()[v] << "\n";
  }
  for (std::size_t e = 0; e < map.edge_names().size(); ++e) {
    out << "edge " << e << " " << map.edge_names()[e] << "\n";
  }
  for (const auto& [uv, w] : map.bracing()) {
    out << "bracing " << uv.first << " " << uv.second << " " << w << "\n";
  }
  return out.str();
}

std::string ExportDot(const Graph& g, const Walk* w, const Embedding* emb) {
  std::vector<int> uses;
  if (w != nullptr) {
    CheckClosedWalk(g, *w);
    uses.assign(g.edge_count(), 0);
    for (Dart d : w->darts) ++uses[d.edge];
  }
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    if (emb != nullptr) {
      out << " [comment=\"rot";
      for (Dart d : emb->rotation(v)) out << " " << FormatDart(d);
      out << "\"]";
    }
    out << ";\n";
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    out << "  " << g.edge(e).first << " -- " << g.edge(e).second << " [id=\"e"
        << e << "\"";
    if (w != nullptr) {
      if (uses[e] == 0) {
        out << ", style=dashed, color=grey";
      } else if (uses[e] == 1) {
        out << ", style=solid";
      } else {
        out << ", style=bold, color=red";
      }
      out << ", uses=" << uses[e];
    }
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace edgeouter
