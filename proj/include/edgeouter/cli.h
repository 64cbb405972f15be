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

// Command line front end. Subcommands:
//   faces <graph>                      face walks and genus
//   rsw <graph> [--max-genus-start]    reporter strand walk by flipping
//   cp <graph>                         Chinese postman length
//   srs <graph> [--budget B]           shortest reporter strand walk
//   cprs <graph> [--budget B]          all CPRS walks of a cubic graph
//   maxgenus <graph> [--budget B]      maximum genus embedding
//   hamilton <graph>                   a hamilton cycle
//   gadget {p|q|r} <graph> [--out F] [--map F]
//   verify-walk <graph> <walk>
//   reduce <graph>                     hamilton -> P -> R -> P -> hamilton
//   dot <graph> [--walk F]             DOT export
// A graph without rot lines gets the identity embedding where one is needed.

#ifndef EDGEOUTER_CLI_H_
#define EDGEOUTER_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace edgeouter {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitBudget = 3;

// `args` excludes the program name. Returns the process exit status.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace edgeouter

#endif  // EDGEOUTER_CLI_H_
