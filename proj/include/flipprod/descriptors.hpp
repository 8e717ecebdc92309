// Copyright 2026 The Authors.
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

#ifndef FLIPPROD_DESCRIPTORS_HPP_
#define FLIPPROD_DESCRIPTORS_HPP_

// JSON and shorthand descriptors for matroids, graphs and gain graphs.
//
//   {"type":"bases","n":4,"bases":[[0,1],[0,2]]}
//   {"type":"uniform","n":5,"r":3}
//   {"type":"graphic","vertices":4,"edges":[[0,1],[1,2]]}
//   {"type":"matrix","field":"Q"|"F2"|"Fp","p":5,"orientation":"columns",
//    "entries":[[1,"1/2"],[0,3]]}
//   {"type":"dual","of":M}          {"type":"truncate","of":M,"rank":k}
//   {"type":"delete","of":M,"elements":[..]}   (also "contract")
//   {"type":"relax","of":M,"set":[..]}
//   {"type":"direct_sum","summands":[M,..]}
//
// Shorthands: "uniform:n:r" and "graphic:V:u-v,u-v,...".

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "flipprod/gain.hpp"
#include "flipprod/matroid.hpp"

namespace flipprod {

using Json = nlohmann::json;

struct Graph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
};

Matroid parse_matroid(const Json& j);
Graph parse_graph(const Json& j);
GainGraph parse_gain_graph(const Json& j);

/// Accepts a shorthand, inline JSON (leading '{') or a path to a JSON file.
Matroid load_matroid(const std::string& arg);
Graph load_graph(const std::string& arg);
GainGraph load_gain_graph(const std::string& arg);

/// Bases descriptor; parse_matroid(matroid_to_json(m)) == m.
Json matroid_to_json(const Matroid& m);
Json gain_graph_to_json(const GainGraph& g);

}  // namespace flipprod

#endif  // FLIPPROD_DESCRIPTORS_HPP_
