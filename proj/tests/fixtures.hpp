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

#ifndef FLIPPROD_TESTS_FIXTURES_HPP_
#define FLIPPROD_TESTS_FIXTURES_HPP_

#include <string>
#include <utility>
#include <vector>

#include "flipprod/descriptors.hpp"

namespace flipprod::testing {

inline std::string data_path(const std::string& name) {
  return std::string(FLIPPROD_TEST_DATA) + "/" + name;
}

// K4 on {0,1,2,3} glued to a 4-cycle along the edge 12. The first six edges
// are the K4 edges.
inline Graph glued_graph() { return load_graph(data_path("glued_k4_c4.json")); }

// The same graph with the K4 edge 02 moved to 24.
inline Graph moved_graph() { return load_graph(data_path("moved_edge.json")); }

// Z_4 gain graph on three vertices with a gain-1 loop at vertex 2.
inline GainGraph rotation_graph() {
  return load_gain_graph(data_path("rotation_z4.json"));
}

// Rank 4 binary matroid on 7 elements with M * M = 6.
inline Matroid binary_matroid() { return load_matroid(data_path("binary_7_4.json")); }

inline std::vector<std::uint32_t> binary_columns() {
  // Columns of the 4x7 matrix, bit i = row i.
  return {0b1011, 0b1101, 0b0001, 0b1110, 0b0010, 0b0100, 0b1000};
}

}  // namespace flipprod::testing

#endif  // FLIPPROD_TESTS_FIXTURES_HPP_
