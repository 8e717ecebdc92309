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

#include "flipprod/descriptors.hpp"

#include <fstream>
#include <sstream>

#include "flipprod/error.hpp"
#include "flipprod/linalg.hpp"

namespace flipprod {
namespace {

[[noreturn]] void bad(const std::string& what) {
  throw Error(ErrorCode::kInvalidInput, what);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    bad(std::string("descriptor is missing \"") + key + "\"");
  }
  return j.at(key);
}

long long integer_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) bad(std::string("\"") + key + "\" must be an integer");
  return v.get<long long>();
}

int small_int(const Json& v, const char* what) {
  if (!v.is_number_integer()) bad(std::string(what) + " must be an integer");
  const long long x = v.get<long long>();
  if (x < -(1LL << 30) || x > (1LL << 30)) bad(std::string(what) + " out of range");
  return static_cast<int>(x);
}

Subset subset_field(const Json& j, const char* key, int n) {
  const Json& list = field(j, key);
  if (!list.is_array()) bad(std::string("\"") + key + "\" must be an array");
  Subset s = 0;
  for (const Json& v : list) {
    const int e = small_int(v, "element");
    if (e < 0 || e >= n) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "element " + std::to_string(e) + " outside the ground set");
    }
    s |= singleton(e);
  }
  return s;
}

Rational parse_rational(const Json& v) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (!v.is_string()) bad("rational entries are integers or \"a/b\" strings");
  const std::string text = v.get<std::string>();
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    const Integer num(text.substr(0, slash));
    const Integer den(text.substr(slash + 1));
    if (den == 0) bad("zero denominator in \"" + text + "\"");
    return make_rational(num, den);
  } catch (const std::runtime_error&) {
    bad("cannot parse rational \"" + text + "\"");
  }
}

std::vector<std::vector<Json>> entry_rows(const Json& j) {
  const Json& rows = field(j, "entries");
  if (!rows.is_array() || rows.empty()) bad("\"entries\" must be a nonempty array");
  std::vector<std::vector<Json>> out;
  for (const Json& row : rows) {
    if (!row.is_array()) bad("matrix rows must be arrays");
    out.emplace_back(row.begin(), row.end());
    if (out.back().size() != out.front().size()) bad("ragged matrix");
  }
  return out;
}

Orientation orientation_of(const Json& j) {
  if (!j.contains("orientation")) return Orientation::kColumns;
  const std::string o = j.at("orientation").get<std::string>();
  if (o == "columns") return Orientation::kColumns;
  if (o == "rows") return Orientation::kRows;
  bad("orientation must be \"rows\" or \"columns\"");
}

Matroid parse_matrix(const Json& j) {
  const std::string fieldname = field(j, "field").get<std::string>();
  const auto rows = entry_rows(j);
  const Eigen::Index h = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index w = static_cast<Eigen::Index>(rows.front().size());
  if (fieldname == "Q") {
    RationalMatrix m;
    m.entries.resize(h, w);
    for (Eigen::Index i = 0; i < h; ++i) {
      for (Eigen::Index k = 0; k < w; ++k) m.entries(i, k) = parse_rational(rows[i][k]);
    }
    return from_matrix(m, orientation_of(j));
  }
  PrimeFieldMatrix m;
  if (fieldname == "F2") {
    m.p = 2;
  } else if (fieldname == "Fp") {
    m.p = small_int(field(j, "p"), "p");
  } else {
    bad("field must be \"Q\", \"F2\" or \"Fp\"");
  }
  m.entries.resize(h, w);
  for (Eigen::Index i = 0; i < h; ++i) {
    for (Eigen::Index k = 0; k < w; ++k) {
      const int x = small_int(rows[i][k], "matrix entry");
      m.entries(i, k) = ((x % m.p) + m.p) % m.p;
    }
  }
  return from_matrix(m, orientation_of(j));
}

std::pair<int, int> edge_of(const Json& e) {
  if (!e.is_array() || e.size() != 2) bad("graph edges are [u, v] pairs");
  return {small_int(e[0], "vertex"), small_int(e[1], "vertex")};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open \"" + path + "\"");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Json load_json(const std::string& arg) {
  const std::string text = (!arg.empty() && arg.front() == '{') ? arg : read_file(arg);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad("malformed JSON in \"" + arg + "\": " + e.what());
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string part;
  std::istringstream is(s);
  while (std::getline(is, part, sep)) out.push_back(part);
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

int parse_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    bad("expected an integer, got \"" + s + "\"");
  }
  if (used != s.size()) bad("expected an integer, got \"" + s + "\"");
  return v;
}

bool is_shorthand(const std::string& arg, const char* prefix) {
  return arg.rfind(prefix, 0) == 0;
}

// graphic:V:u-v,u-v
Graph graph_shorthand(const std::string& arg) {
  const auto parts = split(arg, ':');
  if (parts.size() < 2 || parts.size() > 3) bad("expected graphic:V:u-v,...");
  Graph g;
  g.vertices = parse_int(parts[1]);
  if (parts.size() == 3 && !parts[2].empty()) {
    for (const std::string& e : split(parts[2], ',')) {
      const auto ends = split(e, '-');
      if (ends.size() != 2) bad("bad edge \"" + e + "\"");
      g.edges.push_back({parse_int(ends[0]), parse_int(ends[1])});
    }
  }
  return g;
}

}  // namespace

Graph parse_graph(const Json& j) {
  Graph g;
  g.vertices = small_int(field(j, "vertices"), "vertices");
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) bad("\"edges\" must be an array");
  for (const Json& e : edges) g.edges.push_back(edge_of(e));
  return g;
}

Matroid parse_matroid(const Json& j) {
  try {
    const std::string type = field(j, "type").get<std::string>();
    if (type == "bases") {
      const int n = static_cast<int>(integer_field(j, "n"));
      if (n < 0 || n > kMaxGround) {
        throw Error(ErrorCode::kSizeCapExceeded, "ground set size out of range");
      }
      std::vector<Subset> bases;
      for (const Json& b : field(j, "bases")) {
        Json wrapper = {{"set", b}};
        bases.push_back(subset_field(wrapper, "set", n));
        if (cardinality(bases.back()) != static_cast<int>(b.size())) {
          bad("repeated element in a basis");
        }
      }
      return Matroid::from_bases(n, bases);
    }
    if (type == "uniform") {
      return uniform(static_cast<int>(integer_field(j, "n")),
                     static_cast<int>(integer_field(j, "r")));
    }
    if (type == "graphic") {
      const Graph g = parse_graph(j);
      return graphic(g.vertices, g.edges);
    }
    if (type == "matrix") return parse_matrix(j);
    if (type == "direct_sum") {
      const Json& parts = field(j, "summands");
      if (!parts.is_array()) bad("\"summands\" must be an array");
      Matroid out;
      for (const Json& p : parts) out = direct_sum(out, parse_matroid(p));
      return out;
    }
    const Matroid of = parse_matroid(field(j, "of"));
    if (type == "dual") return dual(of);
    if (type == "delete") return deletion(of, subset_field(j, "elements", of.size()));
    if (type == "contract") {
      return contraction(of, subset_field(j, "elements", of.size()));
    }
    if (type == "truncate") {
      return truncation(of, static_cast<int>(integer_field(j, "rank")));
    }
    if (type == "relax") {
      return circuit_hyperplane_relax(of, subset_field(j, "set", of.size()));
    }
    bad("unknown matroid type \"" + type + "\"");
  } catch (const Json::exception& e) {
    bad(std::string("bad matroid descriptor: ") + e.what());
  }
}

GainGraph parse_gain_graph(const Json& j) {
  try {
    const Json& group = field(j, "group");
    const std::string type = field(group, "type").get<std::string>();
    GainGroup g;
    if (type == "Zk") {
      g = GainGroup::cyclic(static_cast<int>(integer_field(group, "k")));
    } else if (type == "Zd") {
      g = GainGroup::lattice(static_cast<int>(integer_field(group, "d")));
    } else {
      bad("group type must be \"Zk\" or \"Zd\"");
    }
    const int vertices = small_int(field(j, "vertices"), "vertices");
    std::vector<GainEdge> edges;
    const Json& list = field(j, "edges");
    if (!list.is_array()) bad("\"edges\" must be an array");
    for (const Json& e : list) {
      GainEdge edge;
      edge.id = e.contains("id") ? small_int(e.at("id"), "id")
                                 : static_cast<int>(edges.size());
      edge.from = small_int(field(e, "from"), "from");
      edge.to = small_int(field(e, "to"), "to");
      const Json& gain = field(e, "gain");
      if (gain.is_array()) {
        for (const Json& c : gain) edge.gain.push_back(small_int(c, "gain"));
      } else {
        edge.gain.push_back(small_int(gain, "gain"));
      }
      edges.push_back(std::move(edge));
    }
    return GainGraph(g, vertices, std::move(edges));
  } catch (const Json::exception& e) {
    bad(std::string("bad gain graph descriptor: ") + e.what());
  }
}

Matroid load_matroid(const std::string& arg) {
  if (is_shorthand(arg, "uniform:")) {
    const auto parts = split(arg, ':');
    if (parts.size() != 3) bad("expected uniform:n:r");
    return uniform(parse_int(parts[1]), parse_int(parts[2]));
  }
  if (is_shorthand(arg, "graphic:")) {
    const Graph g = graph_shorthand(arg);
    return graphic(g.vertices, g.edges);
  }
  return parse_matroid(load_json(arg));
}

Graph load_graph(const std::string& arg) {
  if (is_shorthand(arg, "graphic:")) return graph_shorthand(arg);
  return parse_graph(load_json(arg));
}

GainGraph load_gain_graph(const std::string& arg) {
  return parse_gain_graph(load_json(arg));
}

Json matroid_to_json(const Matroid& m) {
  Json bases = Json::array();
  for (Subset b : m.bases()) bases.push_back(elements_of(b));
  return {{"type", "bases"}, {"n", m.size()}, {"bases", bases}};
}

Json gain_graph_to_json(const GainGraph& g) {
  Json group;
  if (g.group().kind == GainGroup::Kind::kZk) {
    group = {{"type", "Zk"}, {"k", g.group().k}};
  } else {
    group = {{"type", "Zd"}, {"d", g.group().d}};
  }
  Json edges = Json::array();
  for (const GainEdge& e : g.edges()) {
    Json gain = g.group().kind == GainGroup::Kind::kZk ? Json(e.gain.front())
                                                       : Json(e.gain);
    edges.push_back({{"id", e.id}, {"from", e.from}, {"to", e.to}, {"gain", gain}});
  }
  return {{"group", group}, {"vertices", g.vertices()}, {"edges", edges}};
}

}  // namespace flipprod
