// Copyright 2026 The hamgrid Authors
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

#include "hamgrid/document.hpp"

#include <set>
#include <sstream>

#include "json.hpp"

namespace hamgrid {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kPitch = 24;

bool has_vertices(ResultKind k) {
  return k == ResultKind::kCycle || k == ResultKind::kPath;
}

const char* method_name(Method m) {
  return m == Method::kConstruction ? "construction" : "oracle";
}

[[noreturn]] void schema(const std::string& what) {
  throw Error(ErrorCode::kSchema, what);
}

ordered_json point(Vertex v) { return ordered_json::array({v.x, v.y}); }

Vertex parse_point(const ordered_json& j, const char* where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
      !j[1].is_number_integer()) {
    schema(std::string(where) + " entries must be [x,y] integer pairs");
  }
  return Vertex{j[0].get<int>(), j[1].get<int>()};
}

std::set<Edge> edges_of(const Document& doc) {
  std::set<Edge> out;
  const auto& vs = doc.vertices;
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    if (manhattan(vs[i], vs[i + 1]) == 1) out.insert(Edge::between(vs[i], vs[i + 1]));
  }
  if (doc.result == ResultKind::kCycle && vs.size() > 2 &&
      manhattan(vs.back(), vs.front()) == 1) {
    out.insert(Edge::between(vs.back(), vs.front()));
  }
  return out;
}

std::string rstrip(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

}  // namespace

Document to_document(const HamiltonResult& result) {
  Document doc{result.grid, result.kind(), {}, std::nullopt, result.method};
  const auto vs = result.vertices();
  doc.vertices.assign(vs.begin(), vs.end());
  if (const auto* none = std::get_if<InfeasibleOutcome>(&result.outcome)) {
    doc.reason = to_string(none->reason);
  } else if (const auto* stuck = std::get_if<StuckOutcome>(&result.outcome)) {
    doc.reason = stuck->stage + ": " + stuck->detail;
  }
  return doc;
}

std::string to_json(const Document& doc) {
  ordered_json faults = ordered_json::array();
  for (Vertex f : doc.grid.faults()) faults.push_back(point(f));
  ordered_json j;
  j["grid"] = {{"cols", doc.grid.cols()}, {"rows", doc.grid.rows()}, {"faults", faults}};
  j["result"] = to_string(doc.result);
  if (has_vertices(doc.result)) {
    ordered_json vs = ordered_json::array();
    for (Vertex v : doc.vertices) vs.push_back(point(v));
    j["vertices"] = std::move(vs);
  }
  if (doc.reason) j["reason"] = *doc.reason;
  j["method"] = method_name(doc.method);
  return j.dump();
}

Document parse_document(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
  if (!j.is_object()) schema("document must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "grid" && key != "result" && key != "vertices" && key != "reason" &&
        key != "method") {
      schema("unknown key \"" + key + "\"");
    }
  }
  if (!j.contains("grid") || !j["grid"].is_object()) schema("missing object \"grid\"");
  const auto& grid = j["grid"];
  for (const char* key : {"cols", "rows"}) {
    if (!grid.contains(key) || !grid[key].is_number_integer()) {
      schema(std::string("grid.") + key + " must be an integer");
    }
  }
  if (!grid.contains("faults") || !grid["faults"].is_array()) {
    schema("grid.faults must be an array");
  }
  std::vector<Vertex> faults;
  for (const auto& f : grid["faults"]) faults.push_back(parse_point(f, "grid.faults"));

  std::optional<GridSpec> spec;
  try {
    spec.emplace(grid["cols"].get<int>(), grid["rows"].get<int>(), std::move(faults));
  } catch (const Error& e) {
    schema(std::string("invalid grid: ") + e.what());
  }
  Document doc{*spec, ResultKind::kNone, {}, std::nullopt, Method::kConstruction};

  if (!j.contains("result") || !j["result"].is_string()) schema("missing string \"result\"");
  const std::string result = j["result"].get<std::string>();
  bool known = false;
  for (auto k : {ResultKind::kCycle, ResultKind::kPath, ResultKind::kNone, ResultKind::kStuck}) {
    if (result == to_string(k)) {
      doc.result = k;
      known = true;
    }
  }
  if (!known) schema("unknown result \"" + result + "\"");

  if (has_vertices(doc.result)) {
    if (!j.contains("vertices") || !j["vertices"].is_array()) {
      schema("\"vertices\" required for result " + result);
    }
    for (const auto& v : j["vertices"]) doc.vertices.push_back(parse_point(v, "vertices"));
  } else if (j.contains("vertices")) {
    schema("\"vertices\" not allowed for result " + result);
  }

  if (j.contains("reason")) {
    if (!j["reason"].is_string()) schema("\"reason\" must be a string");
    doc.reason = j["reason"].get<std::string>();
  }

  if (!j.contains("method") || !j["method"].is_string()) schema("missing string \"method\"");
  const std::string method = j["method"].get<std::string>();
  if (method == "construction") {
    doc.method = Method::kConstruction;
  } else if (method == "oracle") {
    doc.method = Method::kOracleSearch;
  } else {
    schema("unknown method \"" + method + "\"");
  }
  return doc;
}

std::optional<std::string> verify_document(const Document& doc) {
  if (!has_vertices(doc.result)) {
    return std::string("no vertex sequence (result ") + to_string(doc.result) + ")";
  }
  if (auto v = verify(doc.grid, doc.vertices, doc.result == ResultKind::kCycle)) {
    return v->message();
  }
  return std::nullopt;
}

std::string render_ascii(const Document& doc) {
  const GridSpec& g = doc.grid;
  const std::set<Edge> edges = edges_of(doc);
  std::ostringstream os;
  os << to_string(doc.result);
  if (has_vertices(doc.result)) os << ": " << doc.vertices.size() << " vertices";
  if (doc.reason) os << ": " << *doc.reason;
  os << " (" << method_name(doc.method) << ")\n";

  for (int y = g.rows() - 1; y >= 0; --y) {
    std::string row;
    for (int x = 0; x < g.cols(); ++x) {
      row += g.is_fault({x, y}) ? 'X' : 'o';
      if (x + 1 < g.cols()) row += edges.count(Edge{{x, y}, {x + 1, y}}) ? '-' : ' ';
    }
    os << rstrip(row) << '\n';
    if (y == 0) break;
    std::string between;
    for (int x = 0; x < g.cols(); ++x) {
      between += edges.count(Edge{{x, y - 1}, {x, y}}) ? '|' : ' ';
      if (x + 1 < g.cols()) between += ' ';
    }
    os << rstrip(between) << '\n';
  }
  return os.str();
}

std::string render_svg(const Document& doc) {
  const GridSpec& g = doc.grid;
  const int width = kPitch * (g.cols() + 1);
  const int height = kPitch * (g.rows() + 1);
  const auto px = [](Vertex v) { return kPitch + kPitch * v.x; };
  const auto py = [&](Vertex v) { return kPitch + kPitch * (g.rows() - 1 - v.y); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
     << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  if (has_vertices(doc.result) && !doc.vertices.empty()) {
    os << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"3\" "
          "stroke-linejoin=\"round\" points=\"";
    for (std::size_t i = 0; i < doc.vertices.size(); ++i) {
      if (i) os << ' ';
      os << px(doc.vertices[i]) << ',' << py(doc.vertices[i]);
    }
    if (doc.result == ResultKind::kCycle) {
      os << ' ' << px(doc.vertices.front()) << ',' << py(doc.vertices.front());
    }
    os << "\"/>\n";
  }
  for (int y = 0; y < g.rows(); ++y) {
    for (int x = 0; x < g.cols(); ++x) {
      const Vertex v{x, y};
      if (g.is_fault(v)) {
        os << "<rect x=\"" << px(v) - 8 << "\" y=\"" << py(v) - 8
           << "\" width=\"16\" height=\"16\" fill=\"#b22222\"/>\n";
      } else {
        os << "<circle cx=\"" << px(v) << "\" cy=\"" << py(v)
           << "\" r=\"3\" fill=\"black\"/>\n";
      }
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace hamgrid
