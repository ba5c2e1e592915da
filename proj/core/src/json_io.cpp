#include "dihg/json_io.hpp"

#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace dihg {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

Rat rat_field(const json& j, const char* field) {
  if (!j.contains(field)) throw std::invalid_argument(std::string("missing field '") + field + "'");
  const json& v = j.at(field);
  if (v.is_string()) return parse_rat(v.get<std::string>());
  if (v.is_number_integer()) return Rat(v.get<long>());
  throw std::invalid_argument(std::string("field '") + field + "' must be a \"p/q\" string");
}

int int_field(const json& j, const char* field) {
  if (!j.contains(field) || !j.at(field).is_number_integer())
    throw std::invalid_argument(std::string("missing or non-integer field '") + field + "'");
  return j.at(field).get<int>();
}

}  // namespace

ordered_json hypergraph_to_json(const DIntervalHypergraph& h) {
  ordered_json out;
  out["d"] = h.d();
  out["edges"] = ordered_json::array();
  for (const DEdge& e : h.edges()) {
    ordered_json je;
    je["id"] = e.id;
    je["parts"] = ordered_json::array();
    for (const Interval& iv : e.parts) {
      ordered_json ji;
      ji["copy"] = iv.copy;
      ji["lo"] = rat_str(iv.lo);
      ji["hi"] = rat_str(iv.hi);
      je["parts"].push_back(std::move(ji));
    }
    out["edges"].push_back(std::move(je));
  }
  return out;
}

DIntervalHypergraph hypergraph_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("hypergraph must be a JSON object");
  int d = int_field(j, "d");
  if (!j.contains("edges") || !j.at("edges").is_array())
    throw std::invalid_argument("missing 'edges' array");
  std::vector<DEdge> edges;
  for (const json& je : j.at("edges")) {
    DEdge e;
    e.id = int_field(je, "id");
    if (!je.contains("parts") || !je.at("parts").is_array())
      throw std::invalid_argument("edge " + std::to_string(e.id) + ": missing 'parts' array");
    for (const json& ji : je.at("parts")) {
      Interval iv;
      iv.copy = int_field(ji, "copy");
      iv.lo = rat_field(ji, "lo");
      iv.hi = rat_field(ji, "hi");
      e.parts.push_back(std::move(iv));
    }
    edges.push_back(std::move(e));
  }
  return DIntervalHypergraph::create(d, std::move(edges));
}

DIntervalHypergraph read_hypergraph(std::istream& in, const std::string& what) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(what + ": JSON parse error: " + e.what());
  }
  return hypergraph_from_json(j);
}

DIntervalHypergraph load_hypergraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  return read_hypergraph(in, path);
}

ordered_json cuts_to_json(const CutSystem& c) {
  ordered_json out;
  out["d"] = c.d();
  out["n"] = c.n();
  out["cuts"] = ordered_json::array();
  for (const auto& row : c.cuts()) {
    ordered_json jr = ordered_json::array();
    for (const Rat& v : row) jr.push_back(rat_str(v));
    out["cuts"].push_back(std::move(jr));
  }
  return out;
}

CutSystem cuts_from_json(const json& j) {
  int d = int_field(j, "d"), n = int_field(j, "n");
  if (!j.contains("cuts") || !j.at("cuts").is_array())
    throw std::invalid_argument("missing 'cuts' array");
  std::vector<std::vector<Rat>> cuts;
  for (const json& jr : j.at("cuts")) {
    std::vector<Rat> row;
    for (const json& v : jr)
      row.push_back(v.is_string() ? parse_rat(v.get<std::string>()) : Rat(v.get<long>()));
    cuts.push_back(std::move(row));
  }
  return CutSystem::create(d, n, std::move(cuts));
}

ordered_json point_to_json(const ProductPoint& x) {
  ordered_json out;
  out["d"] = x.d();
  out["n"] = x.n();
  out["coords"] = ordered_json::array();
  for (const auto& row : x.coords()) {
    ordered_json jr = ordered_json::array();
    for (const Rat& v : row) jr.push_back(rat_str(v));
    out["coords"].push_back(std::move(jr));
  }
  return out;
}

ProductPoint point_from_json(const json& j) {
  int d = int_field(j, "d"), n = int_field(j, "n");
  if (!j.contains("coords") || !j.at("coords").is_array())
    throw std::invalid_argument("missing 'coords' array");
  std::vector<std::vector<Rat>> coords;
  for (const json& jr : j.at("coords")) {
    std::vector<Rat> row;
    for (const json& v : jr)
      row.push_back(v.is_string() ? parse_rat(v.get<std::string>()) : Rat(v.get<long>()));
    coords.push_back(std::move(row));
  }
  return ProductPoint::create(d, n, std::move(coords));
}

}  // namespace dihg
