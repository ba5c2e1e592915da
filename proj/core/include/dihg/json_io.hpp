#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "dihg/geometry.hpp"
#include "dihg/partition.hpp"

namespace dihg {

// Wire format (all rationals are "p/q" strings):
//   hypergraph: {"d": 2, "edges": [{"id": 0, "parts":
//                 [{"copy": 1, "lo": "0/1", "hi": "1/2"}, ...]}, ...]}
//   cut system: {"d": 2, "n": 3, "cuts": [["1/4", "1/2"], ...]}
//   point:      {"d": 2, "n": 3, "coords": [["1/4", "1/4", "1/2"], ...]}
// Parsers throw std::invalid_argument with a field-level message on
// malformed input (lo > hi, copies not covering 1..d exactly once, ids not
// dense from 0, coordinates off the simplex).

nlohmann::ordered_json hypergraph_to_json(const DIntervalHypergraph& h);
DIntervalHypergraph hypergraph_from_json(const nlohmann::json& j);
DIntervalHypergraph load_hypergraph(const std::string& path);
DIntervalHypergraph read_hypergraph(std::istream& in, const std::string& what = "<stream>");

nlohmann::ordered_json cuts_to_json(const CutSystem& c);
CutSystem cuts_from_json(const nlohmann::json& j);

nlohmann::ordered_json point_to_json(const ProductPoint& x);
ProductPoint point_from_json(const nlohmann::json& j);

}  // namespace dihg
