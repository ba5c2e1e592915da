#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

#include "dihg/geometry.hpp"
#include "dihg/json_io.hpp"
#include "dihg/partition.hpp"
#include "dihg/rational.hpp"
#include "support.hpp"

using dihg::DEdge;
using dihg::DIntervalHypergraph;
using dihg::Interval;
using dihg::Rat;
using dihg::make_rat;
using dihg::parse_rat;
using dihg::rat_str;
using nlohmann::json;

TEST_CASE("parse_rat accepts p/q and bare integers") {
  CHECK(parse_rat("3/4") == make_rat(3, 4));
  CHECK(parse_rat("-1/2") == make_rat(-1, 2));
  CHECK(parse_rat("7") == make_rat(7));
  CHECK(parse_rat("-7") == make_rat(-7));
  CHECK(parse_rat("0/5") == Rat(0));
  CHECK(parse_rat("2/4") == make_rat(1, 2));
}

TEST_CASE("parse_rat rejects malformed input") {
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1/"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("/2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1 /2"), std::invalid_argument);
}

TEST_CASE("rat_str is canonical p/q") {
  CHECK(rat_str(make_rat(2, 4)) == "1/2");
  CHECK(rat_str(make_rat(3)) == "3/1");
  CHECK(rat_str(make_rat(1, -2)) == "-1/2");
  CHECK(rat_str(Rat(0)) == "0/1");
}

TEST_CASE("make_rat normalizes sign and gcd") {
  CHECK(make_rat(-2, -4) == make_rat(1, 2));
  CHECK_THROWS_AS(make_rat(1, 0), std::invalid_argument);
}

TEST_CASE("rationalize finds best small-denominator approximations") {
  CHECK(*dihg::rationalize(0.5, 10) == make_rat(1, 2));
  CHECK(*dihg::rationalize(2.0, 10) == make_rat(2));
  CHECK(*dihg::rationalize(1.0 / 3.0, 10) == make_rat(1, 3));
  CHECK(*dihg::rationalize(-0.25, 10) == make_rat(-1, 4));
  CHECK_FALSE(dihg::rationalize(std::numeric_limits<double>::quiet_NaN(), 10).has_value());
  CHECK_FALSE(dihg::rationalize(std::numeric_limits<double>::infinity(), 10).has_value());
}

TEST_CASE("rat_floor and rat_ceil") {
  CHECK(dihg::rat_floor(make_rat(7, 2)) == 3);
  CHECK(dihg::rat_ceil(make_rat(7, 2)) == 4);
  CHECK(dihg::rat_floor(make_rat(-7, 2)) == -4);
  CHECK(dihg::rat_ceil(make_rat(-7, 2)) == -3);
  CHECK(dihg::rat_floor(Rat(5)) == 5);
  CHECK(dihg::rat_ceil(Rat(5)) == 5);
}

TEST_CASE("hypergraph validation") {
  CHECK_THROWS_AS(DIntervalHypergraph::create(0, {}), std::invalid_argument);
  // lo > hi
  CHECK_THROWS_AS(
      DIntervalHypergraph::create(1, {DEdge{0, {Interval{1, make_rat(1, 2), make_rat(1, 4)}}}}),
      std::invalid_argument);
  // outside [0,1]
  CHECK_THROWS_AS(
      DIntervalHypergraph::create(1, {DEdge{0, {Interval{1, make_rat(-1, 4), make_rat(1, 2)}}}}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      DIntervalHypergraph::create(1, {DEdge{0, {Interval{1, make_rat(1, 2), make_rat(3, 2)}}}}),
      std::invalid_argument);
  // ids not dense from 0
  CHECK_THROWS_AS(DIntervalHypergraph::create(1, {DEdge{1, {Interval{1, Rat(0), Rat(1)}}}}),
                  std::invalid_argument);
  // copy 2 missing in a d=2 edge
  CHECK_THROWS_AS(DIntervalHypergraph::create(
                      2, {DEdge{0, {Interval{1, Rat(0), Rat(1)}, Interval{1, Rat(0), Rat(1)}}}}),
                  std::invalid_argument);
  // wrong number of parts
  CHECK_THROWS_AS(DIntervalHypergraph::create(2, {DEdge{0, {Interval{1, Rat(0), Rat(1)}}}}),
                  std::invalid_argument);
}

TEST_CASE("critical_values is sorted, distinct, includes 0 and 1") {
  DIntervalHypergraph h = testsup::make_1d(
      {{make_rat(1, 4), make_rat(1, 2)}, {make_rat(1, 4), make_rat(3, 4)}});
  std::vector<Rat> cv = dihg::critical_values(h, 1);
  REQUIRE(cv.size() == 5);
  CHECK(cv[0] == Rat(0));
  CHECK(cv[1] == make_rat(1, 4));
  CHECK(cv[2] == make_rat(1, 2));
  CHECK(cv[3] == make_rat(3, 4));
  CHECK(cv[4] == Rat(1));
}

TEST_CASE("restrict_to_copy keeps ids and projects parts") {
  DIntervalHypergraph h = testsup::make_dih(
      2, {{{Rat(0), make_rat(1, 2)}, {make_rat(1, 4), Rat(1)}},
          {{make_rat(1, 2), Rat(1)}, {Rat(0), make_rat(1, 4)}}});
  DIntervalHypergraph r = h.restrict_to_copy(2);
  REQUIRE(r.d() == 1);
  REQUIRE(r.edge_count() == 2);
  CHECK(r.edge(0).part(1).lo == make_rat(1, 4));
  CHECK(r.edge(1).part(1).hi == make_rat(1, 4));
}

TEST_CASE("hypergraph JSON round trip preserves everything") {
  testsup::Rng rng(42);
  for (int it = 0; it < 25; ++it) {
    DIntervalHypergraph h = testsup::random_dinterval(rng, rng.uniform(1, 3), 6, 16);
    nlohmann::ordered_json j = dihg::hypergraph_to_json(h);
    DIntervalHypergraph back = dihg::hypergraph_from_json(j);
    REQUIRE(back.d() == h.d());
    REQUIRE(back.edge_count() == h.edge_count());
    for (int e = 0; e < h.edge_count(); ++e)
      for (int i = 1; i <= h.d(); ++i) {
        CHECK(back.edge(e).part(i).lo == h.edge(e).part(i).lo);
        CHECK(back.edge(e).part(i).hi == h.edge(e).part(i).hi);
      }
    // serialization is canonical, so a round trip is byte-identical
    CHECK(dihg::hypergraph_to_json(back).dump(2) == j.dump(2));
  }
}

TEST_CASE("cuts and point JSON round trips") {
  testsup::Rng rng(7);
  for (int it = 0; it < 25; ++it) {
    int d = rng.uniform(1, 3), n = rng.uniform(1, 4);
    dihg::ProductPoint x = testsup::random_point(rng, d, n);
    dihg::CutSystem c = dihg::cuts_from_point(x);
    CHECK(dihg::point_from_json(dihg::point_to_json(x)) == x);
    CHECK(dihg::cuts_from_json(dihg::cuts_to_json(c)) == c);
  }
}

TEST_CASE("malformed hypergraph JSON is rejected with invalid_argument") {
  auto parse = [](const char* text) { return dihg::hypergraph_from_json(json::parse(text)); };
  CHECK_THROWS_AS(parse(R"({"edges": []})"), std::invalid_argument);  // missing d
  CHECK_THROWS_AS(parse(R"({"d": 1})"), std::invalid_argument);       // missing edges
  CHECK_THROWS_AS(parse(R"({"d": 1, "edges": [{"id": 0, "parts": [
      {"copy": 1, "lo": "1/2", "hi": "1/4"}]}]})"),
                  std::invalid_argument);  // lo > hi
  CHECK_THROWS_AS(parse(R"({"d": 1, "edges": [{"id": 0, "parts": [
      {"copy": 1, "lo": "abc", "hi": "1/4"}]}]})"),
                  std::invalid_argument);  // bad rational
  CHECK_THROWS_AS(parse(R"({"d": 1, "edges": [{"id": 5, "parts": [
      {"copy": 1, "lo": "0/1", "hi": "1/4"}]}]})"),
                  std::invalid_argument);  // ids not dense
  CHECK_THROWS_AS(parse(R"({"d": 2, "edges": [{"id": 0, "parts": [
      {"copy": 1, "lo": "0/1", "hi": "1/4"},
      {"copy": 1, "lo": "0/1", "hi": "1/4"}]}]})"),
                  std::invalid_argument);  // duplicate copy
}

TEST_CASE("malformed cuts and point JSON are rejected") {
  CHECK_THROWS_AS(dihg::cuts_from_json(json::parse(
                      R"({"d": 1, "n": 3, "cuts": [["1/2", "1/4"]]})")),
                  std::invalid_argument);  // decreasing cuts
  CHECK_THROWS_AS(dihg::point_from_json(json::parse(
                      R"({"d": 1, "n": 2, "coords": [["1/2", "1/4"]]})")),
                  std::invalid_argument);  // off the simplex
  CHECK_THROWS_AS(dihg::point_from_json(json::parse(
                      R"({"d": 1, "n": 2, "coords": [["-1/2", "3/2"]]})")),
                  std::invalid_argument);  // negative coordinate
}

TEST_CASE("read_hypergraph reports parse failures and load reports missing files") {
  std::istringstream bad("{ not json");
  CHECK_THROWS(dihg::read_hypergraph(bad, "<test>"));
  CHECK_THROWS(dihg::load_hypergraph("/nonexistent/path/h.json"));
}
