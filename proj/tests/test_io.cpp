#include "doctest.h"
#include "support.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <random>

#include "supermod/io.hpp"

using namespace supermod;
using namespace testing;

TEST_CASE("serialization format") {
  const auto v = vars(2);
  const auto m = fn(v, {{"ab", Rational(-3, 2)}, {"a", 2}});
  CHECK(io::serialize(m) ==
        "{\n"
        "  \"variables\": [\n    \"a\",\n    \"b\"\n  ],\n"
        "  \"values\": {\n"
        "    \"\": \"0\",\n    \"a\": \"2\",\n    \"b\": \"0\",\n    \"a,b\": \"-3/2\"\n"
        "  }\n"
        "}\n");
}

TEST_CASE("round trip") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  for (int n = 1; n <= 6; ++n) {
    const auto v = vars(n);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Rational> values;
      for (std::size_t i = 0; i < v.power_size(); ++i) values.emplace_back(num(rng), den(rng));
      const SetFunction m(v, values);
      REQUIRE(io::parse_set_function(io::serialize(m)) == m);
    }
  }
  const auto labelled = SetFunction(vars({"x1", "y", "alpha"}), std::vector<Rational>(8, Rational(1, 3)));
  CHECK(io::parse_set_function(io::serialize(labelled)) == labelled);
}

TEST_CASE("keys and variables are canonicalized") {
  const auto m = io::parse_set_function(
      R"({"values": {"b,a": "1", "": "0", "b": "1/2", "a": "0"}, "variables": ["b", "a"]})");
  const auto v = vars(2);
  CHECK(m == fn(v, {{"ab", 1}, {"b", Rational(1, 2)}}));
}

TEST_CASE("malformed documents are rejected") {
  const char* bad[] = {
      "not json",
      "[1, 2]",
      R"({"variables": ["a"]})",
      R"({"variables": ["a"], "values": {"": "0"}})",
      R"({"variables": ["a"], "values": {"": "0", "a": "1", "a": "2"}})",
      R"({"variables": ["a"], "values": {"": "0", "a": "1", "b": "2"}})",
      R"({"variables": ["a"], "values": {"": "0", "a": "1.5"}})",
      R"({"variables": ["a"], "values": {"": "0", "a": "1/0"}})",
      R"({"variables": ["a"], "values": {"": "0", "a": 1}})",
      R"({"variables": ["a", "a"], "values": {"": "0", "a": "1"}})",
      R"({"variables": [], "values": {"": "0"}})",
      R"({"variables": ["a"], "values": {"": "0", "a": "1"}, "extra": 1})",
      R"({"variables": ["a", "b"], "values": {"": "0", "a": "1", "b": "1", "a,b": "1", "b,a": "1"}})",
      R"({"variables": [1], "values": {"": "0", "1": "1"}})",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(io::parse_set_function(text), io::ParseError);
  }
}

TEST_CASE("files") {
  const auto path = (std::filesystem::temp_directory_path() / "supermod_io_test.json").string();
  io::write_file(path, io::serialize(m0()));
  CHECK(io::read_file(path) == m0());
  std::remove(path.c_str());
  CHECK_THROWS_AS(io::read_file(path), io::ParseError);
}

TEST_CASE("catalogue outputs are deterministic") {
  const auto c = enumerate_extreme_rays(3);
  CHECK(io::catalogue_json(c) == io::catalogue_json(enumerate_extreme_rays(3)));
  const auto table = io::catalogue_table(c);
  CHECK(std::count(table.begin(), table.end(), '\n') >= 5);
  CHECK(table.find("0\t0\t0\t0\t0\t0\t0\t1") != std::string::npos);
  const auto summary = io::orbit_summary(c);
  CHECK(summary.find("orbits=3") != std::string::npos);
}
