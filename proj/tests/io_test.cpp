// Copyright 2026 The qpack Authors.
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

#include "qpack/io.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"

namespace qpack::io {
namespace {

GeometryFile family_file(std::uint64_t q, std::optional<std::uint32_t> count = std::nullopt) {
  return {construction::build_family(gf::make_field(q), count), json{{"construction", {{"q", q}}}}};
}

TEST(FieldJson, Encoding) {
  EXPECT_EQ(field_to_json(gf::make_field(9)).dump(), R"({"p":3,"n":2,"modulus":[1,0,1]})");
  EXPECT_EQ(field_to_json(gf::make_field(5)).dump(), R"({"p":5,"n":1,"modulus":[0,1]})");
  EXPECT_TRUE(field_from_json(field_to_json(gf::make_field(27))) == gf::make_field(27));
}

TEST(GeometryJson, LineEncoding) {
  const auto f = gf::make_field(4);
  const auto l = construction::build_class(f, f.one()).lines.front();
  EXPECT_EQ(line_to_json(f, l).dump(), R"({"slope":[[1,0],[1,0],[1,0]],"base":[[0,0],[0,0],[0,0]]})");
  EXPECT_EQ(lambda_key(f, f.element(2)), "[0,1]");
}

TEST(GeometryJson, RoundTripIsIdentity) {
  for (std::uint64_t q : {3, 4, 5, 9}) {
    const auto file = family_file(q);
    const std::string text = serialize_geometry(file);
    const auto parsed = parse_geometry(text);
    EXPECT_TRUE(parsed.family == file.family) << q;
    EXPECT_EQ(parsed.metadata, file.metadata);
    EXPECT_EQ(serialize_geometry(parsed), text) << q;
  }
}

TEST(GeometryJson, SerializationIsDeterministic) {
  EXPECT_EQ(serialize_geometry(family_file(7)), serialize_geometry(family_file(7)));
}

TEST(GeometryJson, HandWrittenLinesAreCanonicalized) {
  const auto f = gf::make_field(3);
  const std::string text = R"({"version":1,"field":{"p":3,"n":1,"modulus":[0,1]},
    "classes":{"[2]":[{"slope":[[2],[2],[2]],"base":[[1],[1],[1]]}]}})";
  const auto g = parse_geometry(text);
  ASSERT_EQ(g.family.classes.size(), 1u);
  EXPECT_EQ(g.family.classes[0].lambda, f.element(2));
  const auto& l = g.family.classes[0].lines[0];
  EXPECT_EQ(l.slope.direction(), (geometry::Point{f.one(), f.one(), f.one()}));
  EXPECT_EQ(l.base, (geometry::Point{f.zero(), f.zero(), f.zero()}));
}

TEST(GeometryJson, RejectsBadInput) {
  const std::string field = R"("field":{"p":3,"n":1,"modulus":[0,1]})";
  const std::vector<std::string> bad = {
      "not json",
      "[1,2]",
      R"({"version":2,)" + field + R"(,"classes":{}})",
      R"({"version":1,"field":{"p":3,"n":2,"modulus":[2,0,1]},"classes":{}})",  // reducible
      R"({"version":1,"field":{"p":6,"n":1,"modulus":[0,1]},"classes":{}})",
      R"({"version":1,)" + field + R"(,"classes":{"[0]":[]}})",
      R"({"version":1,)" + field + R"(,"classes":{"[1]":[],"[1]":[]}})",
      R"({"version":1,)" + field + R"(,"classes":{"one":[]}})",
      R"({"version":1,)" + field + R"(,"classes":{"[1]":[{"slope":[[0],[0],[0]],"base":[[0],[0],[0]]}]}})",
      R"({"version":1,)" + field + R"(,"classes":{"[1]":[{"slope":[[3],[0],[0]],"base":[[0],[0],[0]]}]}})",
      R"({"version":1,)" + field + R"(,"classes":{"[1]":[{"slope":[[1],[0]],"base":[[0],[0],[0]]}]}})",
      R"({"version":1,)" + field + R"(,"classes":{"[1]":[{"slope":[[-1],[0],[0]],"base":[[0],[0],[0]]}]}})",
      R"({"version":1,)" + field + R"(,"classes":{"[1]":[{"base":[[0],[0],[0]]}]}})",
      R"({"version":1,)" + field + "}",
  };
  for (const auto& text : bad) EXPECT_THROW(parse_geometry(text), FormatError) << text;
}

TEST(PlainFormat, Parse) {
  const auto g = parse_plain("# a four-cycle\npoints 4\n0 1\n1 2\n\n2 3  # closing edge next\n3 0\n");
  EXPECT_EQ(g.num_points(), 4u);
  EXPECT_EQ(g.num_lines(), 4u);
  EXPECT_EQ(g.lines()[3], (std::vector<verifier::PointId>{0, 3}));
}

TEST(PlainFormat, RejectsBadInput) {
  for (const char* text : {"", "0 1\n", "points\n", "points x\n", "points 3 4\n", "points 3\n0 3\n", "points 3\n0 -1\n",
                           "points 3\n0 0\n", "points 3\n1\n", "points 3\n0 a\n", "points 99999999999\n"})
    EXPECT_THROW(parse_plain(text), FormatError) << text;
}

TEST(PlainFormat, RoundTripOnRandomStructures) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::uint32_t n = 3 + trial;
    std::uniform_int_distribution<std::uint32_t> pt(0, n - 1);
    std::vector<std::vector<verifier::PointId>> lines;
    for (int i = 0; i < trial % 9; ++i) {
      std::set<verifier::PointId> s{pt(rng), pt(rng), pt(rng)};
      if (s.size() >= 2) lines.emplace_back(s.begin(), s.end());
    }
    const verifier::GenericIncidence g(n, lines);
    const auto back = parse_plain(serialize_plain(g));
    ASSERT_EQ(back.num_points(), g.num_points());
    ASSERT_EQ(back.lines(), g.lines());
  }
}

TEST(Reports, ScanCsvRow) {
  std::vector<std::string> cols;
  std::stringstream s(scan_csv_row(bounds::compare(2, 3)));
  for (std::string c; std::getline(s, c, ',');) cols.push_back(c);
  ASSERT_EQ(cols.size(), 11u);
  EXPECT_EQ(cols[0], "2");
  EXPECT_EQ(cols[1], "3");
  EXPECT_DOUBLE_EQ(std::stod(cols[2]), 24 * std::log(2.0));
  EXPECT_EQ(cols[3], "17");
  EXPECT_EQ(cols[4], "4913");
  EXPECT_NEAR(std::stod(cols[5]), std::pow(48 * std::log(2.0), 3), 1e-9);
  EXPECT_EQ(cols[6], "13824");
  EXPECT_NEAR(std::stod(cols[7]), std::pow(3 * std::log(3.0), 3) * std::pow(2 * std::log(2.0), 2), 1e-9);
  EXPECT_EQ(cols[8], "true");  // 3 < 2^2
  EXPECT_NEAR(std::stod(cols[9]), 32 * std::pow(3.0, 2.5), 1e-9);
  EXPECT_EQ(cols[10], "bound_main");
  const std::string header = kScanCsvHeader;
  EXPECT_EQ(std::count(header.begin(), header.end(), ','), 10);
}

TEST(Reports, BoundReportJson) {
  const auto j = bound_report_to_json(bounds::compare(3, 8));
  EXPECT_EQ(j["q"], 107);  // 96 ln 3 = 105.47
  EXPECT_EQ(j["bound_main"], 1225043);
  EXPECT_EQ(j["hrs_applicable"], true);
  EXPECT_EQ(j["bound_hrs"]["constant_unspecified"], true);
  EXPECT_EQ(j["winner"], "bound_main");
  EXPECT_EQ(j["conditions_ok"]["s_large"], true);
}

TEST(Reports, WitnessJson) {
  const verifier::Witness w{verifier::WitnessKind::triangle, {0, 1, 2}, {3, 4, 5}, {}, 0, "t"};
  EXPECT_EQ(witness_to_json(w).dump(), R"({"kind":"triangle","lines":[0,1,2],"points":[3,4,5],"detail":"t"})");
}

}  // namespace
}  // namespace qpack::io
