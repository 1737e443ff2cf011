#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "polycoord/locator.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using polycoord::ApexCase;
using polycoord::build_parsing_tree;
using polycoord::Chord;
using polycoord::ChordalDecomposition;
using polycoord::chord_signs;
using polycoord::locate;
using polycoord::OrientedSegment;
using polycoord::OrientedTriangle;
using polycoord::outside_polygon_error;
using polycoord::ParsingTree;
using polycoord::Point2;
using polycoord::Polygon;
using polycoord::regions;
using polycoord::select_apex;
using polycoord::sign_code_table;
using polycoord::SignCodeTable;
using polycoord::SubPolygonFrame;
using polycoord::validation_error;
using testsupport::hexagon;
using testsupport::hex_delta1;
using testsupport::pt;

TEST_CASE("apex selection") {
  SubPolygonFrame root{{1, 2, 3, 4, 5, 6},
                       {Chord(1, 3, 6), Chord(1, 5, 6), Chord(3, 5, 6)},
                       ""};
  auto choice = select_apex(root);
  CHECK(choice.apex == 3);
  CHECK(choice.tag == ApexCase::edge_right);

  SubPolygonFrame left{{1, 3, 4, 5, 6}, {Chord(1, 5, 6), Chord(3, 5, 6)}, "L"};
  choice = select_apex(left);
  CHECK(choice.apex == 5);
  CHECK(choice.tag == ApexCase::inner);

  SubPolygonFrame small{{5, 3, 4}, {}, "LR"};
  choice = select_apex(small);
  CHECK(choice.apex == 4);
  CHECK(choice.tag == ApexCase::edge_both);

  SubPolygonFrame terminal{{5, 3}, {}, "x"};
  CHECK_THROWS_AS(select_apex(terminal), polycoord::error);
}

TEST_CASE("hexagon parsing tree") {
  const Polygon hex = hexagon();
  const ParsingTree tree = build_parsing_tree(hex, hex_delta1());

  const auto& nodes = tree.nodes();
  REQUIRE(nodes.size() == 4);
  CHECK(nodes[0].path == "");
  CHECK(nodes[0].triangle == OrientedTriangle(1, 2, 3));
  CHECK(nodes[0].base == OrientedSegment(1, 2));
  CHECK(nodes[0].tag == ApexCase::edge_right);

  CHECK(nodes[1].path == "L");
  CHECK(nodes[1].triangle == OrientedTriangle(1, 3, 5));
  CHECK(nodes[1].base == OrientedSegment(1, 3));
  CHECK(nodes[1].tag == ApexCase::inner);

  CHECK(nodes[2].path == "LL");
  CHECK(nodes[2].triangle == OrientedTriangle(1, 5, 6));
  CHECK(nodes[2].base == OrientedSegment(1, 5));
  CHECK(nodes[2].tag == ApexCase::edge_both);

  CHECK(nodes[3].path == "LR");
  CHECK(nodes[3].triangle == OrientedTriangle(3, 4, 5));
  CHECK(nodes[3].base == OrientedSegment(5, 3));
  CHECK(nodes[3].tag == ApexCase::edge_both);

  const auto& leaves = tree.leaves();
  REQUIRE(leaves.size() == 6);
  CHECK(leaves[0].path == "");
  CHECK(leaves[0].edge == OrientedSegment(1, 2));
  CHECK(leaves[1].path == "R");
  CHECK(leaves[1].edge == OrientedSegment(2, 3));
  CHECK(leaves[2].path == "LLL");
  CHECK(leaves[2].edge == OrientedSegment(6, 1));
  CHECK(leaves[3].path == "LLR");
  CHECK(leaves[3].edge == OrientedSegment(5, 6));
  CHECK(leaves[4].path == "LRL");
  CHECK(leaves[4].edge == OrientedSegment(4, 5));
  CHECK(leaves[5].path == "LRR");
  CHECK(leaves[5].edge == OrientedSegment(3, 4));
}

TEST_CASE("triangle and quadrilateral parsing trees") {
  testsupport::Rng rng(3);
  const Polygon triangle = testsupport::random_convex_polygon(rng, 3);
  const ParsingTree tiny = build_parsing_tree(triangle, polycoord::validate_decomposition(3, {}));
  REQUIRE(tiny.nodes().size() == 1);
  CHECK(tiny.nodes()[0].triangle == OrientedTriangle(1, 2, 3));
  CHECK(tiny.nodes()[0].tag == ApexCase::edge_both);
  CHECK(tiny.leaves().size() == 3);

  const Polygon quad = testsupport::quadrilateral();
  const ParsingTree two = build_parsing_tree(quad, testsupport::quad_d13());
  REQUIRE(two.nodes().size() == 2);
  CHECK(two.nodes()[0].triangle == OrientedTriangle(1, 2, 3));
  CHECK(two.nodes()[0].tag == ApexCase::edge_right);
  CHECK(two.nodes()[1].path == "L");
  CHECK(two.nodes()[1].triangle == OrientedTriangle(1, 3, 4));
  CHECK(two.nodes()[1].base == OrientedSegment(1, 3));
  CHECK(two.nodes()[1].tag == ApexCase::edge_both);
}

TEST_CASE("heptagon walk with a boundary edge on the left") {
  // chords {13,15,35,57}: the frame over base 1-5 closes with apex 7, whose
  // left side is the boundary edge 7-1
  testsupport::Rng rng(5);
  const Polygon poly = testsupport::random_convex_polygon(rng, 7);
  const auto d = polycoord::validate_decomposition(
      7, {Chord(1, 3, 7), Chord(1, 5, 7), Chord(3, 5, 7), Chord(5, 7, 7)});
  const ParsingTree tree = build_parsing_tree(poly, d);

  const auto& nodes = tree.nodes();
  REQUIRE(nodes.size() == 5);
  CHECK(nodes[0].triangle == OrientedTriangle(1, 2, 3));
  CHECK(nodes[0].tag == ApexCase::edge_right);
  CHECK(nodes[1].path == "L");
  CHECK(nodes[1].triangle == OrientedTriangle(1, 3, 5));
  CHECK(nodes[1].tag == ApexCase::inner);
  CHECK(nodes[2].path == "LL");
  CHECK(nodes[2].triangle == OrientedTriangle(1, 5, 7));
  CHECK(nodes[2].base == OrientedSegment(1, 5));
  CHECK(nodes[2].tag == ApexCase::edge_left);
  CHECK(nodes[3].path == "LLR");
  CHECK(nodes[3].triangle == OrientedTriangle(5, 6, 7));
  CHECK(nodes[3].base == OrientedSegment(7, 5));
  CHECK(nodes[3].tag == ApexCase::edge_both);
  CHECK(nodes[4].path == "LR");
  CHECK(nodes[4].triangle == OrientedTriangle(3, 4, 5));

  const auto& leaves = tree.leaves();
  REQUIRE(leaves.size() == 7);
  CHECK(leaves[1].path == "R");
  CHECK(leaves[1].edge == OrientedSegment(2, 3));
  CHECK(leaves[2].path == "LLL");
  CHECK(leaves[2].edge == OrientedSegment(7, 1));
  CHECK(leaves[3].path == "LLRL");
  CHECK(leaves[3].edge == OrientedSegment(6, 7));
  CHECK(leaves[4].path == "LLRR");
  CHECK(leaves[4].edge == OrientedSegment(5, 6));
}

TEST_CASE("regions partition the polygon") {
  const Polygon hex = hexagon();
  const auto hex_regions = regions(hex, hex_delta1());
  REQUIRE(hex_regions.size() == 4);
  CHECK(hex_regions[0] == OrientedTriangle(1, 2, 3));
  CHECK(hex_regions[1] == OrientedTriangle(1, 3, 5));
  CHECK(hex_regions[2] == OrientedTriangle(1, 5, 6));
  CHECK(hex_regions[3] == OrientedTriangle(3, 4, 5));

  const auto quad_regions = regions(testsupport::quadrilateral(), testsupport::quad_d13());
  REQUIRE(quad_regions.size() == 2);
  CHECK(quad_regions[0] == OrientedTriangle(1, 2, 3));
  CHECK(quad_regions[1] == OrientedTriangle(1, 3, 4));

  // exact area bookkeeping over random polygons and decompositions
  testsupport::Rng rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 4 + trial % 5;
    const Polygon poly = testsupport::random_convex_polygon(rng, n);
    const ChordalDecomposition d = testsupport::random_decomposition(n, rng);
    polycoord::Rational total(0);
    for (const auto& tri : regions(poly, d)) {
      const auto area = polycoord::triangle_area(tri, poly);
      CHECK(area.sign() == 1);
      total += area;
    }
    CHECK(total == polycoord::polygon_area(poly));
  }
}

TEST_CASE("node and leaf counts for every decomposition up to n=10") {
  testsupport::Rng rng(53);
  for (int n = 3; n <= 10; ++n) {
    const Polygon poly = testsupport::random_convex_polygon(rng, n);
    for (const auto& d : polycoord::enumerate_decompositions(n)) {
      const ParsingTree tree = build_parsing_tree(poly, d);
      CHECK(tree.nodes().size() == static_cast<std::size_t>(n - 2));
      CHECK(tree.leaves().size() == static_cast<std::size_t>(n));
      // the leaves are exactly the n boundary edges, each once, oriented i -> i+1
      std::set<std::pair<int, int>> edges;
      for (const auto& leaf : tree.leaves()) {
        CHECK(poly.next_label(leaf.edge.from) == leaf.edge.to);
        edges.insert({leaf.edge.from, leaf.edge.to});
      }
      CHECK(edges.size() == static_cast<std::size_t>(n));
    }
  }
}

TEST_CASE("hexagon sign codes") {
  const Polygon hex = hexagon();
  const SignCodeTable table = sign_code_table(hex, hex_delta1());
  REQUIRE(table.chords.size() == 3);
  CHECK(table.chords[0] == Chord(1, 3, 6));
  CHECK(table.chords[1] == Chord(1, 5, 6));
  CHECK(table.chords[2] == Chord(3, 5, 6));
  CHECK(table.codes == std::vector<std::string>{"001", "101", "111", "100"});
}

TEST_CASE("quadrilateral sign codes") {
  const SignCodeTable table =
      sign_code_table(testsupport::quadrilateral(), testsupport::quad_d13());
  CHECK(table.codes == std::vector<std::string>{"0", "1"});
}

TEST_CASE("sign codes are distinct and satisfied by region vertices") {
  const Polygon hex = hexagon();
  for (const auto& d : polycoord::enumerate_decompositions(6)) {
    const auto region_list = regions(hex, d);
    const SignCodeTable table = sign_code_table(hex, d, region_list);

    std::set<std::string> codes(table.codes.begin(), table.codes.end());
    CHECK(codes.size() == table.codes.size());

    for (std::size_t r = 0; r < region_list.size(); ++r)
      for (int label : region_list[r].labels) {
        const auto signs = chord_signs(hex.vertex(label), hex, table.chords);
        for (std::size_t i = 0; i < signs.size(); ++i) {
          if (signs[i] == 0) continue;
          CHECK((signs[i] > 0) == (table.codes[r][i] == '1'));
        }
      }
  }
}

TEST_CASE("locating the three sample points") {
  const Polygon hex = hexagon();
  const auto table = sign_code_table(hex, hex_delta1());

  CHECK(locate(testsupport::hex_a(), hex, table) == std::vector<std::size_t>{0});
  CHECK(locate(testsupport::hex_b(), hex, table) == std::vector<std::size_t>{0, 1});
  CHECK(locate(testsupport::hex_c(), hex, table) == std::vector<std::size_t>{1});

  CHECK(chord_signs(testsupport::hex_a(), hex, table.chords) == std::vector<int>{-1, -1, 1});
  CHECK(chord_signs(testsupport::hex_b(), hex, table.chords) == std::vector<int>{0, -1, 1});
  CHECK(chord_signs(testsupport::hex_c(), hex, table.chords) == std::vector<int>{1, -1, 1});

  CHECK_THROWS_AS(locate(pt(5, 5), hex, table), outside_polygon_error);
}

TEST_CASE("locate agrees with direct containment on random points") {
  const Polygon hex = hexagon();
  testsupport::Rng rng(61);
  for (const auto& d : polycoord::enumerate_decompositions(6)) {
    const auto region_list = regions(hex, d);
    const auto table = sign_code_table(hex, d, region_list);
    for (int i = 0; i < 500; ++i) {
      const Point2 x = testsupport::random_point_in(hex, rng);
      const auto hits = locate(x, hex, table);
      CHECK(hits == testsupport::locate_by_containment(x, hex, region_list));
      CHECK(!hits.empty());
    }
  }
}

TEST_CASE("membership multiplicity by point class") {
  const Polygon hex = hexagon();
  const ChordalDecomposition d = hex_delta1();
  const auto region_list = regions(hex, d);
  const auto table = sign_code_table(hex, d, region_list);
  testsupport::Rng rng(67);

  for (int i = 0; i < 40; ++i) {
    // strictly inside a region: unique hit
    const Point2 inside = testsupport::random_point_in(hex, rng, true);
    const auto hits = locate(inside, hex, table);
    const auto direct = testsupport::locate_by_containment(inside, hex, region_list);
    CHECK(hits == direct);
    if (chord_signs(inside, hex, table.chords) == std::vector<int>{1, 1, 1})
      CHECK(hits.size() == 1);
  }

  for (const Chord& chord : d.chords()) {
    // interior points of a chord belong to exactly the two incident regions
    for (int i = 0; i < 20; ++i) {
      const Point2 x = testsupport::random_point_between(hex, chord.a(), chord.b(), rng);
      const auto hits = locate(x, hex, table);
      CHECK(hits.size() == 2);
      for (std::size_t r : hits) {
        CHECK(region_list[r].contains_label(chord.a()));
        CHECK(region_list[r].contains_label(chord.b()));
      }
    }
    // and membership in both incident regions happens exactly where the
    // chord's areal function vanishes
    std::vector<std::size_t> incident;
    for (std::size_t r = 0; r < region_list.size(); ++r)
      if (region_list[r].contains_label(chord.a()) && region_list[r].contains_label(chord.b()))
        incident.push_back(r);
    REQUIRE(incident.size() == 2);
    for (int i = 0; i < 60; ++i) {
      const Point2 x = testsupport::random_point_in(hex, rng);
      const auto hits = locate(x, hex, table);
      const bool in_both =
          std::find(hits.begin(), hits.end(), incident[0]) != hits.end() &&
          std::find(hits.begin(), hits.end(), incident[1]) != hits.end();
      const bool on_chord =
          polycoord::areal_value(x, polycoord::OrientedSegment(chord.a(), chord.b()), hex) == 0;
      CHECK(in_both == on_chord);
    }
  }

  // vertices land in exactly the regions that use them
  for (int v = 1; v <= 6; ++v) {
    const auto hits = locate(hex.vertex(v), hex, table);
    std::vector<std::size_t> expected;
    for (std::size_t r = 0; r < region_list.size(); ++r)
      if (region_list[r].contains_label(v)) expected.push_back(r);
    CHECK(hits == expected);
  }

  // boundary-edge interiors belong to one region
  for (int e = 1; e <= 6; ++e) {
    const Point2 x = testsupport::random_point_between(hex, e, hex.next_label(e), rng);
    CHECK(locate(x, hex, table).size() == 1);
  }
}

TEST_CASE("size mismatch between polygon and decomposition is rejected") {
  CHECK_THROWS_AS(build_parsing_tree(testsupport::quadrilateral(), hex_delta1()),
                  validation_error);
}
