#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polycoord/decomposition.hpp"
#include "polycoord/polygon.hpp"

namespace polycoord {

/// How the recursion closes the triangle over a frame's base edge: each of
/// the two far sides is either a chord (the walk continues there) or a
/// polygon boundary edge (that branch ends in a leaf).
enum class ApexCase { inner, edge_left, edge_right, edge_both };

inline const char* to_string(ApexCase c) {
  switch (c) {
    case ApexCase::inner: return "inner";
    case ApexCase::edge_left: return "edge-left";
    case ApexCase::edge_right: return "edge-right";
    case ApexCase::edge_both: return "edge-both";
  }
  return "?";
}

/// One sub-polygon of the recursive walk: vertex labels in inherited order
/// (the first two form the base edge), the chords lying strictly inside it,
/// and the L/R path word that reached it.
struct SubPolygonFrame {
  std::vector<int> vertices;
  std::vector<Chord> chords;
  std::string path;

  bool terminal() const { return vertices.size() == 2; }
};

struct ApexChoice {
  int apex;
  ApexCase tag;
};

/// The unique vertex d closing the triangle over the frame's base edge:
/// both (w1, d) and (w2, d) must be chords of the frame or frame boundary
/// sides. Missing or ambiguous apexes indicate a broken decomposition and
/// are unreachable after validation.
inline ApexChoice select_apex(const SubPolygonFrame& frame) {
  const auto& w = frame.vertices;
  const std::size_t r = w.size();
  if (r < 3) throw error("internal: apex selection on a terminal frame");

  const auto is_chord = [&frame](int u, int v) {
    if (u > v) std::swap(u, v);
    for (const Chord& c : frame.chords)
      if (c.a() == u && c.b() == v) return true;
    return false;
  };

  std::size_t found = 0;
  bool have = false;
  ApexCase tag = ApexCase::edge_both;
  for (std::size_t k = 2; k < r; ++k) {
    const bool left_chord = is_chord(w[0], w[k]);
    const bool right_chord = is_chord(w[1], w[k]);
    const bool left_closed = left_chord || k == r - 1;  // (w1, wr) is a frame side
    const bool right_closed = right_chord || k == 2;    // (w2, w3) is a frame side
    if (!left_closed || !right_closed) continue;
    if (have) throw error("internal: ambiguous apex over the base edge");
    have = true;
    found = k;
    tag = left_chord ? (right_chord ? ApexCase::inner : ApexCase::edge_right)
                     : (right_chord ? ApexCase::edge_left : ApexCase::edge_both);
  }
  if (!have) throw error("internal: no apex over the base edge");
  return {w[found], tag};
}

struct ParsingNode {
  std::string path;            // word over {L, R}; "" is the root
  OrientedTriangle triangle;   // canonical counterclockwise (ascending labels)
  OrientedSegment base;        // orientation the recursion entered with
  ApexCase tag;
};

struct ParsingLeaf {
  std::string path;
  OrientedSegment edge;
};

/// Rooted binary derivation of a decomposition from base edge 1->2.
/// Internal nodes are the n-2 triangles, in preorder; leaves are the n
/// boundary edges (the initial base first). Node triangles partition the
/// polygon with disjoint interiors.
class ParsingTree {
 public:
  ParsingTree(const Polygon& poly, const ChordalDecomposition& d) {
    if (poly.size() != d.n())
      throw validation_error("decomposition is for n=" + std::to_string(d.n()) +
                             " but the polygon has n=" + std::to_string(poly.size()));
    const int n = poly.size();
    nodes_.reserve(static_cast<std::size_t>(n - 2));
    leaves_.reserve(static_cast<std::size_t>(n));
    leaves_.push_back({"", OrientedSegment(1, 2)});

    SubPolygonFrame root;
    root.vertices.resize(static_cast<std::size_t>(n));
    std::iota(root.vertices.begin(), root.vertices.end(), 1);
    root.chords = d.chords();
    expand(poly, root);
  }

  const std::vector<ParsingNode>& nodes() const { return nodes_; }
  const std::vector<ParsingLeaf>& leaves() const { return leaves_; }

  std::vector<OrientedTriangle> region_list() const {
    std::vector<OrientedTriangle> out;
    out.reserve(nodes_.size());
    for (const ParsingNode& node : nodes_) out.push_back(node.triangle);
    return out;
  }

 private:
  void expand(const Polygon& poly, const SubPolygonFrame& frame) {
    const auto [apex, tag] = select_apex(frame);
    const auto& w = frame.vertices;
    std::size_t k = 0;
    while (w[k] != apex) ++k;

    const OrientedTriangle region = OrientedTriangle(w[0], w[1], apex).canonical();
    if (triangle_area(region, poly).sign() <= 0)
      throw error("internal: selected region " + region.str() + " is not counterclockwise");
    nodes_.push_back({frame.path, region, OrientedSegment(w[0], w[1]), tag});

    std::vector<int> left_w{w[0]};
    left_w.insert(left_w.end(), w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
    std::vector<int> right_w{apex};
    right_w.insert(right_w.end(), w.begin() + 1, w.begin() + static_cast<std::ptrdiff_t>(k));

    std::vector<Chord> left_chords, right_chords;
    for (const Chord& c : frame.chords) {
      const auto matches = [&c](int u, int v) {
        if (u > v) std::swap(u, v);
        return c.a() == u && c.b() == v;
      };
      if (matches(w[0], apex) || matches(w[1], apex)) continue;  // consumed by the cut
      const auto within = [&c](const std::vector<int>& labels) {
        return std::find(labels.begin(), labels.end(), c.a()) != labels.end() &&
               std::find(labels.begin(), labels.end(), c.b()) != labels.end();
      };
      if (within(left_w))
        left_chords.push_back(c);
      else if (within(right_w))
        right_chords.push_back(c);
      else
        throw error("internal: chord " + c.str() + " straddles the cut");
    }

    if (left_w.size() == 2) leaves_.push_back({frame.path + "L", OrientedSegment(apex, w[0])});
    if (right_w.size() == 2) leaves_.push_back({frame.path + "R", OrientedSegment(w[1], apex)});
    if (left_w.size() > 2)
      expand(poly, {std::move(left_w), std::move(left_chords), frame.path + "L"});
    if (right_w.size() > 2)
      expand(poly, {std::move(right_w), std::move(right_chords), frame.path + "R"});
  }

  std::vector<ParsingNode> nodes_;
  std::vector<ParsingLeaf> leaves_;
};

inline ParsingTree build_parsing_tree(const Polygon& poly, const ChordalDecomposition& d) {
  return ParsingTree(poly, d);
}

/// The n-2 triangular regions of the decomposition, in parsing-tree
/// preorder, each counterclockwise.
inline std::vector<OrientedTriangle> regions(const Polygon& poly, const ChordalDecomposition& d) {
  return ParsingTree(poly, d).region_list();
}

/// Per-region sign constraints against the decomposition's chords, in
/// canonical chord order: bit '1' when the region lies on the closed left
/// (non-negative) side of the chord, '0' when on the closed right. Region
/// codes are pairwise distinct.
struct SignCodeTable {
  std::vector<Chord> chords;
  std::vector<std::string> codes;  // aligned with the preorder region list
};

inline SignCodeTable sign_code_table(const Polygon& poly, const ChordalDecomposition& d,
                                     std::span<const OrientedTriangle> region_list) {
  SignCodeTable table;
  table.chords = d.chords();
  table.codes.reserve(region_list.size());
  for (const OrientedTriangle& tri : region_list) {
    std::string code;
    code.reserve(table.chords.size());
    for (const Chord& chord : table.chords) {
      const OrientedSegment seg(chord.a(), chord.b());
      bool nonneg = true, nonpos = true;
      for (int label : tri.labels) {
        const int s = side_of(poly.vertex(label), seg, poly);
        if (s > 0) nonpos = false;
        if (s < 0) nonneg = false;
      }
      if (!nonneg && !nonpos)
        throw error("internal: region " + tri.str() + " straddles chord " + chord.str());
      code += nonneg ? '1' : '0';
    }
    table.codes.push_back(std::move(code));
  }
  auto sorted = table.codes;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw error("internal: region codes are not distinct");
  return table;
}

inline SignCodeTable sign_code_table(const Polygon& poly, const ChordalDecomposition& d) {
  const auto region_list = regions(poly, d);
  return sign_code_table(poly, d, region_list);
}

/// Signs of x against every chord, in the table's chord order.
inline std::vector<int> chord_signs(const Point2& x, const Polygon& poly,
                                    std::span<const Chord> chords) {
  std::vector<int> signs;
  signs.reserve(chords.size());
  for (const Chord& chord : chords)
    signs.push_back(side_of(x, OrientedSegment(chord.a(), chord.b()), poly));
  return signs;
}

/// Indices (into the preorder region list) of every region whose closed
/// sign constraints admit x. A zero sign matches both constraints, so points
/// on a chord report the regions on both sides and vertices report every
/// incident region. Throws outside_polygon_error when x is not in the
/// polygon.
inline std::vector<std::size_t> locate(const Point2& x, const Polygon& poly,
                                       const SignCodeTable& table) {
  require_inside(x, poly);
  const std::vector<int> signs = chord_signs(x, poly, table.chords);
  std::vector<std::size_t> hits;
  for (std::size_t r = 0; r < table.codes.size(); ++r) {
    bool compatible = true;
    for (std::size_t i = 0; i < signs.size(); ++i) {
      if (signs[i] == 0) continue;
      if ((signs[i] > 0) != (table.codes[r][i] == '1')) {
        compatible = false;
        break;
      }
    }
    if (compatible) hits.push_back(r);
  }
  if (hits.empty()) throw error("internal: no region admits an inside point");
  return hits;
}

inline std::vector<std::size_t> locate(const Point2& x, const Polygon& poly,
                                       const ChordalDecomposition& d) {
  return locate(x, poly, sign_code_table(poly, d));
}

}  // namespace polycoord
