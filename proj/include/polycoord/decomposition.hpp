#pragma once

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polycoord/errors.hpp"

namespace polycoord {

/// Chord of the boundary cycle C_n: a segment between two vertices that are
/// not adjacent on the cycle. Endpoints are stored with a < b; {1, n} is a
/// boundary edge, never a chord.
class Chord {
 public:
  Chord(int a, int b, int n) {
    if (a > b) std::swap(a, b);
    if (a < 1 || b > n)
      throw validation_error("chord endpoint out of range 1.." + std::to_string(n));
    if (a == b) throw validation_error("chord endpoints must differ");
    if (b - a < 2 || (a == 1 && b == n))
      throw validation_error("{" + std::to_string(a) + "," + std::to_string(b) +
                             "} joins adjacent vertices of the " + std::to_string(n) +
                             "-cycle: not a chord");
    a_ = a;
    b_ = b;
  }

  int a() const { return a_; }
  int b() const { return b_; }
  bool has_endpoint(int v) const { return v == a_ || v == b_; }

  std::string str() const { return "{" + std::to_string(a_) + "," + std::to_string(b_) + "}"; }

  friend auto operator<=>(const Chord&, const Chord&) = default;

 private:
  int a_;
  int b_;
};

/// True when the endpoint pairs strictly interleave around the cycle.
/// Chords sharing an endpoint do not cross.
inline bool chords_cross(const Chord& c1, const Chord& c2) {
  if (c2.has_endpoint(c1.a()) || c2.has_endpoint(c1.b())) return false;
  const bool a_inside = c1.a() < c2.a() && c2.a() < c1.b();
  const bool b_inside = c1.a() < c2.b() && c2.b() < c1.b();
  return a_inside != b_inside;
}

/// A set of n-3 pairwise non-crossing chords cutting the n-gon into n-2
/// triangles. Chords are kept in sorted canonical order.
class ChordalDecomposition {
 public:
  static ChordalDecomposition validated(int n, std::vector<Chord> chords) {
    if (n < 3) throw validation_error("polygon size must be at least 3");
    for (const Chord& c : chords)
      if (c.b() > n)
        throw validation_error("chord " + c.str() + " does not fit an n=" + std::to_string(n) +
                               " polygon");
    std::sort(chords.begin(), chords.end());
    if (const auto dup = std::adjacent_find(chords.begin(), chords.end()); dup != chords.end())
      throw validation_error("duplicate chord " + dup->str());
    if (static_cast<int>(chords.size()) != n - 3)
      throw validation_error("a decomposition of an n=" + std::to_string(n) +
                             " polygon needs exactly " + std::to_string(n - 3) + " chords, got " +
                             std::to_string(chords.size()));
    for (std::size_t i = 0; i < chords.size(); ++i)
      for (std::size_t j = i + 1; j < chords.size(); ++j)
        if (chords_cross(chords[i], chords[j]))
          throw validation_error("chords " + chords[i].str() + " and " + chords[j].str() +
                                 " cross");
    return ChordalDecomposition(n, std::move(chords));
  }

  int n() const { return n_; }
  const std::vector<Chord>& chords() const { return chords_; }

  bool has_chord(int a, int b) const {
    if (a > b) std::swap(a, b);
    for (const Chord& c : chords_)
      if (c.a() == a && c.b() == b) return true;
    return false;
  }

  std::string str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < chords_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(chords_[i].a()) + std::to_string(chords_[i].b());
    }
    return out + "}";
  }

  friend auto operator<=>(const ChordalDecomposition&, const ChordalDecomposition&) = default;

 private:
  ChordalDecomposition(int n, std::vector<Chord> chords) : n_(n), chords_(std::move(chords)) {}

  int n_;
  std::vector<Chord> chords_;
};

inline ChordalDecomposition validate_decomposition(int n, std::vector<Chord> chords) {
  return ChordalDecomposition::validated(n, std::move(chords));
}

/// Every chordal decomposition of the n-gon, each exactly once, ordered
/// lexicographically by sorted chord list. The count is the Catalan number
/// C_{n-2}. Generation recurses on the apex of the triangle over the base
/// edge {1,2}: each apex choice splits the polygon into two cyclic chains.
inline std::vector<ChordalDecomposition> enumerate_decompositions(int n, int cap = 14) {
  if (n < 3 || n > cap)
    throw validation_error("polygon size out of range: need 3 <= n <= " + std::to_string(cap) +
                           ", got " + std::to_string(n));

  const auto adjacent_on_cycle = [n](int u, int v) {
    const int d = std::abs(u - v);
    return d == 1 || d == n - 1;
  };

  // Chains are cyclic runs u, u+1, ..., v of original labels; the pair (u,v)
  // is the chain's base side.
  const auto chords_for = [&](int u, int v, const auto& self) -> std::vector<std::vector<Chord>> {
    const int len = ((v - u) % n + n) % n;  // edges along the arc
    if (len == 1) return {{}};
    std::vector<std::vector<Chord>> out;
    for (int step = 1; step < len; ++step) {
      const int m = (u - 1 + step) % n + 1;
      const auto lefts = self(u, m, self);
      const auto rights = self(m, v, self);
      std::vector<Chord> extra;
      if (!adjacent_on_cycle(u, m)) extra.emplace_back(u, m, n);
      if (!adjacent_on_cycle(m, v)) extra.emplace_back(m, v, n);
      for (const auto& l : lefts)
        for (const auto& r : rights) {
          std::vector<Chord> set = l;
          set.insert(set.end(), r.begin(), r.end());
          set.insert(set.end(), extra.begin(), extra.end());
          out.push_back(std::move(set));
        }
    }
    return out;
  };

  std::vector<ChordalDecomposition> result;
  for (auto& set : chords_for(2, 1, chords_for))
    result.push_back(ChordalDecomposition::validated(n, std::move(set)));
  std::sort(result.begin(), result.end());
  return result;
}

/// Multiset of the nonzero vertex degrees of the chord graph, stored
/// non-increasing. The label form lists ascending degrees with exponents,
/// e.g. [3,1,1,1] -> "1^3 3".
class DegreeSequence {
 public:
  explicit DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
    for (int d : degrees_)
      if (d < 1) throw validation_error("degree sequence entries must be positive");
    std::sort(degrees_.rbegin(), degrees_.rend());
  }

  const std::vector<int>& degrees() const { return degrees_; }

  std::string label() const {
    std::string out;
    std::size_t i = degrees_.size();
    while (i > 0) {  // walk ascending: the vector is stored descending
      std::size_t j = i;
      while (j > 0 && degrees_[j - 1] == degrees_[i - 1]) --j;
      const std::size_t count = i - j;
      if (!out.empty()) out += " ";
      out += std::to_string(degrees_[i - 1]);
      if (count > 1) out += "^" + std::to_string(count);
      i = j;
    }
    return out;
  }

  static DegreeSequence parse_label(const std::string& text) {
    std::vector<int> degrees;
    std::size_t pos = 0;
    const auto read_int = [&]() -> int {
      const std::size_t start = pos;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
      if (pos == start) throw parse_error("bad degree sequence label: '" + text + "'");
      return std::stoi(text.substr(start, pos - start));
    };
    while (pos < text.size()) {
      if (text[pos] == ' ') {
        ++pos;
        continue;
      }
      const int degree = read_int();
      int count = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        count = read_int();
      }
      if (degree < 1 || count < 1)
        throw parse_error("bad degree sequence label: '" + text + "'");
      degrees.insert(degrees.end(), static_cast<std::size_t>(count), degree);
    }
    return DegreeSequence(std::move(degrees));
  }

  friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<int> degrees_;
};

inline DegreeSequence degree_sequence(const ChordalDecomposition& d) {
  std::map<int, int> degree;
  for (const Chord& c : d.chords()) {
    ++degree[c.a()];
    ++degree[c.b()];
  }
  std::vector<int> degrees;
  degrees.reserve(degree.size());
  for (const auto& [vertex, count] : degree) degrees.push_back(count);
  return DegreeSequence(std::move(degrees));
}

}  // namespace polycoord
