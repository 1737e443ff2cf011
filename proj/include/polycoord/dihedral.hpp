#pragma once

#include <map>
#include <utility>
#include <vector>

#include "polycoord/decomposition.hpp"

namespace polycoord {

/// Symmetry of the labelled n-cycle: a rotation i -> i + shift or a
/// reflection i -> shift - i, labels taken mod n in 1..n. There are exactly
/// 2n distinct elements.
struct DihedralElement {
  enum class Kind { rotation, reflection };

  Kind kind = Kind::rotation;
  int shift = 0;

  int apply(int label, int n) const {
    const int raw = kind == Kind::rotation ? label + shift : shift - label;
    const int rem = (raw % n + n) % n;
    return rem == 0 ? n : rem;
  }

  static DihedralElement identity() { return {Kind::rotation, 0}; }
  static DihedralElement rotation(int k) { return {Kind::rotation, k}; }
  static DihedralElement reflection(int k) { return {Kind::reflection, k}; }

  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;
};

inline std::vector<DihedralElement> dihedral_elements(int n) {
  std::vector<DihedralElement> out;
  out.reserve(static_cast<std::size_t>(2 * n));
  for (int k = 0; k < n; ++k) out.push_back(DihedralElement::rotation(k));
  for (int k = 0; k < n; ++k) out.push_back(DihedralElement::reflection(k));
  return out;
}

/// Image of a decomposition under one cycle symmetry: relabel every chord's
/// endpoints, then renormalize. The image is always a valid decomposition
/// with the same degree sequence.
inline ChordalDecomposition dihedral_apply(const ChordalDecomposition& d,
                                           const DihedralElement& g) {
  const int n = d.n();
  std::vector<Chord> image;
  image.reserve(d.chords().size());
  for (const Chord& c : d.chords()) image.emplace_back(g.apply(c.a(), n), g.apply(c.b(), n), n);
  return ChordalDecomposition::validated(n, std::move(image));
}

/// Distinct images of a decomposition under the full dihedral group, each
/// with the number of the 2n group elements that land on it. Multiplicities
/// sum to 2n; the distinct count divides 2n.
struct DecompositionOrbit {
  std::vector<std::pair<ChordalDecomposition, int>> images;  // sorted by decomposition

  std::size_t distinct_count() const { return images.size(); }

  int total_multiplicity() const {
    int total = 0;
    for (const auto& [image, count] : images) total += count;
    return total;
  }
};

inline DecompositionOrbit orbit_of(const ChordalDecomposition& d) {
  std::map<ChordalDecomposition, int> counts;
  for (const DihedralElement& g : dihedral_elements(d.n())) ++counts[dihedral_apply(d, g)];
  DecompositionOrbit orbit;
  orbit.images.assign(counts.begin(), counts.end());
  return orbit;
}

}  // namespace polycoord
