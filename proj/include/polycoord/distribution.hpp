#pragma once

#include <algorithm>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "polycoord/errors.hpp"
#include "polycoord/weights.hpp"

namespace polycoord {

/// Finitely supported probability distribution over labelled sites.
/// Weights sum to exactly 1; labels are distinct; zero-weight entries are
/// pruned unless explicitly kept.
class Distribution {
 public:
  struct Entry {
    std::string label;
    Weight weight;
  };

  static Distribution make(std::vector<Entry> entries, bool keep_zeros = false) {
    std::unordered_set<std::string> seen;
    Rational sum(0);
    for (const Entry& e : entries) {
      if (!seen.insert(e.label).second)
        throw validation_error("duplicate distribution label: " + e.label);
      sum += e.weight.value();
    }
    if (sum != 1)
      throw validation_error("distribution weights sum to " + sum.str() + ", expected 1");
    if (!keep_zeros)
      std::erase_if(entries, [](const Entry& e) { return e.weight.value().sign() == 0; });
    return Distribution(std::move(entries));
  }

  const std::vector<Entry>& entries() const { return entries_; }

 private:
  explicit Distribution(std::vector<Entry> entries) : entries_(std::move(entries)) {}

  std::vector<Entry> entries_;
};

/// Flattens the nested means x0 x1 ... xr under operators q1 ... qr into a
/// single distribution: site x_k receives q_k * q'_{k+1} * ... * q'_r, with
/// q_0 = 1. The weights telescope to an exact sum of 1.
inline Distribution distribution_from_operators(const std::vector<std::string>& labels,
                                                const std::vector<OpenWeight>& operators) {
  if (labels.empty()) throw validation_error("distribution needs at least one label");
  if (operators.size() + 1 != labels.size())
    throw validation_error("expected " + std::to_string(labels.size() - 1) + " operators for " +
                           std::to_string(labels.size()) + " labels, got " +
                           std::to_string(operators.size()));

  const std::size_t r = operators.size();
  std::vector<Rational> weights(labels.size());
  Rational suffix(1);  // q'_{k+1} ... q'_r, grown right to left
  for (std::size_t k = r + 1; k-- > 0;) {
    const Rational qk = (k == 0) ? Rational(1) : operators[k - 1].value();
    weights[k] = qk * suffix;
    if (k > 0) suffix *= Rational(1) - qk;
  }

  std::vector<Distribution::Entry> entries;
  entries.reserve(labels.size());
  for (std::size_t k = 0; k < labels.size(); ++k)
    entries.push_back({labels[k], Weight(weights[k])});
  return Distribution::make(std::move(entries));
}

}  // namespace polycoord
