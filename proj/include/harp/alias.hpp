#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "harp/rng.hpp"

namespace harp {

// Walker/Vose alias table: O(n) build, O(1) draws from a fixed categorical
// distribution proportional to the given weights.
class AliasTable {
 public:
  AliasTable() = default;

  explicit AliasTable(std::span<const double> weights) {
    const std::size_t n = weights.size();
    if (n == 0) throw std::invalid_argument("alias: empty weight vector");
    prob_.assign(n, 1.0);
    alias_.assign(n, 0);

    double sum = 0.0;
    for (double w : weights) {
      if (w < 0.0) throw std::invalid_argument("alias: negative weight");
      sum += w;
    }
    if (sum <= 0.0) {
      // Degenerate input: fall back to uniform.
      for (std::size_t i = 0; i < n; ++i) alias_[i] = i;
      return;
    }

    std::vector<double> scaled(n);
    for (std::size_t i = 0; i < n; ++i) scaled[i] = weights[i] * static_cast<double>(n) / sum;

    std::vector<std::size_t> small, large;
    small.reserve(n);
    large.reserve(n);
    for (std::size_t i = n; i-- > 0;) {
      (scaled[i] < 1.0 ? small : large).push_back(i);
    }
    while (!small.empty() && !large.empty()) {
      std::size_t s = small.back();
      std::size_t l = large.back();
      small.pop_back();
      large.pop_back();
      prob_[s] = scaled[s];
      alias_[s] = l;
      scaled[l] += scaled[s] - 1.0;
      (scaled[l] < 1.0 ? small : large).push_back(l);
    }
    // Leftovers are 1 up to rounding.
    for (std::size_t s : small) prob_[s] = 1.0, alias_[s] = s;
    for (std::size_t l : large) prob_[l] = 1.0, alias_[l] = l;
  }

  std::size_t size() const { return prob_.size(); }

  std::size_t sample(Rng& rng) const {
    std::size_t i = static_cast<std::size_t>(rng.index(prob_.size()));
    return rng.real() < prob_[i] ? i : alias_[i];
  }

  // Probability of drawing i (exact from the table, for tests/diagnostics).
  double probability(std::size_t i) const {
    double p = prob_[i];
    for (std::size_t j = 0; j < prob_.size(); ++j) {
      if (j != i && alias_[j] == i) p += 1.0 - prob_[j];
    }
    return p / static_cast<double>(prob_.size());
  }

 private:
  std::vector<double> prob_;
  std::vector<std::size_t> alias_;
};

}  // namespace harp
