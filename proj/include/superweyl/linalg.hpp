#pragma once

// Exact rank of sparse rational vectors by incremental elimination.

#include <superweyl/linear_combination.hpp>

#include <map>
#include <vector>

namespace superweyl {

/// Row-echelon accumulator. Every stored row has a distinct leading key with
/// coefficient 1, so reducing a new vector always advances its leading key.
template <class Key, class Compare = std::less<Key>>
class EchelonBasis {
 public:
  using Vector = LinearCombination<Key, Compare>;

  /// Reduces v against the stored rows; returns the remainder.
  Vector reduce(Vector v) const {
    while (!v.is_zero()) {
      const auto& [lead, c] = *v.begin();
      auto it = pivots_.find(lead);
      if (it == pivots_.end()) return v;
      const Rational scale = -c;
      v.add(it->second, scale);
    }
    return v;
  }

  /// Adds v to the span; returns true if the rank grew.
  bool insert(Vector v) {
    v = reduce(std::move(v));
    if (v.is_zero()) return false;
    const auto lead = v.begin()->first;
    const Rational inv = 1 / Rational(v.begin()->second);
    v *= inv;
    pivots_.emplace(lead, std::move(v));
    return true;
  }

  bool contains(const Vector& v) const { return reduce(v).is_zero(); }
  std::size_t rank() const { return pivots_.size(); }

 private:
  std::map<Key, Vector, Compare> pivots_;
};

template <class Key, class Compare>
std::size_t rank(const std::vector<LinearCombination<Key, Compare>>& vectors) {
  EchelonBasis<Key, Compare> basis;
  for (const auto& v : vectors) basis.insert(v);
  return basis.rank();
}

}  // namespace superweyl
