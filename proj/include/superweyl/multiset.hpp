#pragma once

// Multiplicity functions on the fixed basis of the coefficient algebra, and
// the enumerations the recursions and lemma checks sum over.

#include <superweyl/rational.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace superweyl {

/// Index of an element of the fixed basis of A. Index 0 is always the unit.
struct BasisId {
  std::uint32_t index = 0;
  friend auto operator<=>(const BasisId&, const BasisId&) = default;
};

inline constexpr BasisId unit_basis{0};

using Tuple = std::vector<BasisId>;

class MultisetError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class Multiset {
 public:
  using container_type = std::map<BasisId, unsigned>;

  Multiset() = default;

  /// count * chi_b
  static Multiset single(BasisId b, unsigned count = 1) {
    Multiset m;
    m.add(b, count);
    return m;
  }

  void add(BasisId b, unsigned count = 1) {
    if (count == 0) return;
    mult_[b] += count;
    size_ += count;
  }

  unsigned operator[](BasisId b) const {
    auto it = mult_.find(b);
    return it == mult_.end() ? 0u : it->second;
  }

  unsigned size() const { return size_; }
  bool empty() const { return size_ == 0; }
  const container_type& entries() const { return mult_; }
  auto begin() const { return mult_.begin(); }
  auto end() const { return mult_.end(); }

  bool leq(const Multiset& other) const {
    for (const auto& [b, n] : mult_)
      if (other[b] < n) return false;
    return true;
  }

  /// this - psi; requires psi <= this.
  Multiset minus(const Multiset& psi) const {
    if (!psi.leq(*this)) throw MultisetError("multiset subtraction requires psi <= chi");
    Multiset out;
    for (const auto& [b, n] : mult_) out.add(b, n - psi[b]);
    return out;
  }

  Multiset& operator+=(const Multiset& rhs) {
    for (const auto& [b, n] : rhs.mult_) add(b, n);
    return *this;
  }
  friend Multiset operator+(Multiset a, const Multiset& b) { return a += b; }

  friend bool operator==(const Multiset& a, const Multiset& b) { return a.mult_ == b.mult_; }
  friend auto operator<=>(const Multiset& a, const Multiset& b) { return a.mult_ <=> b.mult_; }

 private:
  container_type mult_;
  unsigned size_ = 0;
};

inline bool ms_leq(const Multiset& psi, const Multiset& chi) { return psi.leq(chi); }
inline Multiset ms_sub(const Multiset& chi, const Multiset& psi) { return chi.minus(psi); }

/// |psi|! / prod psi(a)!
inline Integer multinomial(const Multiset& psi) {
  Integer out = factorial(psi.size());
  for (const auto& [b, n] : psi) out /= factorial(n);
  return out;
}

namespace detail {

inline void sub_multisets_rec(const std::vector<std::pair<BasisId, unsigned>>& support,
                              std::size_t pos, unsigned remaining, Multiset& current,
                              std::vector<Multiset>& out) {
  if (pos == support.size()) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  const auto [b, cap] = support[pos];
  for (unsigned take = 0; take <= cap && take <= remaining; ++take) {
    Multiset next = current;
    next.add(b, take);
    sub_multisets_rec(support, pos + 1, remaining - take, next, out);
  }
}

}  // namespace detail

/// All psi <= chi with |psi| = k, in ascending multiset order.
inline std::vector<Multiset> enumerate_sub(const Multiset& chi, unsigned k) {
  std::vector<Multiset> out;
  if (k > chi.size()) return out;
  std::vector<std::pair<BasisId, unsigned>> support(chi.begin(), chi.end());
  Multiset current;
  detail::sub_multisets_rec(support, 0, k, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

/// All psi <= chi, ascending.
inline std::vector<Multiset> all_sub_multisets(const Multiset& chi) {
  std::vector<Multiset> out;
  for (unsigned k = 0; k <= chi.size(); ++k) {
    auto part = enumerate_sub(chi, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Ordered k-part splits psi(1) + ... + psi(k) = chi, each exactly once.
inline std::vector<std::vector<Multiset>> compositions(const Multiset& chi, unsigned k) {
  std::vector<std::vector<Multiset>> out;
  if (k == 0) {
    if (chi.empty()) out.emplace_back();
    return out;
  }
  if (k == 1) {
    out.push_back({chi});
    return out;
  }
  for (const auto& head : all_sub_multisets(chi)) {
    for (auto& rest : compositions(chi.minus(head), k - 1)) {
      std::vector<Multiset> split;
      split.reserve(k);
      split.push_back(head);
      split.insert(split.end(), rest.begin(), rest.end());
      out.push_back(std::move(split));
    }
  }
  return out;
}

/// Every multiset of total size `size` over the basis window {0, ..., window-1}.
inline std::vector<Multiset> multisets_of_size(unsigned size, std::uint32_t window) {
  if (window == 0) return size == 0 ? std::vector<Multiset>{Multiset{}} : std::vector<Multiset>{};
  Multiset full;
  for (std::uint32_t i = 0; i < window; ++i) full.add(BasisId{i}, size);
  return enumerate_sub(full, size);
}

/// Every tuple of length n over the basis window, lexicographic.
inline std::vector<Tuple> tuples_of_length(unsigned n, std::uint32_t window) {
  std::vector<Tuple> out{Tuple{}};
  for (unsigned step = 0; step < n; ++step) {
    std::vector<Tuple> next;
    for (const auto& t : out)
      for (std::uint32_t i = 0; i < window; ++i) {
        Tuple e = t;
        e.push_back(BasisId{i});
        next.push_back(std::move(e));
      }
    out = std::move(next);
  }
  return out;
}

/// Strictly increasing tuples of length n over the window.
inline std::vector<Tuple> increasing_tuples(unsigned n, std::uint32_t window) {
  std::vector<Tuple> out;
  Tuple current;
  auto rec = [&](auto&& self, std::uint32_t start) -> void {
    if (current.size() == n) {
      out.push_back(current);
      return;
    }
    for (std::uint32_t i = start; i < window; ++i) {
      current.push_back(BasisId{i});
      self(self, i + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace superweyl
