#pragma once

#include <superweyl/rational.hpp>

#include <functional>
#include <map>
#include <utility>

namespace superweyl {

/// Finitely supported rational combination of keys. No zero coefficient is
/// ever stored, so structural equality is mathematical equality.
template <class Key, class Compare = std::less<Key>>
class LinearCombination {
 public:
  using key_type = Key;
  using container_type = std::map<Key, Rational, Compare>;
  using const_iterator = typename container_type::const_iterator;

  LinearCombination() = default;
  explicit LinearCombination(Key key, Rational coeff = Rational(1)) { add(key, coeff); }

  void add(const Key& key, const Rational& coeff) {
    if (superweyl::is_zero(coeff)) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (superweyl::is_zero(it->second)) terms_.erase(it);
    }
  }

  void add(const LinearCombination& other, const Rational& scale) {
    if (superweyl::is_zero(scale)) return;
    for (const auto& [k, c] : other.terms_) add(k, c * scale);
  }

  Rational coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const container_type& terms() const { return terms_; }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }

  LinearCombination& operator+=(const LinearCombination& rhs) {
    for (const auto& [k, c] : rhs.terms_) add(k, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& rhs) {
    for (const auto& [k, c] : rhs.terms_) add(k, -c);
    return *this;
  }
  LinearCombination& operator*=(const Rational& s) {
    if (superweyl::is_zero(s)) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= s;
    }
    return *this;
  }

  friend LinearCombination operator+(LinearCombination lhs, const LinearCombination& rhs) {
    return lhs += rhs;
  }
  friend LinearCombination operator-(LinearCombination lhs, const LinearCombination& rhs) {
    return lhs -= rhs;
  }
  friend LinearCombination operator-(LinearCombination v) { return v *= Rational(-1); }
  friend LinearCombination operator*(const Rational& s, LinearCombination v) { return v *= s; }
  friend LinearCombination operator*(LinearCombination v, const Rational& s) { return v *= s; }

  friend bool operator==(const LinearCombination& a, const LinearCombination& b) {
    return a.terms_ == b.terms_;
  }

  /// Applies `f(key) -> LinearCombination<K2>` term by term.
  template <class Out, class F>
  Out expand(F&& f) const {
    Out out;
    for (const auto& [k, c] : terms_) out.add(f(k), c);
    return out;
  }

 private:
  container_type terms_;
};

}  // namespace superweyl
