#pragma once

// The natural module V (x) A of sl(2,1) (x) A, its tensor powers with the
// Koszul-signed symmetric group action, the symmetric tensors TS^m, and the
// vectors v(phi1, phi2, xi) that form a basis of TS^m.
//
// V has basis v1, v2 = xm1 v1 (even) and v3 = xm3 v1 (odd). Generators act
// through the e_ij realization x1 = e12, x2 = e23, x3 = e13, xm1 = e21,
// xm2 = e32, xm3 = e31, h1 = e11 - e22, h2 = e22 + e33. An odd generator
// acting in slot j picks up (-1)^(sum of parities of slots left of j).

#include <superweyl/coeff_algebra.hpp>
#include <superweyl/linalg.hpp>
#include <superweyl/multiset.hpp>
#include <superweyl/pbw.hpp>
#include <superweyl/sl21.hpp>

#include <algorithm>
#include <array>
#include <compare>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace superweyl {

enum class VSlot : std::uint8_t { v1, v2, v3 };

inline constexpr int parity(VSlot s) { return s == VSlot::v3 ? 1 : 0; }

inline std::string_view name_of(VSlot s) {
  static constexpr std::array<std::string_view, 3> names{"v1", "v2", "v3"};
  return names[static_cast<std::size_t>(s)];
}

struct SuperBasisVec {
  VSlot slot = VSlot::v1;
  BasisId basis{};
  friend bool operator==(const SuperBasisVec&, const SuperBasisVec&) = default;
  friend std::strong_ordering operator<=>(const SuperBasisVec&, const SuperBasisVec&) = default;
};

inline constexpr int parity(const SuperBasisVec& w) { return parity(w.slot); }

using VecElem = LinearCombination<SuperBasisVec>;
using TensorKey = std::vector<SuperBasisVec>;

class TensorError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NotInTsSpan : public std::runtime_error {
 public:
  NotInTsSpan(const std::string& msg, TensorKey residual_key)
      : std::runtime_error(msg), residual_key_(std::move(residual_key)) {}
  const TensorKey& residual_key() const { return residual_key_; }

 private:
  TensorKey residual_key_;
};

/// Element of T^m(V (x) A): every key has length exactly m.
class Tensor {
 public:
  using Terms = LinearCombination<TensorKey>;

  explicit Tensor(unsigned degree = 0) : degree_(degree) {}

  static Tensor pure(TensorKey key, const Rational& coeff = Rational(1)) {
    Tensor t(static_cast<unsigned>(key.size()));
    t.add(key, coeff);
    return t;
  }

  unsigned degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.is_zero(); }
  Rational coeff(const TensorKey& key) const { return terms_.coeff(key); }

  void add(const TensorKey& key, const Rational& coeff) {
    if (key.size() != degree_) throw TensorError("tensor key length differs from degree");
    terms_.add(key, coeff);
  }
  void add(const Tensor& other, const Rational& scale) {
    require_same_degree(other);
    terms_.add(other.terms_, scale);
  }

  Tensor& operator+=(const Tensor& rhs) {
    add(rhs, Rational(1));
    return *this;
  }
  Tensor& operator-=(const Tensor& rhs) {
    add(rhs, Rational(-1));
    return *this;
  }
  Tensor& operator*=(const Rational& s) {
    terms_ *= s;
    return *this;
  }
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const Rational& s, Tensor t) { return t *= s; }
  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_degree(const Tensor& other) const {
    if (other.degree_ != degree_) throw TensorError("tensor degree mismatch");
  }

  unsigned degree_;
  Terms terms_;
};

/// (phi1, phi2, xi): phi1 counts v1 legs, phi2 counts v2 legs, xi lists v3 legs.
struct WeylIndex {
  Multiset phi1;
  Multiset phi2;
  Tuple xi;

  unsigned degree() const { return phi1.size() + phi2.size() + static_cast<unsigned>(xi.size()); }
  friend bool operator==(const WeylIndex&, const WeylIndex&) = default;
  friend auto operator<=>(const WeylIndex& a, const WeylIndex& b) {
    if (auto c = a.phi1 <=> b.phi1; c != 0) return c;
    if (auto c = a.phi2 <=> b.phi2; c != 0) return c;
    return a.xi <=> b.xi;
  }
};

/// Sign and sorted form of a tuple of odd legs; sign 0 when an entry repeats.
inline std::pair<int, Tuple> canonicalize_xi(Tuple xi) {
  int sign = 1;
  for (std::size_t i = 0; i < xi.size(); ++i)
    for (std::size_t j = i + 1; j < xi.size(); ++j) {
      if (xi[i] == xi[j]) return {0, {}};
      if (xi[j] < xi[i]) sign = -sign;
    }
  std::sort(xi.begin(), xi.end());
  return {sign, xi};
}

struct MatrixEntry {
  int row;
  int col;
  int coeff;
};

/// The e_ij realization of a generator on V (rows/cols 0, 1, 2 for v1, v2, v3).
inline std::vector<MatrixEntry> natural_matrix(GenId g) {
  using enum GenId;
  switch (g) {
    case x1: return {{0, 1, 1}};
    case x2: return {{1, 2, 1}};
    case x3: return {{0, 2, 1}};
    case xm1: return {{1, 0, 1}};
    case xm2: return {{2, 1, 1}};
    case xm3: return {{2, 0, 1}};
    case h1: return {{0, 0, 1}, {1, 1, -1}};
    case h2: return {{1, 1, 1}, {2, 2, 1}};
  }
  return {};
}

using Matrix3 = std::array<std::array<Rational, 3>, 3>;

inline Matrix3 dense_matrix(const GElem& z) {
  Matrix3 m{};
  for (auto& row : m) row.fill(Rational(0));
  for (const auto& [g, c] : z)
    for (const auto& e : natural_matrix(g)) m[e.row][e.col] += c * e.coeff;
  return m;
}

/// Checks M([z, w]) = M(z)M(w) - (-1)^{p(z)p(w)} M(w)M(z) on all 64 pairs.
inline std::vector<std::string> check_matrix_realization(const BracketTable& table) {
  auto mul = [](const Matrix3& a, const Matrix3& b) {
    Matrix3 out{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        out[i][j] = 0;
        for (int k = 0; k < 3; ++k) out[i][j] += a[i][k] * b[k][j];
      }
    return out;
  };
  std::vector<std::string> bad;
  for (GenId z : all_gen_ids)
    for (GenId w : all_gen_ids) {
      Matrix3 mz = dense_matrix(GElem(z)), mw = dense_matrix(GElem(w));
      Matrix3 zw = mul(mz, mw), wz = mul(mw, mz);
      const int sign = (parity(z) && parity(w)) ? -1 : 1;
      Matrix3 expected = dense_matrix(bracket(z, w, table));
      bool ok = true;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          if (zw[i][j] - sign * wz[i][j] != expected[i][j]) ok = false;
      if (!ok)
        bad.push_back("matrix realization disagrees with table at (" + std::string(name_of(z)) + ", " +
                      std::string(name_of(w)) + ")");
    }
  return bad;
}

inline std::vector<std::vector<unsigned>> all_permutations(unsigned m) {
  std::vector<unsigned> sigma(m);
  std::iota(sigma.begin(), sigma.end(), 0u);
  std::vector<std::vector<unsigned>> out;
  do {
    out.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

/// dim TS^m(V (x) A) for dim A = d: sum_n C(d, n) multichoose(2d, m - n).
inline Integer ts_dimension(unsigned m, unsigned d) {
  Integer total = 0;
  for (unsigned n = 0; n <= std::min(m, d); ++n) {
    const unsigned rest = m - n;
    Integer even = (2 * d == 0) ? Integer(rest == 0 ? 1 : 0) : int_binomial(2L * d + rest - 1, rest);
    total += int_binomial(d, n) * even;
  }
  return total;
}

/// Which slots an odd operator passes when it acts in slot j: the ones to its
/// left (the usual Koszul rule) or, reading the sign the other way, the ones to
/// its right. Both give module actions; only the first makes v1^m map to the
/// v-vectors with sign (-1)^{|phi1|+|phi2|}.
enum class Koszul { preceding, following };

class TensorModule {
 public:
  explicit TensorModule(CoeffAlgebra alg, Koszul koszul = Koszul::preceding)
      : alg_(std::move(alg)), koszul_(koszul) {}

  const CoeffAlgebra& algebra() const { return alg_; }
  Koszul koszul() const { return koszul_; }

  /// (z (x) a)(w (x) b) = zw (x) ab
  VecElem nat_act(GenId z, const AlgElem& a, const SuperBasisVec& w) const {
    VecElem out;
    const int col = static_cast<int>(w.slot);
    for (const auto& e : natural_matrix(z)) {
      if (e.col != col) continue;
      for (const auto& [b, c] : alg_.multiply(a, AlgElem(w.basis)))
        out.add(SuperBasisVec{static_cast<VSlot>(e.row), b}, c * e.coeff);
    }
    return out;
  }

  /// Primitive action of one generator on T^m.
  Tensor act_generator(const Generator& g, const Tensor& t) const {
    Tensor out(t.degree());
    const AlgElem a(g.basis);
    for (const auto& [key, c] : t.terms()) {
      int passed = 0;
      if (koszul_ == Koszul::following)
        for (const auto& w : key) passed += parity(w);
      for (std::size_t j = 0; j < key.size(); ++j) {
        if (koszul_ == Koszul::following) passed -= parity(key[j]);
        const VecElem image = nat_act(g.gen, a, key[j]);
        const Rational sign = (parity(g) && (passed & 1)) ? Rational(-c) : c;
        for (const auto& [w, cw] : image) {
          TensorKey next = key;
          next[j] = w;
          out.add(next, sign * cw);
        }
        if (koszul_ == Koszul::preceding) passed += parity(key[j]);
      }
    }
    return out;
  }

  /// rho(Delta^{m-1}(u)) t, applying the factors of each monomial right to left.
  Tensor act(const UElem& u, const Tensor& t) const {
    Tensor out(t.degree());
    for (const auto& [m, c] : u) {
      Tensor acc = t;
      for (auto f = m.factors.rbegin(); f != m.factors.rend() && !acc.is_zero(); ++f)
        for (unsigned k = 0; k < f->exp && !acc.is_zero(); ++k) acc = act_generator(f->gen, acc);
      out.add(acc, c);
    }
    return out;
  }

  /// sigma^{-1}(w_1 ... w_m) = gamma(w, sigma) w_{sigma(1)} ... w_{sigma(m)}, sigma 0-based.
  static Tensor sigma_act(std::span<const unsigned> sigma, const Tensor& t) {
    if (sigma.size() != t.degree()) throw TensorError("permutation size differs from tensor degree");
    Tensor out(t.degree());
    for (const auto& [key, c] : t.terms()) {
      int sign = 1;
      TensorKey next(key.size());
      for (std::size_t j = 0; j < sigma.size(); ++j) {
        next[j] = key[sigma[j]];
        for (std::size_t k = j + 1; k < sigma.size(); ++k)
          if (sigma[j] > sigma[k] && parity(key[sigma[j]]) && parity(key[sigma[k]])) sign = -sign;
      }
      out.add(next, sign > 0 ? c : Rational(-c));
    }
    return out;
  }

  static Tensor symmetrize(const Tensor& t) {
    Tensor out(t.degree());
    for (const auto& sigma : all_permutations(t.degree())) out += sigma_act(sigma, t);
    return out;
  }

  /// t in TS^m iff (1/m!) symmetrize(t) == t.
  static bool in_ts(const Tensor& t) {
    return inverse_factorial(t.degree()) * symmetrize(t) == t;
  }

  static Tensor highest_weight_vector(unsigned m) {
    return Tensor::pure(TensorKey(m, SuperBasisVec{VSlot::v1, unit_basis}));
  }

  /// The leg sequence v1 (x) phi1, v2 (x) phi2, v3 (x) xi in ascending basis order.
  static TensorKey leading_key(const WeylIndex& idx) {
    TensorKey key;
    for (const auto& [b, n] : idx.phi1) key.insert(key.end(), n, SuperBasisVec{VSlot::v1, b});
    for (const auto& [b, n] : idx.phi2) key.insert(key.end(), n, SuperBasisVec{VSlot::v2, b});
    for (BasisId b : idx.xi) key.push_back(SuperBasisVec{VSlot::v3, b});
    return key;
  }

  /// sum_sigma sigma^{-1} of the leading key, with 1/phi(a)! per repeated even leg.
  Tensor v_vector(const WeylIndex& idx) const {
    for (const auto& [b, n] : idx.phi1) alg_.check(b);
    for (const auto& [b, n] : idx.phi2) alg_.check(b);
    for (BasisId b : idx.xi) alg_.check(b);
    Rational scale(1);
    for (const auto& [b, n] : idx.phi1) scale /= Rational(factorial(n));
    for (const auto& [b, n] : idx.phi2) scale /= Rational(factorial(n));
    return symmetrize(Tensor::pure(leading_key(idx), scale));
  }

  /// Canonical indices of degree m over the basis window {0, ..., window-1}.
  std::vector<WeylIndex> ts_basis(unsigned m, std::uint32_t window) const {
    if (auto d = alg_.dimension(); d && window > *d) throw TensorError("window exceeds dim A");
    std::vector<WeylIndex> out;
    for (unsigned n = 0; n <= m; ++n)
      for (const auto& xi : increasing_tuples(n, window))
        for (unsigned s = 0; s + n <= m; ++s)
          for (const auto& phi1 : multisets_of_size(s, window))
            for (const auto& phi2 : multisets_of_size(m - n - s, window))
              out.push_back(WeylIndex{phi1, phi2, xi});
    std::sort(out.begin(), out.end());
    return out;
  }

  /// The index whose leading key is a rearrangement of `key`, and the sign of
  /// that rearrangement; nullopt when an odd leg repeats.
  static std::optional<std::pair<WeylIndex, int>> index_of_key(const TensorKey& key) {
    WeylIndex idx;
    Tuple odd;
    for (const auto& w : key) {
      switch (w.slot) {
        case VSlot::v1: idx.phi1.add(w.basis); break;
        case VSlot::v2: idx.phi2.add(w.basis); break;
        case VSlot::v3: odd.push_back(w.basis); break;
      }
    }
    auto [sign, sorted] = canonicalize_xi(odd);
    if (sign == 0) return std::nullopt;
    idx.xi = std::move(sorted);
    return std::make_pair(std::move(idx), sign);
  }

  /// Exact coordinates over the v-vectors. Distinct canonical indices have
  /// disjoint supports and coefficient 1 on their leading key, so coordinates
  /// are read off leading keys and then confirmed by an exact residual check.
  std::map<WeylIndex, Rational> express_in_ts_basis(const Tensor& t) const {
    std::map<WeylIndex, Rational> coords;
    for (const auto& [key, c] : t.terms()) {
      auto found = index_of_key(key);
      if (!found) throw NotInTsSpan("tensor has a repeated odd leg", key);
      if (!coords.contains(found->first)) {
        Rational lead = t.coeff(leading_key(found->first));
        if (!is_zero(lead)) coords.emplace(found->first, lead);
      }
    }
    Tensor residual = t;
    for (const auto& [idx, c] : coords) residual.add(v_vector(idx), -c);
    if (!residual.is_zero())
      throw NotInTsSpan("tensor is not in the span of the v-vectors", residual.terms().begin()->first);
    return coords;
  }

  /// Every pure tensor of T^m over the basis window.
  std::vector<TensorKey> pure_keys(unsigned m, std::uint32_t window) const {
    std::vector<TensorKey> out{TensorKey{}};
    for (unsigned step = 0; step < m; ++step) {
      std::vector<TensorKey> next;
      for (const auto& k : out)
        for (VSlot s : {VSlot::v1, VSlot::v2, VSlot::v3})
          for (std::uint32_t b = 0; b < window; ++b) {
            TensorKey e = k;
            e.push_back(SuperBasisVec{s, BasisId{b}});
            next.push_back(std::move(e));
          }
      out = std::move(next);
    }
    return out;
  }

  /// Rank of the symmetrizer on T^m over the window: an independent route to dim TS^m.
  std::size_t symmetrizer_rank(unsigned m, std::uint32_t window) const {
    EchelonBasis<TensorKey> basis;
    for (const auto& key : pure_keys(m, window)) basis.insert(symmetrize(Tensor::pure(key)).terms());
    return basis.rank();
  }

 private:
  CoeffAlgebra alg_;
  Koszul koszul_;
};

}  // namespace superweyl
