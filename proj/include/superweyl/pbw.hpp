#pragma once

// The enveloping algebra U(sl(2,1) (x) A) in a PBW basis.
//
// Generators z (x) b (b a basis element of A) are totally ordered by family
//
//     xm1 < h1 < xm3 < xm2 < h2 < x2 < x3 < x1
//
// and then by basis index. A normal monomial is a strictly increasing product
// of generator powers; odd generators appear at most once. Because x1 comes
// last and x1 (x) A is abelian, the left ideal U (x1 (x) A) is spanned by the
// normal monomials containing an x1 factor.

#include <superweyl/coeff_algebra.hpp>
#include <superweyl/linear_combination.hpp>
#include <superweyl/sl21.hpp>

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

namespace superweyl {

inline constexpr int family_rank(GenId g) {
  using enum GenId;
  switch (g) {
    case xm1: return 0;
    case h1: return 1;
    case xm3: return 2;
    case xm2: return 3;
    case h2: return 4;
    case x2: return 5;
    case x3: return 6;
    case x1: return 7;
  }
  return -1;
}

struct Generator {
  GenId gen = GenId::x1;
  BasisId basis{};

  friend bool operator==(const Generator&, const Generator&) = default;
  friend std::strong_ordering operator<=>(const Generator& a, const Generator& b) {
    if (auto c = family_rank(a.gen) <=> family_rank(b.gen); c != 0) return c;
    return a.basis <=> b.basis;
  }
};

inline constexpr int parity(const Generator& g) { return parity(g.gen); }

struct Factor {
  Generator gen;
  unsigned exp = 1;
  friend bool operator==(const Factor&, const Factor&) = default;
  friend std::strong_ordering operator<=>(const Factor&, const Factor&) = default;
};

struct PBWMonomial {
  std::vector<Factor> factors;
  friend bool operator==(const PBWMonomial&, const PBWMonomial&) = default;
  friend std::strong_ordering operator<=>(const PBWMonomial& a, const PBWMonomial& b) {
    return std::lexicographical_compare_three_way(a.factors.begin(), a.factors.end(), b.factors.begin(),
                                                  b.factors.end());
  }
  bool empty() const { return factors.empty(); }
};

using UElem = LinearCombination<PBWMonomial>;

/// A word entry for normal_form: a generator or an explicit scalar.
using WordItem = std::variant<Generator, Rational>;

inline int monomial_parity(const PBWMonomial& m) {
  int p = 0;
  for (const auto& f : m.factors) p ^= parity(f.gen) & static_cast<int>(f.exp & 1u);
  return p;
}

inline unsigned monomial_degree(const PBWMonomial& m) {
  unsigned d = 0;
  for (const auto& f : m.factors) d += f.exp;
  return d;
}

inline unsigned family_degree(const PBWMonomial& m, GenId family) {
  unsigned d = 0;
  for (const auto& f : m.factors)
    if (f.gen.gen == family) d += f.exp;
  return d;
}

/// Max over monomials of the total exponent carried by `family`.
inline unsigned family_degree(const UElem& u, GenId family) {
  unsigned d = 0;
  for (const auto& [m, c] : u) d = std::max(d, family_degree(m, family));
  return d;
}

inline unsigned total_degree(const UElem& u) {
  unsigned d = 0;
  for (const auto& [m, c] : u) d = std::max(d, monomial_degree(m));
  return d;
}

/// Common parity of all monomials; nullopt when mixed. Zero is even.
inline std::optional<int> homogeneous_parity(const UElem& u) {
  std::optional<int> p;
  for (const auto& [m, c] : u) {
    int q = monomial_parity(m);
    if (p && *p != q) return std::nullopt;
    p = q;
  }
  return p.value_or(0);
}

inline bool has_family(const PBWMonomial& m, GenId family) { return family_degree(m, family) > 0; }

/// u in U (x1 (x) A): every monomial carries an x1 factor.
inline bool in_left_ideal_x1(const UElem& u) {
  for (const auto& [m, c] : u)
    if (!has_family(m, GenId::x1)) return false;
  return true;
}

/// The monomials of u without an x1 factor.
inline UElem outside_left_ideal_x1(const UElem& u) {
  UElem out;
  for (const auto& [m, c] : u)
    if (!has_family(m, GenId::x1)) out.add(m, c);
  return out;
}

/// Per-family degree bounds. Families absent from the map are not allowed.
using FamilyBounds = std::map<GenId, unsigned>;

inline bool in_filtered_span(const UElem& u, const FamilyBounds& bounds) {
  for (const auto& [m, c] : u) {
    for (const auto& f : m.factors)
      if (!bounds.contains(f.gen.gen)) return false;
    for (const auto& [family, bound] : bounds)
      if (family_degree(m, family) > bound) return false;
  }
  return true;
}

/// PBW rewriting context. Holds the coefficient algebra, the bracket table and
/// a memo of generator-times-monomial products. Not thread-safe: use one
/// context per task.
class Enveloping {
 public:
  explicit Enveloping(CoeffAlgebra alg, const BracketTable& table = standard_bracket_table())
      : alg_(std::move(alg)), table_(table) {}

  const CoeffAlgebra& algebra() const { return alg_; }
  const BracketTable& table() const { return table_; }

  static UElem one() { return UElem(PBWMonomial{}); }

  UElem gen(GenId g, BasisId b) const {
    alg_.check(b);
    return UElem(PBWMonomial{{Factor{Generator{g, b}, 1}}});
  }

  /// z (x) a for a general algebra element, expanded over the basis.
  UElem gen(GenId g, const AlgElem& a) const {
    UElem out;
    for (const auto& [b, c] : a) out.add(gen(g, b), c);
    return out;
  }

  UElem normal_form(std::span<const WordItem> word) {
    UElem out = one();
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      if (const auto* g = std::get_if<Generator>(&*it)) {
        alg_.check(g->basis);
        out = left_multiply(*g, out);
      } else {
        out *= std::get<Rational>(*it);
      }
    }
    return out;
  }

  UElem normal_form(std::initializer_list<WordItem> word) {
    return normal_form(std::span<const WordItem>(word.begin(), word.size()));
  }

  /// g * u, renormalized.
  UElem left_multiply(const Generator& g, const UElem& u) {
    UElem out;
    for (const auto& [m, c] : u) out.add(left_multiply(g, m), c);
    return out;
  }

  UElem multiply(const UElem& u, const UElem& v) {
    UElem out;
    for (const auto& [m, c] : u) {
      UElem acc = v;
      for (auto f = m.factors.rbegin(); f != m.factors.rend(); ++f)
        for (unsigned k = 0; k < f->exp; ++k) acc = left_multiply(f->gen, acc);
      out.add(acc, c);
    }
    return out;
  }

  UElem multiply(std::initializer_list<UElem> factors) {
    UElem out = one();
    for (auto it = std::rbegin(factors); it != std::rend(factors); ++it) out = multiply(*it, out);
    return out;
  }

  UElem power(const UElem& u, unsigned r) {
    UElem out = one();
    for (unsigned i = 0; i < r; ++i) out = multiply(u, out);
    return out;
  }

  /// g^r / r!; zero for odd g and r >= 2.
  UElem divided_power(const Generator& g, unsigned r) const {
    alg_.check(g.basis);
    if (r == 0) return one();
    if (parity(g) == 1 && r >= 2) return {};
    return UElem(PBWMonomial{{Factor{g, r}}}, inverse_factorial(r));
  }

  /// binom(h (x) 1 - offset, j) expanded in powers of h (x) 1.
  UElem h_binomial(GenId which, long offset, unsigned j) const {
    // Coefficients of prod_{i<j} (h - offset - i), lowest degree first.
    std::vector<Rational> poly{Rational(1)};
    for (unsigned i = 0; i < j; ++i) {
      Rational root = Rational(Integer(offset + static_cast<long>(i)));
      std::vector<Rational> next(poly.size() + 1, Rational(0));
      for (std::size_t k = 0; k < poly.size(); ++k) {
        next[k + 1] += poly[k];
        next[k] -= root * poly[k];
      }
      poly = std::move(next);
    }
    const Rational scale = inverse_factorial(j);
    UElem out;
    const Generator h{which, unit_basis};
    for (std::size_t k = 0; k < poly.size(); ++k) {
      PBWMonomial m;
      if (k > 0) m.factors.push_back(Factor{h, static_cast<unsigned>(k)});
      out.add(m, poly[k] * scale);
    }
    return out;
  }

  /// [a, b] for generators, expanded over generators.
  std::vector<std::pair<Generator, Rational>> bracket(const Generator& a, const Generator& b) const {
    std::vector<std::pair<Generator, Rational>> out;
    for (const auto& [g, prod] : bracket_tensor(a.gen, AlgElem(a.basis), b.gen, AlgElem(b.basis), alg_, table_))
      for (const auto& [basis, c] : prod) out.emplace_back(Generator{g, basis}, c);
    return out;
  }

  std::size_t cache_size() const { return memo_.size(); }
  void clear_cache() { memo_.clear(); }

 private:
  const UElem& left_multiply(const Generator& g, const PBWMonomial& m) {
    auto key = std::make_pair(g, m);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    UElem result = compute_left_multiply(g, m);
    return memo_.emplace(std::move(key), std::move(result)).first->second;
  }

  UElem compute_left_multiply(const Generator& g, const PBWMonomial& m) {
    if (m.factors.empty()) return UElem(PBWMonomial{{Factor{g, 1}}});
    const Factor head = m.factors.front();
    if (g < head.gen) {
      PBWMonomial out;
      out.factors.reserve(m.factors.size() + 1);
      out.factors.push_back(Factor{g, 1});
      out.factors.insert(out.factors.end(), m.factors.begin(), m.factors.end());
      return UElem(std::move(out));
    }

    PBWMonomial tail = m;
    if (head.exp == 1) {
      tail.factors.erase(tail.factors.begin());
    } else {
      --tail.factors.front().exp;
    }

    if (g == head.gen) {
      if (parity(g) == 0) {
        PBWMonomial out = m;
        ++out.factors.front().exp;
        return UElem(std::move(out));
      }
      // Odd square: g g = 1/2 [g, g].
      UElem out;
      for (const auto& [h, c] : bracket(g, g)) out.add(left_multiply(h, tail), c / 2);
      return out;
    }

    // g > head: g y T = (-1)^{p(g)p(y)} y g T + [g, y] T.
    const Rational sign = (parity(g) & parity(head.gen)) ? Rational(-1) : Rational(1);
    UElem out;
    const UElem moved = left_multiply(g, tail);
    for (const auto& [mono, c] : moved) out.add(left_multiply(head.gen, mono), sign * c);
    for (const auto& [h, c] : bracket(g, head.gen)) out.add(left_multiply(h, tail), c);
    return out;
  }

  CoeffAlgebra alg_;
  BracketTable table_;
  std::map<std::pair<Generator, PBWMonomial>, UElem> memo_;
};

}  // namespace superweyl
