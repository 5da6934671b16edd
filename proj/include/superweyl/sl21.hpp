#pragma once

// The Lie superalgebra sl(2,1) in its Chevalley basis.
//
// The bracket table below is literal data. The e_ij matrix realization lives
// separately in tensor_rep.hpp so the two can be cross-checked.

#include <superweyl/coeff_algebra.hpp>
#include <superweyl/linear_combination.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace superweyl {

enum class GenId : std::uint8_t { x1, x2, x3, h1, h2, xm1, xm2, xm3 };

inline constexpr std::array<GenId, 8> all_gen_ids{GenId::x1, GenId::x2,  GenId::x3,  GenId::h1,
                                                  GenId::h2, GenId::xm1, GenId::xm2, GenId::xm3};

inline constexpr std::size_t index_of(GenId g) { return static_cast<std::size_t>(g); }

/// 1 for x2, x3, xm2, xm3; 0 otherwise.
inline constexpr int parity(GenId g) {
  switch (g) {
    case GenId::x2:
    case GenId::x3:
    case GenId::xm2:
    case GenId::xm3: return 1;
    default: return 0;
  }
}

inline std::string_view name_of(GenId g) {
  static constexpr std::array<std::string_view, 8> names{"x1", "x2",  "x3",  "h1",
                                                         "h2", "xm1", "xm2", "xm3"};
  return names[index_of(g)];
}

inline std::optional<GenId> parse_gen_id(std::string_view s) {
  for (GenId g : all_gen_ids)
    if (name_of(g) == s) return g;
  return std::nullopt;
}

using GElem = LinearCombination<GenId>;
using BracketTable = std::array<std::array<GElem, 8>, 8>;

namespace detail {

inline GElem gterm(std::initializer_list<std::pair<GenId, int>> parts) {
  GElem out;
  for (auto [g, c] : parts) out.add(g, Rational(c));
  return out;
}

inline BracketTable make_standard_table() {
  using enum GenId;
  auto e = [](std::initializer_list<std::pair<GenId, int>> p) { return gterm(p); };
  const GElem z;
  // Row z, column w holds [z, w]. Columns: x1 x2 x3 h1 h2 xm1 xm2 xm3.
  return BracketTable{{
      {z, e({{x3, 1}}), z, e({{x1, -2}}), e({{x1, 1}}), e({{h1, 1}}), z, e({{xm2, -1}})},
      {e({{x3, -1}}), z, z, e({{x2, 1}}), z, z, e({{h2, 1}}), e({{xm1, 1}})},
      {z, z, z, e({{x3, -1}}), e({{x3, 1}}), e({{x2, -1}}), e({{x1, 1}}), e({{h1, 1}, {h2, 1}})},
      {e({{x1, 2}}), e({{x2, -1}}), e({{x3, 1}}), z, z, e({{xm1, -2}}), e({{xm2, 1}}), e({{xm3, -1}})},
      {e({{x1, -1}}), z, e({{x3, -1}}), z, z, e({{xm1, 1}}), z, e({{xm3, 1}})},
      {e({{h1, -1}}), z, e({{x2, 1}}), e({{xm1, 2}}), e({{xm1, -1}}), z, e({{xm3, -1}}), z},
      {z, e({{h2, 1}}), e({{x1, 1}}), e({{xm2, -1}}), z, e({{xm3, 1}}), z, z},
      {e({{xm2, 1}}), e({{xm1, 1}}), e({{h1, 1}, {h2, 1}}), e({{xm3, 1}}), e({{xm3, -1}}), z, z, z},
  }};
}

}  // namespace detail

inline const BracketTable& standard_bracket_table() {
  static const BracketTable table = detail::make_standard_table();
  return table;
}

inline const GElem& bracket(GenId z, GenId w, const BracketTable& table = standard_bracket_table()) {
  return table[index_of(z)][index_of(w)];
}

/// Bilinear extension of the table.
inline GElem bracket(const GElem& a, const GElem& b, const BracketTable& table = standard_bracket_table()) {
  GElem out;
  for (const auto& [z, cz] : a)
    for (const auto& [w, cw] : b) out.add(bracket(z, w, table), cz * cw);
  return out;
}

/// [z (x) a, w (x) b] = [z, w] (x) ab, expanded over the generators.
inline std::vector<std::pair<GenId, AlgElem>> bracket_tensor(GenId z, const AlgElem& a, GenId w,
                                                             const AlgElem& b, const CoeffAlgebra& alg,
                                                             const BracketTable& table = standard_bracket_table()) {
  std::vector<std::pair<GenId, AlgElem>> out;
  const GElem& zw = bracket(z, w, table);
  if (zw.is_zero()) return out;
  AlgElem ab = alg.multiply(a, b);
  if (ab.is_zero()) return out;
  for (const auto& [g, c] : zw) out.emplace_back(g, c * ab);
  return out;
}

// Structural checks. Each returns human-readable violations; empty means the
// property holds on every generator pair or triple.

inline std::vector<std::string> check_super_antisymmetry(const BracketTable& table) {
  std::vector<std::string> bad;
  for (GenId z : all_gen_ids)
    for (GenId w : all_gen_ids) {
      Rational sign = (parity(z) && parity(w)) ? Rational(1) : Rational(-1);
      if (!(bracket(z, w, table) == sign * bracket(w, z, table)))
        bad.push_back("antisymmetry fails at (" + std::string(name_of(z)) + ", " +
                      std::string(name_of(w)) + ")");
    }
  return bad;
}

inline std::vector<std::string> check_super_jacobi(const BracketTable& table) {
  std::vector<std::string> bad;
  auto sign = [](GenId a, GenId b) { return (parity(a) && parity(b)) ? Rational(-1) : Rational(1); };
  for (GenId x : all_gen_ids)
    for (GenId y : all_gen_ids)
      for (GenId z : all_gen_ids) {
        GElem sum;
        sum.add(bracket(GElem(x), bracket(y, z, table), table), sign(x, z));
        sum.add(bracket(GElem(y), bracket(z, x, table), table), sign(y, x));
        sum.add(bracket(GElem(z), bracket(x, y, table), table), sign(z, y));
        if (!sum.is_zero())
          bad.push_back("Jacobi fails at (" + std::string(name_of(x)) + ", " + std::string(name_of(y)) +
                        ", " + std::string(name_of(z)) + ")");
      }
  return bad;
}

/// ad(h1) on the root vectors, and the sl2 triple {xm1, h1, x1}.
inline std::vector<std::string> check_root_data(const BracketTable& table) {
  using enum GenId;
  std::vector<std::string> bad;
  const std::array<std::pair<GenId, int>, 6> eigen{
      {{x1, 2}, {xm1, -2}, {x2, -1}, {xm2, 1}, {x3, 1}, {xm3, -1}}};
  for (auto [g, ev] : eigen)
    if (!(bracket(h1, g, table) == GElem(g, Rational(ev))))
      bad.push_back("[h1, " + std::string(name_of(g)) + "] has the wrong eigenvalue");
  if (!(bracket(x1, xm1, table) == GElem(h1)) || !(bracket(h1, x1, table) == GElem(x1, Rational(2))) ||
      !(bracket(h1, xm1, table) == GElem(xm1, Rational(-2))))
    bad.push_back("{xm1, h1, x1} is not an sl2 triple");
  return bad;
}

}  // namespace superweyl
