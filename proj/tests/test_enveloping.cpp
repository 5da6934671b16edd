#include "oracles.hpp"

#include <catch_amalgamated.hpp>

using namespace superweyl;
using enum GenId;

namespace {

UElem nf(Enveloping& env, std::initializer_list<Generator> gens) {
  std::vector<WordItem> word(gens.begin(), gens.end());
  return env.normal_form(word);
}

UElem mono(std::initializer_list<Factor> factors, Rational c = 1) {
  return UElem(PBWMonomial{std::vector<Factor>(factors)}, c);
}

}  // namespace

TEST_CASE("bracket table entries", "[sl21]") {
  CHECK(bracket(x1, x2) == GElem(x3));
  CHECK(bracket(x3, xm3) == detail::gterm({{h1, 1}, {h2, 1}}));
  CHECK(bracket(x1, xm1) == GElem(h1));
  CHECK(bracket(xm1, x1) == detail::gterm({{h1, -1}}));
  CHECK(bracket(x2, x2).is_zero());
  CHECK(parity(x2) == 1);
  CHECK(parity(xm3) == 1);
  CHECK(parity(h2) == 0);
}

TEST_CASE("bracket on the map superalgebra", "[sl21]") {
  const auto poly = CoeffAlgebra::polynomial();
  const auto tr2 = CoeffAlgebra::truncated(2);
  const BasisId t{1}, t2{2};
  const auto in_poly = bracket_tensor(x1, AlgElem(t), xm1, AlgElem(t), poly);
  REQUIRE(in_poly.size() == 1);
  CHECK(in_poly[0].first == h1);
  CHECK(in_poly[0].second == AlgElem(t2));
  CHECK(bracket_tensor(x1, AlgElem(t), xm1, AlgElem(t), tr2).empty());
  CHECK(bracket_tensor(x3, AlgElem(t), x3, AlgElem(unit_basis), poly).empty());
}

TEST_CASE("structural identities of the bracket table", "[sl21]") {
  const auto& table = standard_bracket_table();
  CHECK(check_super_antisymmetry(table).empty());
  CHECK(check_super_jacobi(table).empty());
  CHECK(check_matrix_realization(table).empty());
  CHECK(check_root_data(table).empty());
}

TEST_CASE("a corrupted bracket table is caught", "[sl21][verifier]") {
  BracketTable bad = standard_bracket_table();
  // [x1, x2] = 2 x3 breaks Jacobi on (x1, x2, xm3) while keeping antisymmetry
  bad[index_of(x1)][index_of(x2)] = detail::gterm({{x3, 2}});
  bad[index_of(x2)][index_of(x1)] = detail::gterm({{x3, -2}});
  CHECK(check_super_antisymmetry(bad).empty());
  CHECK_FALSE(check_super_jacobi(bad).empty());
  const CheckReport report = verify_structure(bad, 1, 20);
  CHECK_FALSE(report.passed());
  bool jacobi_named = false;
  for (const auto& f : report.failures)
    if (f.diagnostic.find("Jacobi") != std::string::npos || f.diagnostic.find("jacobi") != std::string::npos)
      jacobi_named = true;
  CHECK(jacobi_named);
}

TEST_CASE("normal ordering examples", "[pbw]") {
  Enveloping env(CoeffAlgebra::polynomial());
  const BasisId one = unit_basis, a{1}, b{2}, ab{3};
  CHECK(nf(env, {{x1, a}, {xm1, b}}) == mono({{{xm1, b}, 1}, {{x1, a}, 1}}) + mono({{{h1, ab}, 1}}));
  CHECK(nf(env, {{xm3, b}, {xm3, b}}).is_zero());
  CHECK(nf(env, {{xm2, a}, {xm3, b}}) == mono({{{xm3, b}, 1}, {{xm2, a}, 1}}, -1));

  const UElem x = env.gen(x1, one), y = env.gen(xm1, one);
  CHECK(env.multiply(Enveloping::one(), x) == x);
  CHECK(env.multiply(x, env.multiply(y, y)) == env.multiply(env.multiply(x, y), y));
  CHECK(env.multiply(env.gen(h1, one), env.gen(xm1, BasisId{1})) ==
        mono({{{xm1, BasisId{1}}, 1}, {{h1, one}, 1}}) - mono({{{xm1, BasisId{1}}, 1}}, 2));
}

TEST_CASE("divided powers and h-binomials", "[pbw]") {
  Enveloping env(CoeffAlgebra::truncated(3));
  const BasisId one = unit_basis;
  CHECK(env.divided_power({xm1, one}, 2) == mono({{{xm1, one}, 2}}, ratio(1, 2)));
  CHECK(env.divided_power({x2, BasisId{1}}, 0) == Enveloping::one());
  CHECK(env.divided_power({xm3, BasisId{1}}, 2).is_zero());

  CHECK(env.h_binomial(h1, 0, 1) == env.gen(h1, one));
  CHECK(env.h_binomial(h1, 0, 2) == mono({{{h1, one}, 2}}, ratio(1, 2)) - mono({{{h1, one}, 1}}, ratio(1, 2)));
  CHECK(env.h_binomial(h1, 5, 0) == Enveloping::one());
  // binom(h - i, j) from the product formula
  const UElem h = env.gen(h1, one);
  for (long i = -2; i <= 2; ++i)
    for (unsigned j = 0; j <= 3; ++j) {
      UElem prod = Enveloping::one();
      for (unsigned k = 0; k < j; ++k)
        prod = env.multiply(prod, h - UElem(PBWMonomial{}, Rational(i + static_cast<long>(k))));
      prod *= inverse_factorial(j);
      CHECK(env.h_binomial(h1, i, j) == prod);
    }
}

TEST_CASE("family degrees and filtered spans", "[pbw]") {
  Enveloping env(CoeffAlgebra::truncated(2));
  const BasisId one = unit_basis, t{1};
  const UElem u = mono({{{xm1, one}, 2}, {{h1, t}, 1}});
  CHECK(family_degree(u, xm1) == 2);
  CHECK(family_degree(Enveloping::one(), h2) == 0);
  CHECK(family_degree(env.h_binomial(h1, 0, 2), h1) == 2);

  const UElem w = mono({{{xm1, t}, 1}, {{h1, one}, 1}});
  CHECK(in_filtered_span(w, {{xm1, 1}, {h1, 1}}));
  CHECK_FALSE(in_filtered_span(w, {{xm1, 0}, {h1, 1}}));
  CHECK(in_filtered_span(UElem{}, {}));
}

TEST_CASE("left ideal generated by x1", "[pbw]") {
  Enveloping env(CoeffAlgebra::truncated(3));
  WeylOperators ops(env);
  const BasisId a{1};
  CHECK(in_left_ideal_x1(env.gen(x1, a)));
  CHECK_FALSE(in_left_ideal_x1(env.gen(h1, a)));
  const UElem lhs = env.multiply(ops.X_pm1(1, Multiset::single(a)), ops.X_pm1(-1, Multiset::single(unit_basis, 2)));
  CHECK(in_left_ideal_x1(lhs - ops.p1(Multiset::single(unit_basis), Multiset::single(a))));
}

TEST_CASE("normal forms agree with the tensor action of the word", "[pbw][oracle]") {
  // Acting factor by factor never reorders, so it checks the rewriting independently.
  const auto alg = CoeffAlgebra::truncated(2);
  Enveloping env(alg);
  TensorModule tm(alg);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> gen_pick(0, 7), basis_pick(0, 1), len_pick(1, 5);
  const auto keys = tm.pure_keys(2, 2);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<WordItem> word;
    std::vector<Generator> gens;
    for (int i = len_pick(rng); i > 0; --i) {
      Generator g{all_gen_ids[gen_pick(rng)], BasisId{static_cast<std::uint32_t>(basis_pick(rng))}};
      word.push_back(g);
      gens.push_back(g);
    }
    const UElem u = env.normal_form(word);
    for (std::size_t k = trial % 7; k < keys.size(); k += 7) {
      Tensor direct = Tensor::pure(keys[k]);
      for (auto g = gens.rbegin(); g != gens.rend(); ++g) direct = tm.act_generator(*g, direct);
      CHECK(tm.act(u, Tensor::pure(keys[k])) == direct);
    }
  }
}

TEST_CASE("X, H and X-tuple operators", "[weyl_ops]") {
  Enveloping env(CoeffAlgebra::truncated(3));
  WeylOperators ops(env);
  const BasisId one = unit_basis, a{1}, b{2};
  CHECK(ops.X_pm1(-1, Multiset{}) == Enveloping::one());
  CHECK(ops.X_pm1(-1, Multiset::single(one, 2)) == mono({{{xm1, one}, 2}}, ratio(1, 2)));
  CHECK(ops.X_pm1(1, Multiset::single(a) + Multiset::single(b)) ==
        env.multiply(env.gen(x1, a), env.gen(x1, b)));
  CHECK(ops.X_pm1(1, Multiset::single(a) + Multiset::single(b)) ==
        env.multiply(env.gen(x1, b), env.gen(x1, a)));
  CHECK(ops.H(1, Multiset{}) == Enveloping::one());
  CHECK(ops.H(1, Multiset::single(b)) == env.gen(h1, b));
  CHECK(ops.H(1, Multiset::single(b, 2)) == mono({{{h1, b}, 2}}, ratio(1, 2)));
  CHECK(ops.X_tuple(xm3, {}) == Enveloping::one());
  CHECK(ops.X_tuple(xm3, {b, b}).is_zero());
  CHECK(ops.X_tuple(xm3, {b, a}) == -1 * ops.X_tuple(xm3, {a, b}));
}

TEST_CASE("p1, q1 and p on small arguments", "[weyl_ops]") {
  Enveloping env(CoeffAlgebra::polynomial());
  WeylOperators ops(env);
  const BasisId one = unit_basis, b{1}, b2{2}, c{1}, d{2}, cd{3};
  const Multiset none;
  CHECK(ops.p1(none, none) == Enveloping::one());
  CHECK(ops.p1(none, Multiset::single(b)) == -1 * env.gen(h1, b));
  CHECK(ops.p1(Multiset::single(d), none) == -1 * env.gen(xm1, d));
  CHECK(ops.p1(none, Multiset::single(b, 2)) ==
        mono({{{h1, b}, 2}}, ratio(1, 2)) - mono({{{h1, b2}, 1}}, ratio(1, 2)));

  CHECK(ops.q1(Multiset::single(b), Multiset::single(c, 2)).is_zero());
  CHECK(ops.q1(Multiset::single(d), Multiset::single(c)) == env.gen(h1, cd));
  CHECK(ops.q1(Multiset::single(one, 2), Multiset::single(c)) == mono({{{xm1, one}, 1}, {{h1, c}, 1}}));

  CHECK(ops.p(none, none, {}) == Enveloping::one());
  CHECK(ops.p(Multiset::single(b), none, {}) == -1 * env.gen(h1, b));
  CHECK(ops.p(none, none, {b}) == env.gen(xm3, b));
}

TEST_CASE("p1(0, n chi_t) matches the exponential generating series", "[weyl_ops][oracle]") {
  Enveloping env(CoeffAlgebra::polynomial());
  WeylOperators ops(env);
  const auto series = oracle::lambda_series(env, 5);
  for (unsigned n = 0; n <= 5; ++n) CHECK(ops.p1(Multiset{}, Multiset::single(BasisId{1}, n)) == series[n]);
}

TEST_CASE("memoized and direct recursions agree", "[weyl_ops]") {
  Enveloping env(CoeffAlgebra::truncated(2));
  WeylOperators memo(env), direct(env, Memoize::no);
  for (unsigned s = 0; s <= 3; ++s)
    for (const auto& phi : multisets_of_size(s, 2))
      for (unsigned u = 0; u + s <= 3; ++u)
        for (const auto& chi : multisets_of_size(u, 2)) {
          CHECK(memo.p1(phi, chi) == direct.p1(phi, chi));
          CHECK(memo.q1(phi, chi) == direct.q1(phi, chi));
        }
}

TEST_CASE("coproduct of primitive and product elements", "[coproduct]") {
  Enveloping env(CoeffAlgebra::truncated(2));
  const BasisId b{1};
  const UElem h = env.gen(h1, b);
  const UElem one = Enveloping::one();
  CHECK(coproduct(h, env) == tensor_product(h, one) + tensor_product(one, h));

  // two odd factors pick up a Koszul sign on the cross term
  const UElem x = env.gen(xm2, unit_basis), y = env.gen(xm3, b);
  const UElem xy = env.multiply(x, y);
  const UTensor2 expected =
      tensor_product(xy, one) + tensor_product(x, y) - tensor_product(y, x) + tensor_product(one, xy);
  CHECK(coproduct(xy, env) == expected);
}
