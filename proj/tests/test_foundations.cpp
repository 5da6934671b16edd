#include "oracles.hpp"

#include <catch_amalgamated.hpp>

#include <filesystem>

using namespace superweyl;

namespace {
const std::filesystem::path kSamples = SUPERWEYL_SOURCE_DIR "/samples";
const std::filesystem::path kFixtures = SUPERWEYL_SOURCE_DIR "/tests/fixtures";
}  // namespace

TEST_CASE("rational arithmetic is exact and canonical", "[scalars]") {
  CHECK(*rat_arith(ratio(1, 2), ratio(1, 3), ArithKind::add) == ratio(5, 6));
  CHECK(*rat_arith(ratio(7, 3), Rational(0), ArithKind::mul) == 0);
  CHECK(to_string(*rat_arith(ratio(2, 4), Rational(0), ArithKind::add)) == "1/2");
  CHECK_FALSE(rat_arith(Rational(1), Rational(0), ArithKind::div).has_value());
  CHECK(to_string(ratio(-6, 3)) == "-2");
  CHECK(parse_rational("-4/6") == ratio(-2, 3));
  CHECK(parse_rational("+5") == 5);
  CHECK_THROWS_AS(parse_rational("1/0"), RationalParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), RationalParseError);
  CHECK_THROWS_AS(parse_rational(""), RationalParseError);
}

TEST_CASE("generalized binomials and big factorials", "[scalars]") {
  CHECK(int_binomial(5, 2) == 10);
  CHECK(int_binomial(17, 0) == 1);
  CHECK(int_binomial(-1, 2) == 1);
  CHECK(int_binomial(-3, 3) == -10);
  CHECK(int_binomial(2, 5) == 0);
  // 30! overflows 64 bits
  CHECK(factorial(30).get_str() == "265252859812191058636308480000000");
}

TEST_CASE("multiset size, order and subtraction", "[multiset]") {
  const BasisId a{1}, b{2}, c{3};
  Multiset chi = Multiset::single(a, 2) + Multiset::single(b);
  CHECK(Multiset{}.size() == 0);
  CHECK(chi.size() == 3);
  CHECK(Multiset::single(unit_basis).size() == 1);
  CHECK(ms_leq(Multiset::single(a), chi));
  CHECK_FALSE(ms_leq(Multiset::single(b), Multiset::single(a, 2)));
  CHECK(ms_sub(chi, Multiset::single(a)) == Multiset::single(a) + Multiset::single(b));
  CHECK_THROWS_AS(ms_sub(Multiset::single(a), Multiset::single(b)), MultisetError);

  CHECK(multinomial(Multiset{}) == 1);
  CHECK(multinomial(chi) == 3);
  CHECK(multinomial(Multiset::single(a) + Multiset::single(b) + Multiset::single(c)) == 6);
}

TEST_CASE("sub-multiset enumeration and compositions", "[multiset]") {
  const BasisId a{1}, b{2};
  CHECK(enumerate_sub(Multiset::single(a, 2), 1) == std::vector<Multiset>{Multiset::single(a)});
  CHECK(enumerate_sub(Multiset::single(a) + Multiset::single(b), 1) ==
        std::vector<Multiset>{Multiset::single(a), Multiset::single(b)});
  CHECK(enumerate_sub(Multiset::single(a), 2).empty());

  const auto two_a = compositions(Multiset::single(a, 2), 2);
  REQUIRE(two_a.size() == 3);
  for (const auto& split : two_a) CHECK(split[0] + split[1] == Multiset::single(a, 2));
  CHECK(compositions(Multiset::single(a) + Multiset::single(b), 2).size() == 4);
  CHECK(compositions(Multiset::single(b, 3), 1) == std::vector<std::vector<Multiset>>{{Multiset::single(b, 3)}});

  // count of k-part compositions is prod over support of C(n + k - 1, k - 1)
  const Multiset chi = Multiset::single(a, 2) + Multiset::single(b, 1);
  for (unsigned k = 1; k <= 4; ++k) {
    const Integer expected = int_binomial(2 + k - 1, k - 1) * int_binomial(1 + k - 1, k - 1);
    CHECK(Integer(compositions(chi, k).size()) == expected);
  }
  // multisets of size s over a window of w: C(w + s - 1, s)
  for (unsigned w = 1; w <= 3; ++w)
    for (unsigned s = 0; s <= 3; ++s) CHECK(Integer(multisets_of_size(s, w).size()) == int_binomial(w + s - 1, s));
}

TEST_CASE("coefficient algebra products", "[coeff_algebra]") {
  const auto poly = CoeffAlgebra::parse("poly");
  const auto tr3 = CoeffAlgebra::parse("trunc:3");
  const BasisId t{1}, t2{2}, t3{3};
  CHECK(alg_mul(poly, AlgElem(t), AlgElem(t2)) == AlgElem(t3));
  CHECK(alg_mul(tr3, AlgElem(t), AlgElem(t2)).is_zero());
  CHECK(alg_mul(tr3, AlgElem(unit_basis), AlgElem(t2)) == AlgElem(t2));
  CHECK_THROWS_AS(tr3.check(t3), SpecMismatch);

  CHECK(pi(poly, Multiset{}) == AlgElem(unit_basis));
  CHECK(pi(poly, Multiset::single(t) + Multiset::single(t2)) == AlgElem(t3));
  CHECK(pi(tr3, Multiset::single(t2, 2)).is_zero());

  CHECK(poly.label(t2) == "t^2");
  CHECK(poly.find_label("t^2") == t2);
  CHECK(tr3.find_label("t^3") == std::nullopt);
  CHECK_THROWS_AS(CoeffAlgebra::parse("trunc:x"), AlgebraError);
  CHECK_THROWS_AS(CoeffAlgebra::parse("laurent"), AlgebraError);
}

TEST_CASE("product tables are validated", "[coeff_algebra]") {
  const auto z2 = CoeffAlgebra::load_table(kSamples / "z2_group_algebra.json");
  CHECK(validate_table(z2).valid());
  const BasisId g{1};
  CHECK(z2.multiply(g, g) == AlgElem(unit_basis));

  const auto tr2 = CoeffAlgebra::load_table(kSamples / "trunc2_as_table.json");
  CHECK(validate_table(tr2).valid());
  for (std::uint32_t i = 0; i < 2; ++i)
    for (std::uint32_t j = 0; j < 2; ++j)
      CHECK(tr2.multiply(BasisId{i}, BasisId{j}) == CoeffAlgebra::truncated(2).multiply(BasisId{i}, BasisId{j}));

  const auto bad = CoeffAlgebra::load_table(kFixtures / "noncommutative.json");
  const auto report = validate_table(bad);
  REQUIRE_FALSE(report.valid());
  CHECK(report.violations.front() == "not commutative at (a, b)");

  try {
    CoeffAlgebra::load_table(kFixtures / "malformed.json");
    FAIL("expected a parse error");
  } catch (const TableParseError& e) {
    CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("/products/1/0/0"));
  }
  CHECK_THROWS_AS(CoeffAlgebra::parse_table_json("{\"dim\": 1,"), TableParseError);
  CHECK_THROWS_AS(CoeffAlgebra::load_table(kFixtures / "missing.json"), TableParseError);
}

TEST_CASE("dense oracle rank agrees with the echelon basis", "[linalg]") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> small(-2, 2);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::vector<Rational>> rows(6, std::vector<Rational>(5));
    EchelonBasis<int> basis;
    for (auto& row : rows) {
      LinearCombination<int> v;
      for (int c = 0; c < 5; ++c) {
        row[c] = small(rng) * (trial % 3 == 0 ? c % 2 : 1);
        v.add(c, row[c]);
      }
      basis.insert(v);
    }
    CHECK(basis.rank() == oracle::dense_rank(rows));
  }
}
