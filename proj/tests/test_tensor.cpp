#include "oracles.hpp"

#include <catch_amalgamated.hpp>

using namespace superweyl;
using enum GenId;

namespace {

SuperBasisVec v1(std::uint32_t b) { return {VSlot::v1, BasisId{b}}; }
SuperBasisVec v2(std::uint32_t b) { return {VSlot::v2, BasisId{b}}; }
SuperBasisVec v3(std::uint32_t b) { return {VSlot::v3, BasisId{b}}; }

}  // namespace

TEST_CASE("natural action on V (x) A", "[tensor_rep]") {
  TensorModule tm(CoeffAlgebra::truncated(2));
  const AlgElem one(unit_basis);
  CHECK(tm.nat_act(xm1, one, v1(1)) == VecElem(v2(1)));
  CHECK(tm.nat_act(xm1, one, v3(1)).is_zero());
  CHECK(tm.nat_act(h1, one, v3(1)).is_zero());
  CHECK(tm.nat_act(h1, one, v2(1)) == VecElem(v2(1), Rational(-1)));
  CHECK(tm.nat_act(xm1, AlgElem(BasisId{1}), v1(1)).is_zero());  // t * t = 0 in trunc:2
}

TEST_CASE("permutation action carries Koszul signs", "[tensor_rep]") {
  const std::vector<unsigned> swap{1, 0}, id{0, 1};
  const Tensor odd_odd = Tensor::pure({v3(0), v3(1)});
  CHECK(TensorModule::sigma_act(swap, odd_odd) == Tensor::pure({v3(1), v3(0)}, Rational(-1)));
  const Tensor even_odd = Tensor::pure({v1(0), v3(1)});
  CHECK(TensorModule::sigma_act(swap, even_odd) == Tensor::pure({v3(1), v1(0)}));
  CHECK(TensorModule::sigma_act(id, odd_odd) == odd_odd);
}

TEST_CASE("the signed symmetrizer", "[tensor_rep]") {
  const Tensor single = Tensor::pure({v2(1)});
  CHECK(TensorModule::symmetrize(single) == single);
  CHECK(TensorModule::symmetrize(Tensor::pure({v3(1), v3(1)})).is_zero());
  CHECK(TensorModule::symmetrize(Tensor::pure({v1(0), v2(1)})) ==
        Tensor::pure({v1(0), v2(1)}) + Tensor::pure({v2(1), v1(0)}));
}

TEST_CASE("action of enveloping-algebra elements on tensors", "[tensor_rep]") {
  Enveloping env(CoeffAlgebra::truncated(2));
  WeylOperators ops(env);
  TensorModule tm(env.algebra());
  const Tensor vv = TensorModule::highest_weight_vector(2);
  CHECK(tm.act(env.gen(xm3, unit_basis), vv) == Tensor::pure({v3(0), v1(0)}) + Tensor::pure({v1(0), v3(0)}));
  for (unsigned m = 0; m <= 3; ++m) CHECK(tm.act(env.gen(x1, BasisId{1}), TensorModule::highest_weight_vector(m)).is_zero());

  // h1 (x) 1 is diagonal on the basis with eigenvalue |phi1| - |phi2|
  for (unsigned m = 1; m <= 3; ++m)
    for (const auto& idx : tm.ts_basis(m, 2)) {
      const Tensor v = tm.v_vector(idx);
      const long eig = static_cast<long>(idx.phi1.size()) - static_cast<long>(idx.phi2.size());
      CHECK(tm.act(env.gen(h1, unit_basis), v) == Rational(eig) * v);
    }
}

TEST_CASE("basis vectors of TS^m", "[tensor_rep]") {
  TensorModule tm(CoeffAlgebra::truncated(3));
  const BasisId a{1}, b{2};
  CHECK(tm.v_vector({Multiset::single(a), {}, {}}) == Tensor::pure({v1(1)}));
  CHECK(tm.v_vector({{}, {}, {a}}) == Tensor::pure({v3(1)}));
  CHECK(tm.v_vector({Multiset::single(a), Multiset::single(b), {}}) ==
        Tensor::pure({v1(1), v2(2)}) + Tensor::pure({v2(2), v1(1)}));

  CHECK(TensorModule::highest_weight_vector(0) == Tensor::pure({}));
  CHECK(TensorModule::highest_weight_vector(1) == Tensor::pure({v1(0)}));
  CHECK(TensorModule::highest_weight_vector(2) == Tensor::pure({v1(0), v1(0)}));
}

TEST_CASE("basis sizes match the symmetrizer oracle", "[tensor_rep][oracle]") {
  const std::vector<std::pair<unsigned, unsigned>> cases{{1, 1}, {2, 1}, {3, 1}, {1, 2}, {2, 2}, {3, 2}, {2, 3}};
  for (auto [m, d] : cases) {
    TensorModule tm(CoeffAlgebra::truncated(d));
    const std::size_t oracle_rank = oracle::symmetrizer_rank(m, d);
    INFO("m=" << m << " d=" << d);
    CHECK(tm.ts_basis(m, d).size() == oracle_rank);
    CHECK(tm.symmetrizer_rank(m, d) == oracle_rank);
    CHECK(ts_dimension(m, d) == Integer(oracle_rank));
  }
  CHECK(oracle::symmetrizer_rank(1, 1) == 3);
  CHECK(oracle::symmetrizer_rank(2, 1) == 5);
  CHECK(oracle::symmetrizer_rank(2, 2) == 19);
  CHECK(TensorModule(CoeffAlgebra::truncated(2)).ts_basis(0, 2).size() == 1);
}

TEST_CASE("coordinates in the TS basis", "[tensor_rep]") {
  TensorModule tm(CoeffAlgebra::truncated(2));
  for (const auto& idx : tm.ts_basis(2, 2)) {
    const auto coords = tm.express_in_ts_basis(tm.v_vector(idx));
    REQUIRE(coords.size() == 1);
    CHECK(coords.begin()->first == idx);
    CHECK(coords.begin()->second == 1);
  }
  CHECK(tm.express_in_ts_basis(Tensor(2)).empty());
  CHECK_THROWS_AS(tm.express_in_ts_basis(Tensor::pure({v1(0), v2(0)})), NotInTsSpan);
}

TEST_CASE("p acting on the highest weight vector is a signed basis vector", "[tensor_rep]") {
  Enveloping env(CoeffAlgebra::truncated(2));
  WeylOperators ops(env);
  TensorModule tm(env.algebra());
  for (unsigned m = 1; m <= 3; ++m) {
    const Tensor v = TensorModule::highest_weight_vector(m);
    for (const auto& idx : tm.ts_basis(m, 2)) {
      const int sign = (idx.phi1.size() + idx.phi2.size()) % 2 == 0 ? 1 : -1;
      CHECK(tm.act(ops.p(idx.phi1, idx.phi2, idx.xi), v) == Rational(sign) * tm.v_vector(idx));
    }
  }
}

TEST_CASE("the images p(idx) v have full rank by dense elimination", "[tensor_rep][oracle]") {
  Enveloping env(CoeffAlgebra::truncated(2));
  WeylOperators ops(env);
  TensorModule tm(env.algebra());
  const unsigned m = 2;
  const auto keys = oracle::all_coords(m, 2);
  std::map<TensorKey, std::size_t> column;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    TensorKey k;
    for (const auto& c : keys[i]) k.push_back({static_cast<VSlot>(c.slot), BasisId{c.basis}});
    column[k] = i;
  }
  std::vector<std::vector<Rational>> rows;
  const auto basis = tm.ts_basis(m, 2);
  for (const auto& idx : basis) {
    std::vector<Rational> row(keys.size(), Rational(0));
    const Tensor w = tm.act(ops.p(idx.phi1, idx.phi2, idx.xi), TensorModule::highest_weight_vector(m));
    for (const auto& [k, c] : w.terms()) row[column.at(k)] = c;
    rows.push_back(std::move(row));
  }
  CHECK(oracle::dense_rank(rows) == basis.size());
  CHECK(basis.size() == 19);
}

TEST_CASE("tuple canonicalization", "[tensor_rep]") {
  const BasisId a{1}, b{2}, c{3};
  CHECK(canonicalize_xi({a, b}) == std::pair<int, Tuple>{1, {a, b}});
  CHECK(canonicalize_xi({b, a}) == std::pair<int, Tuple>{-1, {a, b}});
  CHECK(canonicalize_xi({c, a, b}) == std::pair<int, Tuple>{1, {a, b, c}});
  CHECK(canonicalize_xi({a, a}).first == 0);
}
