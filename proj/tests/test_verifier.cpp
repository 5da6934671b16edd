#include <superweyl/superweyl.hpp>

#include <catch_amalgamated.hpp>

using namespace superweyl;

namespace {

void require_pass(const CheckReport& r) {
  INFO(r.to_json().dump());
  CHECK(r.instances > 0);
  CHECK(r.passed());
}

}  // namespace

TEST_CASE("identities of the operator families hold", "[verifier]") {
  for (std::size_t n : {1, 2, 3}) {
    Workspace ws(CoeffAlgebra::truncated(n));
    for (int item = 1; item <= 7; ++item) require_pass(verify_degp(item, ws));
  }
}

TEST_CASE("the sign and binomial variants of items 2 and 5 fail", "[verifier][variant]") {
  Workspace ws(CoeffAlgebra::truncated(1));
  const CheckReport two = verify_degp(2, ws, {}, DegpForm::variant);
  CHECK(two.id == "degp2-variant");
  CHECK_FALSE(two.passed());
  const CheckReport five = verify_degp(5, ws, {}, DegpForm::variant);
  CHECK(five.id == "degp5-variant");
  CHECK_FALSE(five.passed());
}

TEST_CASE("coproduct, p1 on V and the spanning lemmas", "[verifier]") {
  Workspace ws(CoeffAlgebra::truncated(2));
  require_pass(verify_deltap(ws));
  require_pass(verify_p1v(ws));
  require_pass(verify_spanning_lemmas(ws, 3));
  require_pass(verify_tensor(ws, 3, 1, 50));
}

TEST_CASE("p v is a signed basis vector and the basis has full rank", "[verifier]") {
  Workspace ws(CoeffAlgebra::truncated(2));
  for (unsigned m = 0; m <= 3; ++m) {
    const CheckReport r = verify_pv_and_basis(ws, m);
    require_pass(r);
    CHECK(r.params["indices"] == r.params["rank"]);
    CHECK(r.params["rank"] == r.params["symmetrizer_rank"]);
  }
  CHECK(verify_pv_and_basis(ws, 2).params["rank"] == 19);
  CHECK(verify_pv_and_basis(ws, 0).params["rank"] == 1);
}

TEST_CASE("defining relations on the highest weight vector", "[verifier]") {
  Workspace ws(CoeffAlgebra::truncated(3));
  require_pass(verify_relations(ws, 4));
  require_pass(verify_weyl_ops(ws, 3));
}

TEST_CASE("the reversed Koszul convention differs by a computable sign", "[verifier]") {
  require_pass(verify_reversed_koszul(CoeffAlgebra::truncated(2), 3));
}

TEST_CASE("verify_all on a fixed algebra passes and is deterministic", "[verifier]") {
  VerifyPlan plan;
  plan.algebra = CoeffAlgebra::truncated(2);
  const auto a = verify_all(plan);
  const auto b = verify_all(plan);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    require_pass(a[i]);
    CHECK(a[i].to_json(false).dump() == b[i].to_json(false).dump());
  }
}

TEST_CASE("verify_all over a table algebra", "[verifier]") {
  VerifyPlan plan;
  plan.algebra = CoeffAlgebra::load_table(SUPERWEYL_SOURCE_DIR "/samples/z2_group_algebra.json");
  for (const auto& r : verify_all(plan)) require_pass(r);
}

TEST_CASE("report JSON schema", "[verifier]") {
  Workspace ws(CoeffAlgebra::truncated(1));
  const json j = verify_degp(4, ws).to_json();
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"check", "params", "instances", "failures", "ms"});
  CHECK_THROWS_AS(run_check("degp9", {}), std::invalid_argument);
}
