// Small tour: a normal form, p1, and the basis of TS^2 over the group algebra of Z/2.

#include <superweyl/superweyl.hpp>

#include <iostream>

using namespace superweyl;

int main(int argc, char** argv) {
  const std::string table = argc > 1 ? argv[1] : "samples/z2_group_algebra.json";
  const CoeffAlgebra alg = CoeffAlgebra::load_table(table);
  if (auto report = validate_table(alg); !report.valid()) {
    for (const auto& v : report.violations) std::cerr << v << "\n";
    return 1;
  }
  Workspace ws(alg);

  std::cout << "x1:g xm1:g = " << format_uelem(alg, parse_uelem("x1:g xm1:g", ws.ops)) << "\n";

  const Multiset phi = parse_multiset_literal("{g:1}", alg);
  const Multiset chi = parse_multiset_literal("{1:1, g:1}", alg);
  std::cout << "p1({g:1}, {1:1, g:1}) = " << format_uelem(alg, ws.ops.p1(phi, chi)) << "\n";

  const unsigned m = 2;
  const auto basis = ws.tm.ts_basis(m, alg.window(2));
  std::cout << "TS^" << m << " has dimension " << basis.size() << " (formula " << ts_dimension(m, 2).get_str()
            << ")\n";
  for (const auto& idx : basis) {
    const Tensor w = ws.tm.act(ws.ops.p(idx.phi1, idx.phi2, idx.xi), TensorModule::highest_weight_vector(m));
    std::cout << "  " << format_index(alg, idx) << " -> " << ws.tm.express_in_ts_basis(w).size() << " coordinate(s)\n";
  }
  return 0;
}
