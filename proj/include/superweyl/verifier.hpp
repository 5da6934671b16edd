#pragma once

// Instance checks for the identities satisfied by p1, q1, p and for the
// structure maps they rest on. Every comparison is exact.

#include <superweyl/coeff_algebra.hpp>
#include <superweyl/coproduct.hpp>
#include <superweyl/io.hpp>
#include <superweyl/linalg.hpp>
#include <superweyl/multiset.hpp>
#include <superweyl/pbw.hpp>
#include <superweyl/sl21.hpp>
#include <superweyl/tensor_rep.hpp>
#include <superweyl/weyl_ops.hpp>

#include <chrono>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace superweyl {

struct CheckFailure {
  json params;
  std::string diagnostic;
};

struct CheckReport {
  std::string id;
  json params = json::object();
  std::size_t instances = 0;
  std::vector<CheckFailure> failures;
  long long ms = 0;

  bool passed() const { return failures.empty(); }

  void fail(json p, std::string diagnostic) { failures.push_back({std::move(p), std::move(diagnostic)}); }

  /// `timing` false drops the only non-deterministic field.
  json to_json(bool timing = true) const {
    json f = json::array();
    for (const auto& x : failures) f.push_back(json{{"params", x.params}, {"diagnostic", x.diagnostic}});
    json out{{"check", id}, {"params", params}, {"instances", instances}, {"failures", std::move(f)}};
    if (timing) out["ms"] = ms;
    return out;
  }
};

/// Everything needed to compute over one coefficient algebra.
class Workspace {
 public:
  explicit Workspace(CoeffAlgebra alg, const BracketTable& table = standard_bracket_table(),
                     Koszul koszul = Koszul::preceding)
      : env(std::move(alg), table), ops(env), tm(env.algebra(), koszul) {}
  Workspace(const Workspace&) = delete;
  Workspace& operator=(const Workspace&) = delete;

  const CoeffAlgebra& alg() const { return env.algebra(); }

  Enveloping env;
  WeylOperators ops;
  TensorModule tm;
};

namespace detail {

template <class F>
CheckReport timed(std::string id, json params, F&& body) {
  CheckReport report;
  report.id = std::move(id);
  report.params = std::move(params);
  const auto start = std::chrono::steady_clock::now();
  body(report);
  report.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

inline std::vector<Multiset> multisets_between(unsigned lo, unsigned hi, std::uint32_t window) {
  std::vector<Multiset> out;
  for (unsigned s = lo; s <= hi; ++s)
    for (auto& m : multisets_of_size(s, window)) out.push_back(std::move(m));
  return out;
}

inline Rational sign_of(long exponent) { return (exponent % 2 == 0) ? Rational(1) : Rational(-1); }

inline std::string describe(const CoeffAlgebra& alg, const UElem& u) {
  std::string s = format_uelem(alg, u);
  return s.size() > 400 ? s.substr(0, 400) + " ..." : s;
}

inline std::string describe(const CoeffAlgebra& alg, const Tensor& t) {
  std::string s;
  for (const auto& [key, c] : t.terms()) {
    if (!s.empty()) s += " + ";
    s += to_string(c) + " " + format_key(alg, key);
    if (s.size() > 400) return s + " ...";
  }
  return s.empty() ? "0" : s;
}

inline std::uint32_t window_of(const CoeffAlgebra& alg, std::uint32_t poly_window) {
  return alg.window(poly_window);
}

}  // namespace detail

struct DegpRanges {
  unsigned max_size = 3;  // |chi|, |phi|, |psi|, |phi-hat|
  unsigned max_r = 4;
  unsigned max_n = 2;
  unsigned max_i = 3;
  unsigned max_j = 2;
  std::uint32_t poly_window = 3;
};

inline json to_json(const DegpRanges& r) {
  return json{{"max_size", r.max_size}, {"max_r", r.max_r}, {"max_n", r.max_n}, {"max_i", r.max_i}, {"max_j", r.max_j}};
}

/// Items 2 and 5 have a variant form. In the variant, item 2 carries a factor
/// (-1)^{|psi|} on q1 and item 5 puts the binomial on the leading term instead
/// of on q1. Both variants fail on small instances (psi = phi = chi_1 for item
/// 2, any phi with phi(1) > 0 for item 5). The corrected forms are the ones
/// items 1 and 4 force.
enum class DegpForm { corrected, variant };

/// The seven parts of the proposition on p1 and q1.
inline CheckReport verify_degp(int item, Workspace& ws, const DegpRanges& ranges = {},
                               DegpForm form = DegpForm::corrected) {
  const bool variant = form == DegpForm::variant && (item == 2 || item == 5);
  const std::string id = "degp" + std::to_string(item) + (variant ? "-variant" : "");
  json params = to_json(ranges);
  params["algebra"] = ws.alg().name();
  return detail::timed(id, params, [&](CheckReport& rep) {
    const CoeffAlgebra& alg = ws.alg();
    auto& ops = ws.ops;
    auto& env = ws.env;
    const std::uint32_t d = detail::window_of(alg, ranges.poly_window);
    const auto ms = [&](const Multiset& m) { return format_multiset(alg, m); };
    const auto nonempty = detail::multisets_between(1, ranges.max_size, d);
    const auto any = detail::multisets_between(0, ranges.max_size, d);

    switch (item) {
      case 1:
        for (const auto& chi : nonempty)
          for (unsigned r = chi.size(); r <= ranges.max_r; ++r) {
            ++rep.instances;
            UElem u = env.multiply(ops.X_pm1(+1, chi), ops.X_pm1(-1, Multiset::single(unit_basis, r)));
            u.add(ops.p1(Multiset::single(unit_basis, r - chi.size()), chi), -detail::sign_of(r));
            if (!in_left_ideal_x1(u))
              rep.fail({{"chi", ms(chi)}, {"r", r}},
                       "outside the left ideal: " + detail::describe(alg, outside_left_ideal_x1(u)));
          }
        break;
      case 2:
        for (const auto& psi : nonempty)
          for (const auto& phi : any) {
            if (phi.size() < psi.size()) continue;
            ++rep.instances;
            UElem u = env.multiply(ops.X_pm1(+1, psi), ops.X_pm1(-1, phi));
            const Rational s = variant ? detail::sign_of(psi.size()) : Rational(1);
            u.add(ops.q1(phi, psi), -s);
            const UElem rest = outside_left_ideal_x1(u);
            const FamilyBounds bounds{{GenId::xm1, phi.size() - psi.size()}, {GenId::h1, psi.size() - 1}};
            if (!in_filtered_span(rest, bounds))
              rep.fail({{"psi", ms(psi)}, {"phi", ms(phi)}},
                       "residual outside the filtered span: " + detail::describe(alg, rest));
          }
        break;
      case 3:
        for (const auto& phi : any)
          for (const auto& chi : nonempty) {
            ++rep.instances;
            UElem u = ops.p1(phi, chi);
            u.add(env.multiply(ops.X_pm1(-1, phi), ops.H(1, chi)), -detail::sign_of(chi.size() + phi.size()));
            const FamilyBounds bounds{{GenId::xm1, phi.size()}, {GenId::h1, chi.size() - 1}};
            if (!in_filtered_span(u, bounds))
              rep.fail({{"phi", ms(phi)}, {"chi", ms(chi)}}, "difference: " + detail::describe(alg, u));
          }
        break;
      case 4:
        for (const auto& chi : nonempty)
          for (unsigned r = chi.size(); r <= ranges.max_r; ++r) {
            ++rep.instances;
            const UElem lhs = ops.q1(Multiset::single(unit_basis, r), chi);
            const UElem rhs =
                env.multiply(env.divided_power(Generator{GenId::xm1, unit_basis}, r - chi.size()), ops.H(1, chi));
            if (!(lhs == rhs))
              rep.fail({{"chi", ms(chi)}, {"r", r}}, "difference: " + detail::describe(alg, lhs - rhs));
          }
        break;
      case 5:
        for (const auto& phi : any)
          for (const auto& chi : nonempty)
            for (unsigned r = chi.size(); r <= ranges.max_r; ++r) {
              ++rep.instances;
              const unsigned p1count = phi[unit_basis];
              const unsigned gap = r - chi.size();
              const Rational binom(int_binomial(p1count + gap, p1count));
              UElem u = ops.q1(phi + Multiset::single(unit_basis, r), chi);
              const UElem lead = env.multiply(
                  {env.divided_power(Generator{GenId::xm1, unit_basis}, gap), ops.X_pm1(-1, phi), ops.H(1, chi)});
              if (variant) {
                u.add(lead, -binom);
              } else {
                u *= binom;
                u -= lead;
              }
              // sum over s of (xm1 (x) 1)^(s) U_{|phi|+r-s-|chi|}(xm1 (x) A) U_{|chi|}(h1 (x) A)
              const long s_lo = static_cast<long>(gap) + 1;
              const long s_hi = std::min<long>(r, static_cast<long>(gap + phi.size() - p1count));
              const unsigned xm1_cap = phi.size() + gap;
              bool ok = true;
              for (const auto& [m, c] : u) {
                bool inside = s_lo <= s_hi && family_degree(m, GenId::xm1) <= xm1_cap &&
                              family_degree(m, GenId::h1) <= chi.size();
                unsigned unit_exp = 0;
                for (const auto& f : m.factors) {
                  if (f.gen.gen != GenId::xm1 && f.gen.gen != GenId::h1) inside = false;
                  if (f.gen == Generator{GenId::xm1, unit_basis}) unit_exp = f.exp;
                }
                if (!inside || static_cast<long>(unit_exp) < s_lo) ok = false;
              }
              if (!ok)
                rep.fail({{"phi", ms(phi)}, {"chi", ms(chi)}, {"r", r}},
                         "difference outside the stated sum: " + detail::describe(alg, u));
            }
        break;
      case 6:
        for (const auto& phi : any)
          for (const auto& chi : nonempty)
            for (unsigned k = 0; k <= chi[unit_basis]; ++k) {
              ++rep.instances;
              const UElem lhs = ops.p1(phi, chi);
              const long offset = static_cast<long>(phi.size() + chi.size()) - static_cast<long>(k);
              UElem rhs = env.multiply(ops.p1(phi, chi.minus(Multiset::single(unit_basis, k))),
                                       env.h_binomial(GenId::h1, offset, k));
              rhs *= detail::sign_of(k) / Rational(int_binomial(chi[unit_basis], k));
              if (!(lhs == rhs))
                rep.fail({{"phi", ms(phi)}, {"chi", ms(chi)}, {"k", k}},
                         "difference: " + detail::describe(alg, lhs - rhs));
            }
        break;
      case 7:
        for (unsigned n = 0; n <= ranges.max_n; ++n)
          for (const auto& xi : tuples_of_length(n, d))
            for (unsigned i = 0; i <= ranges.max_i; ++i)
              for (unsigned j = 0; j <= ranges.max_j; ++j) {
                ++rep.instances;
                const UElem x = ops.X_tuple(GenId::xm3, xi);
                const UElem lhs = env.multiply(env.h_binomial(GenId::h1, i, j), x);
                const UElem rhs = env.multiply(x, env.h_binomial(GenId::h1, static_cast<long>(i + n), j));
                if (!(lhs == rhs))
                  rep.fail({{"xi", format_tuple(alg, xi)}, {"i", i}, {"j", j}},
                           "difference: " + detail::describe(alg, lhs - rhs));
              }
        break;
      default:
        rep.fail({{"item", item}}, "no such item");
    }
  });
}

/// Coproduct of p1 against the sum over compositions. For every k the two sides
/// are compared as operators on all pure tensors of T^k; for k = 2 they are
/// also compared as elements of U (x) U.
inline CheckReport verify_deltap(Workspace& ws, unsigned max_total = 3, unsigned max_k = 3,
                                 std::uint32_t poly_window = 2) {
  json params{{"algebra", ws.alg().name()}, {"max_total", max_total}, {"max_k", max_k}};
  return detail::timed("deltap", params, [&](CheckReport& rep) {
    const CoeffAlgebra& alg = ws.alg();
    const std::uint32_t d = detail::window_of(alg, poly_window);
    const auto ms = [&](const Multiset& m) { return format_multiset(alg, m); };
    std::vector<SuperBasisVec> slots;
    for (VSlot s : {VSlot::v1, VSlot::v2, VSlot::v3})
      for (std::uint32_t b = 0; b < d; ++b) slots.push_back(SuperBasisVec{s, BasisId{b}});

    // p1(theta, psi) applied to one basis vector of V (x) A.
    std::map<std::tuple<Multiset, Multiset, SuperBasisVec>, VecElem> single;
    auto act_single = [&](const Multiset& theta, const Multiset& psi, const SuperBasisVec& w) -> const VecElem& {
      auto key = std::make_tuple(theta, psi, w);
      auto it = single.find(key);
      if (it != single.end()) return it->second;
      VecElem out;
      const Tensor image = ws.tm.act(ws.ops.p1(theta, psi), Tensor::pure({w}));
      for (const auto& [k, c] : image.terms()) out.add(k[0], c);
      return single.emplace(std::move(key), std::move(out)).first->second;
    };

    for (unsigned total = 0; total <= max_total; ++total)
      for (unsigned a = 0; a <= total; ++a)
        for (const auto& phi : multisets_of_size(a, d))
          for (const auto& chi : multisets_of_size(total - a, d)) {
            const UElem p = ws.ops.p1(phi, chi);
            const auto p_parity = homogeneous_parity(p);
            for (unsigned k = 1; k <= max_k; ++k) {
              ++rep.instances;
              const auto thetas = compositions(phi, k);
              const auto psis = compositions(chi, k);
              bool ok = true;
              std::string diag;
              for (const auto& key : ws.tm.pure_keys(k, d)) {
                const Tensor lhs = ws.tm.act(p, Tensor::pure(key));
                Tensor rhs(k);
                for (const auto& theta : thetas)
                  for (const auto& psi : psis) {
                    // rho(u_1, ..., u_k): u_j passes the slots to its left.
                    Tensor part = Tensor::pure(TensorKey{}, Rational(1));
                    int passed = 0;
                    int sign = 1;
                    for (unsigned j = 0; j < k; ++j) {
                      const UElem uj = ws.ops.p1(theta[j], psi[j]);
                      if (homogeneous_parity(uj).value_or(0) && (passed & 1)) sign = -sign;
                      passed += parity(key[j]);
                      const VecElem& image = act_single(theta[j], psi[j], key[j]);
                      Tensor next(j + 1);
                      for (const auto& [prefix, c] : part.terms())
                        for (const auto& [w, cw] : image) {
                          TensorKey longer = prefix;
                          longer.push_back(w);
                          next.add(longer, c * cw);
                        }
                      part = std::move(next);
                      if (part.is_zero()) break;
                    }
                    if (!part.is_zero()) rhs.add(part, Rational(sign));
                  }
                if (!(lhs == rhs)) {
                  ok = false;
                  diag = "operators differ on " + format_key(alg, key) + ": " + detail::describe(alg, lhs - rhs);
                  break;
                }
              }
              if (ok && k == 2) {
                UTensor2 expected;
                for (const auto& theta : thetas)
                  for (const auto& psi : psis)
                    expected += tensor_product(ws.ops.p1(theta[0], psi[0]), ws.ops.p1(theta[1], psi[1]));
                if (!(coproduct(p, ws.env) == expected)) {
                  ok = false;
                  diag = "materialized coproduct differs from the composition sum";
                }
              }
              if (!p_parity) {
                ok = false;
                diag = "p1 is not parity-homogeneous";
              }
              if (!ok) rep.fail({{"phi", ms(phi)}, {"chi", ms(chi)}, {"k", k}}, diag);
            }
          }
  });
}

/// p1(phi, psi)(v1 (x) a) = 0 when |phi| + |psi| > 1, and
/// p1(phi, chi) v1^k = (-1)^k v(chi, phi, empty) with k = |phi| + |chi|.
inline CheckReport verify_p1v(Workspace& ws, unsigned max_total = 3, std::uint32_t poly_window = 2) {
  json params{{"algebra", ws.alg().name()}, {"max_total", max_total}};
  return detail::timed("p1v", params, [&](CheckReport& rep) {
    const CoeffAlgebra& alg = ws.alg();
    const std::uint32_t d = detail::window_of(alg, poly_window);
    const auto ms = [&](const Multiset& m) { return format_multiset(alg, m); };
    for (unsigned total = 0; total <= max_total; ++total)
      for (unsigned a = 0; a <= total; ++a)
        for (const auto& phi : multisets_of_size(a, d))
          for (const auto& chi : multisets_of_size(total - a, d)) {
            const UElem p = ws.ops.p1(phi, chi);
            if (total >= 2)
              for (std::uint32_t b = 0; b < d; ++b) {
                ++rep.instances;
                const Tensor t = ws.tm.act(p, Tensor::pure({SuperBasisVec{VSlot::v1, BasisId{b}}}));
                if (!t.is_zero())
                  rep.fail({{"phi", ms(phi)}, {"psi", ms(chi)}, {"a", alg.label(BasisId{b})}},
                           "p1 does not kill v1 (x) a: " + detail::describe(alg, t));
              }
            ++rep.instances;
            const Tensor lhs = ws.tm.act(p, TensorModule::highest_weight_vector(total));
            const Tensor rhs = detail::sign_of(total) * ws.tm.v_vector(WeylIndex{chi, phi, {}});
            if (!(lhs == rhs))
              rep.fail({{"phi", ms(phi)}, {"chi", ms(chi)}}, "difference: " + detail::describe(alg, lhs - rhs));
          }
  });
}

/// p(phi1, phi2, xi) v = (-1)^{|phi1|+|phi2|} v(phi1, phi2, xi) for every
/// canonical index, and {p(...) v} has rank equal to dim TS^m computed as the
/// index count, by the closed formula and as the symmetrizer rank.
inline CheckReport verify_pv_and_basis(Workspace& ws, unsigned m, std::uint32_t poly_window = 2) {
  json params{{"algebra", ws.alg().name()}, {"m", m}};
  return detail::timed("pv", params, [&](CheckReport& rep) {
    const CoeffAlgebra& alg = ws.alg();
    const std::uint32_t d = detail::window_of(alg, poly_window);
    const Tensor v = TensorModule::highest_weight_vector(m);
    const auto indices = ws.tm.ts_basis(m, d);
    EchelonBasis<TensorKey> images;
    for (const auto& idx : indices) {
      ++rep.instances;
      const Tensor t = ws.tm.act(ws.ops.p(idx.phi1, idx.phi2, idx.xi), v);
      const Tensor expected = detail::sign_of(idx.phi1.size() + idx.phi2.size()) * ws.tm.v_vector(idx);
      if (!(t == expected)) rep.fail({{"index", format_index(alg, idx)}}, "difference: " + detail::describe(alg, t - expected));
      images.insert(t.terms());
    }
    const std::size_t sym = ws.tm.symmetrizer_rank(m, d);
    const Integer formula = ts_dimension(m, d);
    rep.params["indices"] = indices.size();
    rep.params["rank"] = images.rank();
    rep.params["symmetrizer_rank"] = sym;
    rep.params["formula"] = formula.get_str();
    ++rep.instances;
    if (images.rank() != indices.size() || sym != indices.size() || formula != Integer(indices.size()))
      rep.fail({{"m", m}}, "rank " + std::to_string(images.rank()) + ", indices " + std::to_string(indices.size()) +
                               ", symmetrizer rank " + std::to_string(sym) + ", formula " + formula.get_str());
  });
}

/// With the reversed sign convention the images differ from the v-vectors by
/// exactly (-1)^{n(n-1)/2}, n = |xi|.
inline CheckReport verify_reversed_koszul(const CoeffAlgebra& alg, unsigned m, std::uint32_t poly_window = 2) {
  json params{{"algebra", alg.name()}, {"m", m}};
  return detail::timed("koszul-reversed", params, [&](CheckReport& rep) {
    Workspace ws(alg, standard_bracket_table(), Koszul::following);
    const std::uint32_t d = detail::window_of(alg, poly_window);
    const Tensor v = TensorModule::highest_weight_vector(m);
    for (const auto& idx : ws.tm.ts_basis(m, d)) {
      ++rep.instances;
      const long n = static_cast<long>(idx.xi.size());
      const Tensor t = ws.tm.act(ws.ops.p(idx.phi1, idx.phi2, idx.xi), v);
      const Tensor expected =
          detail::sign_of(idx.phi1.size() + idx.phi2.size() + n * (n - 1) / 2) * ws.tm.v_vector(idx);
      if (!(t == expected)) rep.fail({{"index", format_index(alg, idx)}}, "difference: " + detail::describe(alg, t - expected));
    }
  });
}

/// Statements about the Weyl module read through v1^m in TS^m. Proportionality
/// for short indices, membership in the span of the v-vectors, and the
/// vanishing claims used along the way.
inline CheckReport verify_spanning_lemmas(Workspace& ws, unsigned max_m = 3, std::uint32_t poly_window = 2) {
  json params{{"algebra", ws.alg().name()}, {"max_m", max_m}};
  return detail::timed("spanning", params, [&](CheckReport& rep) {
    const CoeffAlgebra& alg = ws.alg();
    auto& ops = ws.ops;
    auto& env = ws.env;
    const std::uint32_t d = detail::window_of(alg, poly_window);
    const auto ms = [&](const Multiset& m) { return format_multiset(alg, m); };
    const auto tup = [&](const Tuple& t) { return format_tuple(alg, t); };

    for (unsigned m = 1; m <= max_m; ++m) {
      const Tensor v = TensorModule::highest_weight_vector(m);
      auto apply = [&](const UElem& u) { return ws.tm.act(u, v); };
      auto in_span = [&](const Tensor& t, std::string& why) {
        try {
          ws.tm.express_in_ts_basis(t);
          return true;
        } catch (const NotInTsSpan& e) {
          why = std::string(e.what()) + " at " + format_key(alg, e.residual_key());
          return false;
        }
      };

      // The images of the p(...) must be a basis before membership means anything.
      {
        EchelonBasis<TensorKey> images;
        const auto indices = ws.tm.ts_basis(m, d);
        for (const auto& idx : indices) images.insert(apply(ops.p(idx.phi1, idx.phi2, idx.xi)).terms());
        ++rep.instances;
        if (images.rank() != indices.size() || Integer(indices.size()) != ts_dimension(m, d)) {
          rep.fail({{"m", m}}, "images of p(...) are not a basis; skipping this m");
          continue;
        }
      }

      // Short indices: p(phi1, phi2, xi) v = (-1)^{m-k} binom(phi1(1)+m-k, m-k) p(phi1 + (m-k) chi_1, phi2, xi) v.
      for (unsigned k = 0; k < m; ++k)
        for (unsigned n = 0; n <= k; ++n)
          for (const auto& xi : tuples_of_length(n, d))
            for (unsigned a = 0; a + n <= k; ++a)
              for (const auto& phi1 : multisets_of_size(a, d))
                for (const auto& phi2 : multisets_of_size(k - n - a, d)) {
                  ++rep.instances;
                  const unsigned gap = m - k;
                  const Tensor lhs = apply(ops.p(phi1, phi2, xi));
                  const Tensor rhs = detail::sign_of(gap) * Rational(int_binomial(phi1[unit_basis] + gap, gap)) *
                                     apply(ops.p(phi1 + Multiset::single(unit_basis, gap), phi2, xi));
                  if (!(lhs == rhs))
                    rep.fail({{"lemma", "short"}, {"m", m}, {"phi1", ms(phi1)}, {"phi2", ms(phi2)}, {"xi", tup(xi)}},
                             "difference: " + detail::describe(alg, lhs - rhs));
                }

      // X_{-1}(psi1) H_1(psi2) X_{-3}(xi) v and its divided-power variants.
      for (unsigned total = 0; total <= m + 1; ++total)
        for (unsigned n = 0; n <= total; ++n)
          for (const auto& xi : tuples_of_length(n, d))
            for (unsigned a = 0; a + n <= total; ++a)
              for (const auto& psi1 : multisets_of_size(a, d))
                for (const auto& psi2 : multisets_of_size(total - n - a, d)) {
                  const UElem x3 = ops.X_tuple(GenId::xm3, xi);
                  const UElem base = env.multiply({ops.X_pm1(-1, psi1), ops.H(1, psi2), x3});
                  std::string why;
                  ++rep.instances;
                  if (!in_span(apply(base), why))
                    rep.fail({{"lemma", "ordered"}, {"m", m}, {"psi1", ms(psi1)}, {"psi2", ms(psi2)}, {"xi", tup(xi)}}, why);
                  // (x_{-1})^{(m+1-j-l-n)} X_{-1}(phi) H_1(chi) X_{-3}(xi) v with j = |psi1|, l = |psi2|.
                  const unsigned extra = m + 1 - total;
                  ++rep.instances;
                  const UElem lifted =
                      env.multiply(env.divided_power(Generator{GenId::xm1, unit_basis}, extra), base);
                  if (!in_span(apply(lifted), why))
                    rep.fail({{"lemma", "lifted"}, {"m", m}, {"phi", ms(psi1)}, {"chi", ms(psi2)}, {"xi", tup(xi)}}, why);
                }

      // q1(phi, chi) X_{-3}(xi) v with |phi| + n = m + 1, and X_1(chi) X_{-1}(phi) X_{-3}(xi) v = 0.
      for (unsigned n = 0; n <= m + 1; ++n)
        for (const auto& xi : tuples_of_length(n, d)) {
          const UElem x3 = ops.X_tuple(GenId::xm3, xi);
          for (const auto& phi : multisets_of_size(m + 1 - n, d))
            for (const auto& chi : detail::multisets_between(0, m + 1, d)) {
              std::string why;
              ++rep.instances;
              if (!in_span(apply(env.multiply(ops.q1(phi, chi), x3)), why))
                rep.fail({{"lemma", "q1"}, {"m", m}, {"phi", ms(phi)}, {"chi", ms(chi)}, {"xi", tup(xi)}}, why);
              ++rep.instances;
              const Tensor zero = apply(env.multiply({ops.X_pm1(+1, chi), ops.X_pm1(-1, phi), x3}));
              if (!zero.is_zero())
                rep.fail({{"lemma", "weight"}, {"m", m}, {"phi", ms(phi)}, {"chi", ms(chi)}, {"xi", tup(xi)}},
                         "expected 0, got " + detail::describe(alg, zero));
            }
        }

      // H_1(chi) X_{-3}(xi) v with |chi| + n > m, and X_1(chi) X_{-1}(k chi_1) X_{-3}(xi) v = 0.
      for (unsigned n = 0; n <= m + 1; ++n)
        for (const auto& xi : tuples_of_length(n, d)) {
          const UElem x3 = ops.X_tuple(GenId::xm3, xi);
          for (unsigned k = (n > m ? 0 : m + 1 - n); k + n <= m + 1; ++k)
            for (const auto& chi : multisets_of_size(k, d)) {
              std::string why;
              ++rep.instances;
              if (!in_span(apply(env.multiply(ops.H(1, chi), x3)), why))
                rep.fail({{"lemma", "h-only"}, {"m", m}, {"chi", ms(chi)}, {"xi", tup(xi)}}, why);
              ++rep.instances;
              const Tensor zero =
                  apply(env.multiply({ops.X_pm1(+1, chi), ops.X_pm1(-1, Multiset::single(unit_basis, k)), x3}));
              if (!zero.is_zero())
                rep.fail({{"lemma", "h-only weight"}, {"m", m}, {"chi", ms(chi)}, {"xi", tup(xi)}},
                         "expected 0, got " + detail::describe(alg, zero));
            }
        }
    }
  });
}

/// The defining relations of the Weyl-module quotient hold on v1^m.
inline CheckReport verify_relations(Workspace& ws, unsigned max_m = 4, std::uint32_t poly_window = 3) {
  json params{{"algebra", ws.alg().name()}, {"max_m", max_m}};
  return detail::timed("relations", params, [&](CheckReport& rep) {
    const CoeffAlgebra& alg = ws.alg();
    const std::uint32_t d = detail::window_of(alg, poly_window);
    for (unsigned m = 0; m <= max_m; ++m) {
      const Tensor v = TensorModule::highest_weight_vector(m);
      auto expect_zero = [&](const UElem& u, const std::string& what) {
        ++rep.instances;
        const Tensor t = ws.tm.act(u, v);
        if (!t.is_zero()) rep.fail({{"m", m}, {"relation", what}}, "got " + detail::describe(alg, t));
      };
      for (std::uint32_t b = 0; b < d; ++b) {
        const std::string label = alg.label(BasisId{b});
        for (GenId g : {GenId::x1, GenId::x2, GenId::x3}) expect_zero(ws.env.gen(g, BasisId{b}), std::string(name_of(g)) + ":" + label);
        expect_zero(ws.env.gen(GenId::xm2, BasisId{b}), "xm2:" + label);
      }
      UElem h1 = ws.env.gen(GenId::h1, unit_basis);
      h1.add(Enveloping::one(), -Rational(m));
      expect_zero(h1, "h1:1 - m");
      expect_zero(ws.env.gen(GenId::h2, unit_basis), "h2:1");
      const UElem xm1 = ws.env.gen(GenId::xm1, unit_basis);
      expect_zero(ws.env.power(xm1, m + 1), "(xm1:1)^(m+1)");
      ++rep.instances;
      if (ws.tm.act(ws.env.power(xm1, m), v).is_zero())
        rep.fail({{"m", m}, {"relation", "(xm1:1)^m"}}, "lower power already kills v");
    }
  });
}

/// Bracket table axioms, the matrix cross-check, and PBW arithmetic on seeded
/// random words.
inline CheckReport verify_structure(const BracketTable& table = standard_bracket_table(), std::uint64_t seed = 1,
                                    unsigned triples = 200) {
  json params{{"seed", seed}, {"triples", triples}};
  return detail::timed("structure", params, [&](CheckReport& rep) {
    auto record = [&](const std::string& what, const std::vector<std::string>& bad, std::size_t count) {
      rep.instances += count;
      for (const auto& b : bad) rep.fail({{"suite", what}}, b);
    };
    record("antisymmetry", check_super_antisymmetry(table), 64);
    record("jacobi", check_super_jacobi(table), 512);
    record("matrix", check_matrix_realization(table), 64);
    record("roots", check_root_data(table), 8);

    for (std::size_t n : {std::size_t{2}, std::size_t{3}}) {
      Enveloping env(CoeffAlgebra::truncated(n), table);
      const std::string alg_name = env.algebra().name();
      std::mt19937_64 rng(seed + n);
      std::uniform_int_distribution<int> gen_pick(0, 7);
      std::uniform_int_distribution<std::uint32_t> basis_pick(0, static_cast<std::uint32_t>(n - 1));
      std::uniform_int_distribution<int> len_pick(0, 3);
      auto random_word = [&] {
        std::vector<WordItem> w;
        const int len = len_pick(rng);
        for (int i = 0; i < len; ++i) w.emplace_back(Generator{all_gen_ids[gen_pick(rng)], BasisId{basis_pick(rng)}});
        return w;
      };
      for (unsigned t = 0; t < triples; ++t) {
        const UElem u = env.normal_form(random_word());
        const UElem v = env.normal_form(random_word());
        const UElem w = env.normal_form(random_word());
        const std::string where = format_uelem(env.algebra(), u) + " | " + format_uelem(env.algebra(), v) + " | " +
                                  format_uelem(env.algebra(), w);
        ++rep.instances;
        if (!(env.multiply(env.multiply(u, v), w) == env.multiply(u, env.multiply(v, w))))
          rep.fail({{"suite", "associativity"}, {"algebra", alg_name}, {"triple", t}}, where);
        const UElem uv = env.multiply(u, v);
        ++rep.instances;
        auto pu = homogeneous_parity(u), pv = homogeneous_parity(v), puv = homogeneous_parity(uv);
        if (!pu || !pv || !puv || (!uv.is_zero() && *puv != ((*pu + *pv) & 1)))
          rep.fail({{"suite", "parity"}, {"algebra", alg_name}, {"triple", t}}, where);
        ++rep.instances;
        if (total_degree(uv) > total_degree(u) + total_degree(v))
          rep.fail({{"suite", "filtration"}, {"algebra", alg_name}, {"triple", t}}, where);
        ++rep.instances;
        for (const auto& [mono, c] : uv) {
          std::vector<WordItem> word;
          for (const auto& f : mono.factors) word.insert(word.end(), f.exp, WordItem{f.gen});
          if (!(env.normal_form(word) == UElem(mono))) {
            rep.fail({{"suite", "idempotence"}, {"algebra", alg_name}, {"triple", t}}, format_monomial(env.algebra(), mono));
            break;
          }
        }
      }
    }
  });
}

/// Properties of the tensor module: the S_m action composes, the action of U is
/// multiplicative and preserves TS^m, and weights are read off indices.
inline CheckReport verify_tensor(Workspace& ws, unsigned max_m = 3, std::uint64_t seed = 1, unsigned samples = 100,
                                 std::uint32_t poly_window = 2) {
  json params{{"algebra", ws.alg().name()}, {"max_m", max_m}, {"seed", seed}, {"samples", samples}};
  return detail::timed("tensor", params, [&](CheckReport& rep) {
    const CoeffAlgebra& alg = ws.alg();
    const std::uint32_t d = detail::window_of(alg, poly_window);
    std::mt19937_64 rng(seed);

    // Composition of the S_3 action on every pure tensor.
    const auto perms = all_permutations(3);
    for (const auto& key : ws.tm.pure_keys(3, std::min<std::uint32_t>(d, 2))) {
      const Tensor t = Tensor::pure(key);
      for (const auto& s : perms)
        for (const auto& tau : perms) {
          std::vector<unsigned> st(3);
          for (unsigned i = 0; i < 3; ++i) st[i] = s[tau[i]];
          ++rep.instances;
          if (!(TensorModule::sigma_act(st, t) == TensorModule::sigma_act(tau, TensorModule::sigma_act(s, t)))) {
            rep.fail({{"suite", "group action"}, {"key", format_key(alg, key)}}, "composition law fails");
          }
        }
    }

    for (unsigned m = 1; m <= max_m; ++m) {
      const auto indices = ws.tm.ts_basis(m, d);
      // Weights.
      for (const auto& idx : indices) {
        const Tensor v = ws.tm.v_vector(idx);
        const long w1 = static_cast<long>(idx.phi1.size()) - static_cast<long>(idx.phi2.size());
        const long w2 = static_cast<long>(idx.phi2.size() + idx.xi.size());
        rep.instances += 2;
        if (!(ws.tm.act(ws.env.gen(GenId::h1, unit_basis), v) == Rational(w1) * v))
          rep.fail({{"suite", "h1 weight"}, {"index", format_index(alg, idx)}}, "eigenvalue mismatch");
        if (!(ws.tm.act(ws.env.gen(GenId::h2, unit_basis), v) == Rational(w2) * v))
          rep.fail({{"suite", "h2 weight"}, {"index", format_index(alg, idx)}}, "eigenvalue mismatch");
      }
      // Random elements act multiplicatively and preserve TS^m.
      std::uniform_int_distribution<std::size_t> idx_pick(0, indices.size() - 1);
      std::uniform_int_distribution<int> gen_pick(0, 7);
      std::uniform_int_distribution<std::uint32_t> basis_pick(0, d - 1);
      std::uniform_int_distribution<int> len_pick(1, 3);
      auto random_elem = [&] {
        std::vector<WordItem> w;
        const int len = len_pick(rng);
        for (int i = 0; i < len; ++i) w.emplace_back(Generator{all_gen_ids[gen_pick(rng)], BasisId{basis_pick(rng)}});
        return ws.env.normal_form(w);
      };
      for (unsigned s = 0; s < samples; ++s) {
        const UElem u = random_elem();
        const UElem w = random_elem();
        const WeylIndex& idx = indices[idx_pick(rng)];
        const Tensor t = ws.tm.v_vector(idx);
        const Tensor ut = ws.tm.act(u, t);
        rep.instances += 2;
        if (!TensorModule::in_ts(ut))
          rep.fail({{"suite", "TS invariance"}, {"u", format_uelem(alg, u)}, {"index", format_index(alg, idx)}},
                   "image leaves TS^m");
        if (!(ws.tm.act(ws.env.multiply(u, w), t) == ws.tm.act(u, ws.tm.act(w, t))))
          rep.fail({{"suite", "homomorphism"}, {"u", format_uelem(alg, u)}, {"w", format_uelem(alg, w)},
                    {"index", format_index(alg, idx)}},
                   "action is not multiplicative");
      }
    }
  });
}

/// Invariants of the recursions themselves: filtration degree of p1, vanishing
/// of q1 below the diagonal, the closed form of q1(r chi_1, chi), and agreement
/// of memoized and unmemoized evaluation.
inline CheckReport verify_weyl_ops(Workspace& ws, unsigned max_total = 4, std::uint32_t poly_window = 3) {
  json params{{"algebra", ws.alg().name()}, {"max_total", max_total}};
  return detail::timed("weyl", params, [&](CheckReport& rep) {
    const CoeffAlgebra& alg = ws.alg();
    const std::uint32_t d = detail::window_of(alg, poly_window);
    const auto ms = [&](const Multiset& m) { return format_multiset(alg, m); };
    Enveloping fresh_env(alg, ws.env.table());
    WeylOperators fresh(fresh_env, Memoize::no);
    for (unsigned total = 0; total <= max_total; ++total)
      for (unsigned a = 0; a <= total; ++a)
        for (const auto& phi : multisets_of_size(a, d))
          for (const auto& chi : multisets_of_size(total - a, d)) {
            const UElem p = ws.ops.p1(phi, chi);
            const UElem q = ws.ops.q1(phi, chi);
            rep.instances += 3;
            if (!in_filtered_span(p, {{GenId::xm1, phi.size()}, {GenId::h1, chi.size()}}))
              rep.fail({{"phi", ms(phi)}, {"chi", ms(chi)}}, "p1 outside its filtered span");
            if (phi.size() < chi.size() && !q.is_zero())
              rep.fail({{"phi", ms(phi)}, {"chi", ms(chi)}}, "q1 nonzero below the diagonal");
            if (total <= 3 && (!(fresh.p1(phi, chi) == p) || !(fresh.q1(phi, chi) == q)))
              rep.fail({{"phi", ms(phi)}, {"chi", ms(chi)}}, "memoized value differs from recomputation");
          }
  });
}

enum class Profile { quick, full };

/// Named checks with their default parameters. `alg` overrides the algebra
/// every check runs over; otherwise each check uses its own list.
struct VerifyPlan {
  Profile profile = Profile::quick;
  std::optional<CoeffAlgebra> algebra;
  std::uint64_t seed = 1;
  std::optional<unsigned> max_size;
};

inline std::vector<std::string> check_ids() {
  return {"structure", "weyl",   "degp1", "degp2",     "degp3",  "degp4",     "degp5",          "degp6",
          "degp7",     "deltap", "p1v",   "pv",        "tensor", "spanning",  "relations",      "koszul-reversed"};
}

inline std::vector<CheckReport> run_check(const std::string& id, const VerifyPlan& plan) {
  const bool full = plan.profile == Profile::full;
  auto algebras = [&](std::vector<std::size_t> truncs) {
    std::vector<CoeffAlgebra> out;
    if (plan.algebra) {
      out.push_back(*plan.algebra);
    } else {
      for (auto n : truncs) out.push_back(CoeffAlgebra::truncated(n));
    }
    return out;
  };
  std::vector<CheckReport> out;

  if (id == "structure") {
    out.push_back(verify_structure(standard_bracket_table(), plan.seed));
  } else if (id == "weyl") {
    for (const auto& alg : algebras({3})) {
      Workspace ws(alg);
      out.push_back(verify_weyl_ops(ws, plan.max_size.value_or(full ? 5 : 4)));
    }
  } else if (id.starts_with("degp")) {
    const bool variant = id == "degp2-variant" || id == "degp5-variant";
    const int item = id.size() >= 5 ? id[4] - '0' : 0;
    if (item < 1 || item > 7 || (id.size() != 5 && !variant)) throw std::invalid_argument("unknown check '" + id + "'");
    DegpRanges r;
    if (full) {
      r.max_size = 4;
      r.max_r = 5;
      r.max_n = 3;
    }
    if (plan.max_size) r.max_size = *plan.max_size;
    for (const auto& alg : algebras({1, 2, 3})) {
      Workspace ws(alg);
      out.push_back(verify_degp(item, ws, r, variant ? DegpForm::variant : DegpForm::corrected));
    }
  } else if (id == "deltap") {
    for (const auto& alg : algebras({2})) {
      Workspace ws(alg);
      out.push_back(verify_deltap(ws, plan.max_size.value_or(full ? 4 : 3), full ? 4 : 3));
    }
  } else if (id == "p1v") {
    for (const auto& alg : algebras({2})) {
      Workspace ws(alg);
      out.push_back(verify_p1v(ws, plan.max_size.value_or(full ? 4 : 3)));
    }
  } else if (id == "pv") {
    std::vector<std::pair<std::size_t, unsigned>> cases{{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 2}};
    if (full) cases.insert(cases.end(), {{1, 4}, {2, 4}, {3, 3}});
    if (plan.algebra) {
      Workspace ws(*plan.algebra);
      for (unsigned m = 1; m <= plan.max_size.value_or(3); ++m) out.push_back(verify_pv_and_basis(ws, m));
    } else {
      for (auto [n, m] : cases) {
        Workspace ws(CoeffAlgebra::truncated(n));
        out.push_back(verify_pv_and_basis(ws, m));
      }
    }
  } else if (id == "tensor") {
    for (const auto& alg : algebras({2})) {
      Workspace ws(alg);
      out.push_back(verify_tensor(ws, 3, plan.seed));
    }
  } else if (id == "spanning") {
    for (const auto& alg : algebras(full ? std::vector<std::size_t>{2, 3} : std::vector<std::size_t>{2})) {
      Workspace ws(alg);
      out.push_back(verify_spanning_lemmas(ws, plan.max_size.value_or(3)));
    }
  } else if (id == "relations") {
    for (const auto& alg : algebras({3})) {
      Workspace ws(alg);
      out.push_back(verify_relations(ws, plan.max_size.value_or(full ? 5 : 4)));
    }
  } else if (id == "koszul-reversed") {
    for (const auto& alg : algebras({2})) out.push_back(verify_reversed_koszul(alg, 3));
  } else {
    throw std::invalid_argument("unknown check '" + id + "'");
  }
  return out;
}

inline std::vector<CheckReport> verify_all(const VerifyPlan& plan) {
  std::vector<CheckReport> out;
  for (const auto& id : check_ids())
    for (auto& r : run_check(id, plan)) out.push_back(std::move(r));
  return out;
}

}  // namespace superweyl
