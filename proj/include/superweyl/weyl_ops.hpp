#pragma once

// Divided-power products X_{+-1}, H_i, ordered odd products X_{+-j}, and the
// recursively defined elements p1, q1 and p.

#include <superweyl/multiset.hpp>
#include <superweyl/pbw.hpp>

#include <map>
#include <stdexcept>
#include <utility>

namespace superweyl {

enum class Memoize { yes, no };

class WeylOperators {
 public:
  explicit WeylOperators(Enveloping& env, Memoize memo = Memoize::yes) : env_(env), memo_(memo) {}

  Enveloping& env() { return env_; }
  const CoeffAlgebra& algebra() const { return env_.algebra(); }

  /// prod_a (x_{+-1} (x) a)^(chi(a)); the family is abelian.
  UElem X_pm1(int sign, const Multiset& chi) const {
    return divided_power_product(sign > 0 ? GenId::x1 : GenId::xm1, chi);
  }

  /// prod_b (h_i (x) b)^(phi(b)), i in {1, 2}.
  UElem H(int i, const Multiset& phi) const {
    if (i != 1 && i != 2) throw std::invalid_argument("H_i requires i in {1, 2}");
    return divided_power_product(i == 1 ? GenId::h1 : GenId::h2, phi);
  }

  /// Ordered product prod_k (family (x) xi(k)); family in {x2, xm2, x3, xm3}.
  UElem X_tuple(GenId family, const Tuple& xi) {
    if (parity(family) != 1) throw std::invalid_argument("X_tuple takes an odd root family");
    std::vector<WordItem> word;
    word.reserve(xi.size());
    for (BasisId b : xi) word.emplace_back(Generator{family, b});
    return env_.normal_form(word);
  }

  UElem p1(const Multiset& phi, const Multiset& chi) {
    if (memo_ == Memoize::yes) {
      auto key = std::make_pair(phi, chi);
      if (auto it = p1_cache_.find(key); it != p1_cache_.end()) return it->second;
      UElem value = compute_p1(phi, chi);
      p1_cache_.emplace(std::move(key), value);
      return value;
    }
    return compute_p1(phi, chi);
  }

  UElem q1(const Multiset& phi, const Multiset& chi) {
    if (memo_ == Memoize::yes) {
      auto key = std::make_pair(phi, chi);
      if (auto it = q1_cache_.find(key); it != q1_cache_.end()) return it->second;
      UElem value = compute_q1(phi, chi);
      q1_cache_.emplace(std::move(key), value);
      return value;
    }
    return compute_q1(phi, chi);
  }

  /// p(phi1, phi2, xi) = p1(phi2, phi1) X_{-3}(xi).
  UElem p(const Multiset& phi1, const Multiset& phi2, const Tuple& xi) {
    return env_.multiply(p1(phi2, phi1), X_tuple(GenId::xm3, xi));
  }

 private:
  UElem divided_power_product(GenId family, const Multiset& chi) const {
    PBWMonomial m;
    Rational coeff(1);
    for (const auto& [b, n] : chi) {
      algebra().check(b);
      m.factors.push_back(Factor{Generator{family, b}, n});
      coeff /= Rational(factorial(n));
    }
    return UElem(std::move(m), coeff);
  }

  UElem compute_p1(const Multiset& phi, const Multiset& chi) {
    if (phi.empty() && chi.empty()) return Enveloping::one();
    UElem out;
    if (phi.empty()) {
      // -1/|chi| sum_{0 != psi <= chi} m(psi) (h1 (x) pi(psi)) p1(0, chi - psi)
      for (const auto& psi : all_sub_multisets(chi)) {
        if (psi.empty()) continue;
        UElem lead = env_.gen(GenId::h1, pi(algebra(), psi));
        if (lead.is_zero()) continue;
        out.add(env_.multiply(lead, p1(Multiset{}, chi.minus(psi))), Rational(multinomial(psi)));
      }
      out *= ratio(-1, chi.size());
      return out;
    }
    // -1/|phi| sum_{d in supp phi, psi <= chi} m(psi) (xm1 (x) d pi(psi)) p1(phi - chi_d, chi - psi)
    for (const auto& [d, count] : phi) {
      const Multiset rest = phi.minus(Multiset::single(d));
      for (const auto& psi : all_sub_multisets(chi)) {
        AlgElem leg = algebra().multiply(AlgElem(d), pi(algebra(), psi));
        if (leg.is_zero()) continue;
        out.add(env_.multiply(env_.gen(GenId::xm1, leg), p1(rest, chi.minus(psi))),
                Rational(multinomial(psi)));
      }
    }
    out *= ratio(-1, phi.size());
    return out;
  }

  UElem compute_q1(const Multiset& phi, const Multiset& chi) {
    if (phi.size() < chi.size()) return {};
    if (phi.empty() && chi.empty()) return Enveloping::one();
    UElem out;
    if (phi.size() == chi.size()) {
      // 1/|chi| sum_{c in supp chi, d in supp phi} (h1 (x) cd) q1(phi - chi_d, chi - chi_c)
      for (const auto& [c, nc] : chi)
        for (const auto& [d, nd] : phi) {
          UElem lead = env_.gen(GenId::h1, algebra().multiply(c, d));
          if (lead.is_zero()) continue;
          out += env_.multiply(lead, q1(phi.minus(Multiset::single(d)), chi.minus(Multiset::single(c))));
        }
      out *= ratio(1, chi.size());
      return out;
    }
    // sum_{theta <= phi, |theta| = |chi|} X_{-1}(phi - theta) q1(theta, chi)
    for (const auto& theta : enumerate_sub(phi, chi.size()))
      out += env_.multiply(X_pm1(-1, phi.minus(theta)), q1(theta, chi));
    return out;
  }

  Enveloping& env_;
  Memoize memo_;
  std::map<std::pair<Multiset, Multiset>, UElem> p1_cache_;
  std::map<std::pair<Multiset, Multiset>, UElem> q1_cache_;
};

}  // namespace superweyl
