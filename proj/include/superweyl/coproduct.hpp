#pragma once

// The coproduct Delta^1 : U -> U (x) U with generators primitive and the
// braided product (u1 (x) u2)(w1 (x) w2) = (-1)^{|u2||w1|} u1 w1 (x) u2 w2.

#include <superweyl/linear_combination.hpp>
#include <superweyl/pbw.hpp>

#include <utility>

namespace superweyl {

using MonomialPair = std::pair<PBWMonomial, PBWMonomial>;
using UTensor2 = LinearCombination<MonomialPair>;

inline UTensor2 tensor_product(const UElem& u, const UElem& w) {
  UTensor2 out;
  for (const auto& [mu, cu] : u)
    for (const auto& [mw, cw] : w) out.add(MonomialPair{mu, mw}, cu * cw);
  return out;
}

/// Delta^1(u), built from the right: Delta(g) (w1 (x) w2) = g w1 (x) w2 + (-1)^{|g||w1|} w1 (x) g w2.
inline UTensor2 coproduct(const UElem& u, Enveloping& env) {
  UTensor2 out;
  for (const auto& [m, c] : u) {
    UTensor2 acc(MonomialPair{PBWMonomial{}, PBWMonomial{}});
    for (auto f = m.factors.rbegin(); f != m.factors.rend(); ++f)
      for (unsigned k = 0; k < f->exp; ++k) {
        UTensor2 next;
        for (const auto& [pair, cp] : acc) {
          const auto& [w1, w2] = pair;
          for (const auto& [g1, c1] : env.left_multiply(f->gen, UElem(w1))) next.add(MonomialPair{g1, w2}, cp * c1);
          const Rational sign = (parity(f->gen) && monomial_parity(w1)) ? Rational(-1) : Rational(1);
          for (const auto& [g2, c2] : env.left_multiply(f->gen, UElem(w2)))
            next.add(MonomialPair{w1, g2}, sign * cp * c2);
        }
        acc = std::move(next);
      }
    out.add(acc, c);
  }
  return out;
}

}  // namespace superweyl
