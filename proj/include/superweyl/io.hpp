#pragma once

// Text and JSON forms of multisets, tuples, enveloping-algebra elements,
// tensors and basis indices.

#include <superweyl/coeff_algebra.hpp>
#include <superweyl/multiset.hpp>
#include <superweyl/pbw.hpp>
#include <superweyl/tensor_rep.hpp>

#include <json.hpp>

#include <sstream>
#include <stdexcept>
#include <string>

namespace superweyl {

using json = nlohmann::ordered_json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---- text -----------------------------------------------------------------

/// "{t:2, t^2:1}"
inline std::string format_multiset(const CoeffAlgebra& alg, const Multiset& chi) {
  std::string out = "{";
  bool first = true;
  for (const auto& [b, n] : chi) {
    if (!first) out += ", ";
    first = false;
    out += alg.label(b) + ":" + std::to_string(n);
  }
  return out + "}";
}

/// "(t, t^2)"
inline std::string format_tuple(const CoeffAlgebra& alg, const Tuple& xi) {
  std::string out = "(";
  for (std::size_t i = 0; i < xi.size(); ++i) {
    if (i > 0) out += ", ";
    out += alg.label(xi[i]);
  }
  return out + ")";
}

inline std::string format_monomial(const CoeffAlgebra& alg, const PBWMonomial& m) {
  std::string out;
  for (const auto& f : m.factors) {
    if (!out.empty()) out += ' ';
    std::string g = std::string(name_of(f.gen.gen)) + ":" + alg.label(f.gen.basis);
    out += f.exp == 1 ? g : "(" + g + ")^" + std::to_string(f.exp);
  }
  return out;
}

/// Sum of terms "c mono" in canonical monomial order; "0" for the zero element.
/// The output parses back to the same element.
inline std::string format_uelem(const CoeffAlgebra& alg, const UElem& u) {
  if (u.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : u) {
    const bool negative = sgn(c) < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string mono = format_monomial(alg, m);
    if (mono.empty()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + " ";
      out += mono;
    }
  }
  return out;
}

inline std::string format_key(const CoeffAlgebra& alg, const TensorKey& key) {
  std::string out;
  for (const auto& w : key) {
    if (!out.empty()) out += " (x) ";
    out += std::string(name_of(w.slot)) + ":" + alg.label(w.basis);
  }
  return out.empty() ? "1" : out;
}

inline std::string format_index(const CoeffAlgebra& alg, const WeylIndex& idx) {
  return "v(" + format_multiset(alg, idx.phi1) + ", " + format_multiset(alg, idx.phi2) + ", " +
         format_tuple(alg, idx.xi) + ")";
}

// ---- JSON -----------------------------------------------------------------

inline json to_json(const Multiset& chi) {
  json out = json::object();
  for (const auto& [b, n] : chi) out[std::to_string(b.index)] = n;
  return out;
}

inline json to_json(const Tuple& xi) {
  json out = json::array();
  for (BasisId b : xi) out.push_back(b.index);
  return out;
}

inline json to_json(const UElem& u) {
  json out = json::array();
  for (const auto& [m, c] : u) {
    json mono = json::array();
    for (const auto& f : m.factors) mono.push_back(json::array({name_of(f.gen.gen), f.gen.basis.index, f.exp}));
    out.push_back(json{{"coeff", to_string(c)}, {"mono", std::move(mono)}});
  }
  return out;
}

inline json to_json(const Tensor& t) {
  json terms = json::array();
  for (const auto& [key, c] : t.terms()) {
    json k = json::array();
    for (const auto& w : key) k.push_back(json::array({name_of(w.slot), w.basis.index}));
    terms.push_back(json{{"coeff", to_string(c)}, {"key", std::move(k)}});
  }
  return json{{"m", t.degree()}, {"terms", std::move(terms)}};
}

inline json to_json(const WeylIndex& idx) {
  return json{{"phi1", to_json(idx.phi1)}, {"phi2", to_json(idx.phi2)}, {"xi", to_json(idx.xi)}};
}

inline Multiset multiset_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("multiset: expected an object");
  Multiset out;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_number_unsigned()) throw FormatError("multiset: multiplicity of '" + k + "' must be a count");
    std::size_t pos = 0;
    unsigned long index = std::stoul(k, &pos);
    if (pos != k.size()) throw FormatError("multiset: key '" + k + "' is not a basis index");
    out.add(BasisId{static_cast<std::uint32_t>(index)}, v.get<unsigned>());
  }
  return out;
}

inline Tuple tuple_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("tuple: expected an array");
  Tuple out;
  for (const auto& v : j) out.push_back(BasisId{v.get<std::uint32_t>()});
  return out;
}

inline WeylIndex weyl_index_from_json(const json& j) {
  return WeylIndex{multiset_from_json(j.at("phi1")), multiset_from_json(j.at("phi2")), tuple_from_json(j.at("xi"))};
}

/// Monomials are renormalized on read, so out-of-order input is accepted.
inline UElem uelem_from_json(const json& j, Enveloping& env) {
  if (!j.is_array()) throw FormatError("element: expected an array of terms");
  UElem out;
  for (const auto& term : j) {
    const Rational c = parse_rational(term.at("coeff").get<std::string>());
    std::vector<WordItem> word;
    for (const auto& f : term.at("mono")) {
      auto g = parse_gen_id(f.at(0).get<std::string>());
      if (!g) throw FormatError("element: unknown generator " + f.at(0).dump());
      const Generator gen{*g, BasisId{f.at(1).get<std::uint32_t>()}};
      const unsigned e = f.at(2).get<unsigned>();
      word.insert(word.end(), e, WordItem{gen});
    }
    out.add(env.normal_form(word), c);
  }
  return out;
}

inline Tensor tensor_from_json(const json& j) {
  Tensor out(j.at("m").get<unsigned>());
  for (const auto& term : j.at("terms")) {
    TensorKey key;
    for (const auto& w : term.at("key")) {
      const std::string slot = w.at(0).get<std::string>();
      VSlot s;
      if (slot == "v1") s = VSlot::v1;
      else if (slot == "v2") s = VSlot::v2;
      else if (slot == "v3") s = VSlot::v3;
      else throw FormatError("tensor: unknown slot '" + slot + "'");
      key.push_back(SuperBasisVec{s, BasisId{w.at(1).get<std::uint32_t>()}});
    }
    out.add(key, parse_rational(term.at("coeff").get<std::string>()));
  }
  return out;
}

}  // namespace superweyl
