#pragma once

// The commutative unital coefficient algebra A with its fixed basis.
//
//   poly      basis t^k, k >= 0, no dimension bound
//   trunc:N   basis 1, t, ..., t^(N-1), t^j t^k = 0 once j + k >= N
//   table     finite basis with a rational product table read from JSON
//
// Index 0 is the unit in every case.

#include <superweyl/linear_combination.hpp>
#include <superweyl/multiset.hpp>
#include <superweyl/rational.hpp>

#include <json.hpp>

#include <cctype>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace superweyl {

using AlgElem = LinearCombination<BasisId>;

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a basis index does not belong to the algebra it is used with.
class SpecMismatch : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// Malformed table file; `what()` carries the location.
class TableParseError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

struct TableData {
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::size_t unit = 0;
  // products[i][j] = e_i * e_j. Rows are full (size dim).
  std::vector<std::vector<AlgElem>> products;
};

struct TableReport {
  std::vector<std::string> violations;
  bool valid() const { return violations.empty(); }
};

class CoeffAlgebra {
 public:
  enum class Kind { poly, trunc, table };

  static CoeffAlgebra polynomial() { return CoeffAlgebra(Kind::poly, 0, nullptr, "poly"); }

  static CoeffAlgebra truncated(std::size_t n) {
    if (n == 0) throw AlgebraError("trunc:N requires N >= 1");
    return CoeffAlgebra(Kind::trunc, n, nullptr, "trunc:" + std::to_string(n));
  }

  /// Wraps an in-memory table. Use validate_table() to check the axioms.
  static CoeffAlgebra from_table(TableData data, std::string name = "table") {
    if (data.products.size() != data.dim || data.labels.size() != data.dim)
      throw AlgebraError("table dimensions disagree with dim");
    for (const auto& row : data.products)
      if (row.size() != data.dim) throw AlgebraError("table rows must have dim entries");
    auto dim = data.dim;
    return CoeffAlgebra(Kind::table, dim, std::make_shared<const TableData>(std::move(data)),
                        std::move(name));
  }

  static CoeffAlgebra load_table(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw TableParseError(path.string() + ": cannot open file");
    std::stringstream buf;
    buf << in.rdbuf();
    return from_table(parse_table_json(buf.str(), path.string()), "table:" + path.string());
  }

  /// "poly" | "trunc:N" | "table:PATH"
  static CoeffAlgebra parse(std::string_view spec) {
    if (spec == "poly") return polynomial();
    if (spec.starts_with("trunc:")) {
      auto digits = spec.substr(6);
      if (digits.empty() || digits.size() > 6 ||
          !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(c); }))
        throw AlgebraError("bad algebra spec '" + std::string(spec) + "'");
      return truncated(std::stoul(std::string(digits)));
    }
    if (spec.starts_with("table:")) return load_table(std::string(spec.substr(6)));
    throw AlgebraError("unknown algebra spec '" + std::string(spec) +
                       "' (expected poly, trunc:N or table:PATH)");
  }

  static TableData parse_table_json(const std::string& text, const std::string& source = "<table>");

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }

  /// nullopt for the polynomial algebra.
  std::optional<std::size_t> dimension() const {
    if (kind_ == Kind::poly) return std::nullopt;
    return dim_;
  }

  /// Number of basis elements to enumerate when a finite window is needed.
  std::uint32_t window(std::uint32_t poly_window) const {
    return kind_ == Kind::poly ? poly_window : static_cast<std::uint32_t>(dim_);
  }

  void check(BasisId b) const {
    if (kind_ != Kind::poly && b.index >= dim_)
      throw SpecMismatch("basis index " + std::to_string(b.index) + " is not in " + name_);
  }

  AlgElem unit() const { return AlgElem(unit_basis); }

  AlgElem multiply(BasisId a, BasisId b) const {
    check(a);
    check(b);
    switch (kind_) {
      case Kind::poly: return AlgElem(BasisId{a.index + b.index});
      case Kind::trunc:
        if (a.index + b.index >= dim_) return {};
        return AlgElem(BasisId{a.index + b.index});
      case Kind::table: return table_->products[a.index][b.index];
    }
    return {};
  }

  AlgElem multiply(const AlgElem& a, const AlgElem& b) const {
    AlgElem out;
    for (const auto& [ba, ca] : a)
      for (const auto& [bb, cb] : b) out.add(multiply(ba, bb), ca * cb);
    return out;
  }

  std::string label(BasisId b) const {
    if (kind_ == Kind::table) {
      check(b);
      return table_->labels[b.index];
    }
    if (b.index == 0) return "1";
    if (b.index == 1) return "t";
    return "t^" + std::to_string(b.index);
  }

  std::optional<BasisId> find_label(std::string_view text) const {
    if (kind_ == Kind::table) {
      for (std::size_t i = 0; i < dim_; ++i)
        if (table_->labels[i] == text) return BasisId{static_cast<std::uint32_t>(i)};
      return std::nullopt;
    }
    std::optional<BasisId> b;
    if (text == "1") {
      b = BasisId{0};
    } else if (text == "t") {
      b = BasisId{1};
    } else if (text.starts_with("t^") && text.size() > 2 && text.size() < 9 &&
               std::all_of(text.begin() + 2, text.end(), [](char c) { return std::isdigit(c); })) {
      b = BasisId{static_cast<std::uint32_t>(std::stoul(std::string(text.substr(2))))};
    }
    if (b && kind_ == Kind::trunc && b->index >= dim_) return std::nullopt;
    return b;
  }

  const TableData* table() const { return table_.get(); }

  friend bool operator==(const CoeffAlgebra& a, const CoeffAlgebra& b) {
    return a.kind_ == b.kind_ && a.dim_ == b.dim_ && a.table_ == b.table_;
  }

 private:
  CoeffAlgebra(Kind kind, std::size_t dim, std::shared_ptr<const TableData> table, std::string name)
      : kind_(kind), dim_(dim), table_(std::move(table)), name_(std::move(name)) {}

  Kind kind_;
  std::size_t dim_;
  std::shared_ptr<const TableData> table_;
  std::string name_;
};

/// alg_mul; both operands must be over `alg`.
inline AlgElem alg_mul(const CoeffAlgebra& alg, const AlgElem& a, const AlgElem& b) {
  return alg.multiply(a, b);
}

/// pi(psi) = prod_a a^psi(a), with pi(0) = 1.
inline AlgElem pi(const CoeffAlgebra& alg, const Multiset& psi) {
  AlgElem out = alg.unit();
  for (const auto& [b, n] : psi)
    for (unsigned i = 0; i < n; ++i) out = alg.multiply(out, AlgElem(b));
  return out;
}

inline TableData CoeffAlgebra::parse_table_json(const std::string& text, const std::string& source) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw TableParseError(source + ": byte " + std::to_string(e.byte) + ": " + e.what());
  }
  auto fail = [&](const std::string& where, const std::string& msg) -> TableParseError {
    return TableParseError(source + ": " + where + ": " + msg);
  };
  if (!doc.is_object()) throw fail("/", "expected an object");
  if (!doc.contains("dim") || !doc["dim"].is_number_unsigned()) throw fail("/dim", "expected a positive integer");
  TableData data;
  data.dim = doc["dim"].get<std::size_t>();
  if (data.dim == 0) throw fail("/dim", "expected a positive integer");
  if (!doc.contains("labels") || !doc["labels"].is_array() || doc["labels"].size() != data.dim)
    throw fail("/labels", "expected an array of dim strings");
  for (std::size_t i = 0; i < data.dim; ++i) {
    const auto& l = doc["labels"][i];
    if (!l.is_string() || l.get<std::string>().empty())
      throw fail("/labels/" + std::to_string(i), "expected a non-empty string");
    data.labels.push_back(l.get<std::string>());
  }
  data.unit = doc.value("unit", std::size_t{0});
  if (!doc.contains("products") || !doc["products"].is_array() || doc["products"].size() != data.dim)
    throw fail("/products", "expected one row per basis element");

  std::vector<std::vector<std::optional<AlgElem>>> given(
      data.dim, std::vector<std::optional<AlgElem>>(data.dim));
  for (std::size_t i = 0; i < data.dim; ++i) {
    const auto& row = doc["products"][i];
    std::string rwhere = "/products/" + std::to_string(i);
    if (!row.is_array()) throw fail(rwhere, "expected an array");
    // A row lists either every j, or only j = i, ..., dim-1.
    std::size_t first_j;
    if (row.size() == data.dim) {
      first_j = 0;
    } else if (row.size() == data.dim - i) {
      first_j = i;
    } else {
      throw fail(rwhere, "expected dim or dim-" + std::to_string(i) + " entries");
    }
    for (std::size_t pos = 0; pos < row.size(); ++pos) {
      std::size_t j = first_j + pos;
      std::string where = rwhere + "/" + std::to_string(pos);
      if (!row[pos].is_array()) throw fail(where, "expected a sparse vector [[k, \"p/q\"], ...]");
      AlgElem prod;
      for (std::size_t t = 0; t < row[pos].size(); ++t) {
        const auto& term = row[pos][t];
        std::string twhere = where + "/" + std::to_string(t);
        if (!term.is_array() || term.size() != 2 || !term[0].is_number_unsigned())
          throw fail(twhere, "expected [k, \"p/q\"]");
        auto k = term[0].get<std::size_t>();
        if (k >= data.dim) throw fail(twhere, "basis index out of range");
        Rational c;
        try {
          c = term[1].is_string() ? parse_rational(term[1].get<std::string>())
                                  : term[1].is_number_integer() ? Rational(Integer(term[1].get<long>()))
                                                                : throw RationalParseError("not a rational");
        } catch (const RationalParseError& e) {
          throw fail(twhere, e.what());
        }
        prod.add(BasisId{static_cast<std::uint32_t>(k)}, c);
      }
      given[i][j] = std::move(prod);
    }
  }
  data.products.assign(data.dim, std::vector<AlgElem>(data.dim));
  for (std::size_t i = 0; i < data.dim; ++i)
    for (std::size_t j = 0; j < data.dim; ++j) {
      if (given[i][j]) {
        data.products[i][j] = *given[i][j];
      } else if (given[j][i]) {
        data.products[i][j] = *given[j][i];
      } else {
        throw fail("/products", "missing product for pair (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ")");
      }
    }
  return data;
}

/// Commutativity, associativity on all basis triples, and unit at index 0.
inline TableReport validate_table(const CoeffAlgebra& alg) {
  TableReport report;
  const TableData* t = alg.table();
  if (t == nullptr) {
    report.violations.push_back("not a table algebra: " + alg.name());
    return report;
  }
  const auto d = t->dim;
  auto pair_name = [&](std::size_t i, std::size_t j) {
    return "(" + t->labels[i] + ", " + t->labels[j] + ")";
  };
  if (t->unit != 0) report.violations.push_back("unit must be index 0");
  if (t->labels[0] != "1") report.violations.push_back("unit label must be \"1\"");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (t->labels[i] == t->labels[j]) report.violations.push_back("duplicate label " + t->labels[i]);

  auto e = [](std::size_t i) { return BasisId{static_cast<std::uint32_t>(i)}; };
  for (std::size_t j = 0; j < d; ++j) {
    if (!(t->products[0][j] == AlgElem(e(j))) || !(t->products[j][0] == AlgElem(e(j))))
      report.violations.push_back("unit law fails at " + t->labels[j]);
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (!(t->products[i][j] == t->products[j][i]))
        report.violations.push_back("not commutative at " + pair_name(i, j));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        AlgElem left = alg.multiply(alg.multiply(e(i), e(j)), AlgElem(e(k)));
        AlgElem right = alg.multiply(AlgElem(e(i)), alg.multiply(e(j), e(k)));
        if (!(left == right))
          report.violations.push_back("not associative at (" + t->labels[i] + ", " + t->labels[j] +
                                      ", " + t->labels[k] + ")");
      }
  return report;
}

}  // namespace superweyl
