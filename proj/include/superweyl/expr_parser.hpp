#pragma once

// Surface syntax for elements of U(g (x) A).
//
//   expr    := ('+' | '-')? term (('+' | '-') term)*
//   term    := rational? factor ('*'? factor)*      (a bare rational is a term)
//   factor  := atom suffix?
//   atom    := GEN ':' LABEL | '(' expr ')' | binom | opcall
//   suffix  := '^(' INT ')' | '^' INT
//   binom   := 'binom(' ('h1' | 'h2') (':1')? (('-' | '+') INT)? ',' INT ')'
//   opcall  := ('X1' | 'Xm1' | 'H1' | 'H2') multiset
//            | ('X2' | 'Xm2' | 'X3' | 'Xm3') tuple
//            | ('p1' | 'q1') '(' multiset ',' multiset ')'
//            | 'p' '(' multiset ',' multiset ',' tuple ')'
//   multiset := '{' (LABEL ':' INT (',' LABEL ':' INT)*)? '}'
//   tuple    := '(' (LABEL (',' LABEL)*)? ')'
//
// A label is matched greedily, so "x1:t^2" is x1 (x) t^2 (an error in trunc:2);
// a power of x1 (x) t is written "(x1:t)^2".

#include <superweyl/coeff_algebra.hpp>
#include <superweyl/multiset.hpp>
#include <superweyl/pbw.hpp>
#include <superweyl/weyl_ops.hpp>

#include <cctype>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace superweyl {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

struct ExprAst;

struct GenAtom {
  Generator gen;
  SourcePos pos;
};

struct BinomAtom {
  GenId which = GenId::h1;
  long offset = 0;
  unsigned j = 0;
};

enum class OpKind { X1, Xm1, H1, H2, X2, Xm2, X3, Xm3, p1, q1, p };

struct OpCallAtom {
  OpKind kind = OpKind::X1;
  std::vector<Multiset> multisets;
  Tuple tuple;
};

struct GroupAtom {
  std::shared_ptr<const ExprAst> inner;
};

struct ExprFactor {
  std::variant<GenAtom, BinomAtom, OpCallAtom, GroupAtom> atom;
  unsigned exp = 1;
  bool divided = false;
  SourcePos pos;
};

struct ExprTerm {
  Rational coeff{1};
  std::vector<ExprFactor> factors;
};

struct ExprAst {
  std::vector<ExprTerm> terms;
};

namespace detail {

class ExprParser {
 public:
  ExprParser(std::string_view src, const CoeffAlgebra& alg) : src_(src), alg_(alg) {}

  ExprAst parse_all() {
    ExprAst ast = parse_expr();
    skip_ws();
    if (!at_end()) fail("unexpected '" + std::string(1, peek()) + "'");
    return ast;
  }

  Multiset parse_multiset_all() {
    Multiset m = parse_multiset();
    skip_ws();
    if (!at_end()) fail("trailing input after multiset");
    return m;
  }

  Tuple parse_tuple_all() {
    Tuple t = parse_tuple();
    skip_ws();
    if (!at_end()) fail("trailing input after tuple");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }

  [[noreturn]] void fail_at(std::size_t offset, const std::string& msg) const {
    SourcePos p = position(offset);
    throw ParseError(msg, p.line, p.column);
  }

  SourcePos position(std::size_t offset) const {
    SourcePos p;
    for (std::size_t i = 0; i < offset && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++p.line;
        p.column = 1;
      } else {
        ++p.column;
      }
    }
    return p;
  }

  bool at_end() const { return pos_ >= src_.size(); }
  char peek(std::size_t ahead = 0) const { return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0'; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  static bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
  static bool is_label_char(char c) { return is_ident_char(c) || c == '.' || c == '\''; }

  unsigned parse_uint() {
    skip_ws();
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 9) fail_at(start, "integer too large");
    return static_cast<unsigned>(std::stoul(std::string(src_.substr(start, pos_ - start))));
  }

  std::string_view parse_ident() {
    skip_ws();
    const std::size_t start = pos_;
    if (!is_ident_start(peek())) fail("expected a name");
    while (is_ident_char(peek())) ++pos_;
    return src_.substr(start, pos_ - start);
  }

  BasisId parse_label() {
    skip_ws();
    const std::size_t start = pos_;
    while (is_label_char(peek())) ++pos_;
    if (start == pos_) fail("expected a basis label");
    std::string base(src_.substr(start, pos_ - start));
    // Greedy: "t^2" is a label when the algebra knows it.
    if (peek() == '^' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      std::size_t end = pos_ + 1;
      while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) ++end;
      std::string longer(src_.substr(start, end - start));
      if (auto b = alg_.find_label(longer)) {
        pos_ = end;
        return *b;
      }
      // t^k always names a basis element here, never a power of x:t
      if (base == "t" && alg_.kind() != CoeffAlgebra::Kind::table)
        fail_at(start, "unknown basis label '" + longer + "' for algebra " + alg_.name());
    }
    if (auto b = alg_.find_label(base)) return *b;
    fail_at(start, "unknown basis label '" + base + "' for algebra " + alg_.name());
  }

  Multiset parse_multiset() {
    expect('{');
    Multiset out;
    if (accept('}')) return out;
    do {
      BasisId b = parse_label();
      expect(':');
      out.add(b, parse_uint());
    } while (accept(','));
    expect('}');
    return out;
  }

  Tuple parse_tuple() {
    expect('(');
    Tuple out;
    if (accept(')')) return out;
    do {
      out.push_back(parse_label());
    } while (accept(','));
    expect(')');
    return out;
  }

  ExprAst parse_expr() {
    ExprAst ast;
    skip_ws();
    bool negate = false;
    if (peek() == '-' || peek() == '+') {
      negate = peek() == '-';
      ++pos_;
    }
    while (true) {
      ExprTerm term = parse_term();
      if (negate) term.coeff = -term.coeff;
      ast.terms.push_back(std::move(term));
      skip_ws();
      if (peek() != '+' && peek() != '-') break;
      negate = peek() == '-';
      ++pos_;
    }
    return ast;
  }

  bool starts_factor() {
    skip_ws();
    return is_ident_start(peek()) || peek() == '(';
  }

  ExprTerm parse_term() {
    skip_ws();
    ExprTerm term;
    bool has_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t start = pos_;
      Integer num(parse_uint_big());
      Integer den = 1;
      if (peek() == '/') {
        ++pos_;
        den = Integer(parse_uint_big());
        if (den == 0) fail_at(start, "zero denominator");
      }
      term.coeff = Rational(num, den);
      term.coeff.canonicalize();
      has_coeff = true;
    }
    while (true) {
      skip_ws();
      if (!term.factors.empty() || has_coeff) {
        if (accept('*')) {
          term.factors.push_back(parse_factor());
          continue;
        }
        if (!starts_factor()) break;
      }
      term.factors.push_back(parse_factor());
    }
    return term;
  }

  // Coefficients are arbitrary precision; exponents and counts are not.
  std::string parse_uint_big() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::string(src_.substr(start, pos_ - start));
  }

  ExprFactor parse_factor() {
    skip_ws();
    ExprFactor f;
    f.pos = position(pos_);
    if (accept('(')) {
      auto inner = std::make_shared<ExprAst>(parse_expr());
      expect(')');
      f.atom = GroupAtom{std::move(inner)};
    } else {
      const std::size_t start = pos_;
      const std::string_view name = parse_ident();
      if (auto g = parse_gen_id(name); g && peek() == ':') {
        ++pos_;
        f.atom = GenAtom{Generator{*g, parse_label()}, position(start)};
      } else if (name == "binom") {
        f.atom = parse_binom();
      } else if (auto op = op_kind(name)) {
        f.atom = parse_opcall(*op);
      } else {
        fail_at(start, "unknown name '" + std::string(name) + "'");
      }
    }
    if (peek() == '^') {
      ++pos_;
      if (peek() == '(') {
        ++pos_;
        f.exp = parse_uint();
        expect(')');
        f.divided = true;
      } else {
        f.exp = parse_uint();
      }
    }
    return f;
  }

  BinomAtom parse_binom() {
    expect('(');
    BinomAtom b;
    const std::size_t start = (skip_ws(), pos_);
    const std::string_view h = parse_ident();
    if (h == "h1") b.which = GenId::h1;
    else if (h == "h2") b.which = GenId::h2;
    else fail_at(start, "binom expects h1 or h2");
    if (accept(':')) {
      if (parse_label() != unit_basis) fail_at(start, "binom takes h1 or h2 tensor 1");
    }
    if (accept('-')) b.offset = parse_uint();
    else if (accept('+')) b.offset = -static_cast<long>(parse_uint());
    expect(',');
    b.j = parse_uint();
    expect(')');
    return b;
  }

  static std::optional<OpKind> op_kind(std::string_view name) {
    static constexpr std::pair<std::string_view, OpKind> names[] = {
        {"X1", OpKind::X1}, {"Xm1", OpKind::Xm1}, {"H1", OpKind::H1}, {"H2", OpKind::H2},
        {"X2", OpKind::X2}, {"Xm2", OpKind::Xm2}, {"X3", OpKind::X3}, {"Xm3", OpKind::Xm3},
        {"p1", OpKind::p1}, {"q1", OpKind::q1}, {"p", OpKind::p}};
    for (auto [n, k] : names)
      if (n == name) return k;
    return std::nullopt;
  }

  OpCallAtom parse_opcall(OpKind kind) {
    OpCallAtom call{kind, {}, {}};
    switch (kind) {
      case OpKind::X1:
      case OpKind::Xm1:
      case OpKind::H1:
      case OpKind::H2:
        call.multisets.push_back(parse_multiset());
        break;
      case OpKind::X2:
      case OpKind::Xm2:
      case OpKind::X3:
      case OpKind::Xm3:
        call.tuple = parse_tuple();
        break;
      case OpKind::p1:
      case OpKind::q1:
        expect('(');
        call.multisets.push_back(parse_multiset());
        expect(',');
        call.multisets.push_back(parse_multiset());
        expect(')');
        break;
      case OpKind::p:
        expect('(');
        call.multisets.push_back(parse_multiset());
        expect(',');
        call.multisets.push_back(parse_multiset());
        expect(',');
        call.tuple = parse_tuple();
        expect(')');
        break;
    }
    return call;
  }

  std::string_view src_;
  const CoeffAlgebra& alg_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline ExprAst parse_expr(std::string_view src, const CoeffAlgebra& alg) {
  return detail::ExprParser(src, alg).parse_all();
}

inline Multiset parse_multiset_literal(std::string_view src, const CoeffAlgebra& alg) {
  return detail::ExprParser(src, alg).parse_multiset_all();
}

inline Tuple parse_tuple_literal(std::string_view src, const CoeffAlgebra& alg) {
  return detail::ExprParser(src, alg).parse_tuple_all();
}

class ExprEvaluator {
 public:
  explicit ExprEvaluator(WeylOperators& ops) : ops_(ops) {}

  const std::vector<std::string>& warnings() const { return warnings_; }

  UElem evaluate(const ExprAst& ast) {
    UElem out;
    for (const auto& term : ast.terms) {
      UElem acc = Enveloping::one();
      for (const auto& f : term.factors) {
        acc = ops_.env().multiply(acc, evaluate(f));
        if (acc.is_zero()) break;
      }
      out.add(acc, term.coeff);
    }
    return out;
  }

 private:
  UElem evaluate(const ExprFactor& f) {
    Enveloping& env = ops_.env();
    if (const auto* g = std::get_if<GenAtom>(&f.atom)) {
      env.algebra().check(g->gen.basis);
      if (parity(g->gen) == 1 && f.exp >= 2) {
        warnings_.push_back(std::to_string(f.pos.line) + ":" + std::to_string(f.pos.column) +
                            ": power of an odd generator is 0");
        return {};
      }
      if (f.exp == 0) return Enveloping::one();
      const Rational scale = f.divided ? inverse_factorial(f.exp) : Rational(1);
      return UElem(PBWMonomial{{Factor{g->gen, f.exp}}}, scale);
    }
    UElem base;
    if (const auto* b = std::get_if<BinomAtom>(&f.atom)) {
      base = env.h_binomial(b->which, b->offset, b->j);
    } else if (const auto* call = std::get_if<OpCallAtom>(&f.atom)) {
      base = evaluate(*call);
    } else {
      base = evaluate(*std::get<GroupAtom>(f.atom).inner);
    }
    if (f.exp == 1) return base;
    UElem out = env.power(base, f.exp);
    if (f.divided) out *= inverse_factorial(f.exp);
    return out;
  }

  UElem evaluate(const OpCallAtom& call) {
    switch (call.kind) {
      case OpKind::X1: return ops_.X_pm1(+1, call.multisets[0]);
      case OpKind::Xm1: return ops_.X_pm1(-1, call.multisets[0]);
      case OpKind::H1: return ops_.H(1, call.multisets[0]);
      case OpKind::H2: return ops_.H(2, call.multisets[0]);
      case OpKind::X2: return ops_.X_tuple(GenId::x2, call.tuple);
      case OpKind::Xm2: return ops_.X_tuple(GenId::xm2, call.tuple);
      case OpKind::X3: return ops_.X_tuple(GenId::x3, call.tuple);
      case OpKind::Xm3: return ops_.X_tuple(GenId::xm3, call.tuple);
      case OpKind::p1: return ops_.p1(call.multisets[0], call.multisets[1]);
      case OpKind::q1: return ops_.q1(call.multisets[0], call.multisets[1]);
      case OpKind::p: return ops_.p(call.multisets[0], call.multisets[1], call.tuple);
    }
    return {};
  }

  WeylOperators& ops_;
  std::vector<std::string> warnings_;
};

/// Parses and evaluates in one step.
inline UElem parse_uelem(std::string_view src, WeylOperators& ops, std::vector<std::string>* warnings = nullptr) {
  ExprEvaluator eval(ops);
  UElem out = eval.evaluate(parse_expr(src, ops.algebra()));
  if (warnings) *warnings = eval.warnings();
  return out;
}

}  // namespace superweyl
