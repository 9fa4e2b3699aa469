#include "qsum/expr.hpp"

#include <cctype>
#include <sstream>

namespace qsum {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
  return out;
}

class Parser {
 public:
  Parser(const std::string& text, const VarNames& vars) : s_(text), vars_(vars) {}

  ExprAst run() {
    ExprAst e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail({"+", "-", "*", "/", "^", "end of input"});
    return e;
  }

 private:
  const std::string& s_;
  const VarNames& vars_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    std::string found = pos_ < s_.size() ? std::string("'") + s_[pos_] + "'" : "end of input";
    throw ParseError(pos_, std::move(expected), found);
  }

  static ExprAst node(ExprNode::Kind k, std::size_t at) {
    auto n = std::make_unique<ExprNode>();
    n->kind = k;
    n->offset = at;
    return n;
  }

  static ExprAst binary(ExprNode::Kind k, std::size_t at, ExprAst a, ExprAst b) {
    ExprAst n = node(k, at);
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
  }

  ExprAst expr() {
    ExprAst left = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      const std::size_t at = pos_++;
      left = binary(c == '+' ? ExprNode::Kind::Add : ExprNode::Kind::Sub, at, std::move(left), term());
    }
    return left;
  }

  ExprAst term() {
    ExprAst left = unary();
    for (char c = peek(); c == '*' || c == '/'; c = peek()) {
      const std::size_t at = pos_++;
      left = binary(c == '*' ? ExprNode::Kind::Mul : ExprNode::Kind::Div, at, std::move(left), unary());
    }
    return left;
  }

  ExprAst unary() {
    const char c = peek();
    if (c == '-' || c == '+') {
      const std::size_t at = pos_++;
      ExprAst inner = unary();
      if (c == '+') return inner;
      ExprAst n = node(ExprNode::Kind::Neg, at);
      n->lhs = std::move(inner);
      return n;
    }
    return power();
  }

  ExprAst power() {
    ExprAst base = primary();
    if (peek() != '^') return base;
    const std::size_t at = pos_++;
    ExprAst n = node(ExprNode::Kind::Pow, at);
    n->lhs = std::move(base);
    n->exponent = exponent();
    return n;
  }

  /// Signed integer, optionally parenthesized, itself allowed to carry a
  /// further '^' (right associative).
  long exponent() {
    const std::size_t start = (skip_ws(), pos_);
    long sign = 1;
    while (peek() == '-' || peek() == '+') {
      if (s_[pos_] == '-') sign = -sign;
      ++pos_;
    }
    long base = 0;
    if (peek() == '(') {
      ++pos_;
      base = exponent();
      if (peek() != ')') fail({")"});
      ++pos_;
    } else {
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail({"integer exponent"});
      Int v(digits());
      if (!v.fits_slong_p()) throw ParseError(start, {"exponent of machine size"}, "huge exponent");
      base = v.get_si();
    }
    if (peek() == '^') {
      ++pos_;
      const long e = exponent();
      if (e < 0) throw ParseError(start, {"nonnegative inner exponent"}, "negative exponent");
      Int v;
      mpz_pow_ui(v.get_mpz_t(), Int(base).get_mpz_t(), static_cast<unsigned long>(e));
      if (!v.fits_slong_p()) throw ParseError(start, {"exponent of machine size"}, "huge exponent");
      base = v.get_si();
    }
    return sign * base;
  }

  std::string digits() {
    const std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(b, pos_ - b);
  }

  ExprAst primary() {
    const char c = peek();
    const std::size_t at = pos_;
    if (c == '(') {
      ++pos_;
      ExprAst e = expr();
      if (peek() != ')') fail({")", "+", "-", "*", "/", "^"});
      ++pos_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::string num = digits();
      bool decimal = false;
      if (pos_ < s_.size() && s_[pos_] == '.') {
        ++pos_;
        std::string frac = digits();
        if (num.empty() && frac.empty()) fail({"digit"});
        num += "." + frac;
        decimal = true;
      }
      ExprAst n = node(decimal ? ExprNode::Kind::Rational : ExprNode::Kind::Integer, at);
      n->value = parse_rat(num);
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t b = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      const std::string name = s_.substr(b, pos_ - b);
      if (name == "q") return node(ExprNode::Kind::QSymbol, at);
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) {
          ExprAst n = node(ExprNode::Kind::Variable, at);
          n->var = static_cast<int>(i);
          return n;
        }
      pos_ = b;
      std::vector<std::string> expected{"q"};
      for (const auto& v : vars_) expected.push_back(v);
      throw ParseError(at, std::move(expected), "unknown identifier '" + name + "'");
    }
    std::vector<std::string> expected{"number", "(", "-", "q"};
    for (const auto& v : vars_) expected.push_back(v);
    fail(std::move(expected));
  }
};

std::string render_monomial(const Exponents& e, const VarNames& vars) {
  std::string out;
  for (int v = kMaxVars - 1; v >= 0; --v) {
    if (e[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += v < static_cast<int>(vars.size()) ? vars[static_cast<std::size_t>(v)] : "x" + std::to_string(v);
    if (e[v] != 1) out += "^" + std::to_string(e[v]);
  }
  return out;
}

std::string render_term(const Rat& c, const Exponents& e, const VarNames& vars) {
  const std::string mono = render_monomial(e, vars);
  if (mono.empty()) return to_string(c);
  if (c == 1) return mono;
  if (c == -1) return "-" + mono;
  return to_string(c) + "*" + mono;
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found)
    : std::runtime_error("parse error at offset " + std::to_string(offset) + ": expected " +
                         join(expected) + ", found " + found),
      offset_(offset),
      expected_(std::move(expected)) {}

ExprAst parse(const std::string& text, const VarNames& vars) {
  if (vars.size() > static_cast<std::size_t>(kMaxVars)) throw std::invalid_argument("too many variables");
  for (const auto& v : vars)
    if (v == "q" || v.empty()) throw std::invalid_argument("invalid variable name '" + v + "'");
  return Parser(text, vars).run();
}

RatFun evaluate(const ExprNode& n, const QParam& q) {
  using K = ExprNode::Kind;
  switch (n.kind) {
    case K::Integer:
    case K::Rational: return RatFun(n.value);
    case K::QSymbol: return RatFun(q.value());
    case K::Variable: return RatFun(Poly::var(n.var));
    case K::Neg: return -evaluate(*n.lhs, q);
    case K::Add: return evaluate(*n.lhs, q) + evaluate(*n.rhs, q);
    case K::Sub: return evaluate(*n.lhs, q) - evaluate(*n.rhs, q);
    case K::Mul: return evaluate(*n.lhs, q) * evaluate(*n.rhs, q);
    case K::Div: {
      RatFun d = evaluate(*n.rhs, q);
      if (d.is_zero()) throw std::domain_error("division by zero at offset " + std::to_string(n.offset));
      return evaluate(*n.lhs, q) / d;
    }
    case K::Pow: {
      RatFun b = evaluate(*n.lhs, q);
      if (b.is_zero() && n.exponent < 0)
        throw std::domain_error("zero raised to a negative power at offset " + std::to_string(n.offset));
      return pow(b, n.exponent);
    }
  }
  throw std::logic_error("unknown expression node");
}

RatFun parse_ratfun(const std::string& text, const QParam& q, const VarNames& vars) {
  return evaluate(*parse(text, vars), q);
}

std::string render(const Poly& p, const VarNames& vars) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    if (out.empty()) {
      out = render_term(c, e, vars);
    } else if (c < 0) {
      out += " - " + render_term(-c, e, vars);
    } else {
      out += " + " + render_term(c, e, vars);
    }
  }
  return out;
}

std::string render(const RatFun& f, const VarNames& vars) {
  const std::string num = render(f.num(), vars);
  if (f.den() == Poly(1)) return num;
  const std::string den = render(f.den(), vars);
  const bool wrap_num = f.num().size() > 1;
  const bool wrap_den = f.den().size() > 1 || den.find('*') != std::string::npos;
  return (wrap_num ? "(" + num + ")" : num) + "/" + (wrap_den ? "(" + den + ")" : den);
}

}  // namespace qsum
