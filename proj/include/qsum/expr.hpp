#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsum/ratfun.hpp"

namespace qsum {

struct ExprNode {
  enum class Kind { Integer, Rational, QSymbol, Variable, Neg, Add, Sub, Mul, Div, Pow };
  Kind kind = Kind::Integer;
  Rat value;           // Integer, Rational
  int var = -1;        // Variable
  long exponent = 0;   // Pow
  std::size_t offset = 0;
  std::unique_ptr<ExprNode> lhs, rhs;  // Neg and Pow use lhs only
};

using ExprAst = std::unique_ptr<ExprNode>;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found);

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// Variable names in index order; "q" is reserved for the q symbol.
using VarNames = std::vector<std::string>;
inline const VarNames kDefaultVars{"x", "y"};

ExprAst parse(const std::string& text, const VarNames& vars = kDefaultVars);

/// Throws std::domain_error on division by zero.
RatFun evaluate(const ExprNode& ast, const QParam& q);

RatFun parse_ratfun(const std::string& text, const QParam& q, const VarNames& vars = kDefaultVars);

/// Canonical text: terms in descending lex order, explicit '*', rational
/// coefficients as a/b. parse_ratfun(render(f)) == f.
std::string render(const Poly& p, const VarNames& vars = kDefaultVars);
std::string render(const RatFun& f, const VarNames& vars = kDefaultVars);

}  // namespace qsum
