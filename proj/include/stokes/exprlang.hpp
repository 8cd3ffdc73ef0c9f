#pragma once

// A small smooth-expression language for user-supplied fields.
//
//   expr   := term (("+" | "-") term)*
//   term   := unary (("*" | "/") unary)*
//   unary  := "-" unary | factor
//   factor := atom ("^" uint)?
//   atom   := number | "pi" | "x" uint | "(" expr ")" | fn "(" expr ")"
//   fn     := "sin" | "cos" | "exp" | "log" | "sqrt"
//
// Whitespace is ignored. Unary minus on a constant folds into the constant;
// on anything else it becomes (0 - operand).

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stokes/dual.hpp"
#include "stokes/smoothfn.hpp"

namespace stokes {

enum class ExprKind { Constant, Variable, Add, Sub, Mul, Div, IntPow, Call };
enum class ExprFn { Sin, Cos, Exp, Log, Sqrt };

struct ExprAst {
  ExprKind kind = ExprKind::Constant;
  double value = 0.0;   // Constant
  unsigned index = 0;   // Variable index, or IntPow exponent
  ExprFn fn = ExprFn::Sin;
  std::vector<ExprAst> children;

  static ExprAst constant(double c);
  static ExprAst variable(unsigned k);
  static ExprAst binary(ExprKind kind, ExprAst lhs, ExprAst rhs);
  static ExprAst power(ExprAst base, unsigned exponent);
  static ExprAst call(ExprFn fn, ExprAst arg);

  friend bool operator==(const ExprAst&, const ExprAst&) = default;
};

const char* fnName(ExprFn fn);

/// Parses `text` into an AST. Throws ParseError with the byte position of
/// the offending token; a variable index >= dim is reported the same way.
ExprAst parseAst(std::string_view text, int dim);

/// Text that re-parses to a structurally identical AST.
std::string formatExpr(const ExprAst& ast);

/// Largest variable index used, or -1 if none.
int maxVariable(const ExprAst& ast);

template <Carrier S>
S evalAst(const ExprAst& ast, std::span<const S> x) {
  using std::cos;
  using std::exp;
  using std::log;
  using std::sin;
  using std::sqrt;
  switch (ast.kind) {
    case ExprKind::Constant:
      return S(ast.value);
    case ExprKind::Variable:
      return x[ast.index];
    case ExprKind::Add:
      return evalAst<S>(ast.children[0], x) + evalAst<S>(ast.children[1], x);
    case ExprKind::Sub:
      return evalAst<S>(ast.children[0], x) - evalAst<S>(ast.children[1], x);
    case ExprKind::Mul:
      return evalAst<S>(ast.children[0], x) * evalAst<S>(ast.children[1], x);
    case ExprKind::Div:
      return evalAst<S>(ast.children[0], x) / evalAst<S>(ast.children[1], x);
    case ExprKind::IntPow:
      return ipow(evalAst<S>(ast.children[0], x), ast.index);
    case ExprKind::Call: {
      const S a = evalAst<S>(ast.children[0], x);
      switch (ast.fn) {
        case ExprFn::Sin: return sin(a);
        case ExprFn::Cos: return cos(a);
        case ExprFn::Exp: return exp(a);
        case ExprFn::Log: return log(a);
        case ExprFn::Sqrt: return sqrt(a);
      }
    }
  }
  return S(0.0);
}

/// Wraps an AST as a field of dimension `dim`.
ScalarField toField(ExprAst ast, int dim);

/// parseAst followed by toField.
ScalarField parse(std::string_view text, int dim);

/// Parses each entry at the same dimension.
std::vector<ScalarField> parseAll(const std::vector<std::string>& texts,
                                  int dim);

}  // namespace stokes
