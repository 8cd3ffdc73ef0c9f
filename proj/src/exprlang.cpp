#include "stokes/exprlang.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <string>
#include <system_error>

namespace stokes {

ExprAst ExprAst::constant(double c) {
  ExprAst a;
  a.kind = ExprKind::Constant;
  a.value = c;
  return a;
}

ExprAst ExprAst::variable(unsigned k) {
  ExprAst a;
  a.kind = ExprKind::Variable;
  a.index = k;
  return a;
}

ExprAst ExprAst::binary(ExprKind kind, ExprAst lhs, ExprAst rhs) {
  ExprAst a;
  a.kind = kind;
  a.children.push_back(std::move(lhs));
  a.children.push_back(std::move(rhs));
  return a;
}

ExprAst ExprAst::power(ExprAst base, unsigned exponent) {
  ExprAst a;
  a.kind = ExprKind::IntPow;
  a.index = exponent;
  a.children.push_back(std::move(base));
  return a;
}

ExprAst ExprAst::call(ExprFn fn, ExprAst arg) {
  ExprAst a;
  a.kind = ExprKind::Call;
  a.fn = fn;
  a.children.push_back(std::move(arg));
  return a;
}

const char* fnName(ExprFn fn) {
  switch (fn) {
    case ExprFn::Sin: return "sin";
    case ExprFn::Cos: return "cos";
    case ExprFn::Exp: return "exp";
    case ExprFn::Log: return "log";
    case ExprFn::Sqrt: return "sqrt";
  }
  return "?";
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, int dim) : text_(text), dim_(dim) {}

  ExprAst parseAll() {
    skipSpace();
    if (pos_ >= text_.size()) throw ParseError("empty expression", pos_);
    ExprAst e = expr();
    skipSpace();
    if (pos_ < text_.size())
      throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return e;
  }

 private:
  void skipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skipSpace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= text_.size())
        throw ParseError(std::string("expected '") + c + "' but input ended",
                         pos_);
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
  }

  ExprAst expr() {
    ExprAst lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = ExprAst::binary(ExprKind::Add, std::move(lhs), term());
      } else if (accept('-')) {
        lhs = ExprAst::binary(ExprKind::Sub, std::move(lhs), term());
      } else {
        return lhs;
      }
    }
  }

  ExprAst term() {
    ExprAst lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs = ExprAst::binary(ExprKind::Mul, std::move(lhs), unary());
      } else if (accept('/')) {
        lhs = ExprAst::binary(ExprKind::Div, std::move(lhs), unary());
      } else {
        return lhs;
      }
    }
  }

  ExprAst unary() {
    if (accept('-')) {
      ExprAst operand = unary();
      if (operand.kind == ExprKind::Constant)
        return ExprAst::constant(-operand.value);
      return ExprAst::binary(ExprKind::Sub, ExprAst::constant(0.0),
                             std::move(operand));
    }
    return factor();
  }

  ExprAst factor() {
    ExprAst base = atom();
    if (accept('^')) {
      skipSpace();
      const std::size_t start = pos_;
      unsigned exponent = 0;
      if (!readUnsigned(exponent))
        throw ParseError("exponent must be a nonnegative integer literal",
                         start);
      return ExprAst::power(std::move(base), exponent);
    }
    return base;
  }

  bool readUnsigned(unsigned& out) {
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    if (first == last || !std::isdigit(static_cast<unsigned char>(*first)))
      return false;
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc()) return false;
    pos_ += static_cast<std::size_t>(ptr - first);
    return true;
  }

  ExprAst atom() {
    skipSpace();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
      return number();
    if (c == '(') {
      ++pos_;
      ExprAst inner = expr();
      expect(')');
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < text_.size() &&
             std::isalpha(static_cast<unsigned char>(text_[end])))
        ++end;
      const std::string_view word = text_.substr(pos_, end - pos_);
      if (word == "x") {
        pos_ = end;
        unsigned k = 0;
        if (!readUnsigned(k))
          throw ParseError("variable name needs an index, e.g. x0", start);
        if (static_cast<long long>(k) >= dim_)
          throw ParseError("variable x" + std::to_string(k) +
                               " out of range for dimension " +
                               std::to_string(dim_),
                           start);
        return ExprAst::variable(k);
      }
      if (word == "pi") {
        pos_ = end;
        return ExprAst::constant(std::numbers::pi);
      }
      static constexpr std::pair<std::string_view, ExprFn> kFns[] = {
          {"sin", ExprFn::Sin}, {"cos", ExprFn::Cos}, {"exp", ExprFn::Exp},
          {"log", ExprFn::Log}, {"sqrt", ExprFn::Sqrt}};
      for (const auto& [name, fn] : kFns) {
        if (word == name) {
          pos_ = end;
          expect('(');
          ExprAst arg = expr();
          expect(')');
          return ExprAst::call(fn, std::move(arg));
        }
      }
      throw ParseError("unknown identifier '" + std::string(word) + "'", start);
    }
    throw ParseError(std::string("unexpected '") + c + "'", start);
  }

  ExprAst number() {
    const std::size_t start = pos_;
    std::size_t end = pos_;
    auto digits = [&] {
      while (end < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[end])))
        ++end;
    };
    digits();
    if (end < text_.size() && text_[end] == '.') {
      ++end;
      digits();
    }
    if (end < text_.size() && (text_[end] == 'e' || text_[end] == 'E')) {
      std::size_t probe = end + 1;
      if (probe < text_.size() && (text_[probe] == '+' || text_[probe] == '-'))
        ++probe;
      if (probe < text_.size() &&
          std::isdigit(static_cast<unsigned char>(text_[probe]))) {
        end = probe;
        digits();
      }
    }
    double value = 0.0;
    auto [ptr, ec] =
        std::from_chars(text_.data() + start, text_.data() + end, value);
    if (ec != std::errc() || ptr != text_.data() + end)
      throw ParseError("malformed number", start);
    pos_ = end;
    return ExprAst::constant(value);
  }

  std::string_view text_;
  int dim_;
  std::size_t pos_ = 0;
};

int precedence(const ExprAst& a) {
  switch (a.kind) {
    case ExprKind::Add:
    case ExprKind::Sub:
      return 1;
    case ExprKind::Mul:
    case ExprKind::Div:
      return 2;
    case ExprKind::IntPow:
      return 3;
    default:
      return 4;
  }
}

std::string formatConstant(double c) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, c);
  std::string s(buf, ptr);
  if (std::signbit(c)) return "(" + s + ")";
  return s;
}

std::string wrap(const std::string& s, bool paren) {
  return paren ? "(" + s + ")" : s;
}

}  // namespace

ExprAst parseAst(std::string_view text, int dim) {
  return Parser(text, dim).parseAll();
}

std::string formatExpr(const ExprAst& ast) {
  switch (ast.kind) {
    case ExprKind::Constant:
      return formatConstant(ast.value);
    case ExprKind::Variable:
      return "x" + std::to_string(ast.index);
    case ExprKind::Call:
      return std::string(fnName(ast.fn)) + "(" + formatExpr(ast.children[0]) +
             ")";
    case ExprKind::IntPow: {
      const ExprAst& base = ast.children[0];
      return wrap(formatExpr(base), precedence(base) < 4) + "^" +
             std::to_string(ast.index);
    }
    case ExprKind::Add:
    case ExprKind::Sub:
    case ExprKind::Mul:
    case ExprKind::Div: {
      const int p = precedence(ast);
      const char* op = ast.kind == ExprKind::Add   ? "+"
                       : ast.kind == ExprKind::Sub ? "-"
                       : ast.kind == ExprKind::Mul ? "*"
                                                   : "/";
      const ExprAst& l = ast.children[0];
      const ExprAst& r = ast.children[1];
      return wrap(formatExpr(l), precedence(l) < p) + op +
             wrap(formatExpr(r), precedence(r) <= p);
    }
  }
  return {};
}

int maxVariable(const ExprAst& ast) {
  int m = ast.kind == ExprKind::Variable ? static_cast<int>(ast.index) : -1;
  for (const auto& c : ast.children) m = std::max(m, maxVariable(c));
  return m;
}

ScalarField toField(ExprAst ast, int dim) {
  if (maxVariable(ast) >= dim)
    throw IndexError("expression uses x" + std::to_string(maxVariable(ast)) +
                     " but dimension is " + std::to_string(dim));
  std::string label = formatExpr(ast);
  auto shared = std::make_shared<const ExprAst>(std::move(ast));
  return ScalarField::generic(
      dim,
      [shared](auto x) {
        using S = typename decltype(x)::value_type;
        return evalAst<S>(*shared, x);
      },
      std::move(label));
}

ScalarField parse(std::string_view text, int dim) {
  if (dim < 0) throw DimensionError("expression dimension must be nonnegative");
  return toField(parseAst(text, dim), dim);
}

std::vector<ScalarField> parseAll(const std::vector<std::string>& texts,
                                  int dim) {
  std::vector<ScalarField> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse(t, dim));
  return out;
}

}  // namespace stokes
