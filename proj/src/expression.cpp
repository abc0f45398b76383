#include "nodal/expression.hpp"

#include "nodal/errors.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <vector>

namespace nodal {

struct Expression::Node {
  enum Op { Const, X, Y, Neg, Add, Sub, Mul, Div, Pow, Sin, Cos, Tan, Exp, Log, Sqrt, Abs } op = Const;
  double value = 0;
  std::shared_ptr<const Node> a, b;

  double eval(double x, double y) const {
    switch (op) {
      case Const: return value;
      case X: return x;
      case Y: return y;
      case Neg: return -a->eval(x, y);
      case Add: return a->eval(x, y) + b->eval(x, y);
      case Sub: return a->eval(x, y) - b->eval(x, y);
      case Mul: return a->eval(x, y) * b->eval(x, y);
      case Div: return a->eval(x, y) / b->eval(x, y);
      case Pow: return std::pow(a->eval(x, y), b->eval(x, y));
      case Sin: return std::sin(a->eval(x, y));
      case Cos: return std::cos(a->eval(x, y));
      case Tan: return std::tan(a->eval(x, y));
      case Exp: return std::exp(a->eval(x, y));
      case Log: return std::log(a->eval(x, y));
      case Sqrt: return std::sqrt(a->eval(x, y));
      case Abs: return std::abs(a->eval(x, y));
    }
    return 0;
  }
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;

NodePtr make(Expression::Node::Op op, NodePtr a = nullptr, NodePtr b = nullptr, double v = 0) {
  auto n = std::make_shared<Expression::Node>();
  n->op = op;
  n->a = std::move(a);
  n->b = std::move(b);
  n->value = v;
  return n;
}

class Parser {
public:
  explicit Parser(const std::string& s) : s_(s) {}

  NodePtr parse() {
    NodePtr n = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return n;
  }

private:
  const std::string& s_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw MalformedInput("expression \"" + s_ + "\" at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr expr() {
    NodePtr n = term();
    for (;;) {
      if (accept('+')) n = make(Expression::Node::Add, n, term());
      else if (accept('-')) n = make(Expression::Node::Sub, n, term());
      else return n;
    }
  }

  NodePtr term() {
    NodePtr n = unary();
    for (;;) {
      if (accept('*')) n = make(Expression::Node::Mul, n, unary());
      else if (accept('/')) n = make(Expression::Node::Div, n, unary());
      else return n;
    }
  }

  NodePtr unary() {
    if (accept('-')) return make(Expression::Node::Neg, unary());
    if (accept('+')) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (accept('^')) return make(Expression::Node::Pow, base, unary());
    return base;
  }

  NodePtr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr n = expr();
      if (!accept(')')) fail("missing ')'");
      return n;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const char* begin = s_.c_str() + pos_;
      char* end = nullptr;
      const double v = std::strtod(begin, &end);
      if (end == begin) fail("bad number");
      pos_ += static_cast<size_t>(end - begin);
      return make(Expression::Node::Const, nullptr, nullptr, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      if (name == "x") return make(Expression::Node::X);
      if (name == "y") return make(Expression::Node::Y);
      if (name == "pi") return make(Expression::Node::Const, nullptr, nullptr, std::numbers::pi);
      static const std::vector<std::pair<std::string, Expression::Node::Op>> fns = {
          {"sin", Expression::Node::Sin}, {"cos", Expression::Node::Cos},   {"tan", Expression::Node::Tan},
          {"exp", Expression::Node::Exp}, {"log", Expression::Node::Log},   {"sqrt", Expression::Node::Sqrt},
          {"abs", Expression::Node::Abs}};
      for (const auto& [fname, op] : fns)
        if (fname == name) {
          if (!accept('(')) fail("expected '(' after " + name);
          NodePtr arg = expr();
          if (!accept(')')) fail("missing ')' after argument of " + name);
          return make(op, arg);
        }
      pos_ = start;
      fail("unknown identifier '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

} // namespace

Expression::Expression() : root_(make(Node::Const)), text_("0") {}

Expression Expression::parse(const std::string& text) {
  Expression e;
  e.root_ = Parser(text).parse();
  e.text_ = text;
  return e;
}

double Expression::operator()(double x, double y) const { return root_->eval(x, y); }

bool Expression::is_constant_zero() const { return root_->op == Node::Const && root_->value == 0.0; }

} // namespace nodal
