#pragma once

#include <memory>
#include <string>

namespace nodal {

// Arithmetic over x and y: numbers, pi, + - * / ^, parentheses and
// sin cos tan exp log sqrt abs.
class Expression {
public:
  Expression(); // the constant 0
  static Expression parse(const std::string& text); // throws MalformedInput

  double operator()(double x, double y) const;
  const std::string& text() const { return text_; }
  bool is_constant_zero() const;

  struct Node;

private:
  std::shared_ptr<const Node> root_;
  std::string text_;
};

} // namespace nodal
