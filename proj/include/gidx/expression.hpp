#pragma once

#include <memory>
#include <string>

#include "gidx/bandlimited.hpp"
#include "gidx/errors.hpp"

namespace gidx {

// Complex-valued arithmetic expression in the base variable x. Grammar:
// numbers, the identifiers x, i, pi, the functions sin, cos, exp, the
// operators + - * / ^ (power binds tightest, right-associative) and
// parentheses. Parse failures carry the character position.
class Expression {
 public:
  struct Node;

  static Expression parse(const std::string& text);

  Complex eval(double x) const;

  // Projection onto the trig polynomials of the given bandwidth by uniform
  // sampling. Content above the bandwidth aliases; callers choose a bandwidth
  // that covers their expression.
  Bandlimited to_bandlimited(int bandwidth, int samples = 0) const;

  const std::string& text() const { return text_; }

 private:
  std::shared_ptr<const Node> root_;
  std::string text_;
};

}  // namespace gidx
