#include "gidx/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <vector>

namespace gidx {

struct Expression::Node {
  enum class Kind { Number, Var, Add, Sub, Mul, Div, Pow, Neg, Sin, Cos, Exp };
  Kind kind;
  Complex value;  // Number only
  std::shared_ptr<const Node> a, b;
};

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make_number(Complex v) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Number;
  n->value = v;
  return n;
}

NodePtr make_node(Node::Kind k, NodePtr a, NodePtr b = nullptr) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  NodePtr run() {
    NodePtr e = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) err("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void err(const std::string& what) const {
    fail(Errc::ConfigError,
         "expression error at position " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  NodePtr parse_sum() {
    NodePtr e = parse_product();
    for (;;) {
      if (eat('+'))
        e = make_node(Node::Kind::Add, e, parse_product());
      else if (eat('-'))
        e = make_node(Node::Kind::Sub, e, parse_product());
      else
        return e;
    }
  }

  NodePtr parse_product() {
    NodePtr e = parse_signed();
    for (;;) {
      if (eat('*'))
        e = make_node(Node::Kind::Mul, e, parse_signed());
      else if (eat('/'))
        e = make_node(Node::Kind::Div, e, parse_signed());
      else
        return e;
    }
  }

  NodePtr parse_signed() {
    if (eat('-')) return make_node(Node::Kind::Neg, parse_signed());
    if (eat('+')) return parse_signed();
    return parse_power();
  }

  NodePtr parse_power() {
    NodePtr base = parse_atom();
    if (eat('^')) return make_node(Node::Kind::Pow, base, parse_signed());
    return base;
  }

  NodePtr parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) err("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr e = parse_sum();
      if (!eat(')')) err("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_identifier();
    err(std::string("unexpected character '") + c + "'");
  }

  NodePtr parse_number() {
    const char* start = text_.c_str() + pos_;
    char* end = nullptr;
    const double v = std::strtod(start, &end);
    if (end == start) err("malformed number");
    pos_ += static_cast<size_t>(end - start);
    return make_number(Complex(v, 0.0));
  }

  NodePtr parse_identifier() {
    const size_t begin = pos_;
    while (pos_ < text_.size() &&
           std::isalpha(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    const std::string name = text_.substr(begin, pos_ - begin);
    if (name == "x") {
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::Var;
      return n;
    }
    if (name == "i") return make_number(Complex(0.0, 1.0));
    if (name == "pi") return make_number(Complex(std::numbers::pi, 0.0));
    Node::Kind k;
    if (name == "sin")
      k = Node::Kind::Sin;
    else if (name == "cos")
      k = Node::Kind::Cos;
    else if (name == "exp")
      k = Node::Kind::Exp;
    else {
      pos_ = begin;
      err("unknown identifier '" + name + "'");
    }
    if (!eat('(')) err("expected '(' after '" + name + "'");
    NodePtr arg = parse_sum();
    if (!eat(')')) err("expected ')'");
    return make_node(k, arg);
  }

  const std::string& text_;
  size_t pos_ = 0;
};

Complex eval_node(const Node& n, double x) {
  switch (n.kind) {
    case Node::Kind::Number: return n.value;
    case Node::Kind::Var: return Complex(x, 0.0);
    case Node::Kind::Add: return eval_node(*n.a, x) + eval_node(*n.b, x);
    case Node::Kind::Sub: return eval_node(*n.a, x) - eval_node(*n.b, x);
    case Node::Kind::Mul: return eval_node(*n.a, x) * eval_node(*n.b, x);
    case Node::Kind::Div: return eval_node(*n.a, x) / eval_node(*n.b, x);
    case Node::Kind::Pow: return std::pow(eval_node(*n.a, x), eval_node(*n.b, x));
    case Node::Kind::Neg: return -eval_node(*n.a, x);
    case Node::Kind::Sin: return std::sin(eval_node(*n.a, x));
    case Node::Kind::Cos: return std::cos(eval_node(*n.a, x));
    case Node::Kind::Exp: return std::exp(eval_node(*n.a, x));
  }
  fail(Errc::ConfigError, "corrupt expression node");
}

}  // namespace

Expression Expression::parse(const std::string& text) {
  Expression e;
  e.root_ = Parser(text).run();
  e.text_ = text;
  return e;
}

Complex Expression::eval(double x) const {
  if (!root_) fail(Errc::ConfigError, "empty expression");
  return eval_node(*root_, x);
}

Bandlimited Expression::to_bandlimited(int bandwidth, int samples) const {
  if (bandwidth < 0) fail(Errc::ConfigError, "bandwidth must be nonnegative");
  int S = samples > 0 ? samples : std::max(256, 8 * (bandwidth + 1));
  if (S < 2 * bandwidth + 1) S = 2 * bandwidth + 1;
  std::vector<Complex> v(S);
  for (int j = 0; j < S; ++j)
    v[j] = eval(2.0 * std::numbers::pi * j / S);
  return Bandlimited::from_samples(v, bandwidth);
}

}  // namespace gidx
