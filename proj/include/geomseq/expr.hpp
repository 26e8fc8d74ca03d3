#pragma once

// Tiny arithmetic expression language in one variable `k`, used by the
// custom-log generator family ("log x_k = <expr>").
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' unary)?
//   atom   := number | 'k' | 'pi' | 'e' | ident '(' expr ')' | '(' expr ')'

#include <cctype>
#include <charconv>
#include <cmath>
#include <memory>
#include <numbers>
#include <string>
#include <string_view>
#include <utility>

#include "geomseq/errors.hpp"

namespace geomseq {

class LogExpression {
 public:
  explicit LogExpression(std::string text) : text_(std::move(text)) {
    Parser p{text_, 0};
    root_ = p.parse_expr();
    p.skip_ws();
    if (p.pos != text_.size())
      throw ParameterError("unexpected '" + std::string(1, text_[p.pos]) + "' in expression \"" + text_ + "\"");
  }

  double operator()(double k) const { return root_->eval(k); }
  const std::string& text() const noexcept { return text_; }

 private:
  struct Node {
    enum class Kind { number, var, neg, add, sub, mul, div, pow, call } kind;
    double number = 0.0;
    double (*fn)(double) = nullptr;
    std::unique_ptr<Node> lhs, rhs;

    double eval(double k) const {
      switch (kind) {
        case Kind::number: return number;
        case Kind::var: return k;
        case Kind::neg: return -lhs->eval(k);
        case Kind::add: return lhs->eval(k) + rhs->eval(k);
        case Kind::sub: return lhs->eval(k) - rhs->eval(k);
        case Kind::mul: return lhs->eval(k) * rhs->eval(k);
        case Kind::div: return lhs->eval(k) / rhs->eval(k);
        case Kind::pow: return std::pow(lhs->eval(k), rhs->eval(k));
        case Kind::call: return fn(lhs->eval(k));
      }
      return 0.0;
    }
  };
  using NodePtr = std::unique_ptr<Node>;

  static NodePtr make(Node::Kind kind, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
    auto n = std::make_unique<Node>();
    n->kind = kind;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
  }

  struct Parser {
    std::string_view s;
    std::size_t pos;

    void skip_ws() {
      while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
      skip_ws();
      if (pos < s.size() && s[pos] == c) {
        ++pos;
        return true;
      }
      return false;
    }
    [[noreturn]] void fail(const std::string& what) const {
      throw ParameterError(what + " at offset " + std::to_string(pos) + " in expression \"" + std::string(s) + "\"");
    }

    NodePtr parse_expr() {
      NodePtr lhs = parse_term();
      for (;;) {
        if (eat('+'))
          lhs = make(Node::Kind::add, std::move(lhs), parse_term());
        else if (eat('-'))
          lhs = make(Node::Kind::sub, std::move(lhs), parse_term());
        else
          return lhs;
      }
    }
    NodePtr parse_term() {
      NodePtr lhs = parse_unary();
      for (;;) {
        if (eat('*'))
          lhs = make(Node::Kind::mul, std::move(lhs), parse_unary());
        else if (eat('/'))
          lhs = make(Node::Kind::div, std::move(lhs), parse_unary());
        else
          return lhs;
      }
    }
    NodePtr parse_unary() {
      if (eat('-')) return make(Node::Kind::neg, parse_unary());
      if (eat('+')) return parse_unary();
      return parse_power();
    }
    NodePtr parse_power() {
      NodePtr base = parse_atom();
      if (eat('^')) return make(Node::Kind::pow, std::move(base), parse_unary());
      return base;
    }
    NodePtr parse_atom() {
      skip_ws();
      if (pos >= s.size()) fail("unexpected end");
      if (eat('(')) {
        NodePtr inner = parse_expr();
        if (!eat(')')) fail("missing ')'");
        return inner;
      }
      const char c = s[pos];
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        double v = 0.0;
        auto [end, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), v);
        if (ec != std::errc()) fail("bad number");
        pos = static_cast<std::size_t>(end - s.data());
        auto n = make(Node::Kind::number);
        n->number = v;
        return n;
      }
      if (std::isalpha(static_cast<unsigned char>(c))) {
        const std::size_t start = pos;
        while (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos]))) ++pos;
        const std::string_view id = s.substr(start, pos - start);
        if (id == "k") return make(Node::Kind::var);
        if (id == "pi" || id == "e") {
          auto n = make(Node::Kind::number);
          n->number = id == "pi" ? std::numbers::pi : std::numbers::e;
          return n;
        }
        double (*fn)(double) = lookup(id);
        if (!fn) fail("unknown identifier '" + std::string(id) + "'");
        if (!eat('(')) fail("expected '(' after function name");
        auto n = make(Node::Kind::call, parse_expr());
        n->fn = fn;
        if (!eat(')')) fail("missing ')'");
        return n;
      }
      fail("unexpected character");
    }

    static double (*lookup(std::string_view id))(double) {
      if (id == "sin") return [](double v) { return std::sin(v); };
      if (id == "cos") return [](double v) { return std::cos(v); };
      if (id == "tan") return [](double v) { return std::tan(v); };
      if (id == "exp") return [](double v) { return std::exp(v); };
      if (id == "log" || id == "ln") return [](double v) { return std::log(v); };
      if (id == "sqrt") return [](double v) { return std::sqrt(v); };
      if (id == "abs") return [](double v) { return std::fabs(v); };
      if (id == "floor") return [](double v) { return std::floor(v); };
      if (id == "ceil") return [](double v) { return std::ceil(v); };
      return nullptr;
    }
  };

  std::string text_;
  NodePtr root_;
};

}  // namespace geomseq
