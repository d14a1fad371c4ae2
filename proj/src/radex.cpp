#include "galoisrad/radex.hpp"

#include <cctype>

namespace galoisrad {

struct RadicalExpr::Node {
  Kind kind = Kind::Rational;
  Rational value;
  long a = 0;  // order or k
  long b = 0;  // power or branch
  RadicalExpr lhs;
  RadicalExpr rhs;

  // Leaves keep null children; building them must not recurse into the
  // default RadicalExpr (which is itself a leaf).
  explicit Node(int) : lhs(nullptr), rhs(nullptr) {}
};

RadicalExpr::RadicalExpr() : node_(std::make_shared<const Node>(0)) {}

RadicalExpr RadicalExpr::rational(const Rational& value) {
  auto n = std::make_shared<Node>(0);
  n->kind = Kind::Rational;
  n->value = value;
  return RadicalExpr(std::move(n));
}

RadicalExpr RadicalExpr::root_of_unity(long order, long power) {
  if (order < 1) fail(Errc::InvalidArgument, "root of unity order must be positive");
  auto n = std::make_shared<Node>(0);
  n->kind = Kind::RootOfUnity;
  n->a = order;
  n->b = ((power % order) + order) % order;
  return RadicalExpr(std::move(n));
}

RadicalExpr RadicalExpr::kth_root(long k, const RadicalExpr& child, long branch) {
  if (k < 2) fail(Errc::InvalidArgument, "root index must be at least 2");
  if (branch < 0 || branch >= k) fail(Errc::InvalidArgument, "branch must be in 0..k-1");
  auto n = std::make_shared<Node>(0);
  n->kind = Kind::KthRoot;
  n->a = k;
  n->b = branch;
  n->lhs = child;
  return RadicalExpr(std::move(n));
}

RadicalExpr RadicalExpr::binary(Kind kind, const RadicalExpr& a, const RadicalExpr& b) {
  auto n = std::make_shared<Node>(0);
  n->kind = kind;
  n->lhs = a;
  n->rhs = b;
  return RadicalExpr(std::move(n));
}

RadicalExpr operator+(const RadicalExpr& a, const RadicalExpr& b) { return RadicalExpr::binary(RadicalExpr::Kind::Add, a, b); }
RadicalExpr operator-(const RadicalExpr& a, const RadicalExpr& b) { return RadicalExpr::binary(RadicalExpr::Kind::Sub, a, b); }
RadicalExpr operator*(const RadicalExpr& a, const RadicalExpr& b) { return RadicalExpr::binary(RadicalExpr::Kind::Mul, a, b); }
RadicalExpr operator/(const RadicalExpr& a, const RadicalExpr& b) {
  if (b.kind() == RadicalExpr::Kind::Rational && b.value() == 0) fail(Errc::DivisionByZero, "division by the zero expression");
  return RadicalExpr::binary(RadicalExpr::Kind::Div, a, b);
}

RadicalExpr::Kind RadicalExpr::kind() const { return node_->kind; }
const Rational& RadicalExpr::value() const { return node_->value; }
long RadicalExpr::order() const { return node_->a; }
long RadicalExpr::power() const { return node_->b; }
long RadicalExpr::k() const { return node_->a; }
long RadicalExpr::branch() const { return node_->b; }
const RadicalExpr& RadicalExpr::left() const { return node_->lhs; }
const RadicalExpr& RadicalExpr::right() const { return node_->rhs; }
const RadicalExpr& RadicalExpr::child() const { return node_->lhs; }

bool operator==(const RadicalExpr& x, const RadicalExpr& y) {
  if (x.node_ == y.node_) return true;
  if (x.kind() != y.kind()) return false;
  switch (x.kind()) {
    case RadicalExpr::Kind::Rational:
      return x.value() == y.value();
    case RadicalExpr::Kind::RootOfUnity:
      return x.order() == y.order() && x.power() == y.power();
    case RadicalExpr::Kind::KthRoot:
      return x.k() == y.k() && x.branch() == y.branch() && x.child() == y.child();
    default:
      return x.left() == y.left() && x.right() == y.right();
  }
}

ApproxComplex RadicalExpr::eval(int prec) const {
  switch (kind()) {
    case Kind::Rational:
      return ApproxComplex(value(), prec);
    case Kind::RootOfUnity:
      return ApproxComplex::root_of_unity(order(), power(), prec);
    case Kind::Add:
      return left().eval(prec) + right().eval(prec);
    case Kind::Sub:
      return left().eval(prec) - right().eval(prec);
    case Kind::Mul:
      return left().eval(prec) * right().eval(prec);
    case Kind::Div: {
      ApproxComplex den = right().eval(prec);
      if (den.is_zero() || den.abs() < BigFloat::pow2(-prec, prec)) {
        fail(Errc::DivisionByZeroAtEval, "denominator evaluates to zero: " + right().format());
      }
      return left().eval(prec) / den;
    }
    case Kind::KthRoot:
      return galoisrad::kth_root(child().eval(prec), k(), branch());
  }
  fail(Errc::InvariantViolation, "unknown node kind");
}

std::string RadicalExpr::format() const {
  switch (kind()) {
    case Kind::Rational:
      return to_string(value());
    case Kind::RootOfUnity:
      return "zeta(" + std::to_string(order()) + "," + std::to_string(power()) + ")";
    case Kind::KthRoot:
      return "root(" + std::to_string(k()) + ", " + child().format() + ", " + std::to_string(branch()) + ")";
    case Kind::Add:
      return "(" + left().format() + " + " + right().format() + ")";
    case Kind::Sub:
      return "(" + left().format() + " - " + right().format() + ")";
    case Kind::Mul:
      return "(" + left().format() + " * " + right().format() + ")";
    case Kind::Div:
      return "(" + left().format() + " / " + right().format() + ")";
  }
  return "?";
}

std::size_t RadicalExpr::node_count() const {
  switch (kind()) {
    case Kind::Rational:
    case Kind::RootOfUnity:
      return 1;
    case Kind::KthRoot:
      return 1 + child().node_count();
    default:
      return 1 + left().node_count() + right().node_count();
  }
}

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  RadicalExpr parse_all() {
    RadicalExpr e = expr();
    skip();
    if (pos_ != text_.size()) error("trailing input");
    return e;
  }

 private:
  [[noreturn]] void error(const std::string& what) const { throw ParseError(pos_, what); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) error(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool keyword(std::string_view word) {
    skip();
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) error("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  long small_int() {
    std::string d = digits();
    if (d.size() > 9) error("integer too large");
    return std::stol(d);
  }

  RadicalExpr expr() {
    skip();
    if (pos_ >= text_.size()) error("unexpected end of input");
    if (keyword("zeta")) {
      expect('(');
      long order = small_int();
      expect(',');
      long power = small_int();
      expect(')');
      if (order < 1) error("root of unity order must be positive");
      return RadicalExpr::root_of_unity(order, power);
    }
    if (keyword("root")) {
      expect('(');
      long k = small_int();
      expect(',');
      RadicalExpr child = expr();
      expect(',');
      long branch = small_int();
      expect(')');
      if (k < 2 || branch >= k) error("invalid root index or branch");
      return RadicalExpr::kth_root(k, child, branch);
    }
    if (peek('(')) {
      ++pos_;
      RadicalExpr lhs = expr();
      skip();
      if (pos_ >= text_.size()) error("expected operator");
      char op = text_[pos_];
      if (op != '+' && op != '-' && op != '*' && op != '/') error("expected operator");
      ++pos_;
      std::size_t rhs_pos = pos_;
      RadicalExpr rhs = expr();
      expect(')');
      switch (op) {
        case '+':
          return lhs + rhs;
        case '-':
          return lhs - rhs;
        case '*':
          return lhs * rhs;
        default:
          if (rhs.kind() == RadicalExpr::Kind::Rational && rhs.value() == 0) {
            pos_ = rhs_pos;
            error("division by zero");
          }
          return lhs / rhs;
      }
    }
    bool negative = false;
    if (peek('-')) {
      negative = true;
      ++pos_;
    }
    std::string num = digits();
    std::string den = "1";
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      den = digits();
    }
    Integer d(den);
    if (d == 0) error("zero denominator");
    Rational r(Integer(num), d);
    r.canonicalize();
    return RadicalExpr::rational(negative ? Rational(-r) : r);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RadicalExpr RadicalExpr::parse(std::string_view text) { return ExprParser(text).parse_all(); }

bool verify_root(const UniPoly& p, const RadicalExpr& e, int prec) {
  try {
    return p.eval(e.eval(prec)).abs() < residual_tolerance(prec);
  } catch (const MathError& err) {
    if (err.code() == Errc::DivisionByZeroAtEval) return false;
    throw;
  }
}

}  // namespace galoisrad
