#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace schreier {

// Parameter assignment, kept in declaration order.
using Bindings = std::vector<std::pair<std::string, std::int64_t>>;

const std::int64_t* lookup(const Bindings& b, const std::string& name);
std::string to_string(const Bindings& b);

// c0 + sum(ci * pi) over named integer parameters.
class AffineExpr {
 public:
  AffineExpr() = default;
  AffineExpr(std::int64_t c) : constant_(c) {}  // NOLINT: literals read naturally
  static AffineExpr var(const std::string& name, std::int64_t coef = 1);

  std::int64_t constant() const { return constant_; }
  const std::vector<std::pair<std::string, std::int64_t>>& terms() const {
    return terms_;
  }
  bool is_constant() const { return terms_.empty(); }
  // Name of the parameter if the expression is exactly that parameter.
  const std::string* bare_variable() const;

  std::int64_t evaluate(const Bindings& b) const;  // throws on unbound names
  AffineExpr substitute(const Bindings& b) const;  // partial evaluation

  AffineExpr operator+(const AffineExpr& o) const;
  AffineExpr operator-(const AffineExpr& o) const;
  AffineExpr operator-() const;
  AffineExpr operator*(std::int64_t s) const;

  std::string to_string() const;

  friend bool operator==(const AffineExpr&, const AffineExpr&) = default;
  friend auto operator<=>(const AffineExpr&, const AffineExpr&) = default;

 private:
  void add_term(const std::string& name, std::int64_t coef);
  std::int64_t constant_ = 0;
  std::vector<std::pair<std::string, std::int64_t>> terms_;  // sorted, nonzero
};

enum class CmpOp { lt, le, gt, ge, eq, ne };
std::string to_string(CmpOp op);

// lhs op rhs, or |lhs| op rhs.  Implicit guards come from index domains and
// are not printed when a schema is emitted.
struct Guard {
  AffineExpr lhs;
  bool absolute = false;
  CmpOp op = CmpOp::le;
  AffineExpr rhs;
  bool implicit = false;

  bool holds(const Bindings& b) const;
  std::string to_string() const;

  friend bool operator==(const Guard& a, const Guard& b) {
    return a.lhs == b.lhs && a.absolute == b.absolute && a.op == b.op &&
           a.rhs == b.rhs;
  }
  friend auto operator<=>(const Guard& a, const Guard& b) {
    if (auto c = a.lhs <=> b.lhs; c != 0) return c;
    if (auto c = a.absolute <=> b.absolute; c != 0) return c;
    if (auto c = a.op <=> b.op; c != 0) return c;
    return a.rhs <=> b.rhs;
  }
};

// Shorthands used by the built-in catalogs.
Guard far_apart(const std::string& i, const std::string& j);  // |i-j| > 1
Guard at_least(const AffineExpr& e, std::int64_t c);
Guard at_most(const AffineExpr& e, std::int64_t c);

}  // namespace schreier
