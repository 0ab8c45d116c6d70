#include "schreier/affine.hpp"

#include <algorithm>

#include "schreier/error.hpp"

namespace schreier {

const std::int64_t* lookup(const Bindings& b, const std::string& name) {
  for (const auto& [n, v] : b)
    if (n == name) return &v;
  return nullptr;
}

std::string to_string(const Bindings& b) {
  std::string out;
  for (const auto& [n, v] : b) {
    if (!out.empty()) out += ',';
    out += n + "=" + std::to_string(v);
  }
  return out;
}

AffineExpr AffineExpr::var(const std::string& name, std::int64_t coef) {
  AffineExpr e;
  e.add_term(name, coef);
  return e;
}

void AffineExpr::add_term(const std::string& name, std::int64_t coef) {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), name,
      [](const auto& t, const std::string& n) { return t.first < n; });
  if (it != terms_.end() && it->first == name) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  } else if (coef != 0) {
    terms_.insert(it, {name, coef});
  }
}

const std::string* AffineExpr::bare_variable() const {
  if (constant_ == 0 && terms_.size() == 1 && terms_[0].second == 1)
    return &terms_[0].first;
  return nullptr;
}

std::int64_t AffineExpr::evaluate(const Bindings& b) const {
  std::int64_t v = constant_;
  for (const auto& [n, c] : terms_) {
    const std::int64_t* x = lookup(b, n);
    if (!x) throw GuardViolation("unbound parameter '" + n + "'");
    v += c * *x;
  }
  return v;
}

AffineExpr AffineExpr::substitute(const Bindings& b) const {
  AffineExpr out(constant_);
  for (const auto& [n, c] : terms_) {
    if (const std::int64_t* x = lookup(b, n))
      out.constant_ += c * *x;
    else
      out.add_term(n, c);
  }
  return out;
}

AffineExpr AffineExpr::operator+(const AffineExpr& o) const {
  AffineExpr out = *this;
  out.constant_ += o.constant_;
  for (const auto& [n, c] : o.terms_) out.add_term(n, c);
  return out;
}

AffineExpr AffineExpr::operator-(const AffineExpr& o) const { return *this + (-o); }

AffineExpr AffineExpr::operator-() const { return *this * -1; }

AffineExpr AffineExpr::operator*(std::int64_t s) const {
  AffineExpr out;
  if (s == 0) return out;
  out.constant_ = constant_ * s;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.second *= s;
  return out;
}

std::string AffineExpr::to_string() const {
  std::string out;
  for (const auto& [n, c] : terms_) {
    std::int64_t a = c < 0 ? -c : c;
    if (c < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    if (a != 1) out += std::to_string(a) + "*";
    out += n;
  }
  if (constant_ != 0 || out.empty()) {
    if (constant_ >= 0 && !out.empty()) out += "+";
    out += std::to_string(constant_);
  }
  return out;
}

std::string to_string(CmpOp op) {
  switch (op) {
    case CmpOp::lt: return "<";
    case CmpOp::le: return "<=";
    case CmpOp::gt: return ">";
    case CmpOp::ge: return ">=";
    case CmpOp::eq: return "=";
    case CmpOp::ne: return "!=";
  }
  return "?";
}

bool Guard::holds(const Bindings& b) const {
  std::int64_t l = lhs.evaluate(b);
  if (absolute && l < 0) l = -l;
  std::int64_t r = rhs.evaluate(b);
  switch (op) {
    case CmpOp::lt: return l < r;
    case CmpOp::le: return l <= r;
    case CmpOp::gt: return l > r;
    case CmpOp::ge: return l >= r;
    case CmpOp::eq: return l == r;
    case CmpOp::ne: return l != r;
  }
  return false;
}

std::string Guard::to_string() const {
  std::string l = lhs.to_string();
  if (absolute) l = "|" + l + "|";
  return l + schreier::to_string(op) + rhs.to_string();
}

Guard far_apart(const std::string& i, const std::string& j) {
  return {AffineExpr::var(i) - AffineExpr::var(j), true, CmpOp::gt, 1};
}

Guard at_least(const AffineExpr& e, std::int64_t c) {
  return {e, false, CmpOp::ge, c};
}

Guard at_most(const AffineExpr& e, std::int64_t c) {
  return {e, false, CmpOp::le, c};
}

}  // namespace schreier
