#include "schreier/presentation_io.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>

#include "schreier/error.hpp"

namespace schreier {

namespace {

// Cursor over a single line.
class Cursor {
 public:
  Cursor(std::string_view line, std::size_t number) : s_(line), line_(number) {}

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, pos_ + 1, what); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& what) const {
    throw ParseError(line_, pos + 1, what);
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_space();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  std::size_t pos() const { return pos_; }
  void reset(std::size_t pos) { pos_ = pos; }

  // Relator labels may also contain '-'.
  std::optional<std::string> label() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (is_ident_char(s_[pos_]) || s_[pos_] == '-')) ++pos_;
    if (start == pos_) return std::nullopt;
    return std::string(s_.substr(start, pos_ - start));
  }

  bool accept(std::string_view tok) {
    skip_space();
    if (s_.substr(pos_, tok.size()) != tok) return false;
    // Keywords must not run into an identifier.
    if (std::isalpha(static_cast<unsigned char>(tok.back())) && pos_ + tok.size() < s_.size() &&
        is_ident_char(s_[pos_ + tok.size()]))
      return false;
    pos_ += tok.size();
    return true;
  }
  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  std::optional<std::string> identifier() {
    skip_space();
    if (pos_ >= s_.size() || !(std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      return std::nullopt;
    std::size_t start = pos_;
    while (pos_ < s_.size() && is_ident_char(s_[pos_])) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }
  std::string expect_identifier(const std::string& what) {
    auto id = identifier();
    if (!id) fail("expected " + what);
    return *id;
  }

  std::optional<std::int64_t> integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) return std::nullopt;
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, v);
    if (ec != std::errc()) fail_at(start, "integer out of range");
    return v;
  }

  // Signed integer, for exponents.
  std::int64_t expect_signed(const std::string& what) {
    bool neg = accept("-");
    auto v = integer();
    if (!v) fail("expected " + what);
    return neg ? -*v : *v;
  }

  // term (('+'|'-') term)*, term = [int ['*']] ident | int
  AffineExpr affine() {
    AffineExpr e;
    bool first = true;
    while (true) {
      std::int64_t sign = 1;
      if (accept("-"))
        sign = -1;
      else if (!first && !accept("+"))
        break;
      else if (first)
        accept("+");
      e = e + term() * sign;
      first = false;
      char c = peek();
      if (c != '+' && c != '-') break;
    }
    return e;
  }

 private:
  static bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  AffineExpr term() {
    if (auto v = integer()) {
      if (accept("*")) {
        std::string name = expect_identifier("parameter after '*'");
        return AffineExpr::var(name, *v);
      }
      if (auto name = identifier()) return AffineExpr::var(*name, *v);
      return AffineExpr(*v);
    }
    if (auto name = identifier()) return AffineExpr::var(*name);
    fail("expected an integer or a parameter");
  }

  std::string_view s_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

std::int64_t evaluate_in_n(const AffineExpr& e, std::optional<std::int64_t> n, Cursor& c,
                           std::size_t at) {
  for (const auto& [name, coef] : e.terms()) {
    if (name != "n") c.fail_at(at, "range bound may only use n, found '" + name + "'");
    if (!n) c.fail_at(at, "range uses n but no 'group <name> n <k>' line precedes it");
  }
  return n ? e.evaluate({{"n", *n}}) : e.constant();
}

IndexRange parse_range(Cursor& c, std::optional<std::int64_t> n) {
  if (c.accept("Z")) return IndexRange::all();
  IndexRange r;
  if (c.peek() != '.') {
    std::size_t at = c.pos();
    r.lo = evaluate_in_n(c.affine(), n, c, at);
  }
  c.expect("..");
  char next = c.peek();
  if (next != ',' && next != '\0') {
    std::size_t at = c.pos();
    r.hi = evaluate_in_n(c.affine(), n, c, at);
  }
  return r;
}

CmpOp parse_op(Cursor& c) {
  if (c.accept("<=")) return CmpOp::le;
  if (c.accept(">=")) return CmpOp::ge;
  if (c.accept("!=")) return CmpOp::ne;
  if (c.accept("<")) return CmpOp::lt;
  if (c.accept(">")) return CmpOp::gt;
  if (c.accept("=")) return CmpOp::eq;
  c.fail("expected a comparison operator");
}

Guard parse_guard(Cursor& c) {
  Guard g;
  if (c.accept("|")) {
    g.absolute = true;
    g.lhs = c.affine();
    c.expect("|");
  } else {
    g.lhs = c.affine();
  }
  g.op = parse_op(c);
  g.rhs = c.affine();
  return g;
}

LetterTemplate parse_letter(Cursor& c, const Alphabet& alphabet) {
  std::size_t at = c.pos();
  std::string family = c.expect_identifier("a generator family");
  const FamilyDecl* f = alphabet.find(family);
  if (!f) c.fail_at(at, "undeclared family '" + family + "'");
  LetterTemplate l{family, {}, 1};
  if (c.accept("[")) {
    do {
      l.indices.push_back(c.affine());
    } while (c.accept(","));
    c.expect("]");
  }
  if (l.indices.size() != f->arity())
    c.fail_at(at, "family '" + family + "' takes " + std::to_string(f->arity()) +
                      " indices, found " + std::to_string(l.indices.size()));
  if (c.accept("^")) {
    std::size_t e_at = c.pos();
    l.exp = c.expect_signed("an exponent");
    if (l.exp == 0) c.fail_at(e_at, "zero exponent");
  }
  return l;
}

}  // namespace

PresentationSchema parse_presentation(std::string_view text) {
  PresentationSchema p;
  p.name = "presentation";
  auto alphabet = std::make_shared<Alphabet>();
  p.alphabet = alphabet;
  bool seen_group = false;
  std::size_t unnamed = 0;

  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Cursor c(line, number);
    if (c.at_end()) {
      if (end == text.size()) break;
      continue;
    }

    if (c.accept("group")) {
      if (seen_group) c.fail("duplicate 'group' line");
      if (!alphabet->families().empty() || !p.relators.empty())
        c.fail("'group' must come before gen and rel lines");
      p.name = c.expect_identifier("a group name");
      if (c.accept("n")) {
        auto v = c.integer();
        if (!v) c.fail("expected the number of strands");
        p.n = *v;
      }
      seen_group = true;
    } else if (c.accept("gen")) {
      std::size_t at = c.pos();
      FamilyDecl f;
      f.name = c.expect_identifier("a family name");
      if (alphabet->find(f.name)) c.fail_at(at, "family '" + f.name + "' declared twice");
      c.expect("arity");
      auto arity = c.integer();
      if (!arity) c.fail("expected the arity");
      if (*arity > 0) {
        c.expect("range");
        do {
          f.domain.push_back(parse_range(c, p.n));
        } while (c.accept(","));
      }
      if (f.domain.size() != static_cast<std::size_t>(*arity))
        c.fail("arity " + std::to_string(*arity) + " but " + std::to_string(f.domain.size()) +
               " ranges");
      try {
        alphabet->declare(std::move(f));
      } catch (const Error& e) {
        c.fail_at(at, e.what());
      }
    } else if (c.accept("rel")) {
      std::size_t rel_at = c.pos();
      std::string name;
      std::vector<std::string> params;
      std::vector<Guard> guards;
      std::size_t mark = c.pos();
      if (auto label = c.label(); label && *label != "forall" && *label != "where")
        name = *label;
      else
        c.reset(mark);
      if (name.empty()) name = "rel" + std::to_string(++unnamed);
      if (c.accept("forall")) {
        do {
          params.push_back(c.expect_identifier("a parameter name"));
        } while (c.accept(","));
      }
      if (c.accept("where")) {
        do {
          guards.push_back(parse_guard(c));
        } while (c.accept(","));
      }
      c.expect(":");
      std::vector<LetterTemplate> body;
      while (!c.at_end()) body.push_back(parse_letter(c, *alphabet));
      if (body.empty()) c.fail("empty relator");
      try {
        p.relators.emplace_back(name, std::move(params), std::move(body), std::move(guards),
                                p.alphabet);
      } catch (const Error& e) {
        c.fail_at(rel_at, e.what());
      }
    } else {
      c.fail("expected 'group', 'gen' or 'rel'");
    }
    if (!c.at_end()) c.fail("unexpected trailing text");
    if (end == text.size()) break;
  }
  return p;
}

std::string emit_presentation(const PresentationSchema& p) {
  std::ostringstream os;
  os << "group " << p.name;
  if (p.n) os << " n " << *p.n;
  os << "\n";
  for (const auto& f : p.alphabet->families()) {
    os << "gen " << f.name << " arity " << f.arity();
    for (std::size_t i = 0; i < f.domain.size(); ++i)
      os << (i ? "," : " range ") << to_string(f.domain[i]);
    os << "\n";
  }
  for (const auto& r : p.relators) {
    os << "rel " << r.name();
    for (std::size_t i = 0; i < r.params().size(); ++i)
      os << (i ? "," : " forall ") << r.params()[i].name;
    auto guards = r.explicit_guards();
    for (std::size_t i = 0; i < guards.size(); ++i)
      os << (i ? ", " : " where ") << guards[i].to_string();
    os << " : " << r.body_string() << "\n";
  }
  return os.str();
}

bool presentations_equal(const PresentationSchema& a, const PresentationSchema& b) {
  if (a.name != b.name || a.n != b.n) return false;
  const auto& fa = a.alphabet->families();
  const auto& fb = b.alphabet->families();
  if (fa.size() != fb.size()) return false;
  for (std::size_t i = 0; i < fa.size(); ++i)
    if (fa[i].name != fb[i].name || fa[i].domain != fb[i].domain) return false;
  if (a.relators.size() != b.relators.size()) return false;
  for (std::size_t i = 0; i < a.relators.size(); ++i) {
    const auto& x = a.relators[i];
    const auto& y = b.relators[i];
    if (x.name() != y.name() || !x.same_shape(y) || x.params().size() != y.params().size())
      return false;
    for (std::size_t k = 0; k < x.params().size(); ++k)
      if (x.params()[k].name != y.params()[k].name || x.params()[k].range != y.params()[k].range)
        return false;
  }
  return true;
}

}  // namespace schreier
