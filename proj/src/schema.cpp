#include "schreier/schema.hpp"

#include <algorithm>

#include "schreier/error.hpp"
#include "odometer.hpp"

namespace schreier {

namespace {

void collect_vars(const AffineExpr& e, std::set<std::string>& out) {
  for (const auto& [n, c] : e.terms()) out.insert(n);
}

IndexRange intersect(const IndexRange& a, const IndexRange& b) {
  IndexRange r = a;
  if (b.lo) r.lo = r.lo ? std::max(*r.lo, *b.lo) : *b.lo;
  if (b.hi) r.hi = r.hi ? std::min(*r.hi, *b.hi) : *b.hi;
  return r;
}

// Range of p forced by "c*p + k lies in d", when e has that shape.
std::optional<IndexRange> forced_range(const AffineExpr& e, const std::string& p,
                                       const IndexRange& d) {
  if (e.terms().size() != 1 || e.terms()[0].first != p) return std::nullopt;
  std::int64_t c = e.terms()[0].second, k = e.constant();
  IndexRange r;
  if (c == 1) {
    if (d.lo) r.lo = *d.lo - k;
    if (d.hi) r.hi = *d.hi - k;
  } else if (c == -1) {
    if (d.hi) r.lo = k - *d.hi;
    if (d.lo) r.hi = k - *d.lo;
  } else {
    return std::nullopt;
  }
  return r;
}

}  // namespace

RelatorSchema::RelatorSchema(std::string name, std::vector<std::string> params,
                             std::vector<LetterTemplate> body,
                             std::vector<Guard> guards, AlphabetPtr alphabet)
    : name_(std::move(name)),
      body_(std::move(body)),
      guards_(std::move(guards)),
      alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw ValidationError("relator '" + name_ + "' has no alphabet");
  std::set<std::string> declared;
  for (const auto& p : params) {
    if (!declared.insert(p).second)
      throw ValidationError("relator '" + name_ + "' declares '" + p + "' twice");
    params_.push_back({p, IndexRange::all()});
  }
  std::set<std::string> used;
  for (const auto& l : body_) {
    const FamilyDecl& f = alphabet_->at(l.family);
    if (f.arity() != l.indices.size())
      throw ValidationError("relator '" + name_ + "': family '" + l.family +
                            "' takes " + std::to_string(f.arity()) + " indices");
    if (l.exp == 0)
      throw ValidationError("relator '" + name_ + "' has a zero exponent");
    for (const auto& e : l.indices) collect_vars(e, used);
  }
  for (auto& g : guards_) {
    collect_vars(g.lhs, used);
    collect_vars(g.rhs, used);
  }
  for (const auto& v : used)
    if (!declared.count(v))
      throw ValidationError("relator '" + name_ + "' uses unbound parameter '" +
                            v + "'");

  // Parameter ranges from the positions they index.
  for (auto& p : params_)
    for (const auto& l : body_) {
      const FamilyDecl& f = alphabet_->at(l.family);
      for (std::size_t pos = 0; pos < l.indices.size(); ++pos) {
        if (f.domain[pos].unbounded()) continue;
        if (auto r = forced_range(l.indices[pos], p.name, f.domain[pos]))
          p.range = intersect(p.range, *r);
      }
    }

  // Remaining domain constraints become implicit guards.
  auto covered = [&](const AffineExpr& e, const IndexRange& d) {
    if (e.terms().size() != 1) return false;
    for (const auto& p : params_)
      if (p.name == e.terms()[0].first) {
        auto r = forced_range(e, p.name, d);
        if (!r) return false;
        return intersect(p.range, *r) == p.range;
      }
    return false;
  };
  std::vector<Guard> implicit;
  for (const auto& l : body_) {
    const FamilyDecl& f = alphabet_->at(l.family);
    for (std::size_t pos = 0; pos < l.indices.size(); ++pos) {
      const IndexRange& d = f.domain[pos];
      const AffineExpr& e = l.indices[pos];
      if (d.unbounded() || covered(e, d)) continue;
      if (e.is_constant() && d.contains(e.constant())) continue;
      if (d.lo) implicit.push_back({e, false, CmpOp::ge, *d.lo, true});
      if (d.hi) implicit.push_back({e, false, CmpOp::le, *d.hi, true});
    }
  }
  for (auto& g : implicit)
    if (std::find(guards_.begin(), guards_.end(), g) == guards_.end())
      guards_.push_back(std::move(g));
}

std::vector<Guard> RelatorSchema::explicit_guards() const {
  std::vector<Guard> out;
  for (const auto& g : guards_)
    if (!g.implicit) out.push_back(g);
  return out;
}

bool RelatorSchema::admits(const Bindings& b) const {
  for (const auto& p : params_) {
    const std::int64_t* v = lookup(b, p.name);
    if (!v || !p.range.contains(*v)) return false;
  }
  for (const auto& g : guards_)
    if (!g.holds(b)) return false;
  return true;
}

Word RelatorSchema::instantiate(const Bindings& b) const {
  for (const auto& p : params_) {
    const std::int64_t* v = lookup(b, p.name);
    if (!v)
      throw GuardViolation("relator '" + name_ + "': parameter '" + p.name +
                           "' is not bound");
    if (!p.range.contains(*v))
      throw GuardViolation("relator '" + name_ + "': " + p.name + "=" +
                           std::to_string(*v) + " outside " +
                           schreier::to_string(p.range));
  }
  for (const auto& g : guards_)
    if (!g.holds(b))
      throw GuardViolation("relator '" + name_ + "': guard " + g.to_string() +
                           " fails for " + schreier::to_string(b));
  std::vector<Letter> letters;
  letters.reserve(body_.size());
  std::vector<std::int64_t> idx;
  for (const auto& l : body_) {
    idx.clear();
    for (const auto& e : l.indices) idx.push_back(e.evaluate(b));
    letters.push_back({Generator(l.family, std::span<const std::int64_t>(idx)), l.exp});
  }
  return normalize(letters, *alphabet_);
}

std::vector<Instance> RelatorSchema::enumerate(std::int64_t window) const {
  std::vector<Instance> out;
  std::vector<std::int64_t> lo, hi;
  for (const auto& p : params_) {
    lo.push_back(p.range.lo ? *p.range.lo : -window);
    hi.push_back(p.range.hi ? *p.range.hi : window);
    if (lo.back() > hi.back()) return out;
  }
  std::vector<std::int64_t> cur = lo;
  Bindings b;
  for (const auto& p : params_) b.emplace_back(p.name, 0);
  do {
    for (std::size_t i = 0; i < cur.size(); ++i) b[i].second = cur[i];
    bool ok = true;
    for (const auto& g : guards_)
      if (!g.holds(b)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    std::vector<Letter> letters;
    letters.reserve(body_.size());
    std::vector<std::int64_t> idx;
    for (const auto& l : body_) {
      idx.clear();
      for (const auto& e : l.indices) idx.push_back(e.evaluate(b));
      letters.push_back({Generator(l.family, std::span<const std::int64_t>(idx)), l.exp});
    }
    out.push_back({b, Word::reduce(letters)});
  } while (!cur.empty() && detail::advance(cur, lo, hi));
  return out;
}

std::string RelatorSchema::body_string() const {
  std::string out;
  for (const auto& l : body_) {
    if (!out.empty()) out += ' ';
    out += l.family;
    if (!l.indices.empty()) {
      out += '[';
      for (std::size_t i = 0; i < l.indices.size(); ++i) {
        if (i) out += ',';
        out += l.indices[i].to_string();
      }
      out += ']';
    }
    if (l.exp != 1) out += "^" + std::to_string(l.exp);
  }
  return out;
}

std::string RelatorSchema::to_string() const {
  std::string out = name_ + ":";
  if (!params_.empty()) {
    out += " forall ";
    for (std::size_t i = 0; i < params_.size(); ++i) {
      if (i) out += ',';
      out += params_[i].name;
    }
  }
  auto eg = explicit_guards();
  if (!eg.empty()) {
    out += " where ";
    for (std::size_t i = 0; i < eg.size(); ++i) {
      if (i) out += ", ";
      out += eg[i].to_string();
    }
  }
  return out + " : " + body_string();
}

bool RelatorSchema::same_shape(const RelatorSchema& o) const {
  if (body_ != o.body_) return false;
  std::vector<Guard> a = guards_, b = o.guards_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  return a == b;
}

RelatorSchema RelatorSchema::renamed(std::string name) const {
  RelatorSchema copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

const RelatorSchema* PresentationSchema::find(const std::string& relator_name) const {
  for (const auto& r : relators)
    if (r.name() == relator_name) return &r;
  return nullptr;
}

namespace {

// Exponents of involutions mod 2, repeated until stable (merging runs can
// create new even exponents).
Word reduce_involutions(Word w, const std::set<Generator>& inv) {
  while (true) {
    bool changed = false;
    Word out;
    for (const auto& r : w.runs()) {
      if (inv.count(r.gen)) {
        std::int64_t e = ((r.exp % 2) + 2) % 2;
        if (e != r.exp) changed = true;
        out.push_back(r.gen, e);
      } else {
        out.push_back(r);
      }
    }
    w = std::move(out);
    if (!changed) return w;
  }
}

Word cyclically_reduce(const Word& w, const std::set<Generator>* inv) {
  std::vector<Letter> runs = w.runs();
  std::size_t b = 0, e = runs.size();
  while (true) {
    while (e - b >= 2 && runs[b].gen == runs[e - 1].gen) {
      runs[b].exp += runs[e - 1].exp;
      --e;
      if (runs[b].exp == 0) ++b;
    }
    Word out = Word::reduce(std::span<const Letter>(runs.data() + b, e - b));
    if (!inv) return out;
    Word again = reduce_involutions(out, *inv);
    if (again == out) return out;
    runs = again.runs();
    b = 0;
    e = runs.size();
  }
}

void rotations_min(const Word& w, Word& best, bool& have) {
  const auto& r = w.runs();
  std::vector<Letter> rot(r.size());
  for (std::size_t s = 0; s < r.size(); ++s) {
    for (std::size_t i = 0; i < r.size(); ++i) rot[i] = r[(s + i) % r.size()];
    bool smaller = !have || std::lexicographical_compare(
                                rot.begin(), rot.end(), best.runs().begin(),
                                best.runs().end());
    if (smaller) {
      best = Word::reduce(rot);
      have = true;
    }
  }
}

}  // namespace

Word canonical_relator(const Word& w, const std::set<Generator>* involutions) {
  Word base = involutions ? reduce_involutions(w, *involutions) : w;
  base = cyclically_reduce(base, involutions);
  if (base.empty()) return base;
  Word inv = invert(base);
  if (involutions) inv = reduce_involutions(inv, *involutions);
  Word best;
  bool have = false;
  rotations_min(base, best, have);
  rotations_min(inv, best, have);
  return best;
}

RelatorSet canonical_instances(const std::vector<RelatorSchema>& schemas,
                               std::int64_t window,
                               const std::set<Generator>* involutions) {
  RelatorSet out;
  for (const auto& s : schemas)
    for (const auto& inst : s.enumerate(window)) {
      Word c = canonical_relator(inst.word, involutions);
      if (!c.empty()) out.insert(std::move(c));
    }
  return out;
}

SetComparison compare_relator_sets(const RelatorSet& left, const RelatorSet& right) {
  SetComparison c;
  std::set_difference(left.begin(), left.end(), right.begin(), right.end(),
                      std::back_inserter(c.only_left));
  std::set_difference(right.begin(), right.end(), left.begin(), left.end(),
                      std::back_inserter(c.only_right));
  c.equal = c.only_left.empty() && c.only_right.empty();
  return c;
}

bool schema_sets_equal(const std::vector<RelatorSchema>& a,
                       const std::vector<RelatorSchema>& b, std::int64_t window,
                       const std::set<Generator>* involutions) {
  return canonical_instances(a, window, involutions) ==
         canonical_instances(b, window, involutions);
}

std::set<Generator> detect_involutions(const std::vector<Word>& relators) {
  std::set<Generator> out;
  for (const auto& w : relators)
    if (w.run_count() == 1 && (w.runs()[0].exp == 2 || w.runs()[0].exp == -2))
      out.insert(w.runs()[0].gen);
  return out;
}

}  // namespace schreier
