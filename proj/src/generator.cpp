#include "schreier/generator.hpp"

#include <functional>

#include "schreier/error.hpp"
#include "odometer.hpp"

namespace schreier {

namespace {

void check_arity(const std::string& family, std::size_t n) {
  if (n > kMaxArity)
    throw ValidationError("family '" + family + "' has arity " +
                          std::to_string(n) + ", at most " +
                          std::to_string(kMaxArity) + " is supported");
}

}  // namespace

Generator::Generator(std::string fam, std::initializer_list<std::int64_t> indices)
    : Generator(std::move(fam), std::span<const std::int64_t>(indices.begin(),
                                                              indices.size())) {}

Generator::Generator(std::string fam, std::span<const std::int64_t> indices)
    : family(std::move(fam)) {
  check_arity(family, indices.size());
  arity = static_cast<std::uint8_t>(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) idx[i] = indices[i];
}

std::size_t GeneratorHash::operator()(const Generator& g) const noexcept {
  std::size_t h = std::hash<std::string>{}(g.family);
  for (std::size_t i = 0; i < g.arity; ++i)
    h = h * 1000003u ^ std::hash<std::int64_t>{}(g.idx[i]);
  return h ^ g.arity;
}

std::string to_string(const Generator& g) {
  // s1, r3 for a single non-negative index; bracketed otherwise.
  std::string out = g.family;
  if (g.arity == 1 && g.idx[0] >= 0) return out + std::to_string(g.idx[0]);
  if (g.arity == 0) return out;
  out += '[';
  for (std::size_t i = 0; i < g.arity; ++i) {
    if (i) out += ',';
    out += std::to_string(g.idx[i]);
  }
  return out + ']';
}

std::string to_string(const IndexRange& r) {
  if (r.unbounded()) return "Z";
  std::string lo = r.lo ? std::to_string(*r.lo) : "";
  std::string hi = r.hi ? std::to_string(*r.hi) : "";
  return lo + ".." + hi;
}

Alphabet::Alphabet(std::vector<FamilyDecl> families) {
  for (auto& f : families) declare(std::move(f));
}

void Alphabet::declare(FamilyDecl family) {
  check_arity(family.name, family.domain.size());
  if (find(family.name))
    throw ValidationError("family '" + family.name + "' declared twice");
  families_.push_back(std::move(family));
}

const FamilyDecl* Alphabet::find(const std::string& name) const {
  for (const auto& f : families_)
    if (f.name == name) return &f;
  return nullptr;
}

const FamilyDecl& Alphabet::at(const std::string& name) const {
  const FamilyDecl* f = find(name);
  if (!f) throw ValidationError("undeclared generator family '" + name + "'");
  return *f;
}

bool Alphabet::contains(const Generator& g) const {
  const FamilyDecl* f = find(g.family);
  if (!f || f->arity() != g.arity) return false;
  for (std::size_t i = 0; i < g.arity; ++i)
    if (!f->domain[i].contains(g.idx[i])) return false;
  return true;
}

void Alphabet::validate(const Generator& g) const {
  const FamilyDecl& f = at(g.family);
  if (f.arity() != g.arity)
    throw ValidationError("generator " + to_string(g) + " has " +
                          std::to_string(g.arity) + " indices, family '" +
                          f.name + "' takes " + std::to_string(f.arity()));
  for (std::size_t i = 0; i < g.arity; ++i)
    if (!f.domain[i].contains(g.idx[i]))
      throw ValidationError("generator " + to_string(g) + ": index " +
                            std::to_string(i) + " outside " +
                            to_string(f.domain[i]));
}

std::vector<std::int64_t> Alphabet::window_coordinates(const Generator& g) const {
  const FamilyDecl& f = at(g.family);
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < f.arity(); ++i)
    if (f.is_window_position(i)) out.push_back(g.idx[i]);
  return out;
}

std::vector<Generator> Alphabet::enumerate(std::int64_t window) const {
  std::vector<Generator> out;
  for (const auto& f : families_) {
    std::vector<std::int64_t> lo(f.arity()), hi(f.arity());
    bool empty = false;
    for (std::size_t i = 0; i < f.arity(); ++i) {
      const auto& d = f.domain[i];
      lo[i] = d.lo ? *d.lo : -window;
      hi[i] = d.hi ? *d.hi : window;
      if (lo[i] > hi[i]) empty = true;
    }
    if (empty) continue;
    std::vector<std::int64_t> cur = lo;
    do {
      out.emplace_back(f.name, std::span<const std::int64_t>(cur));
    } while (detail::advance(cur, lo, hi));
  }
  return out;
}

}  // namespace schreier
