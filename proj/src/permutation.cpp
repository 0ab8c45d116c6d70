#include "schreier/permutation.hpp"

#include <numeric>

#include "schreier/error.hpp"

namespace schreier {

Permutation::Permutation(std::size_t n) : image_(n) {
  std::iota(image_.begin(), image_.end(), std::size_t{0});
}

Permutation Permutation::transposition(std::size_t n, std::size_t a, std::size_t b) {
  if (a < 1 || b < 1 || a > n || b > n)
    throw ValidationError("transposition (" + std::to_string(a) + "," + std::to_string(b) +
                          ") out of range for degree " + std::to_string(n));
  Permutation p(n);
  std::swap(p.image_[a - 1], p.image_[b - 1]);
  return p;
}

Permutation Permutation::operator*(const Permutation& o) const {
  if (degree() != o.degree()) throw ValidationError("permutation degrees differ");
  Permutation r(degree());
  for (std::size_t x = 0; x < degree(); ++x) r.image_[x] = o.image_[image_[x]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r(degree());
  for (std::size_t x = 0; x < degree(); ++x) r.image_[image_[x]] = x;
  return r;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < degree(); ++x)
    if (image_[x] != x) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  std::vector<char> seen(degree(), 0);
  for (std::size_t x = 0; x < degree(); ++x) {
    if (seen[x] || image_[x] == x) continue;
    out += "(";
    for (std::size_t y = x; !seen[y]; y = image_[y]) {
      if (y != x) out += " ";
      out += std::to_string(y + 1);
      seen[y] = 1;
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Permutation evaluate(const Word& w, const PermutationRep& rep, std::size_t degree) {
  Permutation acc(degree);
  for (const auto& l : w.runs()) {
    Permutation g = rep(l.gen);
    if (l.exp < 0) g = g.inverse();
    for (std::int64_t e = l.exp < 0 ? -l.exp : l.exp; e > 0; --e) acc = acc * g;
  }
  return acc;
}

PermutationRep symmetric_rep(std::size_t n, bool rho_as_transposition) {
  return [n, rho_as_transposition](const Generator& g) {
    if (g.arity != 1 || (g.family != kSigma && g.family != kRho))
      throw ValidationError("no permutation image for " + schreier::to_string(g));
    if (g.family == kRho && !rho_as_transposition) return Permutation(n);
    auto i = static_cast<std::size_t>(g[0]);
    return Permutation::transposition(n, i, i + 1);
  };
}

}  // namespace schreier
