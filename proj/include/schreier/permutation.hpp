#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "schreier/word.hpp"

namespace schreier {

// Permutation of {1..n}.  Products compose left to right: (p * q)(x) =
// q(p(x)), so a word's letters act in reading order.
class Permutation {
 public:
  explicit Permutation(std::size_t n = 0);
  static Permutation transposition(std::size_t n, std::size_t a, std::size_t b);  // 1-based

  std::size_t degree() const { return image_.size(); }
  std::size_t operator()(std::size_t x) const { return image_[x - 1] + 1; }
  Permutation operator*(const Permutation& o) const;
  Permutation inverse() const;
  bool is_identity() const;
  friend bool operator==(const Permutation&, const Permutation&) = default;

  std::string to_string() const;  // cycle notation, "()" for the identity

 private:
  std::vector<std::size_t> image_;  // 0-based
};

using PermutationRep = std::function<Permutation(const Generator&)>;

Permutation evaluate(const Word& w, const PermutationRep& rep, std::size_t degree);

// s_i -> (i, i+1); r_i -> (i, i+1) or the identity.
PermutationRep symmetric_rep(std::size_t n, bool rho_as_transposition);

}  // namespace schreier
