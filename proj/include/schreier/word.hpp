#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "schreier/generator.hpp"

namespace schreier {

// One run g^exp of a word; exp is never zero inside a Word.
struct Letter {
  Generator gen;
  std::int64_t exp = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend std::strong_ordering operator<=>(const Letter& a, const Letter& b) {
    if (auto c = a.gen <=> b.gen; c != 0) return c;
    return a.exp <=> b.exp;
  }
};

// A freely reduced word in run-length form: no zero exponents and no two
// adjacent runs share a generator.
class Word {
 public:
  Word() = default;
  explicit Word(Generator g, std::int64_t exp = 1);

  // Free reduction of an arbitrary letter sequence (no validation).
  static Word reduce(std::span<const Letter> letters);

  const std::vector<Letter>& runs() const { return runs_; }
  bool empty() const { return runs_.empty(); }
  std::size_t run_count() const { return runs_.size(); }
  // Sum of |exp| over all runs.
  std::int64_t length() const;

  // Append keeping the word reduced.
  void push_back(const Generator& g, std::int64_t exp);
  void push_back(const Letter& l) { push_back(l.gen, l.exp); }
  void append(const Word& w);

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return std::lexicographical_compare_three_way(
        a.runs_.begin(), a.runs_.end(), b.runs_.begin(), b.runs_.end());
  }

 private:
  std::vector<Letter> runs_;
};

class Alphabet;

// Validates every letter against the alphabet, then reduces.
Word normalize(std::span<const Letter> letters, const Alphabet& alphabet);

Word concat(const Word& a, const Word& b);
Word invert(const Word& w);
// by * w * by^-1
Word conjugate(const Word& w, const Word& by);
Word power(const Word& w, std::int64_t e);
bool freely_equal(const Word& a, const Word& b);

// Image in Z x Z: the s family counts in the first coordinate, the r family
// in the second.
struct Coset {
  std::int64_t m = 0;
  std::int64_t k = 0;

  friend bool operator==(const Coset&, const Coset&) = default;
  friend auto operator<=>(const Coset&, const Coset&) = default;
  Coset operator+(const Coset& o) const { return {m + o.m, k + o.k}; }
  Coset operator-(const Coset& o) const { return {m - o.m, k - o.k}; }
};

inline const std::string kSigma = "s";
inline const std::string kRho = "r";

// Throws ValidationError for letters outside the s/r families.
Coset phi_image(const Word& w);

std::string to_string(const Word& w);
std::string to_string(const Letter& l);

// Display syntax: space separated letters such as "s1^2 r3^-1 a[0,1,2]",
// "1" for the empty word.  Letters are validated when an alphabet is given.
Word parse_word(std::string_view text, const Alphabet* alphabet = nullptr);
Generator parse_generator(std::string_view text);

}  // namespace schreier
