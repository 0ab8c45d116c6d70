#pragma once

#include <random>
#include <vector>

#include "schreier/word.hpp"

namespace testing_support {

// Letter-by-letter expansion of a run-length word.
inline std::vector<schreier::Letter> unit_letters(const schreier::Word& w) {
  std::vector<schreier::Letter> out;
  for (const auto& r : w.runs())
    for (std::int64_t e = 0; e < (r.exp < 0 ? -r.exp : r.exp); ++e)
      out.push_back({r.gen, r.exp < 0 ? -1 : 1});
  return out;
}

// Stack-based free reduction on +-1 letters.
inline std::vector<schreier::Letter> stack_reduce(const std::vector<schreier::Letter>& in) {
  std::vector<schreier::Letter> st;
  for (const auto& l : in) {
    if (!st.empty() && st.back().gen == l.gen && st.back().exp == -l.exp)
      st.pop_back();
    else
      st.push_back(l);
  }
  return st;
}

inline schreier::Generator gen(const char* fam, std::int64_t i) { return schreier::Generator(fam, {i}); }

// Random +-1 letter sequence over x1..xk.
inline std::vector<schreier::Letter> random_letters(std::mt19937& rng, int gens, int len) {
  std::uniform_int_distribution<int> g(1, gens), s(0, 1);
  std::vector<schreier::Letter> out;
  for (int i = 0; i < len; ++i) out.push_back({gen("x", g(rng)), s(rng) ? 1 : -1});
  return out;
}

}  // namespace testing_support
