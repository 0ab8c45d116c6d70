#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "schreier/parallel.hpp"
#include "schreier/schema.hpp"
#include "schreier/word.hpp"

namespace schreier {

// Schreier generator families: "a" pairs a coset with sigma_i, "b" with
// rho_i; indices (m, k, i) where the coset representative is s1^m r1^k.
inline const std::string kAlpha = "a";
inline const std::string kBeta = "b";

Word representative(Coset c);
Coset coset_of(const Word& w);

struct SchreierGenerator {
  Generator name;
  Word expansion;  // over s/r
};

// Throws ValidationError unless letter is s_i or r_i with 1 <= i <= n-1.
SchreierGenerator schreier_generator(Coset key, const Generator& letter,
                                     std::int64_t n);
// True iff the expansion freely reduces to the empty word, i.e. the pair
// is (s1 at k = 0) or (r1 at any coset).
bool is_trivial_pair(Coset key, const Generator& letter);

// Rewriting of a kernel element as a word in Schreier generators.  A letter
// x^+1 is labelled by the coset of the prefix before it, x^-1 by the coset
// of the prefix including it.  Throws NotKernelElement if phi(w) != 0.
Word tau(const Word& w);
// Same walk, starting from the coset `start` instead of the identity.
Word tau_from(Coset start, const Word& w);
// Substitute expansions for Schreier generators.
Word expand(const Word& w);
// Rewrite of rep * r * rep^-1 for rep = s1^m r1^k.  The prefix coming from
// rep itself consists of trivial generators and is omitted, so the result
// equals tau_from(key, r) and expands to rep * r * rep^-1 exactly.
Word rewrite_relator(Coset key, const Word& relator);

// a, b with indices (Z, Z, 1..n-1).
AlphabetPtr rewritten_alphabet(std::int64_t n);

// Rewrite of an ambient schema at a generic coset (m, k), as a schema over
// `target` with parameters m, k followed by the ambient parameters.
RelatorSchema rewrite_relator_schema(const RelatorSchema& ambient,
                                     const AlphabetPtr& target);
// a[m,0,1] and b[m,k,1]: the generators with trivial expansion.
std::vector<RelatorSchema> trivial_pair_schemas(const AlphabetPtr& target);

struct ExpansionCheck {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// expand(rewrite_relator(key, r)) == rep * r * rep^-1 for every relator
// instance of the presentation and every key with |m|, |k| <= key_bound.
ExpansionCheck check_expansion_identity(const PresentationSchema& ambient,
                                        std::int64_t key_bound,
                                        Execution exec = Execution::parallel);

}  // namespace schreier
