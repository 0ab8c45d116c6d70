#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "schreier/schema.hpp"

namespace schreier {

// Which instance a relator came from: the schema name (or the name given to
// a quotient relator) and the parameter values.
struct RelatorTag {
  std::string family;
  Bindings bindings;

  std::string to_string() const;
  friend bool operator==(const RelatorTag&, const RelatorTag&) = default;
  friend auto operator<=>(const RelatorTag&, const RelatorTag&) = default;
};

struct TaggedRelator {
  RelatorTag tag;
  Word word;
};

struct EliminationStep {
  Generator target;
  std::size_t relator = 0;  // id in the presentation
  Word expression;          // value of target derived from the relator
};

// Finite window of an infinite presentation: generators whose window
// coordinates lie in [-M, M] and the relator instances supported on them.
// Generators within `margin` of the edge are boundary; verdicts are stated
// for the interior only.
class TruncatedPresentation {
 public:
  TruncatedPresentation(AlphabetPtr alphabet, std::int64_t window,
                        std::int64_t margin = 2);

  static TruncatedPresentation truncate(const std::vector<RelatorSchema>& schemas,
                                        AlphabetPtr alphabet, std::int64_t window,
                                        std::int64_t margin = 2);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  std::int64_t window() const { return window_; }
  std::int64_t margin() const { return margin_; }

  const std::set<Generator>& generators() const { return generators_; }
  bool has_generator(const Generator& g) const { return generators_.count(g) > 0; }
  bool in_window(const Generator& g) const;
  bool is_interior(const Generator& g) const;
  std::vector<Generator> interior_generators() const;

  // Relator ids are stable; consumed relators are no longer live.
  std::size_t relator_capacity() const { return relators_.size(); }
  bool live(std::size_t id) const { return live_[id] != 0; }
  const TaggedRelator& relator(std::size_t id) const { return relators_[id]; }
  std::vector<std::size_t> live_relators() const;
  std::vector<Word> relator_words() const;  // live, non-empty
  std::optional<std::size_t> find(const RelatorTag& tag) const;

  void add_generator(const Generator& g);
  // Throws ValidationError if the word uses a generator not present.
  std::size_t add_relator(TaggedRelator r);

  // Remove target, substituting expression everywhere; the defining
  // relator is consumed.  Throws Error if the step is not valid here.
  void apply(const EliminationStep& step);
  // Replace generator g by a word in the other generators everywhere
  // (used for quotients by g = 1 and for renamings).
  void substitute(const Generator& g, const Word& replacement);

  // Relators containing g (live only).
  std::vector<std::size_t> occurrences(const Generator& g) const;

 private:
  void index_word(std::size_t id, const Word& w);
  void replace_in(std::size_t id, const Generator& g, const Word& value,
                  const Word& value_inv);

  AlphabetPtr alphabet_;
  std::int64_t window_;
  std::int64_t margin_;
  std::set<Generator> generators_;
  std::vector<TaggedRelator> relators_;
  std::vector<char> live_;
  std::unordered_map<Generator, std::vector<std::size_t>, GeneratorHash> occ_;
  std::map<RelatorTag, std::size_t> tags_;
};

// Number of occurrences (counted with multiplicity |exp|) of g in w.
std::int64_t occurrence_count(const Word& w, const Generator& g);

// Solve the relator for target.  Throws Error unless target occurs exactly
// once, with exponent +-1.
EliminationStep isolate(const TruncatedPresentation& p, const Generator& target,
                        std::size_t relator);

TruncatedPresentation eliminate(TruncatedPresentation p, const EliminationStep& step);

// Canonical forms of the live relators whose generators are all interior.
RelatorSet interior_relator_set(const TruncatedPresentation& p,
                                const std::set<Generator>* involutions = nullptr);

// Eliminate every generator that some live relator equates to the identity
// (a relator that is a single letter), repeating until none is left.
// Returns the generators removed.
std::vector<Generator> drop_trivial_generators(TruncatedPresentation& p);

}  // namespace schreier
