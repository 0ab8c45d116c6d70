#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schreier/catalog.hpp"
#include "schreier/schema.hpp"

namespace schreier {

// Strand-indexed families left after simplification: "aj" stands for
// a[0,0,j] and "bj" for b[m,0,j], j >= 3.
inline const std::string kAlphaStrand = "aj";
inline const std::string kBetaStrand = "bj";

// A renaming recorded as a substitution rule, e.g. a[0,0,j] -> aj[j].
// Pattern positions are either a constant or a variable name.
struct RenameRule {
  struct Slot {
    std::optional<std::int64_t> constant;
    std::string variable;
  };
  std::string from_family;
  std::vector<Slot> from;
  std::string to_family;
  std::vector<std::string> to;  // variables, in target index order
  IndexRange variable_range;    // range of the strand variable (j >= 3)

  std::optional<Generator> apply(const Generator& g) const;
  std::optional<Generator> unapply(const Generator& g) const;
  std::string to_string() const;
};

const std::vector<RenameRule>& strand_renamings();
Generator unrename(const Generator& g);
Word unrename(const Word& w);

struct DerivedPresentation {
  GroupFamily group;
  std::int64_t n;
  PresentationSchema ambient;
  AlphabetPtr raw_alphabet;         // a, b
  std::vector<RelatorSchema> raw;   // trivial pairs + rewritten ambient relators
  AlphabetPtr simplified_alphabet;  // a, b, aj, bj with reduced strand ranges
  std::vector<RelatorSchema> simplified;
  std::vector<RenameRule> renamings;
};

// Only GVB and SG have derived presentations here.
DerivedPresentation derived_presentation(GroupFamily g, std::int64_t n);

// Raw relators produced by symbolic rewriting at a generic coset (m, k).
std::vector<RelatorSchema> raw_derived(GroupFamily g, std::int64_t n);
// The same list written out by hand, used as an independent transcription.
std::vector<RelatorSchema> transcribed_raw_relators(GroupFamily g, std::int64_t n);
std::vector<RelatorSchema> simplified_relators(GroupFamily g, std::int64_t n);
AlphabetPtr simplified_alphabet(GroupFamily g, std::int64_t n);
// Raw and simplified families together, for replaying the simplification.
AlphabetPtr combined_alphabet(std::int64_t n);

struct SimplificationReport {
  bool equal = false;
  std::size_t eliminated = 0;
  std::size_t skipped = 0;
  std::size_t raw_interior = 0;         // canonical interior relators, replayed side
  std::size_t simplified_interior = 0;  // canonical interior relators, listed side
  std::vector<Word> only_replayed;
  std::vector<Word> only_listed;
  std::vector<std::string> transcript;
};

// Replays the eliminations turning the raw list into the simplified one on
// the window [-M, M] and compares interior relator sets (as sets, after
// dropping generators that a single-letter relator makes trivial).
SimplificationReport verify_simplification(GroupFamily g, std::int64_t n,
                                           std::int64_t window);

}  // namespace schreier
