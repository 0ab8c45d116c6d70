#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "schreier/affine.hpp"
#include "schreier/generator.hpp"
#include "schreier/word.hpp"

namespace schreier {

struct LetterTemplate {
  std::string family;
  std::vector<AffineExpr> indices;
  std::int64_t exp = 1;

  friend bool operator==(const LetterTemplate&, const LetterTemplate&) = default;
};

struct Parameter {
  std::string name;
  IndexRange range;  // unbounded: a window parameter ranging over [-M, M]
  bool is_window() const { return range.unbounded(); }
};

struct Instance {
  Bindings bindings;
  Word word;
};

// A parametrized relator family.  Parameter ranges are inferred from the
// index positions a parameter occupies; every index position with a bounded
// domain also contributes an implicit guard, so each admitted binding
// instantiates to a valid word.
class RelatorSchema {
 public:
  RelatorSchema(std::string name, std::vector<std::string> params,
                std::vector<LetterTemplate> body, std::vector<Guard> guards,
                AlphabetPtr alphabet);

  const std::string& name() const { return name_; }
  const std::vector<Parameter>& params() const { return params_; }
  const std::vector<LetterTemplate>& body() const { return body_; }
  const std::vector<Guard>& guards() const { return guards_; }  // all
  std::vector<Guard> explicit_guards() const;
  const AlphabetPtr& alphabet() const { return alphabet_; }

  // Throws GuardViolation naming the failed guard or range.
  Word instantiate(const Bindings& b) const;
  bool admits(const Bindings& b) const;
  // All admitted instances with window parameters in [-window, window], in
  // lexicographic order of the parameter tuple.
  std::vector<Instance> enumerate(std::int64_t window) const;

  std::string body_string() const;
  std::string to_string() const;

  // Same body and guard set, ignoring names and parameter order.
  bool same_shape(const RelatorSchema& o) const;
  RelatorSchema renamed(std::string name) const;

 private:
  std::string name_;
  std::vector<Parameter> params_;
  std::vector<LetterTemplate> body_;
  std::vector<Guard> guards_;
  AlphabetPtr alphabet_;
};

struct PresentationSchema {
  std::string name;
  std::optional<std::int64_t> n;
  AlphabetPtr alphabet;
  std::vector<RelatorSchema> relators;

  const RelatorSchema* find(const std::string& relator_name) const;
};

// Least word among the cyclic rotations of w and of w^-1 (after cyclic
// reduction); empty for relators that are trivial.  Generators listed in
// `involutions` have their exponents taken mod 2 first.
Word canonical_relator(const Word& w, const std::set<Generator>* involutions = nullptr);

using RelatorSet = std::set<Word>;

// Canonical forms of all non-trivial instances in the window.
RelatorSet canonical_instances(const std::vector<RelatorSchema>& schemas,
                               std::int64_t window,
                               const std::set<Generator>* involutions = nullptr);

struct SetComparison {
  bool equal = false;
  std::vector<Word> only_left;
  std::vector<Word> only_right;
};
SetComparison compare_relator_sets(const RelatorSet& left, const RelatorSet& right);

// Relator lists compared as sets of canonical instances in the window.
bool schema_sets_equal(const std::vector<RelatorSchema>& a,
                       const std::vector<RelatorSchema>& b, std::int64_t window,
                       const std::set<Generator>* involutions = nullptr);

// Generators g with a relator of the form g^2 or g^-2 among the words.
std::set<Generator> detect_involutions(const std::vector<Word>& relators);

}  // namespace schreier
