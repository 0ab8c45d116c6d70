#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "schreier/abelian.hpp"
#include "schreier/catalog.hpp"
#include "schreier/schema.hpp"
#include "schreier/tietze.hpp"

namespace schreier {

// Surjections between the catalog groups, each the quotient by the normal
// closure of extra relators.
enum class DiagramEdge { alpha, beta, gamma, delta, omega, zeta, xi, kappa };

std::string to_string(DiagramEdge e);
DiagramEdge parse_diagram_edge(const std::string& name);
const std::vector<DiagramEdge>& all_diagram_edges();

struct EdgeSpec {
  DiagramEdge edge;
  GroupFamily source;
  GroupFamily target;
  std::vector<RelatorSchema> added;  // over the source alphabet
  bool eliminates_rho = false;       // added relators are rho_i = 1
};
EdgeSpec edge_spec(DiagramEdge e, std::int64_t n);

// Appends the relators; nothing is simplified.  Throws ValidationError when
// an extra relator uses a family the presentation does not declare.
PresentationSchema quotient_by(const PresentationSchema& p,
                               const std::vector<RelatorSchema>& extra);

struct PermutationCheck {
  std::string label;
  std::size_t relators = 0;
  std::vector<std::string> failures;  // relators not mapped to the identity
  bool passed() const { return failures.empty(); }
};

struct EdgeVerdict {
  DiagramEdge edge;
  std::int64_t n = 0;
  bool match = false;
  SetComparison comparison;  // replayed quotient vs target
  std::vector<std::string> transcript;
  std::vector<PermutationCheck> permutation_checks;  // edges onto S only
  bool passed() const {
    for (const auto& c : permutation_checks)
      if (!c.passed()) return false;
    return match;
  }
};

// Replays the quotient on the (finite) ambient presentation and compares
// the result with the target's relator set.
EdgeVerdict verify_diagram_edge(DiagramEdge e, std::int64_t n);

struct FreeQuotientCertificate {
  std::int64_t window = 0;
  std::vector<std::string> steps;  // quotient and elimination transcript
  std::vector<Generator> free_basis;  // interior survivors
  std::vector<Word> interior_relators;  // must be empty
  bool expected_basis = false;
  bool valid() const { return interior_relators.empty() && expected_basis; }
  std::size_t rank() const { return free_basis.size(); }
  std::string to_text() const;
};

// The n = 3 GVB derived presentation modulo w_{m,k} and v_{m,k}: on the
// window, the interior generators a[0,k,1], k != 0, satisfy no relator.
FreeQuotientCertificate free_quotient_certificate_gvb3(std::int64_t window);

struct QuotientIdentification {
  bool match = false;
  SetComparison comparison;  // quotient of the larger group vs the smaller
  std::size_t killed = 0;
};

// Kills aj[3] and every bj[m,3] (except bj[0,3] when `retain_beta_0` is
// set, a deliberate mutation) in the n = 4 SG list and compares interior
// relator sets with the n = 3 list.
QuotientIdentification sg3_as_quotient_of_sg4(std::int64_t window, bool retain_beta_0 = false);

struct AbelianCertificate {
  std::int64_t window = 0;
  AbelianInvariants invariants;  // of the whole replayed truncation
  std::vector<Generator> interior;
  std::size_t interior_rank = 0;
  std::size_t direct_interior_rank = 0;  // same, on the un-replayed matrix
  AbelianInvariants direct_invariants;
  std::vector<std::string> steps;
  std::size_t expected_rank() const { return static_cast<std::size_t>(2 * (2 * (window - 2) + 1)); }
  bool valid() const {
    return invariants.torsion.empty() && interior_rank == expected_rank() &&
           direct_interior_rank == interior_rank && direct_invariants == invariants;
  }
  std::string to_text() const;
};

// The n = 3 SG derived group abelianized: replay onto a[0,k,2], a[1,k,2]
// and compute the rank of the interior image.
AbelianCertificate sg3_abelianization_certificate(std::int64_t window,
                                                  Execution exec = Execution::parallel);

}  // namespace schreier
