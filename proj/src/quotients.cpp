#include "schreier/quotients.hpp"

#include <algorithm>
#include <sstream>

#include "schreier/derived.hpp"
#include "schreier/error.hpp"
#include "schreier/permutation.hpp"
#include "schreier/scripts.hpp"

namespace schreier {

std::string to_string(DiagramEdge e) {
  switch (e) {
    case DiagramEdge::alpha: return "alpha";
    case DiagramEdge::beta: return "beta";
    case DiagramEdge::gamma: return "gamma";
    case DiagramEdge::delta: return "delta";
    case DiagramEdge::omega: return "omega";
    case DiagramEdge::zeta: return "zeta";
    case DiagramEdge::xi: return "xi";
    case DiagramEdge::kappa: return "kappa";
  }
  return "?";
}

DiagramEdge parse_diagram_edge(const std::string& name) {
  for (DiagramEdge e : all_diagram_edges())
    if (to_string(e) == name) return e;
  throw ValidationError("unknown diagram edge '" + name + "'");
}

const std::vector<DiagramEdge>& all_diagram_edges() {
  static const std::vector<DiagramEdge> all = {
      DiagramEdge::alpha, DiagramEdge::beta, DiagramEdge::gamma, DiagramEdge::delta,
      DiagramEdge::omega, DiagramEdge::zeta, DiagramEdge::xi,    DiagramEdge::kappa};
  return all;
}

EdgeSpec edge_spec(DiagramEdge e, std::int64_t n) {
  using G = GroupFamily;
  namespace r = relators;
  auto make = [&](G source, G target, auto added, bool kills_rho) {
    AlphabetPtr a = ambient_alphabet(source, n);
    return EdgeSpec{e, source, target, added(a), kills_rho};
  };
  using V = std::vector<RelatorSchema>;
  switch (e) {
    case DiagramEdge::alpha:
      return make(G::GVB, G::B, [](const AlphabetPtr& a) { return V{r::rho_kill(a)}; }, true);
    case DiagramEdge::beta:
      return make(G::B, G::S, [](const AlphabetPtr& a) { return V{r::sigma_square(a)}; }, false);
    case DiagramEdge::gamma:
      return make(G::GVB, G::VB, [](const AlphabetPtr& a) { return V{r::sigma_square(a)}; },
                  false);
    case DiagramEdge::delta:
      return make(G::VB, G::S, [](const AlphabetPtr& a) { return V{r::rho_kill(a)}; }, true);
    case DiagramEdge::omega:
      return make(G::SG, G::B, [](const AlphabetPtr& a) { return V{r::rho_kill(a)}; }, true);
    case DiagramEdge::zeta:
      return make(G::VB, G::WB, [](const AlphabetPtr& a) { return V{r::forbidden(a)}; }, false);
    case DiagramEdge::xi:
      return make(G::UB, G::GVB, [](const AlphabetPtr& a) {
        return V{r::rho_sigma_sigma(a), r::rho_sigma_sigma_shift(a), r::rho_braid(a)};
      }, false);
    case DiagramEdge::kappa:
      return make(G::UB, G::SG, [](const AlphabetPtr& a) {
        return V{r::rho_sigma_sigma(a), r::rho_sigma_sigma_shift(a), r::sigma_rho_commute(a)};
      }, false);
  }
  throw ValidationError("unknown diagram edge");
}

PresentationSchema quotient_by(const PresentationSchema& p,
                               const std::vector<RelatorSchema>& extra) {
  PresentationSchema out = p;
  for (const auto& s : extra) {
    for (const auto& l : s.body())
      if (!p.alphabet->find(l.family))
        throw ValidationError("relator " + s.name() + " uses family '" + l.family +
                              "' not declared in " + p.name);
    out.relators.push_back(s);
  }
  return out;
}

namespace {

PermutationCheck permutation_check(std::string label, const std::vector<RelatorSchema>& schemas,
                                   const PermutationRep& rep, std::size_t n) {
  PermutationCheck c{std::move(label), 0, {}};
  for (const auto& s : schemas)
    for (const auto& inst : s.enumerate(0)) {
      ++c.relators;
      Permutation image = evaluate(inst.word, rep, n);
      if (!image.is_identity())
        c.failures.push_back(s.name() + "{" + to_string(inst.bindings) + "} -> " +
                             image.to_string());
    }
  return c;
}

}  // namespace

EdgeVerdict verify_diagram_edge(DiagramEdge e, std::int64_t n) {
  if (n < 3) throw ValidationError("diagram edges need n >= 3");
  EdgeSpec spec = edge_spec(e, n);
  ScriptSetup setup = setup_script("edge-" + to_string(e), n, 0);
  ReplayResult r = replay(setup.script, std::move(setup.input));

  PresentationSchema target = catalog(spec.target, n);
  std::vector<Word> words = r.presentation.relator_words();
  std::set<Generator> involutions = detect_involutions(words);
  RelatorSet replayed = interior_relator_set(r.presentation, &involutions);
  RelatorSet expected = canonical_instances(target.relators, 0, &involutions);

  EdgeVerdict v{e, n, false, compare_relator_sets(replayed, expected), std::move(r.transcript),
                {}};
  v.match = v.comparison.equal;

  if (spec.target == GroupFamily::S) {
    const auto degree = static_cast<std::size_t>(n);
    PresentationSchema source = catalog(spec.source, n);
    std::vector<RelatorSchema> all = source.relators;
    all.insert(all.end(), spec.added.begin(), spec.added.end());
    v.permutation_checks.push_back(permutation_check(
        "source and added relators, edge-induced map", all, symmetric_rep(degree, false), degree));
    v.permutation_checks.push_back(permutation_check(
        "target relators", target.relators, symmetric_rep(degree, false), degree));
    if (spec.source == GroupFamily::VB)
      v.permutation_checks.push_back(permutation_check(
          "source relators, rho_i -> (i,i+1)", source.relators, symmetric_rep(degree, true),
          degree));
  }
  return v;
}

std::string FreeQuotientCertificate::to_text() const {
  std::ostringstream os;
  os << "free quotient certificate, window " << window << "\n";
  for (const auto& s : steps) os << "  " << s << "\n";
  os << "free basis (" << free_basis.size() << "):";
  for (const auto& g : free_basis) os << " " << to_string(g);
  os << "\ninterior relators: " << interior_relators.size() << "\n";
  for (const auto& w : interior_relators) os << "  " << to_string(w) << "\n";
  return os.str();
}

FreeQuotientCertificate free_quotient_certificate_gvb3(std::int64_t window) {
  ScriptSetup setup = setup_script("gvb3-free-quotient", 3, window);
  ReplayResult r = replay(setup.script, std::move(setup.input));
  FreeQuotientCertificate c;
  c.window = window;
  c.steps = std::move(r.transcript);
  c.free_basis = surviving_interior(r.presentation);
  RelatorSet interior = interior_relator_set(r.presentation);
  c.interior_relators.assign(interior.begin(), interior.end());
  std::vector<Generator> expected = *setup.expected_survivors;
  std::sort(expected.begin(), expected.end());
  c.expected_basis = c.free_basis == expected;
  return c;
}

QuotientIdentification sg3_as_quotient_of_sg4(std::int64_t window, bool retain_beta_0) {
  TruncatedPresentation big = TruncatedPresentation::truncate(
      simplified_relators(GroupFamily::SG, 4), simplified_alphabet(GroupFamily::SG, 4), window);
  TruncatedPresentation small = TruncatedPresentation::truncate(
      simplified_relators(GroupFamily::SG, 3), simplified_alphabet(GroupFamily::SG, 3), window);
  QuotientIdentification q;
  std::vector<Generator> kill;
  for (const auto& g : big.generators()) {
    if (g.family == kAlphaStrand && g[0] == 3) kill.push_back(g);
    if (g.family == kBetaStrand && g[1] == 3 && !(retain_beta_0 && g[0] == 0)) kill.push_back(g);
  }
  for (const auto& g : kill) big.substitute(g, Word());
  q.killed = kill.size();
  q.comparison = compare_relator_sets(interior_relator_set(big), interior_relator_set(small));
  q.match = q.comparison.equal;
  return q;
}

std::string AbelianCertificate::to_text() const {
  std::ostringstream os;
  os << "abelianization certificate, window " << window << "\n";
  for (const auto& s : steps) os << "  " << s << "\n";
  os << "invariants: " << to_string(invariants) << "\n";
  os << "interior generators: " << interior.size() << ", interior image rank " << interior_rank
     << " (direct " << direct_interior_rank << ", expected " << expected_rank() << ")\n";
  return os.str();
}

AbelianCertificate sg3_abelianization_certificate(std::int64_t window, Execution exec) {
  ScriptSetup setup = setup_script("sg3-abelian", 3, window);
  TruncatedPresentation original = setup.input;
  ReplayResult r = replay(setup.script, std::move(setup.input));
  AbelianCertificate c;
  c.window = window;
  c.steps = std::move(r.transcript);
  c.interior = surviving_interior(r.presentation);
  RelationMatrix replayed = relation_matrix(r.presentation);
  c.invariants = LatticeReducer(replayed.columns.size(), replayed.rows, exec).invariants();
  c.interior_rank = image_rank(replayed, c.interior, exec);
  RelationMatrix direct = relation_matrix(original);
  c.direct_invariants = LatticeReducer(direct.columns.size(), direct.rows, exec).invariants();
  c.direct_interior_rank = image_rank(direct, c.interior, exec);
  return c;
}

}  // namespace schreier
