#include "schreier/scripts.hpp"

#include <algorithm>

#include "schreier/abelian.hpp"
#include "schreier/derived.hpp"
#include "schreier/error.hpp"
#include "schreier/quotients.hpp"
#include "schreier/rewriting.hpp"

namespace schreier {

namespace {

using I = std::int64_t;

RelatorTag tag(const std::string& family, Bindings b) { return {family, std::move(b)}; }

Generator A(I m, I k, I i) { return Generator(kAlpha, {m, k, i}); }
Generator B(I m, I k, I i) { return Generator(kBeta, {m, k, i}); }
Generator AJ(I j) { return Generator(kAlphaStrand, {j}); }
Generator BJ(I m, I j) { return Generator(kBetaStrand, {m, j}); }

// 1..M followed by -1..-M: the order in which a chain anchored at 0 is
// unwound in both directions.
std::vector<I> outward(I above, I below, I window) {
  std::vector<I> out;
  for (I v = above; v <= window; ++v) out.push_back(v);
  for (I v = below; v >= -window; --v) out.push_back(v);
  return out;
}

std::vector<I> all(I window) {
  std::vector<I> out;
  for (I v = -window; v <= window; ++v) out.push_back(v);
  return out;
}

void require_n(const std::string& name, I n, I lo, std::optional<I> hi = std::nullopt) {
  if (n < lo || (hi && n > *hi))
    throw ValidationError("script '" + name + "' does not apply to n = " + std::to_string(n));
}

// Raw list -> simplified list.
Script simplify_script(GroupFamily g, I n, I M) {
  Script s{g == GroupFamily::GVB ? "gvb-simplify" : "sg-simplify",
           "eliminate trivial generators and collapse strand indices >= 3", {}};
  {
    EliminatePhase p{"beta with strand 1 is trivial", {}, nullptr};
    for (I m : all(M))
      for (I k : all(M)) p.targets.push_back(B(m, k, 1));
    p.locate = [](const Generator& t) {
      return tag("beta-trivial", {{"m", t[0]}, {"k", t[1]}});
    };
    s.phases.push_back(std::move(p));
  }
  {
    EliminatePhase p{"alpha at k = 0 with strand 1 is trivial", {}, nullptr};
    for (I m : all(M)) p.targets.push_back(A(m, 0, 1));
    p.locate = [](const Generator& t) { return tag("alpha-trivial", {{"m", t[0]}}); };
    s.phases.push_back(std::move(p));
  }
  if (g == GroupFamily::SG) {
    EliminatePhase p{"alpha with strand 1 is constant in k", {}, nullptr};
    for (I m : all(M))
      for (I k : outward(1, -1, M)) p.targets.push_back(A(m, k, 1));
    p.locate = [](const Generator& t) {
      I k = t[1] > 0 ? t[1] - 1 : t[1];
      return tag("sigma-rho-commute", {{"m", t[0]}, {"k", k}, {"i", 1}});
    };
    s.phases.push_back(std::move(p));
  }
  {
    EliminatePhase p{"beta with strand >= 3 is constant in k", {}, nullptr};
    for (I j = 3; j <= n - 1; ++j)
      for (I m : all(M))
        for (I k : outward(1, -1, M)) p.targets.push_back(B(m, k, j));
    p.locate = [](const Generator& t) {
      I k = t[1] > 0 ? t[1] - 1 : t[1];
      return tag("rho-far-commute", {{"m", t[0]}, {"k", k}, {"i", 1}, {"j", t[2]}});
    };
    s.phases.push_back(std::move(p));
  }
  {
    EliminatePhase p{"alpha with strand >= 3 is constant in k", {}, nullptr};
    for (I j = 3; j <= n - 1; ++j)
      for (I m : all(M))
        for (I k : outward(1, -1, M)) p.targets.push_back(A(m, k, j));
    p.locate = [](const Generator& t) {
      I k = t[1] > 0 ? t[1] - 1 : t[1];
      return tag("mixed-far-commute", {{"m", t[0]}, {"k", k}, {"i", t[2]}, {"j", 1}});
    };
    s.phases.push_back(std::move(p));
  }
  {
    EliminatePhase p{"alpha with strand >= 3 is constant in m", {}, nullptr};
    for (I j = 3; j <= n - 1; ++j)
      for (I m : outward(1, -1, M)) p.targets.push_back(A(m, 0, j));
    p.locate = [](const Generator& t) {
      I m = t[0] > 0 ? t[0] - 1 : t[0];
      return tag("sigma-far-commute", {{"m", m}, {"k", 0}, {"i", 1}, {"j", t[2]}});
    };
    s.phases.push_back(std::move(p));
  }
  {
    RenamePhase p{"strand generators", {}};
    for (I j = 3; j <= n - 1; ++j) {
      p.renames.emplace_back(A(0, 0, j), AJ(j));
      for (I m : all(M)) p.renames.emplace_back(B(m, 0, j), BJ(m, j));
    }
    s.phases.push_back(std::move(p));
  }
  return s;
}

Script gvb4_script(I M) {
  Script s{"gvb4-fin-gen", "reduce the n = 4 presentation to nine generators", {}};
  {
    EliminatePhase p{"alpha at k = 0 with strand 1 is trivial", {}, nullptr};
    for (I m : all(M)) p.targets.push_back(A(m, 0, 1));
    p.locate = [](const Generator& t) { return tag("alpha1-trivial", {{"m", t[0]}}); };
    s.phases.push_back(std::move(p));
  }
  {
    EliminatePhase p{"beta_{m,3} from beta_{0,3}", {}, nullptr};
    for (I m : outward(1, -1, M)) p.targets.push_back(BJ(m, 3));
    p.locate = [](const Generator& t) {
      I m = t[0] > 0 ? t[0] - 1 : t[0];
      return tag("alpha1-betaj", {{"m", m}, {"k", 0}, {"j", 3}});
    };
    s.phases.push_back(std::move(p));
  }
  {
    EliminatePhase p{"beta with strand 2 from alpha", {}, nullptr};
    for (I m : all(M))
      for (I k : all(M)) p.targets.push_back(B(m, k, 2));
    p.locate = [](const Generator& t) {
      return tag("beta3-alpha2-mixed", {{"m", t[0] - 2}, {"k", t[1]}});
    };
    s.phases.push_back(std::move(p));
  }
  {
    EliminatePhase p{"alpha with strand 2 outside k in {0,1,2}", {}, nullptr};
    for (I m : all(M))
      for (I k : outward(3, -1, M)) p.targets.push_back(A(m, k, 2));
    p.locate = [](const Generator& t) {
      I k = t[1] >= 3 ? t[1] - 3 : t[1];
      return tag("beta2-recurrence", {{"m", t[0] + 2}, {"k", k}});
    };
    s.phases.push_back(std::move(p));
  }
  {
    EliminatePhase p{"alpha with strand 2 outside m in {0,1}", {}, nullptr};
    for (I k = 0; k <= 2; ++k)
      for (I m : outward(2, -1, M)) p.targets.push_back(A(m, k, 2));
    p.locate = [](const Generator& t) {
      I m = t[0] >= 2 ? t[0] - 2 : t[0];
      return tag("alpha23-braid", {{"m", m}, {"k", t[1]}});
    };
    s.phases.push_back(std::move(p));
  }
  {
    EliminatePhase p{"alpha with strand 1 is constant in m", {}, nullptr};
    for (I k : outward(1, -1, M))
      for (I m : outward(1, -1, M)) p.targets.push_back(A(m, k, 1));
    p.locate = [](const Generator& t) {
      I m = t[0] > 0 ? t[0] - 1 : t[0];
      return tag("alpha1-alphaj", {{"m", m}, {"k", t[1]}, {"j", 3}});
    };
    s.phases.push_back(std::move(p));
  }
  {
    EliminatePhase p{"alpha_{0,k,1} from alpha_{0,1,1}", {}, nullptr};
    for (I k : outward(2, -1, M)) p.targets.push_back(A(0, k, 1));
    p.locate = [](const Generator& t) {
      I k = t[1] >= 2 ? t[1] - 1 : t[1];
      return tag("alpha-beta2-shift", {{"m", -1}, {"k", k}});
    };
    s.phases.push_back(std::move(p));
  }
  return s;
}

Script gvbn_script(I n, I M) {
  Script s{"gvbn-fin-gen", "reduce the n >= 5 presentation to 3n-7 generators", {}};
  {
    EliminatePhase p{"beta with strand 2 from alpha", {}, nullptr};
    for (I m : all(M))
      for (I k : all(M)) p.targets.push_back(B(m, k, 2));
    p.locate = [](const Generator& t) {
      return tag("alpha-beta2-shift", {{"m", t[0] - 2}, {"k", t[1]}});
    };
    s.phases.push_back(std::move(p));
  }
  {
    EliminatePhase p{"alpha with strand 2 from k = 0", {}, nullptr};
    for (I m : all(M))
      for (I k : outward(1, -1, M)) p.targets.push_back(A(m, k, 2));
    p.locate = [](const Generator& t) {
      I k = t[1] > 0 ? t[1] - 1 : t[1];
      return tag("alpha2-betaj", {{"m", t[0]}, {"k", k}, {"j", 4}});
    };
    s.phases.push_back(std::move(p));
  }
  {
    EliminatePhase p{"alpha_{m,0,2} from m in {0,1}", {}, nullptr};
    for (I m : outward(2, -1, M)) p.targets.push_back(A(m, 0, 2));
    p.locate = [](const Generator& t) {
      I m = t[0] >= 2 ? t[0] - 2 : t[0];
      return tag("alpha23-braid", {{"m", m}, {"k", 0}});
    };
    s.phases.push_back(std::move(p));
  }
  {
    EliminatePhase p{"alpha at k = 0 with strand 1 is trivial", {}, nullptr};
    for (I m : all(M)) p.targets.push_back(A(m, 0, 1));
    p.locate = [](const Generator& t) { return tag("alpha1-trivial", {{"m", t[0]}}); };
    s.phases.push_back(std::move(p));
  }
  {
    EliminatePhase p{"alpha with strand 1 from beta_{m,3}", {}, nullptr};
    for (I m : all(M))
      for (I k : outward(1, -1, M)) p.targets.push_back(A(m, k, 1));
    p.locate = [](const Generator& t) {
      I k = t[1] > 0 ? t[1] - 1 : t[1];
      return tag("alpha1-betaj", {{"m", t[0]}, {"k", k}, {"j", 3}});
    };
    s.phases.push_back(std::move(p));
  }
  {
    EliminatePhase p{"beta_{m,3} from m in {0,1}", {}, nullptr};
    for (I m : outward(2, -1, M)) p.targets.push_back(BJ(m, 3));
    p.locate = [](const Generator& t) {
      I m = t[0] >= 2 ? t[0] - 2 : t[0];
      return tag("alpha1-alphaj", {{"m", m}, {"k", 1}, {"j", 3}});
    };
    s.phases.push_back(std::move(p));
  }
  {
    EliminatePhase p{"beta_{m,j}, j >= 4, from m in {0,1}", {}, nullptr};
    for (I j = 4; j <= n - 1; ++j)
      for (I m : outward(2, -1, M)) p.targets.push_back(BJ(m, j));
    p.locate = [](const Generator& t) {
      I m = t[0] >= 2 ? t[0] - 1 : t[0];
      return tag("alpha1-betaj", {{"m", m}, {"k", 0}, {"j", t[1]}});
    };
    s.phases.push_back(std::move(p));
  }
  return s;
}

Script sgn_script(I n, I M) {
  Script s{"sgn-fin-gen", "reduce the n >= 5 presentation to 2n-4 generators", {}};
  {
    EliminatePhase p{"beta with strand 2 is constant in k", {}, nullptr};
    for (I m : all(M))
      for (I k : outward(1, -1, M)) p.targets.push_back(B(m, k, 2));
    p.locate = [](const Generator& t) {
      I k = t[1] > 0 ? t[1] - 1 : t[1];
      return tag("beta2-betaj", {{"m", t[0]}, {"k", k}, {"j", 4}});
    };
    s.phases.push_back(std::move(p));
  }
  {
    EliminatePhase p{"beta with strand 2 is constant in m", {}, nullptr};
    for (I m : outward(1, -1, M)) p.targets.push_back(B(m, 0, 2));
    p.locate = [](const Generator& t) {
      I m = t[0] > 0 ? t[0] - 1 : t[0];
      return tag("alphaj-beta2", {{"m", m}, {"k", 0}, {"i", 4}});
    };
    s.phases.push_back(std::move(p));
  }
  {
    EliminatePhase p{"beta_{m,j} is constant in m", {}, nullptr};
    for (I j = 3; j <= n - 1; ++j)
      for (I m : outward(1, -1, M)) p.targets.push_back(BJ(m, j));
    p.locate = [](const Generator& t) {
      I m = t[0] > 0 ? t[0] - 1 : t[0];
      return tag("betaj-shift", {{"m", m}, {"j", t[1]}});
    };
    s.phases.push_back(std::move(p));
  }
  {
    EliminatePhase p{"alpha with strand 2 from k = 0", {}, nullptr};
    for (I m : all(M))
      for (I k : outward(1, -1, M)) p.targets.push_back(A(m, k, 2));
    p.locate = [](const Generator& t) {
      I k = t[1] > 0 ? t[1] - 1 : t[1];
      return tag("alpha2-betaj", {{"m", t[0]}, {"k", k}, {"j", 4}});
    };
    s.phases.push_back(std::move(p));
  }
  {
    EliminatePhase p{"alpha_{m,0,2} from m in {0,1}", {}, nullptr};
    for (I m : outward(2, -1, M)) p.targets.push_back(A(m, 0, 2));
    p.locate = [](const Generator& t) {
      I m = t[0] >= 2 ? t[0] - 2 : t[0];
      return tag("alpha2-recurrence", {{"m", m}, {"k", 0}});
    };
    s.phases.push_back(std::move(p));
  }
  {
    EliminatePhase p{"beta_{0,0,2} from alpha", {B(0, 0, 2)}, nullptr};
    p.locate = [](const Generator&) { return tag("beta2-alpha2", {{"m", 0}, {"k", 0}}); };
    s.phases.push_back(std::move(p));
  }
  return s;
}

Script gvb3_script(I M) {
  AlphabetPtr a = simplified_alphabet(GroupFamily::GVB, 3);
  using E = AffineExpr;
  const E m = E::var("m"), k = E::var("k");
  Script s{"gvb3-free-quotient",
           "quotient the n = 3 presentation onto a free group of rank 2(M-2)", {}};
  {
    EliminatePhase p{"beta with strand 2 from alpha", {}, nullptr};
    for (I x : all(M))
      for (I y : all(M)) p.targets.push_back(B(x, y, 2));
    p.locate = [](const Generator& t) {
      return tag("beta2-alpha-mixed", {{"m", t[0]}, {"k", t[1]}});
    };
    s.phases.push_back(std::move(p));
  }
  s.phases.push_back(QuotientPhase{
      "w_{m,k} = alpha_{m,k,1} alpha_{m+1,k,2}",
      {RelatorSchema("w", {"m", "k"}, {{kAlpha, {m, k, 1}, 1}, {kAlpha, {m + 1, k, 2}, 1}}, {}, a)}});
  {
    EliminatePhase p{"alpha with strand 2 via w", {}, nullptr};
    for (I x : all(M))
      for (I y : all(M)) p.targets.push_back(A(x, y, 2));
    p.locate = [](const Generator& t) { return tag("w", {{"m", t[0] - 1}, {"k", t[1]}}); };
    s.phases.push_back(std::move(p));
  }
  s.phases.push_back(QuotientPhase{
      "v_{m,k} = alpha_{m+1,k,1}^-1 alpha_{m-1,k,1}",
      {RelatorSchema("v", {"m", "k"}, {{kAlpha, {m + 1, k, 1}, -1}, {kAlpha, {m - 1, k, 1}, 1}},
                     {}, a)}});
  {
    EliminatePhase p{"alpha with strand 1 depends on the parity of m", {}, nullptr};
    for (I y : all(M))
      for (I x : outward(2, -1, M)) p.targets.push_back(A(x, y, 1));
    p.locate = [](const Generator& t) {
      I c = t[0] >= 2 ? t[0] - 1 : t[0] + 1;
      return tag("v", {{"m", c}, {"k", t[1]}});
    };
    s.phases.push_back(std::move(p));
  }
  {
    EliminatePhase p{"alpha at k = 0 with strand 1 is trivial", {A(0, 0, 1), A(1, 0, 1)}, nullptr};
    p.locate = [](const Generator& t) { return tag("alpha1-trivial", {{"m", t[0]}}); };
    s.phases.push_back(std::move(p));
  }
  {
    EliminatePhase p{"alpha_{1,k,1} is the inverse of alpha_{0,k,1}", {}, nullptr};
    for (I y : outward(1, -1, M)) p.targets.push_back(A(1, y, 1));
    p.locate = [](const Generator& t) { return tag("alpha12-braid", {{"m", 0}, {"k", t[1]}}); };
    s.phases.push_back(std::move(p));
  }
  return s;
}

Script sg3_script(I M) {
  Script s{"sg3-abelian", "express the n = 3 presentation through alpha_{0,k,2}, alpha_{1,k,2}", {}};
  {
    EliminatePhase p{"beta with strand 2 from alpha", {}, nullptr};
    for (I x : all(M))
      for (I y : all(M)) p.targets.push_back(B(x, y, 2));
    p.locate = [](const Generator& t) { return tag("beta2-alpha2", {{"m", t[0]}, {"k", t[1]}}); };
    s.phases.push_back(std::move(p));
  }
  {
    EliminatePhase p{"alpha with strand 2 from m in {0,1}", {}, nullptr};
    for (I y : all(M))
      for (I x : outward(2, -1, M)) p.targets.push_back(A(x, y, 2));
    p.locate = [](const Generator& t) {
      I m = t[0] >= 2 ? t[0] - 2 : t[0];
      return tag("alpha2-recurrence", {{"m", m}, {"k", t[1]}});
    };
    s.phases.push_back(std::move(p));
  }
  return s;
}

std::vector<Generator> gvb4_survivors() {
  return {A(0, 0, 2), A(1, 0, 2), A(0, 1, 2), A(1, 1, 2), A(0, 2, 2),
          A(1, 2, 2), AJ(3),      BJ(0, 3),   A(0, 1, 1)};
}

std::vector<Generator> gvbn_survivors(I n) {
  std::vector<Generator> out = {A(0, 0, 2), A(1, 0, 2)};
  for (I j = 3; j <= n - 1; ++j) {
    out.push_back(AJ(j));
    out.push_back(BJ(0, j));
    out.push_back(BJ(1, j));
  }
  return out;
}

std::vector<Generator> sgn_survivors(I n) {
  std::vector<Generator> out = {A(0, 0, 2), A(1, 0, 2)};
  for (I j = 3; j <= n - 1; ++j) {
    out.push_back(AJ(j));
    out.push_back(BJ(0, j));
  }
  return out;
}

std::vector<Generator> gvb3_survivors(I M) {
  std::vector<Generator> out;
  for (I k = -(M - 2); k <= M - 2; ++k)
    if (k != 0) out.push_back(A(0, k, 1));
  return out;
}

ScriptSetup edge_setup(DiagramEdge e, I n) {
  EdgeSpec spec = edge_spec(e, n);
  PresentationSchema source = catalog(spec.source, n);
  Script s{"edge-" + to_string(e),
           "quotient " + to_string(spec.source) + " onto " + to_string(spec.target), {}};
  s.phases.push_back(QuotientPhase{"added relators", spec.added});
  if (spec.eliminates_rho) {
    EliminatePhase p{"rho_i = 1", {}, nullptr};
    for (I i = 1; i <= n - 1; ++i) p.targets.push_back(Generator(kRho, {i}));
    p.locate = [](const Generator& t) { return tag("rho-kill", {{"i", t[0]}}); };
    s.phases.push_back(std::move(p));
  }
  return {std::move(s),
          TruncatedPresentation::truncate(source.relators, source.alphabet, 0, 0),
          std::nullopt};
}

}  // namespace

const std::vector<ScriptInfo>& script_catalog() {
  static const std::vector<ScriptInfo> info = [] {
    std::vector<ScriptInfo> v = {
        {"gvb-simplify", "raw rewritten GVB relators -> simplified list", 5},
        {"sg-simplify", "raw rewritten SG relators -> simplified list", 5},
        {"gvb3-free-quotient", "n = 3 GVB presentation -> free quotient", 3},
        {"gvb4-fin-gen", "n = 4 GVB presentation -> 9 generators", 4},
        {"gvbn-fin-gen", "n >= 5 GVB presentation -> 3n-7 generators", 5},
        {"sgn-fin-gen", "n >= 5 SG presentation -> 2n-4 generators", 5},
        {"sg3-abelian", "n = 3 SG presentation in terms of m in {0,1}", 3},
    };
    for (DiagramEdge e : all_diagram_edges())
      v.push_back({"edge-" + to_string(e), "diagram edge " + to_string(e), 4});
    return v;
  }();
  return info;
}

ScriptSetup setup_script(const std::string& name, I n, I window) {
  if (window < 0) throw ValidationError("window must be non-negative");
  auto simplified = [&](GroupFamily g) {
    return TruncatedPresentation::truncate(simplified_relators(g, n), simplified_alphabet(g, n),
                                           window);
  };
  if (name == "gvb-simplify" || name == "sg-simplify") {
    require_n(name, n, 3);
    GroupFamily g = name == "gvb-simplify" ? GroupFamily::GVB : GroupFamily::SG;
    return {simplify_script(g, n, window),
            TruncatedPresentation::truncate(raw_derived(g, n), combined_alphabet(n), window),
            std::nullopt};
  }
  if (name == "gvb3-free-quotient") {
    require_n(name, n, 3, 3);
    return {gvb3_script(window), simplified(GroupFamily::GVB), gvb3_survivors(window)};
  }
  if (name == "gvb4-fin-gen") {
    require_n(name, n, 4, 4);
    return {gvb4_script(window), simplified(GroupFamily::GVB), gvb4_survivors()};
  }
  if (name == "gvbn-fin-gen") {
    require_n(name, n, 5);
    return {gvbn_script(n, window), simplified(GroupFamily::GVB), gvbn_survivors(n)};
  }
  if (name == "sgn-fin-gen") {
    require_n(name, n, 5);
    return {sgn_script(n, window), simplified(GroupFamily::SG), sgn_survivors(n)};
  }
  if (name == "sg3-abelian") {
    require_n(name, n, 3, 3);
    return {sg3_script(window), simplified(GroupFamily::SG), std::nullopt};
  }
  for (DiagramEdge e : all_diagram_edges())
    if (name == "edge-" + to_string(e)) {
      require_n(name, n, 3);
      return edge_setup(e, n);
    }
  throw ValidationError("unknown script '" + name + "'");
}

ReplayResult replay(const Script& script, TruncatedPresentation input,
                    const ReplayOptions& options) {
  ReplayResult r{std::move(input), {}, 0, 0, 0, {}};
  TruncatedPresentation& p = r.presentation;
  std::optional<AbelianInvariants> before;
  if (options.check_invariants) before = abelian_invariants(p);

  for (const auto& phase : script.phases) {
    if (const auto* q = std::get_if<QuotientPhase>(&phase)) {
      std::size_t added = 0;
      for (const auto& schema : q->schemas)
        for (auto& inst : schema.enumerate(p.window() + 3)) {
          bool inside = std::all_of(inst.word.runs().begin(), inst.word.runs().end(),
                                    [&](const Letter& l) { return p.has_generator(l.gen); });
          if (!inside) continue;
          p.add_relator({{schema.name(), std::move(inst.bindings)}, std::move(inst.word)});
          ++added;
        }
      r.transcript.push_back("quotient " + q->label + ": added " + std::to_string(added) +
                             " relators");
      if (options.check_invariants) before = abelian_invariants(p);
      continue;
    }
    if (const auto* rn = std::get_if<RenamePhase>(&phase)) {
      for (const auto& [from, to] : rn->renames) {
        if (!p.has_generator(from)) continue;
        p.add_generator(to);
        p.substitute(from, Word(to));
        r.transcript.push_back("rename " + to_string(from) + " -> " + to_string(to));
      }
      continue;
    }
    const auto& e = std::get<EliminatePhase>(phase);
    for (const auto& target : e.targets) {
      if (!p.has_generator(target)) continue;
      bool interior = p.is_interior(target);
      auto skip = [&](const std::string& why) {
        if (interior)
          throw ReplayFailure(script.name + ": " + e.label + ": cannot eliminate interior " +
                              to_string(target) + ": " + why);
        r.transcript.push_back("skip " + to_string(target) + " (boundary): " + why);
        ++r.skipped;
      };
      auto t = e.locate(target);
      if (!t) {
        skip("no relator");
        continue;
      }
      auto id = p.find(*t);
      if (!id) {
        skip("relator " + t->to_string() + " is not in the window");
        continue;
      }
      EliminationStep step;
      try {
        step = isolate(p, target, *id);
      } catch (const Error& err) {
        skip(err.what());
        continue;
      }
      r.transcript.push_back("eliminate " + to_string(target) + " via " + t->to_string() +
                             " := " + to_string(step.expression));
      p.apply(step);
      ++r.eliminated;
      if (options.check_invariants) {
        AbelianInvariants now = abelian_invariants(p);
        ++r.invariant_checks;
        if (now != *before)
          r.invariant_failures.push_back("eliminating " + to_string(target) + " changed " +
                                         to_string(*before) + " to " + to_string(now));
        before = std::move(now);
      }
    }
  }
  return r;
}

std::vector<Generator> surviving_interior(const TruncatedPresentation& p) {
  return p.interior_generators();
}

}  // namespace schreier
