#include "schreier/rewriting.hpp"

#include "schreier/error.hpp"

namespace schreier {

namespace {

Coset letter_image(const Generator& g) {
  if (g.family == kSigma) return {1, 0};
  if (g.family == kRho) return {0, 1};
  throw ValidationError("letter " + to_string(g) + " is not a sigma or rho generator");
}

Generator label(Coset c, const Generator& letter) {
  return Generator(letter.family == kSigma ? kAlpha : kBeta, {c.m, c.k, letter.idx[0]});
}

}  // namespace

Word representative(Coset c) {
  Word w(Generator(kSigma, {1}), c.m);
  w.push_back(Generator(kRho, {1}), c.k);
  return w;
}

Coset coset_of(const Word& w) { return phi_image(w); }

SchreierGenerator schreier_generator(Coset key, const Generator& letter,
                                     std::int64_t n) {
  Coset step = letter_image(letter);
  if (letter.arity != 1 || letter.idx[0] < 1 || letter.idx[0] > n - 1)
    throw ValidationError("letter " + to_string(letter) + " outside 1.." +
                          std::to_string(n - 1));
  Word e = representative(key);
  e.push_back(letter, 1);
  e.append(invert(representative(key + step)));
  return {label(key, letter), std::move(e)};
}

bool is_trivial_pair(Coset key, const Generator& letter) {
  Coset step = letter_image(letter);
  Word e = representative(key);
  e.push_back(letter, 1);
  e.append(invert(representative(key + step)));
  return e.empty();
}

Word tau_from(Coset start, const Word& w) {
  if (phi_image(w) != Coset{})
    throw NotKernelElement("word " + to_string(w) + " has image (" +
                           std::to_string(phi_image(w).m) + "," +
                           std::to_string(phi_image(w).k) + ")");
  Word out;
  Coset cur = start;
  for (const auto& r : w.runs()) {
    Coset step = letter_image(r.gen);
    if (r.exp > 0) {
      for (std::int64_t t = 0; t < r.exp; ++t) {
        out.push_back(label(cur, r.gen), 1);
        cur = cur + step;
      }
    } else {
      for (std::int64_t t = 0; t < -r.exp; ++t) {
        cur = cur - step;
        out.push_back(label(cur, r.gen), -1);
      }
    }
  }
  return out;
}

Word tau(const Word& w) { return tau_from({}, w); }

Word expand(const Word& w) {
  Word out;
  for (const auto& r : w.runs()) {
    const Generator& g = r.gen;
    if ((g.family != kAlpha && g.family != kBeta) || g.arity != 3)
      throw ValidationError("letter " + to_string(g) + " is not a Schreier generator");
    Coset key{g.idx[0], g.idx[1]};
    Generator letter(g.family == kAlpha ? kSigma : kRho, {g.idx[2]});
    Word e = representative(key);
    e.push_back(letter, 1);
    e.append(invert(representative(key + letter_image(letter))));
    out.append(power(e, r.exp));
  }
  return out;
}

Word rewrite_relator(Coset key, const Word& relator) { return tau_from(key, relator); }

AlphabetPtr rewritten_alphabet(std::int64_t n) {
  auto a = std::make_shared<Alphabet>();
  a->declare({kAlpha, {IndexRange::all(), IndexRange::all(), IndexRange::between(1, n - 1)}});
  a->declare({kBeta, {IndexRange::all(), IndexRange::all(), IndexRange::between(1, n - 1)}});
  return a;
}

RelatorSchema rewrite_relator_schema(const RelatorSchema& ambient,
                                     const AlphabetPtr& target) {
  const AffineExpr m = AffineExpr::var("m"), k = AffineExpr::var("k");
  std::vector<LetterTemplate> body;
  auto push = [&body](LetterTemplate l) {
    if (!body.empty() && body.back().family == l.family &&
        body.back().indices == l.indices) {
      body.back().exp += l.exp;
      if (body.back().exp == 0) body.pop_back();
      return;
    }
    body.push_back(std::move(l));
  };
  std::int64_t dm = 0, dk = 0;
  for (const auto& l : ambient.body()) {
    bool sigma = l.family == kSigma;
    if (!sigma && l.family != kRho)
      throw ValidationError("relator '" + ambient.name() + "' is not over sigma/rho");
    const std::string& fam = sigma ? kAlpha : kBeta;
    std::int64_t count = l.exp > 0 ? l.exp : -l.exp;
    for (std::int64_t t = 0; t < count; ++t) {
      if (l.exp > 0) {
        push({fam, {m + dm, k + dk, l.indices[0]}, 1});
        (sigma ? dm : dk) += 1;
      } else {
        (sigma ? dm : dk) -= 1;
        push({fam, {m + dm, k + dk, l.indices[0]}, -1});
      }
    }
  }
  if (dm != 0 || dk != 0)
    throw NotKernelElement("relator '" + ambient.name() + "' is not in the kernel");
  std::vector<std::string> params = {"m", "k"};
  for (const auto& p : ambient.params()) params.push_back(p.name);
  return {ambient.name(), params, std::move(body), ambient.explicit_guards(), target};
}

std::vector<RelatorSchema> trivial_pair_schemas(const AlphabetPtr& target) {
  const AffineExpr m = AffineExpr::var("m"), k = AffineExpr::var("k");
  return {
      RelatorSchema("alpha-trivial", {"m"}, {{kAlpha, {m, 0, 1}, 1}}, {}, target),
      RelatorSchema("beta-trivial", {"m", "k"}, {{kBeta, {m, k, 1}, 1}}, {}, target),
  };
}

ExpansionCheck check_expansion_identity(const PresentationSchema& ambient,
                                        std::int64_t key_bound, Execution exec) {
  std::vector<Word> rels;
  std::vector<std::string> names;
  for (const auto& s : ambient.relators)
    for (auto& inst : s.enumerate(0)) {
      rels.push_back(std::move(inst.word));
      names.push_back(s.name() + "{" + to_string(inst.bindings) + "}");
    }
  const std::int64_t side = 2 * key_bound + 1;
  const std::int64_t total = static_cast<std::int64_t>(rels.size()) * side * side;
  std::vector<char> bad(static_cast<std::size_t>(total), 0);
  auto check = [&](std::int64_t t) {
    std::int64_t r = t / (side * side), rem = t % (side * side);
    Coset key{rem / side - key_bound, rem % side - key_bound};
    const Word& rel = rels[static_cast<std::size_t>(r)];
    if (phi_image(rel) != Coset{}) {
      bad[static_cast<std::size_t>(t)] = 1;
      return;
    }
    Word lhs = expand(rewrite_relator(key, rel));
    Word rhs = conjugate(rel, representative(key));
    if (!freely_equal(lhs, rhs)) bad[static_cast<std::size_t>(t)] = 1;
  };
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t t = 0; t < total; ++t) check(t);
  } else {
    for (std::int64_t t = 0; t < total; ++t) check(t);
  }
  ExpansionCheck out;
  out.checked = static_cast<std::size_t>(total);
  for (std::int64_t t = 0; t < total; ++t)
    if (bad[static_cast<std::size_t>(t)]) {
      std::int64_t r = t / (side * side), rem = t % (side * side);
      out.failures.push_back(names[static_cast<std::size_t>(r)] + " at (" +
                             std::to_string(rem / side - key_bound) + "," +
                             std::to_string(rem % side - key_bound) + ")");
    }
  return out;
}

}  // namespace schreier
