#include "schreier/tietze.hpp"

#include <algorithm>

#include "schreier/error.hpp"

namespace schreier {

std::string RelatorTag::to_string() const {
  if (bindings.empty()) return family;
  return family + "{" + schreier::to_string(bindings) + "}";
}

std::int64_t occurrence_count(const Word& w, const Generator& g) {
  std::int64_t n = 0;
  for (const auto& r : w.runs())
    if (r.gen == g) n += r.exp < 0 ? -r.exp : r.exp;
  return n;
}

TruncatedPresentation::TruncatedPresentation(AlphabetPtr alphabet,
                                             std::int64_t window,
                                             std::int64_t margin)
    : alphabet_(std::move(alphabet)), window_(window), margin_(margin) {
  if (!alphabet_) throw ValidationError("truncated presentation needs an alphabet");
  if (window < 0) throw ValidationError("window must be non-negative");
}

TruncatedPresentation TruncatedPresentation::truncate(
    const std::vector<RelatorSchema>& schemas, AlphabetPtr alphabet,
    std::int64_t window, std::int64_t margin) {
  TruncatedPresentation p(alphabet, window, margin);
  for (auto& g : alphabet->enumerate(window)) p.generators_.insert(std::move(g));
  for (const auto& s : schemas) {
    // Window parameters may push letters outside; a parameter is never
    // needed beyond the window by more than the largest index shift, but
    // the instance is only kept when fully supported in the window.
    std::int64_t reach = window + 3;
    for (auto& inst : s.enumerate(reach)) {
      bool inside = true;
      for (const auto& r : inst.word.runs())
        if (!p.generators_.count(r.gen)) {
          inside = false;
          break;
        }
      if (!inside) continue;
      p.add_relator({{s.name(), std::move(inst.bindings)}, std::move(inst.word)});
    }
  }
  return p;
}

bool TruncatedPresentation::in_window(const Generator& g) const {
  for (auto c : alphabet_->window_coordinates(g))
    if (c < -window_ || c > window_) return false;
  return true;
}

bool TruncatedPresentation::is_interior(const Generator& g) const {
  std::int64_t inner = window_ - margin_;
  for (auto c : alphabet_->window_coordinates(g))
    if (c < -inner || c > inner) return false;
  return true;
}

std::vector<Generator> TruncatedPresentation::interior_generators() const {
  std::vector<Generator> out;
  for (const auto& g : generators_)
    if (is_interior(g)) out.push_back(g);
  return out;
}

std::vector<std::size_t> TruncatedPresentation::live_relators() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < relators_.size(); ++i)
    if (live_[i]) out.push_back(i);
  return out;
}

std::vector<Word> TruncatedPresentation::relator_words() const {
  std::vector<Word> out;
  for (std::size_t i = 0; i < relators_.size(); ++i)
    if (live_[i] && !relators_[i].word.empty()) out.push_back(relators_[i].word);
  return out;
}

std::optional<std::size_t> TruncatedPresentation::find(const RelatorTag& tag) const {
  auto it = tags_.find(tag);
  if (it == tags_.end() || !live_[it->second]) return std::nullopt;
  return it->second;
}

void TruncatedPresentation::add_generator(const Generator& g) { generators_.insert(g); }

void TruncatedPresentation::index_word(std::size_t id, const Word& w) {
  for (const auto& r : w.runs()) {
    auto& v = occ_[r.gen];
    if (v.empty() || v.back() != id) v.push_back(id);
  }
}

std::size_t TruncatedPresentation::add_relator(TaggedRelator r) {
  for (const auto& run : r.word.runs())
    if (!generators_.count(run.gen))
      throw ValidationError("relator " + r.tag.to_string() + " uses " +
                            to_string(run.gen) + ", which is not a generator");
  std::size_t id = relators_.size();
  index_word(id, r.word);
  tags_.emplace(r.tag, id);
  relators_.push_back(std::move(r));
  live_.push_back(1);
  return id;
}

std::vector<std::size_t> TruncatedPresentation::occurrences(const Generator& g) const {
  std::vector<std::size_t> out;
  auto it = occ_.find(g);
  if (it == occ_.end()) return out;
  for (std::size_t id : it->second)
    if (live_[id] && occurrence_count(relators_[id].word, g) > 0) out.push_back(id);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void TruncatedPresentation::replace_in(std::size_t id, const Generator& g,
                                       const Word& value, const Word& value_inv) {
  Word out;
  for (const auto& r : relators_[id].word.runs()) {
    if (r.gen != g) {
      out.push_back(r);
      continue;
    }
    const Word& base = r.exp > 0 ? value : value_inv;
    std::int64_t times = r.exp > 0 ? r.exp : -r.exp;
    for (std::int64_t t = 0; t < times; ++t) out.append(base);
  }
  relators_[id].word = std::move(out);
  index_word(id, value);
}

void TruncatedPresentation::substitute(const Generator& g, const Word& replacement) {
  if (!generators_.count(g))
    throw ValidationError("cannot substitute " + to_string(g) + ": not a generator");
  if (occurrence_count(replacement, g) > 0)
    throw ValidationError("replacement for " + to_string(g) + " mentions it");
  for (const auto& r : replacement.runs())
    if (!generators_.count(r.gen))
      throw ValidationError("replacement for " + to_string(g) + " uses " +
                            to_string(r.gen) + ", which is not a generator");
  Word inv = invert(replacement);
  for (std::size_t id : occurrences(g)) replace_in(id, g, replacement, inv);
  generators_.erase(g);
  occ_.erase(g);
}

EliminationStep isolate(const TruncatedPresentation& p, const Generator& target,
                        std::size_t relator) {
  if (!p.has_generator(target))
    throw Error("generator " + to_string(target) + " is not present");
  if (relator >= p.relator_capacity() || !p.live(relator))
    throw Error("relator #" + std::to_string(relator) + " is not live");
  const TaggedRelator& r = p.relator(relator);
  const auto& runs = r.word.runs();
  std::size_t pos = runs.size();
  for (std::size_t i = 0; i < runs.size(); ++i)
    if (runs[i].gen == target) {
      if (pos != runs.size() || (runs[i].exp != 1 && runs[i].exp != -1))
        throw Error("relator " + r.tag.to_string() + " does not isolate " +
                    to_string(target));
      pos = i;
    }
  if (pos == runs.size())
    throw Error("relator " + r.tag.to_string() + " does not contain " +
                to_string(target));
  // r = u t^e v  =>  t^e = u^-1 v^-1
  Word u = Word::reduce(std::span<const Letter>(runs.data(), pos));
  Word v = Word::reduce(std::span<const Letter>(runs.data() + pos + 1, runs.size() - pos - 1));
  Word value = concat(invert(u), invert(v));
  if (runs[pos].exp == -1) value = invert(value);
  return {target, relator, std::move(value)};
}

void TruncatedPresentation::apply(const EliminationStep& step) {
  EliminationStep checked = isolate(*this, step.target, step.relator);
  if (checked.expression != step.expression)
    throw Error("expression for " + to_string(step.target) +
                " does not follow from relator " +
                relators_[step.relator].tag.to_string());
  live_[step.relator] = 0;
  substitute(step.target, step.expression);
}

TruncatedPresentation eliminate(TruncatedPresentation p, const EliminationStep& step) {
  p.apply(step);
  return p;
}

RelatorSet interior_relator_set(const TruncatedPresentation& p,
                                const std::set<Generator>* involutions) {
  RelatorSet out;
  for (std::size_t id : p.live_relators()) {
    const Word& w = p.relator(id).word;
    bool inside = true;
    for (const auto& r : w.runs())
      if (!p.is_interior(r.gen)) {
        inside = false;
        break;
      }
    if (!inside) continue;
    Word c = canonical_relator(w, involutions);
    if (!c.empty()) out.insert(std::move(c));
  }
  return out;
}

std::vector<Generator> drop_trivial_generators(TruncatedPresentation& p) {
  std::vector<Generator> removed;
  bool again = true;
  while (again) {
    again = false;
    for (std::size_t id : p.live_relators()) {
      if (!p.live(id)) continue;
      const Word& w = p.relator(id).word;
      if (w.run_count() != 1 || (w.runs()[0].exp != 1 && w.runs()[0].exp != -1))
        continue;
      Generator g = w.runs()[0].gen;
      p.apply(isolate(p, g, id));
      removed.push_back(g);
      again = true;
    }
  }
  return removed;
}

}  // namespace schreier
