#include "schreier/word.hpp"

#include <cctype>
#include <charconv>

#include "schreier/error.hpp"

namespace schreier {

Word::Word(Generator g, std::int64_t exp) {
  if (exp != 0) runs_.push_back({std::move(g), exp});
}

Word Word::reduce(std::span<const Letter> letters) {
  Word w;
  w.runs_.reserve(letters.size());
  for (const auto& l : letters) w.push_back(l.gen, l.exp);
  return w;
}

std::int64_t Word::length() const {
  std::int64_t n = 0;
  for (const auto& r : runs_) n += r.exp < 0 ? -r.exp : r.exp;
  return n;
}

void Word::push_back(const Generator& g, std::int64_t exp) {
  if (exp == 0) return;
  if (!runs_.empty() && runs_.back().gen == g) {
    runs_.back().exp += exp;
    if (runs_.back().exp == 0) runs_.pop_back();
    return;
  }
  runs_.push_back({g, exp});
}

void Word::append(const Word& w) {
  for (const auto& r : w.runs_) push_back(r.gen, r.exp);
}

Word normalize(std::span<const Letter> letters, const Alphabet& alphabet) {
  for (const auto& l : letters) alphabet.validate(l.gen);
  return Word::reduce(letters);
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.append(b);
  return out;
}

Word invert(const Word& w) {
  Word out;
  const auto& r = w.runs();
  for (auto it = r.rbegin(); it != r.rend(); ++it) out.push_back(it->gen, -it->exp);
  return out;
}

Word conjugate(const Word& w, const Word& by) {
  Word out = by;
  out.append(w);
  out.append(invert(by));
  return out;
}

Word power(const Word& w, std::int64_t e) {
  Word base = e < 0 ? invert(w) : w;
  if (e < 0) e = -e;
  Word out;
  for (std::int64_t i = 0; i < e; ++i) out.append(base);
  return out;
}

bool freely_equal(const Word& a, const Word& b) { return a == b; }

Coset phi_image(const Word& w) {
  Coset c;
  for (const auto& r : w.runs()) {
    if (r.gen.family == kSigma)
      c.m += r.exp;
    else if (r.gen.family == kRho)
      c.k += r.exp;
    else
      throw ValidationError("letter " + to_string(r.gen) +
                            " is not a sigma or rho generator");
  }
  return c;
}

std::string to_string(const Letter& l) {
  std::string s = to_string(l.gen);
  if (l.exp != 1) s += "^" + std::to_string(l.exp);
  return s;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& r : w.runs()) {
    if (!out.empty()) out += ' ';
    out += to_string(r);
  }
  return out;
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  const char* b = s.data();
  if (!s.empty() && s.front() == '+') ++b;
  auto [p, ec] = std::from_chars(b, s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw ValidationError("malformed integer '" + std::string(s) + "' in '" +
                          std::string(whole) + "'");
  return v;
}

}  // namespace

Generator parse_generator(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && (std::isalpha(static_cast<unsigned char>(text[i])) ||
                             text[i] == '_'))
    ++i;
  if (i == 0) throw ValidationError("malformed generator '" + std::string(text) + "'");
  std::string family(text.substr(0, i));
  std::string_view rest = text.substr(i);
  std::vector<std::int64_t> idx;
  if (rest.empty()) return Generator(family, {});
  if (rest.front() == '[') {
    if (rest.back() != ']')
      throw ValidationError("malformed generator '" + std::string(text) + "'");
    rest = rest.substr(1, rest.size() - 2);
    while (!rest.empty()) {
      auto comma = rest.find(',');
      idx.push_back(parse_int(rest.substr(0, comma), text));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  } else {
    idx.push_back(parse_int(rest, text));
  }
  return Generator(family, std::span<const std::int64_t>(idx));
}

Word parse_word(std::string_view text, const Alphabet* alphabet) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::string_view tok = text.substr(i, j - i);
    i = j;
    if (tok == "1") continue;
    std::int64_t exp = 1;
    if (auto caret = tok.find('^'); caret != std::string_view::npos) {
      exp = parse_int(tok.substr(caret + 1), text);
      tok = tok.substr(0, caret);
    }
    Generator g = parse_generator(tok);
    if (alphabet) alphabet->validate(g);
    letters.push_back({std::move(g), exp});
  }
  return Word::reduce(letters);
}

}  // namespace schreier
