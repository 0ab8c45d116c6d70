#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace schreier {

inline constexpr std::size_t kMaxArity = 4;

// A free generator: a family name plus a short tuple of integer indices.
// Equality is structural.
struct Generator {
  std::string family;
  std::array<std::int64_t, kMaxArity> idx{};
  std::uint8_t arity = 0;

  Generator() = default;
  Generator(std::string fam, std::initializer_list<std::int64_t> indices);
  Generator(std::string fam, std::span<const std::int64_t> indices);

  std::span<const std::int64_t> indices() const { return {idx.data(), arity}; }
  std::int64_t operator[](std::size_t i) const { return idx[i]; }

  friend bool operator==(const Generator&, const Generator&) = default;
  friend std::strong_ordering operator<=>(const Generator& a,
                                          const Generator& b) {
    if (auto c = a.family <=> b.family; c != 0) return c;
    if (auto c = a.arity <=> b.arity; c != 0) return c;
    return a.idx <=> b.idx;
  }
};

struct GeneratorHash {
  std::size_t operator()(const Generator& g) const noexcept;
};

std::string to_string(const Generator& g);

// Inclusive integer interval; a missing end is unbounded.
struct IndexRange {
  std::optional<std::int64_t> lo;
  std::optional<std::int64_t> hi;

  static IndexRange all() { return {}; }
  static IndexRange between(std::int64_t a, std::int64_t b) { return {a, b}; }

  bool unbounded() const { return !lo && !hi; }
  bool contains(std::int64_t v) const {
    return (!lo || v >= *lo) && (!hi || v <= *hi);
  }
  bool empty() const { return lo && hi && *lo > *hi; }
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

std::string to_string(const IndexRange& r);

// Index positions with an unbounded domain are window coordinates: they
// range over Z and are clipped to [-M, M] when truncating.
struct FamilyDecl {
  std::string name;
  std::vector<IndexRange> domain;  // one entry per index position

  std::size_t arity() const { return domain.size(); }
  bool is_window_position(std::size_t pos) const {
    return domain[pos].unbounded();
  }
};

class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<FamilyDecl> families);

  void declare(FamilyDecl family);
  const FamilyDecl* find(const std::string& name) const;
  const FamilyDecl& at(const std::string& name) const;
  const std::vector<FamilyDecl>& families() const { return families_; }

  bool contains(const Generator& g) const;
  // Throws ValidationError with a description of the first problem.
  void validate(const Generator& g) const;

  // Window coordinates of g (unbounded index positions).
  std::vector<std::int64_t> window_coordinates(const Generator& g) const;

  // Every generator whose window coordinates lie in [-window, window].
  std::vector<Generator> enumerate(std::int64_t window) const;

 private:
  std::vector<FamilyDecl> families_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

}  // namespace schreier
