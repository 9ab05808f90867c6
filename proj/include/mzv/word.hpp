#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mzv {

enum class Letter : std::uint8_t { x = 0, y = 1 };

// A monomial of the free algebra on {x, y}: a finite word stored as its
// length plus one bit per letter (x = 0, y = 1, letter i in bit i).
class Word {
 public:
  static constexpr std::size_t max_length = 64;

  constexpr Word() = default;  // the empty word, unit of concatenation

  static Word single(Letter l);
  // Accepts words over {x, y}; "" and "1" both denote the unit.
  static Word from_string(std::string_view text);

  std::size_t length() const { return len_; }
  std::size_t weight() const { return len_; }
  std::size_t depth() const;  // number of y letters
  bool empty() const { return len_ == 0; }

  Letter at(std::size_t i) const;
  Letter front() const { return at(0); }
  Letter back() const { return at(len_ - 1); }

  Word concat(const Word& rhs) const;
  Word prefix(std::size_t n) const;     // first n letters
  Word suffix(std::size_t from) const;  // letters from position `from` on
  Word tail() const { return suffix(1); }

  bool starts_with(Letter l) const { return len_ > 0 && front() == l; }
  bool ends_with(Letter l) const { return len_ > 0 && back() == l; }

  std::string str() const;  // "1" for the empty word

  friend bool operator==(const Word&, const Word&) = default;
  // Canonical order: weight first, then lexicographic with x < y.
  std::strong_ordering operator<=>(const Word& rhs) const;

 private:
  Word(std::uint32_t len, std::uint64_t bits) : len_(len), bits_(bits) {}

  std::uint32_t len_ = 0;
  std::uint64_t bits_ = 0;
};

Word letter_power(Letter l, std::size_t n);  // l^n
Word zk_word(unsigned k);                    // z_k = x^{k-1} y, k >= 1

// All words of the given length, in canonical (lexicographic) order.
std::vector<Word> words_of_weight(std::size_t n);

// An MZV index (k_1, ..., k_n): nonempty, all parts positive.
struct Composition {
  std::vector<std::uint32_t> parts;

  std::size_t weight() const;
  std::size_t depth() const { return parts.size(); }
  bool admissible() const { return !parts.empty() && parts.front() >= 2; }
  std::string str() const;  // "(2,1)"

  friend bool operator==(const Composition&, const Composition&) = default;
  auto operator<=>(const Composition&) const = default;
};

// Mutually inverse bijections between compositions and nonempty words
// ending in y (the word of (k_1,...,k_n) is z_{k_1}...z_{k_n}).
Word word_of_composition(const Composition& c);
// Throws std::domain_error on the empty word or a word ending in x.
Composition composition_of_word(const Word& w);

}  // namespace mzv
