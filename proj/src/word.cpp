#include "mzv/word.hpp"

#include <bit>
#include <stdexcept>

namespace mzv {

namespace {

std::uint64_t low_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

}  // namespace

Word Word::single(Letter l) { return Word(1, l == Letter::y ? 1 : 0); }

Word Word::from_string(std::string_view text) {
  if (text == "1") return Word{};
  if (text.size() > max_length)
    throw std::domain_error("word longer than " + std::to_string(max_length) + " letters");
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == 'y')
      bits |= std::uint64_t{1} << i;
    else if (text[i] != 'x')
      throw std::domain_error("invalid letter '" + std::string(1, text[i]) + "' in word");
  }
  return Word(static_cast<std::uint32_t>(text.size()), bits);
}

std::size_t Word::depth() const { return static_cast<std::size_t>(std::popcount(bits_)); }

Letter Word::at(std::size_t i) const {
  if (i >= len_) throw std::out_of_range("letter index out of range");
  return (bits_ >> i) & 1 ? Letter::y : Letter::x;
}

Word Word::concat(const Word& rhs) const {
  if (rhs.len_ == 0) return *this;
  if (len_ + rhs.len_ > max_length)
    throw std::domain_error("concatenation exceeds maximum word length");
  return Word(len_ + rhs.len_, bits_ | (rhs.bits_ << len_));
}

Word Word::prefix(std::size_t n) const {
  if (n > len_) throw std::out_of_range("prefix longer than word");
  return Word(static_cast<std::uint32_t>(n), bits_ & low_mask(n));
}

Word Word::suffix(std::size_t from) const {
  if (from > len_) throw std::out_of_range("suffix start past end of word");
  if (from >= len_) return Word{};
  return Word(static_cast<std::uint32_t>(len_ - from), bits_ >> from);
}

std::string Word::str() const {
  if (len_ == 0) return "1";
  std::string s(len_, 'x');
  for (std::uint32_t i = 0; i < len_; ++i)
    if ((bits_ >> i) & 1) s[i] = 'y';
  return s;
}

std::strong_ordering Word::operator<=>(const Word& rhs) const {
  if (len_ != rhs.len_) return len_ <=> rhs.len_;
  std::uint64_t diff = bits_ ^ rhs.bits_;
  if (diff == 0) return std::strong_ordering::equal;
  std::uint64_t first = diff & (~diff + 1);  // lowest differing position
  return (bits_ & first) ? std::strong_ordering::greater : std::strong_ordering::less;
}

Word letter_power(Letter l, std::size_t n) {
  if (n > Word::max_length) throw std::domain_error("letter power exceeds maximum word length");
  Word w;
  for (std::size_t i = 0; i < n; ++i) w = w.concat(Word::single(l));
  return w;
}

Word zk_word(unsigned k) {
  if (k < 1) throw std::domain_error("z_k requires k >= 1");
  return letter_power(Letter::x, k - 1).concat(Word::single(Letter::y));
}

std::vector<Word> words_of_weight(std::size_t n) {
  if (n > 24) throw std::domain_error("refusing to enumerate words of weight > 24");
  std::vector<Word> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
    // bit n-1-j of i is letter j, so counting order matches lexicographic order
    std::string s(n, 'x');
    for (std::size_t j = 0; j < n; ++j)
      if ((i >> (n - 1 - j)) & 1) s[j] = 'y';
    out.push_back(Word::from_string(s));
  }
  return out;
}

std::size_t Composition::weight() const {
  std::size_t w = 0;
  for (auto k : parts) w += k;
  return w;
}

std::string Composition::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

Word word_of_composition(const Composition& c) {
  if (c.parts.empty()) throw std::domain_error("empty composition");
  Word w;
  for (auto k : c.parts) {
    if (k < 1) throw std::domain_error("composition parts must be positive");
    w = w.concat(zk_word(k));
  }
  return w;
}

Composition composition_of_word(const Word& w) {
  if (w.empty() || !w.ends_with(Letter::y))
    throw std::domain_error("composition_of_word requires a nonempty word ending in y");
  Composition c;
  std::uint32_t run = 1;
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (w.at(i) == Letter::x) {
      ++run;
    } else {
      c.parts.push_back(run);
      run = 1;
    }
  }
  return c;
}

}  // namespace mzv
