#include "mzv/products.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace mzv {

namespace {

NCPoly prepend_word(const Word& head, const NCPoly& p) {
  NCPoly r;
  for (const auto& [w, c] : p.terms()) r.add_term(head.concat(w), c);
  return r;
}

// Leading z_k factor of a word in Hy: k - 1 x's followed by y.
unsigned leading_zk(const Word& w) {
  unsigned k = 1;
  for (std::size_t i = 0; i < w.length() && w.at(i) == Letter::x; ++i) ++k;
  return k;
}

}  // namespace

const char* product_name(ProductKind kind) {
  switch (kind) {
    case ProductKind::concat: return "concat";
    case ProductKind::shuffle: return "shuffle";
    case ProductKind::harmonic: return "harmonic";
  }
  return "?";
}

NCPoly shuffle_words(const Word& u, const Word& v) {
  if (u.empty()) return NCPoly::monomial(v);
  if (v.empty()) return NCPoly::monomial(u);
  // commutative: normalize the cache key
  const Word& a = u <= v ? u : v;
  const Word& b = u <= v ? v : u;
  thread_local std::map<std::pair<Word, Word>, NCPoly> cache;
  auto key = std::make_pair(a, b);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  NCPoly r = prepend_word(Word::single(a.front()), shuffle_words(a.tail(), b));
  r += prepend_word(Word::single(b.front()), shuffle_words(a, b.tail()));
  return cache.emplace(std::move(key), std::move(r)).first->second;
}

NCPoly harmonic_words(const Word& u, const Word& v) {
  if (u.empty()) return NCPoly::monomial(v);
  if (v.empty()) return NCPoly::monomial(u);
  const Word& a = u <= v ? u : v;
  const Word& b = u <= v ? v : u;
  thread_local std::map<std::pair<Word, Word>, NCPoly> cache;
  auto key = std::make_pair(a, b);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  const unsigned k = leading_zk(a), l = leading_zk(b);
  const Word arest = a.suffix(k), brest = b.suffix(l);
  NCPoly r = prepend_word(zk_word(k), harmonic_words(arest, b));
  r += prepend_word(zk_word(l), harmonic_words(a, brest));
  r += prepend_word(zk_word(k + l), harmonic_words(arest, brest));
  return cache.emplace(std::move(key), std::move(r)).first->second;
}

NCPoly shuffle(const NCPoly& p, const NCPoly& q) {
  NCPoly r;
  for (const auto& [wp, cp] : p.terms())
    for (const auto& [wq, cq] : q.terms()) r += (cp * cq) * shuffle_words(wp, wq);
  return r;
}

NCPoly harmonic(const NCPoly& p, const NCPoly& q) {
  if (!p.in_H1() || !q.in_H1())
    throw std::domain_error("harmonic product requires operands in H1 = Q + Hy");
  NCPoly r;
  for (const auto& [wp, cp] : p.terms())
    for (const auto& [wq, cq] : q.terms()) r += (cp * cq) * harmonic_words(wp, wq);
  return r;
}

NCPoly product(const NCPoly& p, const NCPoly& q, ProductKind kind) {
  switch (kind) {
    case ProductKind::concat: return p * q;
    case ProductKind::shuffle: return shuffle(p, q);
    case ProductKind::harmonic: return harmonic(p, q);
  }
  throw std::logic_error("unknown product kind");
}

NCPoly power(const NCPoly& p, unsigned n, ProductKind kind) {
  NCPoly r = nc_one();
  for (unsigned i = 0; i < n; ++i) r = product(r, p, kind);
  return r;
}

}  // namespace mzv
