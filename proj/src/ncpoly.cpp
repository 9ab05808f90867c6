#include "mzv/ncpoly.hpp"

#include <stdexcept>

namespace mzv {

NCPoly::NCPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Word{}, c);
}

NCPoly::NCPoly(int c) : NCPoly(Rational(c)) {}

NCPoly NCPoly::monomial(const Word& w, const Rational& c) {
  NCPoly p;
  if (c != 0) p.terms_.emplace(w, c);
  return p;
}

Rational NCPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void NCPoly::add_term(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

NCPoly& NCPoly::operator+=(const NCPoly& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

NCPoly NCPoly::operator-() const {
  NCPoly p = *this;
  for (auto& [w, c] : p.terms_) c = -c;
  return p;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly r;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) r.add_term(wa.concat(wb), ca * cb);
  return r;
}

NCPoly concat(const NCPoly& a, const NCPoly& b) { return a * b; }

NCPoly NCPoly::weight_project(std::size_t n) const {
  NCPoly r;
  for (const auto& [w, c] : terms_)
    if (w.weight() == n) r.terms_.emplace(w, c);
  return r;
}

NCPoly NCPoly::weight_truncate(std::size_t cap) const {
  NCPoly r;
  for (const auto& [w, c] : terms_)
    if (w.weight() <= cap) r.terms_.emplace(w, c);
  return r;
}

std::size_t NCPoly::min_weight() const {
  return terms_.empty() ? 0 : terms_.begin()->first.weight();
}

std::size_t NCPoly::max_weight() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.weight();
}

bool NCPoly::homogeneous_of_weight(std::size_t n) const {
  for (const auto& [w, c] : terms_)
    if (w.weight() != n) return false;
  return true;
}

Membership NCPoly::membership() const {
  Membership m{true, true};
  for (const auto& [w, c] : terms_) {
    if (w.empty()) continue;  // constants lie in both subalgebras
    if (!w.ends_with(Letter::y)) {
      m.in_H1 = m.in_H0 = false;
      break;
    }
    if (!w.starts_with(Letter::x)) m.in_H0 = false;
  }
  return m;
}

bool NCPoly::in_Hy() const {
  for (const auto& [w, c] : terms_)
    if (w.empty() || !w.ends_with(Letter::y)) return false;
  return true;
}

std::string NCPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    const bool neg = c < 0;
    if (first) {
      if (neg) s += "-";
      first = false;
    } else {
      s += neg ? " - " : " + ";
    }
    Rational mag = neg ? Rational(-c) : c;
    if (w.empty()) {
      s += rational_str(mag);
    } else if (mag == 1) {
      s += w.str();
    } else {
      s += rational_str(mag) + "*" + w.str();
    }
  }
  return s;
}

const NCPoly& nc_one() {
  static const NCPoly one{1};
  return one;
}

const NCPoly& nc_x() {
  static const NCPoly p = NCPoly::monomial(Word::single(Letter::x));
  return p;
}

const NCPoly& nc_y() {
  static const NCPoly p = NCPoly::monomial(Word::single(Letter::y));
  return p;
}

const NCPoly& nc_z() {
  static const NCPoly p = nc_x() + nc_y();
  return p;
}

NCPoly zk(unsigned k) { return NCPoly::monomial(zk_word(k)); }

NCPoly xpow(std::size_t n) { return NCPoly::monomial(letter_power(Letter::x, n)); }

NCPoly ypow(std::size_t n) { return NCPoly::monomial(letter_power(Letter::y, n)); }

NCPoly zpow(std::size_t n) {
  NCPoly r = nc_one();
  for (std::size_t i = 0; i < n; ++i) r = r * nc_z();
  return r;
}

NCPoly neg_ypow(std::size_t n) {
  return NCPoly::monomial(letter_power(Letter::y, n), n % 2 ? -1 : 1);
}

}  // namespace mzv
