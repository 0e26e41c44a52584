#include "stringy/fracpoly.hpp"

#include "stringy/errors.hpp"

namespace stringy {

bool operator==(const Exponents& a, const Exponents& b) {
  return a.p == b.p && a.q == b.q;
}

bool ExponentsLess::operator()(const Exponents& a, const Exponents& b) const {
  int c = cmp(a.p, b.p);
  if (c != 0) return c < 0;
  return cmp(a.q, b.q) < 0;
}

FracPoly FracPoly::constant(Int c) {
  FracPoly r;
  r.add_term(Rat(0), Rat(0), c);
  return r;
}

FracPoly FracPoly::monomial(const Rat& p, const Rat& q, Int coeff) {
  FracPoly r;
  r.add_term(p, q, coeff);
  return r;
}

FracPoly FracPoly::uv_power(const Rat& s) { return monomial(s, s); }

FracPoly FracPoly::uv_minus_one() {
  FracPoly r;
  r.add_term(Rat(1), Rat(1), Int(1));
  r.add_term(Rat(0), Rat(0), Int(-1));
  return r;
}

FracPoly FracPoly::projective_space(long dim) {
  if (dim < 0) throw InternalCheck("projective_space: negative dimension");
  FracPoly r;
  for (long k = 0; k <= dim; ++k) r.add_term(Rat(k), Rat(k), Int(1));
  return r;
}

void FracPoly::add_term(const Rat& p, const Rat& q, const Int& c) {
  if (c == 0) return;
  if (!is_integer(Rat(p - q)))
    throw InternalCheck("FracPoly term with non-integral u/v exponent gap");
  Exponents e{p, q};
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(std::move(e), c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

FracPoly& FracPoly::operator+=(const FracPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.p, e.q, c);
  return *this;
}

FracPoly& FracPoly::operator-=(const FracPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.p, e.q, Int(-c));
  return *this;
}

FracPoly operator*(const FracPoly& a, const FracPoly& b) {
  FracPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.add_term(Rat(ea.p + eb.p), Rat(ea.q + eb.q), Int(ca * cb));
  return r;
}

FracPoly& FracPoly::operator*=(const FracPoly& o) {
  *this = *this * o;
  return *this;
}

FracPoly FracPoly::operator-() const {
  FracPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, Int(-c));
  return r;
}

FracPoly FracPoly::pow(unsigned long e) const {
  FracPoly acc = FracPoly::constant(Int(1));
  FracPoly base = *this;
  while (e > 0) {
    if (e & 1UL) acc *= base;
    e >>= 1UL;
    if (e) base *= base;
  }
  return acc;
}

bool FracPoly::operator==(const FracPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt) {
    if (!(it->first == jt->first) || it->second != jt->second) return false;
  }
  return true;
}

Int FracPoly::value_at_one() const {
  Int s(0);
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

Rat FracPoly::min_uv_grade() const {
  if (terms_.empty()) throw InternalCheck("min_uv_grade of zero polynomial");
  bool first = true;
  Rat best;
  for (const auto& [e, c] : terms_) {
    const Rat& g = (e.p < e.q) ? e.p : e.q;
    if (first || g < best) {
      best = g;
      first = false;
    }
  }
  return best;
}

FracPoly FracPoly::truncated_above(const Rat& max_grade) const {
  FracPoly r;
  for (const auto& [e, c] : terms_) {
    const Rat& g = (e.p < e.q) ? e.p : e.q;
    if (g <= max_grade) r.terms_.emplace(e, c);
  }
  return r;
}

}  // namespace stringy
