#include "stringy/expr.hpp"

#include <algorithm>
#include <vector>

#include "stringy/errors.hpp"
#include "zpoly.hpp"

namespace stringy {

namespace {

using detail::ZPoly;

// One u^k isotypic slice of a numerator: u^k * t^shift * poly(t) where
// t = (uv)^{1/N}.  Denominators only involve uv, so cancellation works
// slice by slice.
struct Slice {
  long shift = 0;
  ZPoly poly;

  void normalize() {
    std::size_t drop = 0;
    while (drop < poly.size() && poly[drop] == 0) ++drop;
    if (drop > 0) {
      poly.erase(poly.begin(), poly.begin() + static_cast<long>(drop));
      shift += static_cast<long>(drop);
    }
    detail::ztrim(poly);
  }
};

// Multiplicity of phi in p, capped at cap.
long cyclotomic_multiplicity(const ZPoly& phi, const ZPoly& p, long cap) {
  long count = 0;
  ZPoly work = p;
  ZPoly quot;
  while (count < cap && detail::zdivides(phi, work, quot)) {
    work = quot;
    ++count;
  }
  return count;
}

FracPoly factor_poly(const Rat& a) {
  FracPoly f;
  f.add_term(a, a, Int(1));
  f.add_term(Rat(0), Rat(0), Int(-1));
  return f;  // (uv)^a - 1
}

}  // namespace

RationalExpr::RationalExpr(FracPoly numerator) : num_(std::move(numerator)) {}

RationalExpr::RationalExpr(FracPoly numerator, DenMap denominator_factors)
    : num_(std::move(numerator)), den_(std::move(denominator_factors)) {
  canonicalize();
}

RationalExpr RationalExpr::one() {
  return RationalExpr(FracPoly::constant(Int(1)));
}

void RationalExpr::canonicalize() {
  for (auto it = den_.begin(); it != den_.end();) {
    if (it->second < 0)
      throw InternalCheck("RationalExpr: negative factor multiplicity");
    if (!(it->first > 0))
      throw NotPositive("denominator exponent a must be positive, got " +
                        to_string(it->first));
    if (it->second == 0)
      it = den_.erase(it);
    else
      ++it;
  }
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  if (den_.empty()) return;

  // Common refinement: everything becomes a Laurent polynomial in
  // t = (uv)^{1/N}.
  Int n_big(1);
  for (const auto& [e, c] : num_.terms()) fold_lcm_denominator(n_big, e.q);
  for (const auto& [a, mult] : den_) fold_lcm_denominator(n_big, a);
  const long N = to_long(n_big);

  // Slice the numerator by the integer exponent gap k = p - q.
  std::map<Int, std::map<long, Int>> raw;
  for (const auto& [e, c] : num_.terms()) {
    Int k(e.p - e.q);
    Rat scaled = e.q * N;
    raw[k][to_long(Int(scaled.get_num()))] += c;
  }
  std::map<Int, Slice> slices;
  for (auto& [k, mono] : raw) {
    long lo = mono.begin()->first;
    long hi = mono.rbegin()->first;
    Slice s;
    s.shift = lo;
    s.poly.assign(hi - lo + 1, Int(0));
    for (auto& [e, c] : mono) s.poly[e - lo] = c;
    s.normalize();
    slices.emplace(k, std::move(s));
  }

  // Cyclotomic exponent multiset of the denominator in the variable t.
  std::map<long, long> cyclo;
  for (const auto& [a, mult] : den_) {
    Rat scaled = a * N;
    long m = to_long(Int(scaled.get_num()));
    for (long d : detail::divisors(m)) cyclo[d] += mult;
  }

  // Cancel: remove from the denominator every cyclotomic factor dividing all
  // slices, largest order first.
  for (auto it = cyclo.rbegin(); it != cyclo.rend(); ++it) {
    if (it->second == 0) continue;
    const ZPoly& phi = detail::cyclotomic(it->first);
    long c = it->second;
    for (const auto& [k, s] : slices) {
      c = std::min(c, cyclotomic_multiplicity(phi, s.poly, c));
      if (c == 0) break;
    }
    if (c == 0) continue;
    for (auto& [k, s] : slices) {
      for (long i = 0; i < c; ++i) {
        ZPoly quot;
        if (!detail::zdivides(phi, s.poly, quot))
          throw InternalCheck("canonicalize: lost divisibility");
        s.poly = std::move(quot);
      }
    }
    it->second -= c;
  }

  // Regroup the surviving cyclotomic content into ((uv)^{m/N} - 1) factors,
  // always consuming the largest order present.  Orders forced in by a
  // factor but absent from the multiset move into the numerator.
  DenMap newden;
  while (true) {
    long m = 0;
    for (auto it = cyclo.rbegin(); it != cyclo.rend(); ++it) {
      if (it->second > 0) {
        m = it->first;
        break;
      }
    }
    if (m == 0) break;
    newden[make_rat(Int(m), Int(N))] += 1;
    for (long d : detail::divisors(m)) {
      auto it = cyclo.find(d);
      if (it != cyclo.end() && it->second > 0) {
        --it->second;
      } else {
        const ZPoly& phi = detail::cyclotomic(d);
        for (auto& [k, s] : slices) s.poly = detail::zmul(s.poly, phi);
      }
    }
  }

  FracPoly out;
  for (const auto& [k, s] : slices) {
    for (std::size_t i = 0; i < s.poly.size(); ++i) {
      if (s.poly[i] == 0) continue;
      Rat q = make_rat(Int(s.shift + static_cast<long>(i)), Int(N));
      out.add_term(Rat(q + k), q, s.poly[i]);
    }
  }
  num_ = std::move(out);
  den_ = std::move(newden);
  if (num_.is_zero()) den_.clear();
}

RationalExpr& RationalExpr::operator*=(const RationalExpr& o) {
  num_ *= o.num_;
  for (const auto& [a, mult] : o.den_) den_[a] += mult;
  canonicalize();
  return *this;
}

RationalExpr& RationalExpr::operator+=(const RationalExpr& o) {
  // Common denominator: per factor value the max multiplicity of the two.
  DenMap join = den_;
  for (const auto& [a, mult] : o.den_) {
    auto it = join.find(a);
    if (it == join.end())
      join[a] = mult;
    else
      it->second = std::max(it->second, mult);
  }
  FracPoly left = num_;
  FracPoly right = o.num_;
  for (const auto& [a, mult] : join) {
    long mine = 0, theirs = 0;
    if (auto it = den_.find(a); it != den_.end()) mine = it->second;
    if (auto it = o.den_.find(a); it != o.den_.end()) theirs = it->second;
    FracPoly f = factor_poly(a);
    for (long i = mine; i < mult; ++i) left *= f;
    for (long i = theirs; i < mult; ++i) right *= f;
  }
  num_ = left + right;
  den_ = std::move(join);
  canonicalize();
  return *this;
}

bool RationalExpr::operator==(const RationalExpr& o) const {
  return den_ == o.den_ && num_ == o.num_;
}

FracPoly RationalExpr::denominator_poly() const {
  FracPoly d = FracPoly::constant(Int(1));
  for (const auto& [a, mult] : den_)
    for (long i = 0; i < mult; ++i) d *= factor_poly(a);
  return d;
}

bool RationalExpr::same_value(const RationalExpr& o) const {
  return num_ * o.denominator_poly() == o.num_ * denominator_poly();
}

Rat RationalExpr::limit_at_one() const {
  if (den_.empty()) return Rat(num_.value_at_one());
  if (num_.is_zero()) return Rat(0);

  // Diagonal restriction u = v: the numerator becomes a Laurent polynomial
  // in y = (uv)^{1/(2M)} via the symmetric exponent (p+q)/2; denominators
  // depend on uv only, so the joint limit agrees with the diagonal one
  // whenever it exists.
  Int m_big(1);
  for (const auto& [e, c] : num_.terms())
    fold_lcm_denominator(m_big, Rat((e.p + e.q) / 2));
  for (const auto& [a, mult] : den_) fold_lcm_denominator(m_big, a);
  const long M = to_long(m_big);

  std::map<long, Int> diag;
  for (const auto& [e, c] : num_.terms()) {
    Rat scaled = Rat((e.p + e.q) / 2) * M;
    diag[to_long(Int(scaled.get_num()))] += c;
  }
  long lo = diag.begin()->first;
  long hi = diag.rbegin()->first;
  ZPoly p(hi - lo + 1, Int(0));
  for (auto& [e, c] : diag) p[e - lo] = c;
  detail::ztrim(p);
  if (p.empty()) return Rat(0);

  long vanish = 0;
  for (const auto& [a, mult] : den_) vanish += mult;
  for (long i = 0; i < vanish; ++i) {
    if (detail::zeval_one(p) != 0)
      throw PoleAtOne("denominator vanishes to order " +
                      std::to_string(vanish) +
                      " but numerator only to order " + std::to_string(i));
    p = detail::zdiv_t_minus_one(p);
  }
  Int denom(1);
  for (const auto& [a, mult] : den_) {
    Rat scaled = a * M;
    Int m(scaled.get_num());
    for (long i = 0; i < mult; ++i) denom *= m;
  }
  return make_rat(detail::zeval_one(p), denom);
}

FracPoly RationalExpr::expand_series(const Rat& max_exponent) const {
  FracPoly acc = num_.truncated_above(max_exponent);
  for (const auto& [a, mult] : den_) {
    for (long i = 0; i < mult; ++i) {
      if (acc.is_zero()) return acc;
      Rat lo = acc.min_uv_grade();
      if (lo > max_exponent) return FracPoly();
      // 1/((uv)^a - 1) = -(1 + (uv)^a + (uv)^{2a} + ...); only powers up to
      // the cutoff can reach surviving terms.
      Int jmax = floor_rat(Rat((max_exponent - lo) / a));
      FracPoly series;
      for (Int j(0); j <= jmax; ++j)
        series.add_term(Rat(a * j), Rat(a * j), Int(-1));
      acc = (acc * series).truncated_above(max_exponent);
    }
  }
  return acc;
}

}  // namespace stringy
