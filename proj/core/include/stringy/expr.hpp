#pragma once

#include <map>

#include "stringy/fracpoly.hpp"

namespace stringy {

// Quotient of a FracPoly by a product of factors ((uv)^a - 1) with a > 0.
// Instances are always held in canonical form: the fraction is fully reduced
// in the variable t = (uv)^{1/N} (N the lcm of the exponent denominators)
// and the surviving cyclotomic content is regrouped into ((uv)^a - 1)
// factors deterministically.  Two expressions representing the same rational
// function therefore compare equal with operator==.
class RationalExpr {
 public:
  // a -> multiplicity of the factor ((uv)^a - 1).
  using DenMap = std::map<Rat, long>;

  RationalExpr() = default;  // zero
  explicit RationalExpr(FracPoly numerator);
  RationalExpr(FracPoly numerator, DenMap denominator_factors);

  static RationalExpr one();

  const FracPoly& numerator() const { return num_; }
  const DenMap& denominator_factors() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }

  RationalExpr& operator+=(const RationalExpr& o);
  RationalExpr& operator*=(const RationalExpr& o);
  friend RationalExpr operator+(RationalExpr a, const RationalExpr& b) {
    return a += b;
  }
  friend RationalExpr operator*(RationalExpr a, const RationalExpr& b) {
    return a *= b;
  }

  // Structural equality of canonical forms.
  bool operator==(const RationalExpr& o) const;
  bool operator!=(const RationalExpr& o) const { return !(*this == o); }

  // Independent equality check by cross-multiplication, bypassing the
  // canonical form entirely.
  bool same_value(const RationalExpr& o) const;

  // lim_{u,v -> 1}.  Throws PoleAtOne when the limit is infinite.
  Rat limit_at_one() const;

  // Formal expansion in ascending powers of uv, truncated strictly above
  // max_exponent; exact on every term at or below the cutoff.
  FracPoly expand_series(const Rat& max_exponent) const;

  // The denominator product expanded as a polynomial.
  FracPoly denominator_poly() const;

 private:
  void canonicalize();

  FracPoly num_;
  DenMap den_;
};

}  // namespace stringy
