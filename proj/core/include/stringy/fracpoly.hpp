#pragma once

#include <cstddef>
#include <map>

#include "stringy/rational.hpp"

namespace stringy {

// Exponent pair of a monomial u^p v^q.  The difference p - q is an integer
// for every stored term: fractional exponents only enter through powers of
// the product uv.
struct Exponents {
  Rat p;
  Rat q;
};

bool operator==(const Exponents& a, const Exponents& b);

struct ExponentsLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Finite integer combination of monomials u^p v^q with rational exponents.
// Zero coefficients are never stored; the empty term map is the zero
// polynomial.  Values are immutable in spirit: every operation returns a
// fresh polynomial, so instances can be shared across threads freely.
class FracPoly {
 public:
  using TermMap = std::map<Exponents, Int, ExponentsLess>;

  FracPoly() = default;

  static FracPoly constant(Int c);
  static FracPoly monomial(const Rat& p, const Rat& q, Int coeff = Int(1));
  static FracPoly uv_power(const Rat& s);      // (uv)^s
  static FracPoly uv_minus_one();              // uv - 1
  static FracPoly projective_space(long dim);  // 1 + uv + ... + (uv)^dim

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  // Adds c * u^p v^q, merging with an existing term and dropping zeros.
  // Throws InternalCheck unless p - q is an integer.
  void add_term(const Rat& p, const Rat& q, const Int& c);

  FracPoly& operator+=(const FracPoly& o);
  FracPoly& operator-=(const FracPoly& o);
  FracPoly& operator*=(const FracPoly& o);
  FracPoly operator-() const;

  friend FracPoly operator+(FracPoly a, const FracPoly& b) { return a += b; }
  friend FracPoly operator-(FracPoly a, const FracPoly& b) { return a -= b; }
  friend FracPoly operator*(const FracPoly& a, const FracPoly& b);

  FracPoly pow(unsigned long e) const;

  bool operator==(const FracPoly& o) const;
  bool operator!=(const FracPoly& o) const { return !(*this == o); }

  // Value at u = v = 1: the sum of the coefficients.
  Int value_at_one() const;

  // min over terms of min(p, q): the uv-order used for series truncation.
  // Requires a nonzero polynomial.
  Rat min_uv_grade() const;

  // Drops every term whose min(p, q) exceeds max_grade.
  FracPoly truncated_above(const Rat& max_grade) const;

 private:
  TermMap terms_;
};

}  // namespace stringy
