#pragma once

// Dense univariate integer polynomials with ascending coefficients.
// Internal helper shared by the rational-expression canonicalizer and the
// cyclotomic field layer; not part of the installed API.

#include <vector>

#include "stringy/rational.hpp"

namespace stringy::detail {

using ZPoly = std::vector<Int>;  // c[0] + c[1] t + c[2] t^2 + ...

void ztrim(ZPoly& p);
bool zis_zero(const ZPoly& p);
long zdeg(const ZPoly& p);  // -1 for the zero polynomial

ZPoly zmul(const ZPoly& a, const ZPoly& b);
ZPoly zadd(const ZPoly& a, const ZPoly& b);

// Long division by a divisor whose leading coefficient is +-1.
void zdivmod_unit(const ZPoly& a, const ZPoly& b, ZPoly& quot, ZPoly& rem);

// quot = a / b when the division is exact, otherwise returns false.
bool zdivides(const ZPoly& b, const ZPoly& a, ZPoly& quot);

Int zeval_one(const ZPoly& p);

// Exact synthetic division by (t - 1); requires p(1) == 0.
ZPoly zdiv_t_minus_one(const ZPoly& p);

// m-th cyclotomic polynomial, cached.
const ZPoly& cyclotomic(long m);

// Ascending list of positive divisors.
std::vector<long> divisors(long m);

long euler_phi(long m);

}  // namespace stringy::detail
