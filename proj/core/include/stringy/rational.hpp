#pragma once

#include <gmpxx.h>

#include <string>

namespace stringy {

// All scalar arithmetic in the library is exact.  Int is an arbitrary
// precision integer, Rat a rational kept in lowest terms with positive
// denominator (the GMP canonical form).
using Int = mpz_class;
using Rat = mpq_class;

// num/den in canonical form; throws std::invalid_argument on den == 0.
Rat make_rat(const Int& num, const Int& den);
Rat make_rat(long num, long den);

// Accepts "p", "-p", "p/q" with q > 0 after canonicalization.
Rat parse_rat(const std::string& s);

std::string to_string(const Rat& r);
std::string to_string(const Int& v);

bool is_integer(const Rat& r);
Int floor_rat(const Rat& r);
Int ceil_rat(const Rat& r);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);
long lcm_long(long a, long b);

// n <- lcm(n, denominator of r).
void fold_lcm_denominator(Int& n, const Rat& r);

// Throws InternalCheck if v does not fit a long.
long to_long(const Int& v);

}  // namespace stringy
