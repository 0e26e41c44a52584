#include "stringy/rational.hpp"

#include <stdexcept>

#include "stringy/errors.hpp"

namespace stringy {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational", 1, 1);
  mpq_t tmp;
  mpq_init(tmp);
  int rc = mpq_set_str(tmp, s.c_str(), 10);
  if (rc != 0) {
    mpq_clear(tmp);
    throw ParseError("bad rational '" + s + "'", 1, 1);
  }
  if (mpz_sgn(mpq_denref(tmp)) == 0) {
    mpq_clear(tmp);
    throw ParseError("zero denominator in '" + s + "'", 1, 1);
  }
  if (mpz_sgn(mpq_denref(tmp)) < 0) {
    // mpq_set_str accepts "1/-2"; normalize the sign before canonicalizing.
    mpz_neg(mpq_numref(tmp), mpq_numref(tmp));
    mpz_neg(mpq_denref(tmp), mpq_denref(tmp));
  }
  mpq_canonicalize(tmp);
  Rat r(tmp);
  mpq_clear(tmp);
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }
std::string to_string(const Int& v) { return v.get_str(); }

bool is_integer(const Rat& r) { return r.get_den() == 1; }

Int floor_rat(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Int ceil_rat(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

long lcm_long(long a, long b) { return to_long(lcm(Int(a), Int(b))); }

void fold_lcm_denominator(Int& n, const Rat& r) { n = lcm(n, Int(r.get_den())); }

long to_long(const Int& v) {
  if (!v.fits_slong_p())
    throw InternalCheck("integer out of machine range: " + v.get_str());
  return v.get_si();
}

}  // namespace stringy
