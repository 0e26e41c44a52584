#include "zpoly.hpp"

#include <map>
#include <mutex>

#include "stringy/errors.hpp"

namespace stringy::detail {

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

bool zis_zero(const ZPoly& p) { return p.empty(); }

long zdeg(const ZPoly& p) { return static_cast<long>(p.size()) - 1; }

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  ztrim(r);
  return r;
}

ZPoly zadd(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  ztrim(r);
  return r;
}

void zdivmod_unit(const ZPoly& a, const ZPoly& b, ZPoly& quot, ZPoly& rem) {
  if (b.empty()) throw InternalCheck("zdivmod_unit: division by zero");
  const Int& lead = b.back();
  if (lead != 1 && lead != -1)
    throw InternalCheck("zdivmod_unit: divisor leading coefficient not a unit");
  rem = a;
  ztrim(rem);
  quot.assign(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, Int(0));
  while (rem.size() >= b.size()) {
    Int c = rem.back() * lead;  // lead is +-1, so this is rem.back()/lead
    std::size_t shift = rem.size() - b.size();
    quot[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
    ztrim(rem);
    if (rem.size() > shift + b.size() - 1)
      throw InternalCheck("zdivmod_unit: no progress");
  }
  ztrim(quot);
}

bool zdivides(const ZPoly& b, const ZPoly& a, ZPoly& quot) {
  ZPoly rem;
  zdivmod_unit(a, b, quot, rem);
  return rem.empty();
}

Int zeval_one(const ZPoly& p) {
  Int s(0);
  for (const Int& c : p) s += c;
  return s;
}

ZPoly zdiv_t_minus_one(const ZPoly& p) {
  // Horner from the top: p = (t-1) q  =>  q_k = sum_{i>k} p_i.
  if (p.empty()) return {};
  ZPoly q(p.size() - 1, Int(0));
  Int acc(0);
  for (std::size_t i = p.size(); i-- > 1;) {
    acc += p[i];
    q[i - 1] = acc;
  }
  acc += p[0];
  if (acc != 0) throw InternalCheck("zdiv_t_minus_one: p(1) != 0");
  ztrim(q);
  return q;
}

std::vector<long> divisors(long m) {
  std::vector<long> small, large;
  for (long d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      small.push_back(d);
      if (d != m / d) large.push_back(m / d);
    }
  }
  for (std::size_t i = large.size(); i-- > 0;) small.push_back(large[i]);
  return small;
}

long euler_phi(long m) {
  long result = m, n = m;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result -= result / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

// Phi_m = (t^m - 1) / prod_{d | m, d < m} Phi_d.  Divisors are walked in
// ascending order, so every proper divisor is cached before it is needed.
const ZPoly& cyclotomic_locked(long m, std::map<long, ZPoly>& cache) {
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  ZPoly num(m + 1, Int(0));
  num[0] = -1;
  num[m] = 1;
  for (long d : divisors(m)) {
    if (d == m) continue;
    ZPoly q;
    if (!zdivides(cyclotomic_locked(d, cache), num, q))
      throw InternalCheck("cyclotomic: inexact division");
    num = q;
  }
  return cache.emplace(m, std::move(num)).first->second;
}

}  // namespace

const ZPoly& cyclotomic(long m) {
  if (m < 1) throw InternalCheck("cyclotomic: order must be positive");
  static std::map<long, ZPoly> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  return cyclotomic_locked(m, cache);
}

}  // namespace stringy::detail
