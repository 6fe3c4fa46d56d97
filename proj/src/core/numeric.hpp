#pragma once
#include <gmpxx.h>

#include <string>
#include <vector>

namespace fanmat {

using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// g = s*a + t*b with g >= 0
inline void gcdext(const Int& a, const Int& b, Int& g, Int& s, Int& t) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

inline Int fdiv(const Int& a, const Int& b) {  // floor(a/b)
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int exdiv(const Int& a, const Int& b) {  // exact division, b | a
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int mod_reduce(const Int& a, const Int& m) {  // representative in [0, m)
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// gcd of |entries|, 0 for the zero vector
inline Int content(const std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

// divide by content, keeping direction; zero vector unchanged
inline void primitivize(std::vector<Int>& v) {
  Int g = content(v);
  if (g > 1)
    for (Int& x : v) x = exdiv(x, g);
}

inline std::string to_string(const Int& x) { return x.get_str(); }
inline std::string to_string(const Rat& x) { return x.get_str(); }

}  // namespace fanmat
