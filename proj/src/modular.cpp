#include "lieqr/modular.hpp"

namespace lieqr {

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t p) {
  uint64_t acc = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) acc = mulmod(acc, base, p);
    base = mulmod(base, base, p);
    exp >>= 1;
  }
  return acc;
}

uint64_t invmod(uint64_t a, uint64_t p) {
  a %= p;
  if (a == 0) throw std::invalid_argument("invmod: zero has no inverse");
  return powmod(a, p - 2, p);
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // This base set decides primality for every n < 2^64.
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

uint64_t random_prime(Rng& rng) {
  const uint64_t lo = 1ull << 60;
  const uint64_t hi = 1ull << 62;
  for (;;) {
    uint64_t cand = lo + rng.below(hi - lo);
    cand |= 1;
    if (is_prime_u64(cand)) return cand;
  }
}

uint64_t reduce_mod(const Rat& q, uint64_t p) {
  static_assert(sizeof(unsigned long) == 8, "needs 64-bit unsigned long");
  uint64_t n = mpz_fdiv_ui(q.get_num().get_mpz_t(), p);  // non-negative remainder
  uint64_t d = mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
  if (d == 0) throw BadPrimeError(p);
  return mulmod(n, invmod(d, p), p);
}

std::optional<Rat> rational_reconstruct(uint64_t a, uint64_t p) {
  a %= p;
  if (a == 0) return Rat(0);
  // Half-extended Euclid on (p, a); stop when the remainder drops below
  // sqrt(p/2). The pair (r, t) then satisfies r = t*a mod p.
  unsigned __int128 half = static_cast<unsigned __int128>(p) / 2;
  uint64_t bound = 1;
  while (static_cast<unsigned __int128>(bound + 1) * (bound + 1) <= half) ++bound;

  int64_t t0 = 0, t1 = 1;
  uint64_t r0 = p, r1 = a % p;
  while (r1 > bound) {
    uint64_t qt = r0 / r1;
    uint64_t r2 = r0 - qt * r1;
    int64_t t2 = t0 - static_cast<int64_t>(qt) * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (r1 == 0) return std::nullopt;  // a == 0 handled by caller; here means gcd hit
  int64_t den = t1;
  int64_t num = static_cast<int64_t>(r1);
  if (den == 0) return std::nullopt;
  if (den < 0) {
    den = -den;
    num = -num;
  }
  if (static_cast<uint64_t>(den) > bound) return std::nullopt;
  Rat q(make_rat(num, den));
  // Verify the lift: num/den == a (mod p).
  uint64_t check = reduce_mod(q, p);
  if (check != a % p) return std::nullopt;
  return q;
}

}  // namespace lieqr
