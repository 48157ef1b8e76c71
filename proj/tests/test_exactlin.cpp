#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lieqr/linalg.hpp"
#include "lieqr/modular.hpp"
#include "lieqr/poly.hpp"
#include "lieqr/rng.hpp"

using namespace lieqr;

namespace {

// Independent rank oracle: plain rational Gaussian elimination with
// division, no pivot strategy beyond first-nonzero.
int rank_oracle(RatMatrix m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  int rank = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = rows;
    for (size_t i = r; i < rows; ++i) {
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    }
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    for (size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[r][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
    ++rank;
  }
  return rank;
}

Rat det_cofactor(const RatMatrix& m) {
  size_t n = m.size();
  if (n == 1) return m[0][0];
  Rat acc(0);
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    RatMatrix minor;
    for (size_t i = 1; i < n; ++i) {
      std::vector<Rat> row;
      for (size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(std::move(row));
    }
    Rat term = m[0][j] * det_cofactor(minor);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

RatMatrix random_matrix(Rng& rng, int max_dim, long max_num) {
  int rows = 1 + static_cast<int>(rng.below(max_dim));
  int cols = 1 + static_cast<int>(rng.below(max_dim));
  RatMatrix m(rows, std::vector<Rat>(cols));
  for (auto& row : m) {
    for (auto& v : row) {
      long num = rng.range(-max_num, max_num);
      long den = rng.range(1, 9);
      v = make_rat(num, den);
    }
  }
  // Make low rank likely now and then by duplicating a row.
  if (rows >= 2 && rng.below(4) == 0) m[rows - 1] = m[0];
  return m;
}

}  // namespace

TEST_CASE("rng determinism and bounds") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  Rng c(7);
  for (int i = 0; i < 1000; ++i) {
    CHECK(c.below(10) < 10);
    int64_t v = c.range(-9, 9);
    CHECK(v >= -9);
    CHECK(v <= 9);
  }
  CHECK(Rng::mix(1, 2) != Rng::mix(1, 3));
  CHECK(Rng::mix(1, 2) == Rng::mix(1, 2));
}

TEST_CASE("primality and prime drawing") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64((1ull << 61) - 1));  // Mersenne
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64((1ull << 61) - 3));
  CHECK_FALSE(is_prime_u64(3215031751ull));  // strong pseudoprime to bases 2,3,5,7
  Rng rng(1);
  for (int i = 0; i < 5; ++i) {
    uint64_t p = random_prime(rng);
    CHECK(p >= (1ull << 60));
    CHECK(p < (1ull << 62));
    CHECK(is_prime_u64(p));
  }
}

TEST_CASE("modular scalar ops") {
  uint64_t p = 2305843009213693951ull;  // 2^61 - 1
  CHECK(mulmod(p - 1, p - 1, p) == 1);
  CHECK(powmod(3, p - 1, p) == 1);
  CHECK(mulmod(invmod(12345, p), 12345, p) == 1);
  CHECK(addmod(p - 1, 1, p) == 0);
  CHECK(submod(0, 1, p) == p - 1);
}

TEST_CASE("reduce_mod and bad primes") {
  uint64_t p = 1152921504606847009ull;  // prime just above 2^60
  REQUIRE(is_prime_u64(p));
  CHECK(reduce_mod(make_rat(1, 2), p) == invmod(2, p));
  CHECK(reduce_mod(Rat(-1), p) == p - 1);
  Rat bad = make_rat(Int(1), Int(std::to_string(p)));
  CHECK_THROWS_AS(reduce_mod(bad, p), BadPrimeError);
}

TEST_CASE("rational reconstruction round trip") {
  uint64_t p = 1152921504606847009ull;
  for (long num : {0l, 1l, -1l, 22l, -355l}) {
    for (long den : {1l, 7l, 113l}) {
      Rat q = make_rat(num, den);
      auto lifted = rational_reconstruct(reduce_mod(q, p), p);
      REQUIRE(lifted.has_value());
      CHECK(*lifted == q);
    }
  }
}

TEST_CASE("poly: spec examples") {
  auto ring = std::make_shared<PolyRing>();
  int s = ring->add_var("s");
  int t = ring->add_var("t");
  RingPtr r = ring;

  auto S = MultiPoly::variable(r, s);
  auto T = MultiPoly::variable(r, t);
  auto one = MultiPoly::constant(r, 1);

  // (1+s)(1+t)^2, coefficient of s*t is 2
  auto p = (one + S) * (one + T) * (one + T);
  CHECK(p.coefficient({1, 1}) == 2);
  CHECK(p.coefficient({0, 2}) == 1);

  // 1 + 3 s t^2
  auto q = one + S * T * T * Rat(3);
  CHECK(q.coefficient({1, 2}) == 3);
  CHECK(q.coefficient({1, 1}) == 0);

  MultiPoly z(r);
  CHECK(z.coefficient({1, 0}) == 0);
  CHECK(z.is_zero());

  CHECK_THROWS(static_cast<void>(ring->index_of("nope")));
}

TEST_CASE("poly: the active-variable cap is enforced") {
  auto ring = std::make_shared<PolyRing>();
  for (int i = 0; i < PolyRing::kMaxVars; ++i) ring->add_var("v" + std::to_string(i));
  CHECK_THROWS_AS(ring->add_var("one_too_many"), std::runtime_error);
}

TEST_CASE("poly: laurent exponents only on torus variables") {
  auto ring = std::make_shared<PolyRing>();
  ring->add_var("u", true);
  ring->add_var("t", false);
  RingPtr r = ring;
  auto ok = MultiPoly::variable(r, 0, -3);
  CHECK(ok.coefficient({-3, 0}) == 1);
  CHECK_THROWS(static_cast<void>(MultiPoly::variable(r, 1, -1)));
}

TEST_CASE("poly: ring axioms on seeded random polynomials") {
  auto ring = std::make_shared<PolyRing>();
  ring->add_var("x");
  ring->add_var("y");
  ring->add_var("z");
  RingPtr r = ring;
  Rng rng(2024);
  auto random_poly = [&] {
    MultiPoly p(r);
    int terms = 1 + static_cast<int>(rng.below(4));
    for (int i = 0; i < terms; ++i) {
      Mono m{static_cast<int>(rng.below(3)), static_cast<int>(rng.below(3)),
             static_cast<int>(rng.below(3))};
      p.add_term(m, make_rat(rng.range(-5, 5), rng.range(1, 3)));
    }
    return p;
  };
  for (int i = 0; i < 50; ++i) {
    auto a = random_poly(), b = random_poly(), c = random_poly();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a - a == MultiPoly(r));
  }
}

TEST_CASE("rank_exact: spec examples") {
  CHECK(rank_exact({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}) == 1);
  CHECK(rank_exact({{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}) == 2);

  RatMatrix hilbert(3, std::vector<Rat>(3));
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) hilbert[i - 1][j - 1] = make_rat(1, i + j - 1);
  }
  CHECK(det_cofactor(hilbert) != 0);  // independent oracle for full rank
  CHECK(rank_exact(hilbert) == 3);
}

TEST_CASE("rank_modular: spec examples") {
  uint64_t p = 1000000007ull;
  CHECK(rank_modular({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}, p) == 1);
  // one-sided soundness: 2I mod 2 loses rank
  CHECK(rank_modular({{Rat(2), Rat(0)}, {Rat(0), Rat(2)}}, 2) == 0);
  CHECK(rank_exact({{Rat(2), Rat(0)}, {Rat(0), Rat(2)}}) == 2);
  RatMatrix id(5, std::vector<Rat>(5, Rat(0)));
  for (int i = 0; i < 5; ++i) id[i][i] = 1;
  CHECK(rank_modular(id, p) == 5);
}

TEST_CASE("rank_exact agrees with the naive oracle; modular is one-sided") {
  Rng rng(99);
  Rng prng(Rng::mix(99, 1));
  uint64_t p = random_prime(prng);
  for (int iter = 0; iter < 500; ++iter) {
    RatMatrix m = random_matrix(rng, 8, 99);
    int re = rank_exact(m);
    CHECK(re == rank_oracle(m));
    int rm = rank_modular(m, p);
    CHECK(rm <= re);
    CHECK(rm == re);  // heights < 2^16 and the fixed prime is valid
  }
}

TEST_CASE("incremental rref: monotone rank and null vectors") {
  uint64_t p = 1152921504606847009ull;
  ModularRref rref(3, p);
  int prev = 0;
  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    std::vector<uint64_t> row{rng.below(7), rng.below(7), rng.below(7)};
    rref.consume(row);
    CHECK(rref.rank() >= prev);
    prev = rref.rank();
  }

  // duplicated coordinate: rows of shape (x, x)
  ModularRref dup(2, p);
  dup.consume({3, 3});
  dup.consume({5, 5});
  REQUIRE(dup.rank() == 1);
  auto c = dup.null_vector();
  CHECK(addmod(mulmod(3, c[0], p), mulmod(3, c[1], p), p) == 0);

  ExactRref ex(2);
  ex.consume({Rat(3), Rat(3)});
  ex.consume({Rat(5), Rat(5)});
  REQUIRE(ex.rank() == 1);
  auto ce = ex.null_vector();
  CHECK(Rat(3) * ce[0] + Rat(3) * ce[1] == 0);
}
