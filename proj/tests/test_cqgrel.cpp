#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "lieqr/cqgrel.hpp"
#include "lieqr/rng.hpp"

using namespace lieqr;

namespace {

NCPoly random_poly(Rng& rng, int n) {
  NCPoly p;
  int terms = 1 + static_cast<int>(rng.below(4));
  for (int t = 0; t < terms; ++t) {
    NCPoly::Word w;
    int len = static_cast<int>(rng.below(4));
    for (int m = 0; m < len; ++m) {
      w.push_back({1 + static_cast<int>(rng.below(n)), 1 + static_cast<int>(rng.below(n))});
    }
    p.add_term(w, make_rat(rng.range(-5, 5), rng.range(1, 3)));
  }
  return p;
}

}  // namespace

TEST_CASE("rel2(1,2,1,2) spells out as displayed") {
  auto r = rel2(1, 2, 1, 2);
  // Q11 Q22 + Q12 Q21 - Q21 Q12 - Q22 Q11
  auto q11 = NCPoly::gen(1, 1), q22 = NCPoly::gen(2, 2);
  auto q12 = NCPoly::gen(1, 2), q21 = NCPoly::gen(2, 1);
  CHECK(r == q11 * q22 + q12 * q21 - q21 * q12 - q22 * q11);
  CHECK(r.str() == "Q11*Q22 + Q12*Q21 - Q21*Q12 - Q22*Q11");
}

TEST_CASE("rel1 with identical outer indices vanishes") {
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) CHECK(rel1(i, j, i).is_zero());
  }
}

TEST_CASE("relation_set: count matches a brute-force enumeration oracle") {
  for (int n : {2, 3}) {
    // oracle: enumerate every instance, canonicalize, count distinct
    std::set<std::string> distinct;
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        for (int k = 1; k <= n; ++k) {
          auto p = rel1(i, j, k).normalized_sign();
          if (!p.is_zero()) distinct.insert(p.str());
        }
      }
    }
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        for (int k = 1; k <= n; ++k) {
          for (int l = 1; l <= n; ++l) {
            auto p = rel2(i, j, k, l).normalized_sign();
            if (!p.is_zero()) distinct.insert(p.str());
          }
        }
      }
    }
    auto set = relation_set(n);
    CHECK(set.size() == distinct.size());

    // idempotence of the dedup pass
    std::set<std::string> again;
    for (const auto& p : set) again.insert(p.normalized_sign().str());
    CHECK(again.size() == set.size());
  }
  CHECK_THROWS_AS(relation_set(1), std::invalid_argument);
}

TEST_CASE("antipode: reversal + transposition, involutive, anti-multiplicative") {
  auto p = NCPoly::gen(1, 2) * NCPoly::gen(3, 4);
  auto k = antipode(p);
  CHECK(k == NCPoly::gen(4, 3) * NCPoly::gen(2, 1));

  CHECK(antipode(NCPoly::one()) == NCPoly::one());

  Rng rng(7);
  for (int rep = 0; rep < 30; ++rep) {
    auto a = random_poly(rng, 4), b = random_poly(rng, 4);
    CHECK(antipode(antipode(a)) == a);
    CHECK(antipode(a * b) == antipode(b) * antipode(a));
    CHECK(antipode(a + b) == antipode(a) + antipode(b));
  }
}

TEST_CASE("derive_commutativity: nontrivial instance and exhaustive checks") {
  auto rep = derive_commutativity(2);
  CHECK(rep.all_ok());
  CHECK(rep.tuples.size() == 16);

  // (1,2,1,2): r2 - r6 = 2[Q11, Q22]
  auto r2 = rel2(1, 2, 1, 2);
  auto r6 = antipode(rel2(1, 2, 1, 2));  // (k,l,i,j) = (1,2,1,2) here
  auto q11 = NCPoly::gen(1, 1), q22 = NCPoly::gen(2, 2);
  CHECK(r2 - r6 == (q11 * q22 - q22 * q11) * Rat(2));

  // tuples with i=j, k=l are the trivial [X,X] instances
  for (const auto& t : rep.tuples) {
    if (t.i == t.j && t.k == t.l) CHECK(t.trivial);
  }

  auto rep4 = derive_commutativity(4);
  CHECK(rep4.tuples.size() == 256);
  CHECK(rep4.all_ok());
  CHECK(rep4.kappa_rows_ok);

  auto trace = render_cqg_trace(rep);
  CHECK(trace.find("rel(1,2,1,2): r2 - r6 = 2*[Q_11,Q_22]  OK") != std::string::npos);
  CHECK(trace.find("verdict: all tuples verified") != std::string::npos);
}

TEST_CASE("n up to 5 exhaustively, quickly") {
  for (int n = 2; n <= 5; ++n) {
    auto rep = derive_commutativity(n);
    CHECK(static_cast<int>(rep.tuples.size()) == n * n * n * n);
    CHECK(rep.all_ok());
  }
}
