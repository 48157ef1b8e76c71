#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lieqr/rootsystem.hpp"

using namespace lieqr;

TEST_CASE("close_roots: small systems by hand") {
  auto a1 = close_roots(cartan_matrix(Series::A, 1));
  CHECK(a1.num_positive() == 1);

  auto a2 = close_roots(cartan_matrix(Series::A, 2));
  REQUIRE(a2.num_positive() == 3);
  CHECK(a2.positive(0).coeffs == std::vector<int>{1, 0});
  CHECK(a2.positive(1).coeffs == std::vector<int>{0, 1});
  CHECK(a2.positive(2).coeffs == std::vector<int>{1, 1});

  auto d4 = close_roots(cartan_matrix(Series::D, 4));
  CHECK(d4.num_positive() == 12);
  CHECK(d4.algebra_dim() == 28);
  CHECK(d4.algebra_dim() == 8 * 7 / 2);  // so(8) by the independent count
}

TEST_CASE("dimensions match the closed forms") {
  for (int n = 1; n <= 6; ++n) {
    auto rs = close_roots(cartan_matrix(Series::A, n));
    CHECK(rs.algebra_dim() == n * (n + 2));
  }
  for (int n = 4; n <= 6; ++n) {
    auto rs = close_roots(cartan_matrix(Series::D, n));
    CHECK(rs.algebra_dim() == n * (2 * n - 1));
  }
  CHECK(close_roots(cartan_matrix(Series::E, 6)).algebra_dim() == 78);
  CHECK(close_roots(cartan_matrix(Series::E, 7)).algebra_dim() == 133);
  CHECK(close_roots(cartan_matrix(Series::E, 8)).algebra_dim() == 248);
}

TEST_CASE("root order and height descent") {
  for (auto series_rank : std::vector<std::pair<Series, int>>{
           {Series::A, 3}, {Series::D, 4}, {Series::D, 5}, {Series::E, 6}}) {
    auto rs = close_roots(cartan_matrix(series_rank.first, series_rank.second));
    int n = rs.rank();
    // simple roots come first, in vertex order
    for (int v = 1; v <= n; ++v) CHECK(rs.simple_index(v) == v - 1);
    for (int k = 1; k < rs.num_positive(); ++k) {
      CHECK(rs.positive(k - 1).height <= rs.positive(k).height);
    }
    // every root of height >= 2 is simple + (height-1) root
    for (int k = 0; k < rs.num_positive(); ++k) {
      const auto& r = rs.positive(k);
      if (r.height == 1) continue;
      auto par = rs.parent(k);
      CHECK(rs.positive(par.rest_idx).height == r.height - 1);
      auto sum = rs.positive(par.rest_idx).coeffs;
      sum[par.simple_vertex - 1] += 1;
      CHECK(sum == r.coeffs);
    }
    // pairings stay in the simply-laced window
    for (int k = 0; k < rs.num_positive(); ++k) {
      for (int v = 1; v <= n; ++v) {
        CHECK(rs.pairing(k, v) >= -2);
        CHECK(rs.pairing(k, v) <= 2);
      }
    }
  }
}

TEST_CASE("extraspecial signs: A2 base case and antisymmetry") {
  auto rs = close_roots(cartan_matrix(Series::A, 2));
  auto signs = extraspecial_signs(rs);
  CHECK(signs.sign(0, 1) == 1);   // eps(alpha1, alpha2) = +1: extraspecial
  CHECK(signs.sign(1, 0) == -1);  // antisymmetry

  for (auto series_rank : std::vector<std::pair<Series, int>>{
           {Series::A, 4}, {Series::D, 4}, {Series::E, 6}}) {
    auto r = close_roots(cartan_matrix(series_rank.first, series_rank.second));
    auto s = extraspecial_signs(r);
    for (int a = 0; a < r.num_positive(); ++a) {
      for (int b = 0; b < r.num_positive(); ++b) {
        if (!s.has(a, b)) continue;
        CHECK(s.sign(a, b) == -s.sign(b, a));
        CHECK((s.sign(a, b) == 1 || s.sign(a, b) == -1));
        // stored pairs really sum to roots
        auto sum = r.positive(a).coeffs;
        for (size_t k = 0; k < sum.size(); ++k) sum[k] += r.positive(b).coeffs[k];
        CHECK(r.is_positive_root(sum));
      }
    }
  }
}

TEST_CASE("sign table covers exactly the summable pairs") {
  auto rs = close_roots(cartan_matrix(Series::A, 3));
  auto signs = extraspecial_signs(rs);
  for (int a = 0; a < rs.num_positive(); ++a) {
    for (int b = 0; b < rs.num_positive(); ++b) {
      auto sum = rs.positive(a).coeffs;
      for (size_t k = 0; k < sum.size(); ++k) sum[k] += rs.positive(b).coeffs[k];
      CHECK(signs.has(a, b) == rs.is_positive_root(sum));
    }
  }
}
