#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lieqr/kernels.hpp"
#include "lieqr/modular.hpp"
#include "lieqr/rng.hpp"

using namespace lieqr;

namespace {

std::vector<uint64_t> random_residues(Rng& rng, size_t n, uint64_t p) {
  std::vector<uint64_t> v(n);
  for (auto& x : v) x = rng.below(p);
  return v;
}

}  // namespace

TEST_CASE("every kernel variant matches the __int128 reference bit for bit") {
  auto variants = kernels::available();
  REQUIRE(!variants.empty());
  CHECK(std::string(variants[0]->name) == "scalar");

  Rng rng(1234);
  for (int rep = 0; rep < 20; ++rep) {
    uint64_t p = random_prime(rng);
    size_t n = 1 + rng.below(130);  // crosses the vector-width boundary
    auto src = random_residues(rng, n, p);
    auto dst0 = random_residues(rng, n, p);
    uint64_t g = rng.below(p);

    std::vector<uint64_t> want = dst0;
    for (size_t i = 0; i < n; ++i) {
      want[i] = addmod(want[i], mulmod(g, src[i], p), p);
    }
    std::vector<uint64_t> want_scaled = dst0;
    for (size_t i = 0; i < n; ++i) want_scaled[i] = mulmod(g, want_scaled[i], p);

    for (const auto* v : variants) {
      auto d = dst0;
      v->addmul(d.data(), src.data(), n, g, p);
      CHECK(d == want);
      auto s = dst0;
      v->scale(s.data(), n, g, p);
      CHECK(s == want_scaled);
    }
  }
}

TEST_CASE("kernel edge values") {
  auto variants = kernels::available();
  Rng rng(77);
  uint64_t p = random_prime(rng);
  std::vector<uint64_t> src{0, 1, p - 1, p / 2, p - 2, 2, 3, 4, 5};
  for (uint64_t g : {uint64_t(0), uint64_t(1), p - 1, p / 2}) {
    std::vector<uint64_t> want(src.size());
    for (size_t i = 0; i < src.size(); ++i) want[i] = mulmod(g, src[i], p);
    for (const auto* v : variants) {
      std::vector<uint64_t> d(src.size(), 0);
      v->addmul(d.data(), src.data(), src.size(), g, p);
      CHECK(d == want);
    }
  }
}

TEST_CASE("active kernel is one of the available ones") {
  const auto& act = kernels::active();
  bool found = false;
  for (const auto* v : kernels::available()) {
    if (v->name == std::string(act.name)) found = true;
  }
  CHECK(found);
}
