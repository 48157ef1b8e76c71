#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "lieqr/rational.hpp"

namespace lieqr {

/// Variable context for sparse multivariate polynomials. Laurent variables
/// (used for torus parameters) may carry negative exponents; all others
/// must stay non-negative.
class PolyRing {
public:
  static constexpr int kMaxVars = 12;

  PolyRing() = default;

  /// Returns the index of the variable, registering it if new.
  int add_var(const std::string& name, bool laurent = false);

  int index_of(const std::string& name) const;  // throws on unknown variable
  int nvars() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  bool is_laurent(int i) const { return laurent_.at(i); }

private:
  std::vector<std::string> names_;
  std::vector<bool> laurent_;
};

using RingPtr = std::shared_ptr<const PolyRing>;
using Mono = std::vector<int>;  // exponent vector, length = ring->nvars()

/// Graded order: total degree, then lexicographic on exponents.
struct MonoLess {
  bool operator()(const Mono& a, const Mono& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Invariant: no stored zero coefficients.
class MultiPoly {
public:
  MultiPoly() = default;
  explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}

  static MultiPoly constant(RingPtr ring, const Rat& c);
  static MultiPoly variable(RingPtr ring, int var, int exp = 1);

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  /// Coefficient of the given monomial; zero if absent.
  Rat coefficient(const Mono& m) const;

  void add_term(const Mono& m, const Rat& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Rat& c) const;
  MultiPoly operator-() const;
  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

  const std::map<Mono, Rat, MonoLess>& terms() const { return terms_; }

  std::string str() const;
  static std::string mono_str(const PolyRing& ring, const Mono& m);

private:
  void check_ring(const MultiPoly& o) const;
  void check_exponents(const Mono& m) const;

  RingPtr ring_;
  std::map<Mono, Rat, MonoLess> terms_;
};

}  // namespace lieqr
