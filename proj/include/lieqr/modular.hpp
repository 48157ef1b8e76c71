#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "lieqr/rational.hpp"
#include "lieqr/rng.hpp"

namespace lieqr {

/// Thrown when a rational matrix cannot be reduced mod p because p divides
/// a denominator. Callers retry with a fresh prime.
struct BadPrimeError : std::runtime_error {
  explicit BadPrimeError(uint64_t p)
      : std::runtime_error("prime divides a denominator: " + std::to_string(p)), prime(p) {}
  uint64_t prime;
};

inline uint64_t addmod(uint64_t a, uint64_t b, uint64_t p) {
  uint64_t s = a + b;  // p < 2^62, no overflow
  return s >= p ? s - p : s;
}

inline uint64_t submod(uint64_t a, uint64_t b, uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t p);

/// Inverse of a mod prime p; a must be nonzero mod p.
uint64_t invmod(uint64_t a, uint64_t p);

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(uint64_t n);

/// Random prime in [2^60, 2^62] drawn from the seeded generator.
uint64_t random_prime(Rng& rng);

/// Reduce a rational mod p. Throws BadPrimeError when p divides the
/// denominator.
uint64_t reduce_mod(const Rat& q, uint64_t p);

/// Lift a residue to a small rational (|num|, den <= sqrt(p/2)) by the
/// extended-Euclid lattice method. Empty when no such fraction exists.
std::optional<Rat> rational_reconstruct(uint64_t a, uint64_t p);

}  // namespace lieqr
