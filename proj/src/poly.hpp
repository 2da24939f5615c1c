#pragma once

// Univariate polynomials over F_p, coefficients stored low degree first.
// Only what idempotent splitting needs.

#include <optional>
#include <random>
#include <vector>

#include "tiltglue/linalg.hpp"

namespace tiltglue::poly {

using Poly = std::vector<Scalar>;

void trim(Poly& f);
long degree(const Poly& f);
Poly monic(const Poly& f, const PrimeField& F);
Poly add(const Poly& a, const Poly& b, const PrimeField& F);
Poly sub(const Poly& a, const Poly& b, const PrimeField& F);
Poly mul(const Poly& a, const Poly& b, const PrimeField& F);
/// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, const PrimeField& F);
Poly mod(const Poly& a, const Poly& b, const PrimeField& F);
Poly gcd(Poly a, Poly b, const PrimeField& F);
/// Returns (g, u, v) with u a + v b = g = gcd(a, b), g monic.
struct ExtGcd {
  Poly g, u, v;
};
ExtGcd ext_gcd(const Poly& a, const Poly& b, const PrimeField& F);
Poly powmod(const Poly& base, std::uint64_t e, const Poly& m, const PrimeField& F);
Poly derivative(const Poly& f, const PrimeField& F);

/// For a monic f, finds e(x) with e^2 = e mod f and e not 0 or 1 mod f,
/// i.e. a coprime factorisation f = g h with both factors nonconstant.
/// Returns nullopt when f is a power of one irreducible polynomial.
std::optional<Poly> splitting_idempotent(const Poly& f, const PrimeField& F, std::mt19937_64& rng);

}  // namespace tiltglue::poly
