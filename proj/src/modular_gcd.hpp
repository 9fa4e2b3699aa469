#pragma once

#include <optional>

#include "qsum/poly.hpp"

namespace qsum::detail {

/// Monic gcd of two nonzero polynomials in at most x and y that both involve
/// their highest variable, computed from images modulo word-size primes and
/// checked by trial division. nullopt when the inputs are outside that shape.
std::optional<Poly> modular_gcd(const Poly& a, const Poly& b);

}  // namespace qsum::detail
