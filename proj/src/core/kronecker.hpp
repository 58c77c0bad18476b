#pragma once

#include <cstddef>
#include <optional>

#include "polynomial.hpp"

namespace varembed {

// Multiplies by packing both operands into single GMP integers (Kronecker
// substitution with limb-aligned slots sized from rigorous coefficient
// bounds) and performing one big-integer multiplication.  Exact for all
// rational coefficients; returns nullopt when the shape is unsuitable (too
// many active variables, or the packed buffers would exceed mem_limit).
std::optional<Polynomial> kronecker_mul(const Polynomial& a, const Polynomial& b,
                                        std::size_t mem_limit_bytes);

}  // namespace varembed
