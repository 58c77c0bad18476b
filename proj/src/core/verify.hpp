#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "variety.hpp"
#include "witness.hpp"

namespace varembed {

struct EquationCheck {
  bool vanishes = false;
  // How the exact verdict was reached: "direct" (full symbolic
  // substitution), "anchored" (univariate decomposition certificate), or
  // "point" (nonvanishing at an exact rational point).
  std::string method;
  // Formatted residual for small direct failures; absent otherwise.
  std::optional<std::string> residual;
};

struct JacobianCheck {
  std::size_t rank = 0;       // maximum rank observed
  std::size_t required = 0;   // domain dimension
  std::size_t attempts = 0;   // sample points tried (up to 3)
  std::vector<std::vector<std::string>> points;
};

struct VerificationReport {
  bool pass = false;
  std::size_t domain_dim = 0;
  std::uint64_t seed = 0;
  std::vector<EquationCheck> equations;
  bool nonconstant = false;
  bool injective_by_projection = false;
  JacobianCheck jacobian;
};

// Cost model knobs for the staged strategies.  The defaults are the
// supported configuration; tests shrink them to steer small inputs onto the
// indirect paths.  Every path is exact, so the limits never change a
// verdict, only how it is reached.
struct VerifyLimits {
  double direct_term_bytes = 600.0 * (1 << 20);
  double direct_total_bytes = 1800.0 * (1 << 20);
  double anchor_pow_bytes = 1500.0 * (1 << 20);
  std::uint32_t max_anchor_pow = 64;
  std::size_t max_points = 3;
};

// Symbolic verification that the witness curve lies on the variety: every
// equation is checked for identical vanishing by exact methods only, at
// least one coordinate must be nonconstant, and the Jacobian of the
// assignment must reach full rank (= domain dimension) at a sampled rational
// point, with up to three deterministic retries.  The witness must assign
// every coordinate (IncompleteWitness otherwise).
VerificationReport verify_witness(const VarietyPresentation& v,
                                  const EmbeddingWitness& w,
                                  std::uint64_t seed = 0);
VerificationReport verify_witness(const VarietyPresentation& v,
                                  const EmbeddingWitness& w, std::uint64_t seed,
                                  const VerifyLimits& limits);

}  // namespace varembed
