#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polynomial.hpp"

namespace varembed {

// Family of multivariate polynomials H_1..H_m over x1..xm together with P_m,
// certified by construction so that H_k divides P_m - C_k for every k, each
// H_k uses only x1..xk, and deg H_k >= 1 for k >= 1.
struct DivFamily {
  std::vector<Rational> constants;  // C_1..C_m, pairwise distinct
  std::vector<Polynomial> h;        // H_1..H_m, all over the full context
  Polynomial p;                     // P_m
  VarContextPtr ctx;                // x1..xm
  std::vector<std::size_t> p_term_counts;  // |P_1|, ..., |P_m| (growth telemetry)
};

struct DivFamOptions {
  // The inductive step squares degrees, so sizes grow doubly exponentially;
  // beyond three variables a build does not finish at desk scale.  The cap is
  // advisory and can be lifted.
  bool allow_large = false;
};

inline constexpr std::size_t kDivFamDefaultCap = 3;

// The decomposition R with P(x + u*Q) = P + Q * R, where every variable of P
// is shifted by u*Q and u is a fresh variable appended to P's context.
// Divisibility holds identically; a failed division here is an internal error.
Polynomial shift_decompose(const Polynomial& p, const Polynomial& q,
                           const std::string& u_name);

// Inductive construction: H_1 = x1, P_1 = x1 + C_1; at step m the modulus
// Q_m = prod_{k=1}^{m+1} (P_m - C_k) shifts every variable, and
// H_{m+1} = 1 + R_m * (Q_m / (P_m - C_{m+1})) with the shift variable renamed
// to x_{m+1}.  Duplicate constants raise DegenerateConstants; more than
// kDivFamDefaultCap constants raise SizeLimitExceeded unless allow_large.
DivFamily build_families(const std::vector<Rational>& constants,
                         const DivFamOptions& options = {});

// Specialization C_k = 3k (the W_k / P-hat family used by the complex case).
DivFamily build_w_phat(std::size_t n, const DivFamOptions& options = {});

}  // namespace varembed
