#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "divfam.hpp"
#include "polynomial.hpp"

namespace varembed {

// Polynomial curve (real: one parameter t; complex: t1..ts) through the
// variety, carrying an integer solution of the Diophantine polynomial.
struct EmbeddingWitness {
  std::size_t domain_dim = 0;
  VarContextPtr domain;
  std::vector<std::vector<Int>> integers;  // solution tuple(s), row-major
  // Coordinate name -> assigned polynomial, in variety coordinate order.
  std::vector<std::pair<std::string, Polynomial>> assignment;
};

// Real-case witness from a nonzero integer solution N of Q: S = t,
// T = t^2 + 2, and per component the Pell solution data at index N_i.
// Q(N) != 0 raises NotASolution; any N_i = 0 raises ZeroComponent.
EmbeddingWitness real_witness(const Polynomial& q, const std::vector<Int>& n);

// Complex-case witness from d = s-2 rows of nonzero integer solutions (each
// row length e = s): xi_k = t_k, W_k = H_k(t), T_1 = Phat(t), the chain
// products for T_{j+1}, and per-cell Pell data at index N_ij over T_j.
EmbeddingWitness complex_witness(const Polynomial& q,
                                 const std::vector<std::vector<Int>>& rows,
                                 const DivFamOptions& options = {});

}  // namespace varembed
