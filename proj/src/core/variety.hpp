#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "divfam.hpp"
#include "polynomial.hpp"

namespace varembed {

enum class VarietyCase { Real, Complex };

struct Coordinate {
  std::string name;
  std::string role;  // "X","Y","Z","U","V","T","S","W","xi"
};

// Affine variety presentation produced from a Diophantine polynomial Q in s
// variables: coordinates, and equations over the coordinate ring whose
// solution set carries the embedded solution structure.
struct VarietyPresentation {
  VarietyCase kase = VarietyCase::Real;
  std::size_t d = 0, e = 0, n = 0;  // real: d = s, e = n = 0
  VarContextPtr coord_ctx;
  std::vector<Coordinate> coordinates;
  std::vector<Polynomial> equations;
};

struct VarietyCounts {
  std::size_t coordinates = 0, equations = 0;
};
// Real case: 5d + 2 coordinates, 3d + 2 equations.
VarietyCounts real_counts(std::size_t d);
// Complex case: 5de + e + 2n coordinates, 3de + (e-1) + 1 + n + d equations.
VarietyCounts complex_counts(std::size_t d, std::size_t e, std::size_t n);

// Real case (d = s).  Coordinates X_i,Y_i,Z_i,U_i,V_i per 1<=i<=d plus T, S;
// equations per i: X_i^2-(T^2-1)Y_i^2-1, Y_i-(T-1)Z_i-V_i, V_i*U_i-1;
// then T-S^2-2 and Q(V_1..V_d).
VarietyPresentation build_real_variety(const Polynomial& q);

// Complex case (d = s-2, e = s, n = e); s < 3 raises DimensionTooSmall.
// Clone coordinates X_i_j,..,V_i_j per cell, column parameters T_j, family
// values W_k, family arguments xi_k.  Equations: 3de clone equations with T_j
// per column, the e-1 chain equations
// T_{j+1} - prod_{k<=j}((T_k^2-1) W_k) * W_{j+1}, then T_1 - Phat(xi),
// W_k - H_k(xi), and the d rows Q(V_i1..V_ie).
VarietyPresentation build_complex_variety(const Polynomial& q,
                                          const DivFamOptions& options = {});

}  // namespace varembed
