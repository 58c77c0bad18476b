#pragma once

#include <cstdint>

#include "polynomial.hpp"

namespace varembed {

// Pell equation X^2 - (T^2 - 1) Y^2 = 1 over a polynomial ring, with T a
// fixed polynomial parameter.
class PellContext {
public:
  explicit PellContext(Polynomial t);
  const Polynomial& t() const { return t_; }
  const Polynomial& lambda() const { return lambda_; }  // T^2 - 1
  const VarContextPtr& context() const { return t_.context(); }

private:
  Polynomial t_, lambda_;
};

// A solution pair (X, Y); the defining identity is checked at construction.
class PellPair {
public:
  PellPair(Polynomial x, Polynomial y, const PellContext& ctx);
  const Polynomial& x() const { return x_; }
  const Polynomial& y() const { return y_; }

  // Internal: for results that are solutions by construction.
  static PellPair trusted(Polynomial x, Polynomial y);

private:
  PellPair() = default;
  Polynomial x_, y_;
};

// Group law (X1, Y1) * (X2, Y2) = (X1 X2 + lambda Y1 Y2, X1 Y2 + X2 Y1);
// identity (1, 0), fundamental solution (T, 1).
PellPair compose(const PellPair& a, const PellPair& b, const PellContext& ctx);

// N-th power of the fundamental solution, N may be negative (Y flips sign).
// Computed independently by the binomial closed form and by the recurrence
// X' = T X + lambda Y, Y' = X + T Y; the two must agree.
PellPair solution(std::int64_t n, const PellContext& ctx);

// Remainder of Y modulo (T - 1); requires nonconstant T and a constant
// remainder, otherwise NotPellCanonical.  For solution(N) this is N.
Rational residue_mod_t_minus_1(const PellPair& p, const PellContext& ctx);

// The exact quotient (Y - N) / (T - 1); NotDivisible if the residue
// precondition fails.
Polynomial z_component(const PellPair& p, std::int64_t n, const PellContext& ctx);

}  // namespace varembed
