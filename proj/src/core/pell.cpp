#include "pell.hpp"

#include <cstdlib>

namespace varembed {

namespace {

Polynomial pell_defect(const Polynomial& x, const Polynomial& y,
                       const PellContext& ctx) {
  Polynomial one = Polynomial::constant(x.context(), Rational(1));
  return x * x - ctx.lambda() * (y * y) - one;
}

}  // namespace

PellContext::PellContext(Polynomial t) : t_(std::move(t)) {
  Polynomial one = Polynomial::constant(t_.context(), Rational(1));
  lambda_ = t_ * t_ - one;
}

PellPair::PellPair(Polynomial x, Polynomial y, const PellContext& ctx)
    : x_(std::move(x)), y_(std::move(y)) {
  if (!pell_defect(x_, y_, ctx).is_zero())
    throw Error(Errc::InvalidPellPair, "pair does not satisfy X^2 - (T^2-1)Y^2 = 1");
}

PellPair PellPair::trusted(Polynomial x, Polynomial y) {
  PellPair p;
  p.x_ = std::move(x);
  p.y_ = std::move(y);
  return p;
}

PellPair compose(const PellPair& a, const PellPair& b, const PellContext& ctx) {
  return PellPair::trusted(a.x() * b.x() + ctx.lambda() * (a.y() * b.y()),
                           a.x() * b.y() + b.x() * a.y());
}

PellPair solution(std::int64_t n, const PellContext& ctx) {
  const VarContextPtr& vctx = ctx.context();
  std::uint64_t m = std::uint64_t(n < 0 ? -n : n);

  // Closed form: X = sum C(m,2k) lambda^k T^(m-2k),
  //              Y = sum C(m,2k+1) lambda^k T^(m-1-2k).
  std::vector<Polynomial> tpow;
  tpow.reserve(m + 1);
  tpow.push_back(Polynomial::constant(vctx, Rational(1)));
  for (std::uint64_t j = 1; j <= m; ++j) tpow.push_back(tpow.back() * ctx.t());
  Polynomial x_closed = Polynomial::zero(vctx), y_closed = x_closed;
  Polynomial lampow = Polynomial::constant(vctx, Rational(1));
  Int binom;
  for (std::uint64_t k = 0; 2 * k <= m; ++k) {
    mpz_bin_uiui(binom.get_mpz_t(), m, 2 * k);
    x_closed = x_closed + tpow[m - 2 * k].scaled(Rational(binom)) * lampow;
    if (2 * k + 1 <= m) {
      mpz_bin_uiui(binom.get_mpz_t(), m, 2 * k + 1);
      y_closed = y_closed + tpow[m - 1 - 2 * k].scaled(Rational(binom)) * lampow;
    }
    lampow = lampow * ctx.lambda();
  }

  // Recurrence from the identity, composing with the fundamental solution.
  Polynomial x_rec = Polynomial::constant(vctx, Rational(1));
  Polynomial y_rec = Polynomial::zero(vctx);
  for (std::uint64_t j = 0; j < m; ++j) {
    Polynomial x_next = ctx.t() * x_rec + ctx.lambda() * y_rec;
    y_rec = x_rec + ctx.t() * y_rec;
    x_rec = std::move(x_next);
  }

  if (x_closed != x_rec || y_closed != y_rec)
    throw Error(Errc::Internal, "pell closed form and recurrence disagree");
  if (n < 0) y_closed = -y_closed;
  return PellPair::trusted(std::move(x_closed), std::move(y_closed));
}

Rational residue_mod_t_minus_1(const PellPair& p, const PellContext& ctx) {
  if (ctx.t().is_constant())
    throw Error(Errc::NotPellCanonical, "residue extraction requires nonconstant T");
  Polynomial tm1 = ctx.t() - Polynomial::constant(ctx.context(), Rational(1));
  Polynomial rem = divide(p.y(), tm1).remainder;
  if (!rem.is_constant())
    throw Error(Errc::NotPellCanonical, "Y mod (T - 1) is not constant");
  return rem.constant_value();
}

Polynomial z_component(const PellPair& p, std::int64_t n, const PellContext& ctx) {
  if (ctx.t().is_constant())
    throw Error(Errc::NotPellCanonical, "Z component requires nonconstant T");
  Polynomial one = Polynomial::constant(ctx.context(), Rational(1));
  Polynomial nn = Polynomial::constant(ctx.context(), Rational(Int(n)));
  return exact_div(p.y() - nn, ctx.t() - one);
}

}  // namespace varembed
