#include "monomial.hpp"

#include <stdexcept>

namespace varembed {

Monomial Monomial::variable(std::uint32_t var, std::uint32_t exp) {
  Monomial m;
  if (exp > 0) m.factors_.push_back({var, exp});
  return m;
}

Monomial Monomial::from_sorted(Factors f) {
  Monomial m;
  m.factors_ = std::move(f);
  return m;
}

std::int64_t Monomial::total_degree() const {
  std::int64_t d = 0;
  for (const Factor& f : factors_) d += f.exp;
  return d;
}

std::uint32_t Monomial::exponent_of(std::uint32_t var) const {
  for (const Factor& f : factors_) {
    if (f.var == var) return f.exp;
    if (f.var > var) break;
  }
  return 0;
}

Monomial Monomial::times(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin(), ae = factors_.end();
  auto b = other.factors_.begin(), be = other.factors_.end();
  while (a != ae && b != be) {
    if (a->var < b->var) out.factors_.push_back(*a++);
    else if (b->var < a->var) out.factors_.push_back(*b++);
    else {
      std::uint64_t e = std::uint64_t(a->exp) + b->exp;
      if (e > UINT32_MAX) throw std::overflow_error("monomial exponent overflow");
      out.factors_.push_back({a->var, std::uint32_t(e)});
      ++a; ++b;
    }
  }
  out.factors_.insert(out.factors_.end(), a, ae);
  out.factors_.insert(out.factors_.end(), b, be);
  return out;
}

std::optional<Monomial> Monomial::divided_by(const Monomial& other) const {
  Monomial out;
  auto a = factors_.begin(), ae = factors_.end();
  auto b = other.factors_.begin(), be = other.factors_.end();
  while (b != be) {
    while (a != ae && a->var < b->var) out.factors_.push_back(*a++);
    if (a == ae || a->var > b->var || a->exp < b->exp) return std::nullopt;
    if (a->exp > b->exp) out.factors_.push_back({a->var, a->exp - b->exp});
    ++a; ++b;
  }
  out.factors_.insert(out.factors_.end(), a, ae);
  return out;
}

Monomial Monomial::pow(std::uint32_t e) const {
  Monomial out;
  if (e == 0) return out;
  out.factors_.reserve(factors_.size());
  for (const Factor& f : factors_) {
    std::uint64_t x = std::uint64_t(f.exp) * e;
    if (x > UINT32_MAX) throw std::overflow_error("monomial exponent overflow");
    out.factors_.push_back({f.var, std::uint32_t(x)});
  }
  return out;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
  std::int64_t da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  // Same degree: lexicographic with earlier variables more significant.  The
  // first index where exponents differ decides; more of an earlier variable
  // means lexicographically larger.
  auto i = a.factors_.begin(), ie = a.factors_.end();
  auto j = b.factors_.begin(), je = b.factors_.end();
  while (i != ie && j != je) {
    if (i->var != j->var) return i->var < j->var ? 1 : -1;
    if (i->exp != j->exp) return i->exp > j->exp ? 1 : -1;
    ++i; ++j;
  }
  if (i != ie) return 1;
  if (j != je) return -1;
  return 0;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (const Factor& f : factors_) {
    std::size_t k = (std::size_t(f.var) << 32) | f.exp;
    k *= 0xff51afd7ed558ccdull;
    k ^= k >> 33;
    h = (h ^ k) * 0xc4ceb9fe1a85ec53ull;
  }
  return h;
}

}  // namespace varembed
