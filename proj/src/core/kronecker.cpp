#include "kronecker.hpp"

#include <gmp.h>

#include <algorithm>
#include <cstring>
#include <vector>

namespace varembed {

namespace {

constexpr std::size_t kMaxActiveVars = 8;
constexpr std::size_t kMaxSlots = std::size_t(1) << 28;

struct Grid {
  std::vector<std::uint32_t> vars;   // active context variable indices
  std::vector<std::size_t> dims;     // per-variable slot counts (da + db + 1)
  std::vector<std::size_t> strides;  // mixed-radix strides, vars[0] fastest
  std::size_t slots = 1;
};

// Per-variable degree bounds over both operands; the product of (da+db+1)
// defines the dense evaluation grid the coefficients are packed on.
std::optional<Grid> make_grid(const Polynomial& a, const Polynomial& b) {
  std::size_t n = a.context()->size();
  std::vector<std::int64_t> da(n, 0), db(n, 0);
  for (const auto& t : a.terms())
    for (const auto& f : t.mono.factors())
      da[f.var] = std::max<std::int64_t>(da[f.var], f.exp);
  for (const auto& t : b.terms())
    for (const auto& f : t.mono.factors())
      db[f.var] = std::max<std::int64_t>(db[f.var], f.exp);
  Grid g;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (da[v] == 0 && db[v] == 0) continue;
    if (g.vars.size() == kMaxActiveVars) return std::nullopt;
    std::size_t dim = std::size_t(da[v]) + std::size_t(db[v]) + 1;
    if (g.slots > kMaxSlots / dim) return std::nullopt;
    g.vars.push_back(v);
    g.dims.push_back(dim);
    g.strides.push_back(g.slots);
    g.slots *= dim;
  }
  return g;
}

std::size_t packed_index(const Monomial& m, const Grid& g) {
  std::size_t idx = 0;
  for (const auto& f : m.factors()) {
    std::size_t k = 0;
    while (g.vars[k] != f.var) ++k;
    idx += std::size_t(f.exp) * g.strides[k];
  }
  return idx;
}

struct ScaledInts {
  std::vector<mpz_class> coeffs;  // scaled to integers, aligned with terms()
  mpz_class denom;                // lcm of coefficient denominators
  mpz_class l1, linf;             // norms of the scaled coefficients
  std::size_t max_index = 0;      // largest packed slot index used
};

ScaledInts scale_to_integers(const Polynomial& p, const Grid& g) {
  ScaledInts s;
  s.denom = 1;
  for (const auto& t : p.terms())
    mpz_lcm(s.denom.get_mpz_t(), s.denom.get_mpz_t(),
            mpq_denref(t.coeff.get_mpq_t()));
  s.coeffs.reserve(p.term_count());
  mpz_class scale, abs;
  for (const auto& t : p.terms()) {
    mpz_divexact(scale.get_mpz_t(), s.denom.get_mpz_t(),
                 mpq_denref(t.coeff.get_mpq_t()));
    s.coeffs.emplace_back();
    mpz_mul(s.coeffs.back().get_mpz_t(), mpq_numref(t.coeff.get_mpq_t()),
            scale.get_mpz_t());
    mpz_abs(abs.get_mpz_t(), s.coeffs.back().get_mpz_t());
    s.l1 += abs;
    if (abs > s.linf) s.linf = abs;
    s.max_index = std::max(s.max_index, packed_index(t.mono, g));
  }
  return s;
}

// Writes |coeff| limbs of each term into a positive or negative limb buffer
// at slot_index * L, then forms the signed packed integer P - N.  Each slot is
// written at most once, so no carries can occur here.
mpz_class pack(const Polynomial& p, const ScaledInts& s, const Grid& g,
               std::size_t L) {
  std::size_t limbs = (s.max_index + 1) * L;
  std::vector<mp_limb_t> pos(limbs, 0), neg(limbs, 0);
  bool any_neg = false;
  for (std::size_t i = 0; i < p.terms().size(); ++i) {
    const mpz_class& c = s.coeffs[i];
    if (c == 0) continue;
    std::size_t off = packed_index(p.terms()[i].mono, g) * L;
    mp_limb_t* dst = (mpz_sgn(c.get_mpz_t()) > 0) ? &pos[off] : &neg[off];
    if (mpz_sgn(c.get_mpz_t()) < 0) any_neg = true;
    std::size_t count = 0;
    mpz_export(dst, &count, -1, sizeof(mp_limb_t), 0, 0, c.get_mpz_t());
  }
  auto trimmed = [](const std::vector<mp_limb_t>& v) {
    std::size_t n = v.size();
    while (n > 0 && v[n - 1] == 0) --n;
    return n;
  };
  mpz_class out;
  std::size_t np = trimmed(pos);
  mpz_t vp;
  if (np) {
    mpz_roinit_n(vp, pos.data(), np);
    mpz_set(out.get_mpz_t(), vp);
  }
  if (any_neg) {
    std::size_t nn = trimmed(neg);
    if (nn) {
      mpz_t vn;
      mpz_roinit_n(vn, neg.data(), nn);
      mpz_sub(out.get_mpz_t(), out.get_mpz_t(), vn);
    }
  }
  return out;
}

// Decodes the product integer as balanced base-2^(64L) digits; with every
// true coefficient strictly below half a slot in magnitude the balanced
// representation is unique, so this recovers exactly the signed convolution.
std::vector<Polynomial::Term> unpack(const mpz_class& c, const Grid& g,
                                     std::size_t L, const mpz_class& denom) {
  std::vector<Polynomial::Term> terms;
  if (c == 0) return terms;
  const bool negative = mpz_sgn(c.get_mpz_t()) < 0;
  const mp_limb_t* limbs = mpz_limbs_read(c.get_mpz_t());
  const std::size_t n = mpz_size(c.get_mpz_t());

  std::vector<mp_limb_t> digit(L);
  std::vector<std::uint32_t> exps(g.vars.size());
  mpz_class mag;
  mp_limb_t carry = 0;
  for (std::size_t slot = 0; slot < g.slots; ++slot) {
    std::size_t off = slot * L;
    if (off >= n && carry == 0) break;
    for (std::size_t k = 0; k < L; ++k)
      digit[k] = (off + k < n) ? limbs[off + k] : 0;
    mp_limb_t overflow = carry ? mpn_add_1(digit.data(), digit.data(), L, 1) : 0;
    bool digit_negative = false;
    if (overflow) {
      // Slot value was exactly 2^(64L); digit 0, carry into the next slot.
      carry = 1;
      continue;
    } else if (digit[L - 1] >> (GMP_NUMB_BITS - 1)) {
      // Top bit set: balanced digit is value - 2^(64L); negate mod 2^(64L).
      mpn_com(digit.data(), digit.data(), L);
      mpn_add_1(digit.data(), digit.data(), L, 1);
      digit_negative = true;
      carry = 1;
    } else {
      digit_negative = false;
      carry = 0;
    }
    std::size_t nd = L;
    while (nd > 0 && digit[nd - 1] == 0) --nd;
    if (nd == 0) continue;
    mpz_import(mag.get_mpz_t(), nd, -1, sizeof(mp_limb_t), 0, 0, digit.data());
    if (digit_negative != negative) mpz_neg(mag.get_mpz_t(), mag.get_mpz_t());

    std::size_t rem = slot;
    Monomial::Factors factors;
    for (std::size_t k = 0; k < g.vars.size(); ++k) {
      std::uint32_t e = std::uint32_t(rem % g.dims[k]);
      rem /= g.dims[k];
      if (e) factors.push_back({g.vars[k], e});
    }
    Rational coeff;
    if (denom == 1) {
      coeff = Rational(mag);
    } else {
      coeff = Rational(mag, denom);
      coeff.canonicalize();
    }
    terms.push_back({Monomial::from_sorted(std::move(factors)), std::move(coeff)});
  }
  if (carry != 0)
    throw Error(Errc::Internal, "kronecker unpack ended with a pending carry");
  return terms;
}

bool term_before(const Polynomial::Term& x, const Polynomial::Term& y) {
  return Monomial::compare(x.mono, y.mono) > 0;
}

}  // namespace

std::optional<Polynomial> kronecker_mul(const Polynomial& a, const Polynomial& b,
                                        std::size_t mem_limit_bytes) {
  if (a.is_constant()) return b.scaled(a.constant_value());
  if (b.is_constant()) return a.scaled(b.constant_value());
  auto grid = make_grid(a, b);
  if (!grid) return std::nullopt;

  ScaledInts sa = scale_to_integers(a, *grid);
  ScaledInts sb = scale_to_integers(b, *grid);

  // Rigorous bound on any product coefficient magnitude; two guard bits keep
  // every balanced digit strictly inside half a slot.
  mpz_class bound1 = sa.l1 * sb.linf, bound2 = sa.linf * sb.l1;
  const mpz_class& bound = bound1 < bound2 ? bound1 : bound2;
  std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2) + 2;
  std::size_t L = (bits + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;

  // Transient footprint: packed operands sized by their own top slot, the
  // product spanning the full grid, plus multiplier workspace of the same
  // order as the product.
  std::size_t slot_bytes = L * sizeof(mp_limb_t);
  std::size_t need_slots = 3 * grid->slots + sa.max_index + sb.max_index + 2;
  if (need_slots > mem_limit_bytes / slot_bytes) return std::nullopt;

  mpz_class pa = pack(a, sa, *grid, L);
  sa.coeffs.clear();
  sa.coeffs.shrink_to_fit();
  mpz_class pb = pack(b, sb, *grid, L);
  sb.coeffs.clear();
  sb.coeffs.shrink_to_fit();

  mpz_class prod = pa * pb;
  pa = 0;
  pb = 0;

  mpz_class denom = sa.denom * sb.denom;
  std::vector<Polynomial::Term> terms = unpack(prod, *grid, L, denom);
  prod = 0;
  std::sort(terms.begin(), terms.end(), term_before);
  return Polynomial::from_sorted_terms(a.context(), std::move(terms));
}

}  // namespace varembed
