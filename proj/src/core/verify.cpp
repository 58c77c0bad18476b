#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "poly_parse.hpp"

namespace varembed {

namespace {

constexpr long kSampleBound = 997;  // components drawn from [-B, B]
constexpr std::size_t kResidualTermCap = 64;

std::uint64_t splitmix(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Uniform point with pairwise-distinct components.
std::vector<long> sample_point(std::uint64_t& state, std::size_t m) {
  std::vector<long> comps;
  comps.reserve(m);
  while (comps.size() < m) {
    long v = long(splitmix(state) % (2 * kSampleBound + 1)) - kSampleBound;
    if (std::find(comps.begin(), comps.end(), v) == comps.end())
      comps.push_back(v);
  }
  return comps;
}

struct PowerTables {
  std::vector<long> point;
  std::vector<std::vector<Int>> pow;  // per variable: [1, x, x^2, ...]

  explicit PowerTables(std::vector<long> pt) : point(std::move(pt)), pow(point.size()) {
    for (std::size_t i = 0; i < point.size(); ++i)
      pow[i].push_back(Int(1));
  }
  const Int& at(std::size_t var, std::uint32_t e) {
    auto& table = pow[var];
    while (table.size() <= e) table.push_back(table.back() * point[var]);
    return table[e];
  }
};

struct EvalOut {
  Rational value;
  std::vector<Rational> grad;
};

// Straightforward exact evaluation; fine for polynomials of modest size or
// with rational coefficients.
EvalOut eval_generic(const Polynomial& p, PowerTables& pt, bool want_grad) {
  const std::size_t m = pt.point.size();
  EvalOut out;
  out.value = 0;
  if (want_grad) out.grad.assign(m, Rational(0));
  Rational base, part;
  for (const auto& t : p.terms()) {
    base = t.coeff;
    for (const auto& f : t.mono.factors()) base *= Rational(pt.at(f.var, f.exp));
    out.value += base;
    if (!want_grad) continue;
    for (const auto& f : t.mono.factors()) {
      part = t.coeff * f.exp;
      for (const auto& g : t.mono.factors())
        part *= Rational(pt.at(g.var, g.var == f.var ? g.exp - 1 : g.exp));
      out.grad[f.var] += part;
    }
  }
  return out;
}

// Integer-coefficient path: terms are grouped by their exponents in all but
// the last variable and each group is evaluated by sparse Horner in the last
// variable (cheap small-by-big products), so million-term polynomials cost
// seconds instead of minutes.  Requires <= 5 variables and exponents < 2^16.
std::optional<EvalOut> eval_fast_int(const Polynomial& p, PowerTables& pt,
                                     bool want_grad) {
  const std::size_t m = pt.point.size();
  if (m == 0 || m > 5) return std::nullopt;
  const std::size_t last = m - 1;

  struct Entry {
    std::uint32_t e;
    mpz_srcptr num;
  };
  std::unordered_map<std::uint64_t, std::vector<Entry>> groups;
  std::vector<std::uint32_t> exps(m);
  for (const auto& t : p.terms()) {
    if (mpz_cmp_ui(mpq_denref(t.coeff.get_mpq_t()), 1) != 0) return std::nullopt;
    std::fill(exps.begin(), exps.end(), 0u);
    for (const auto& f : t.mono.factors()) {
      if (f.exp >= (1u << 16)) return std::nullopt;
      exps[f.var] = f.exp;
    }
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < last; ++i) key = (key << 16) | exps[i];
    groups[key].push_back({exps[last], mpq_numref(t.coeff.get_mpq_t())});
  }

  Int value = 0, hv, dv, tmp, pre;
  std::vector<Int> grad;
  if (want_grad) grad.assign(m, Int(0));
  for (auto& [key, entries] : groups) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.e > b.e; });
    // Group value by sparse Horner in the last variable.
    hv = 0;
    std::uint32_t prev_e = entries.front().e;
    for (const Entry& en : entries) {
      if (en.e != prev_e) {
        hv *= pt.at(last, prev_e - en.e);
        prev_e = en.e;
      }
      mpz_add(hv.get_mpz_t(), hv.get_mpz_t(), en.num);
    }
    if (prev_e) hv *= pt.at(last, prev_e);
    // Group derivative in the last variable.
    if (want_grad) {
      dv = 0;
      prev_e = 0;
      bool started = false;
      for (const Entry& en : entries) {
        if (en.e == 0) continue;
        if (!started) {
          prev_e = en.e - 1;
          started = true;
        } else if (en.e - 1 != prev_e) {
          dv *= pt.at(last, prev_e - (en.e - 1));
          prev_e = en.e - 1;
        }
        mpz_mul_ui(tmp.get_mpz_t(), en.num, en.e);
        dv += tmp;
      }
      if (started && prev_e) dv *= pt.at(last, prev_e);
      if (!started) dv = 0;
    }

    // Prefix exponents from the packed key.
    std::uint64_t k = key;
    for (std::size_t i = last; i-- > 0;) {
      exps[i] = std::uint32_t(k & 0xffffu);
      k >>= 16;
    }
    pre = 1;
    for (std::size_t i = 0; i < last; ++i)
      if (exps[i]) pre *= pt.at(i, exps[i]);
    value += hv * pre;
    if (want_grad) {
      grad[last] += dv * pre;
      for (std::size_t i = 0; i < last; ++i) {
        if (exps[i] == 0) continue;
        tmp = hv;
        mpz_mul_ui(tmp.get_mpz_t(), tmp.get_mpz_t(), exps[i]);
        for (std::size_t o = 0; o < last; ++o)
          if (o != i && exps[o]) tmp *= pt.at(o, exps[o]);
        tmp *= pt.at(i, exps[i] - 1);
        grad[i] += tmp;
      }
    }
  }
  EvalOut out;
  out.value = Rational(value);
  if (want_grad) {
    out.grad.reserve(m);
    for (Int& g : grad) out.grad.emplace_back(g);
  }
  return out;
}

EvalOut eval_poly(const Polynomial& p, PowerTables& pt, bool want_grad) {
  if (auto fast = eval_fast_int(p, pt, want_grad)) return std::move(*fast);
  return eval_generic(p, pt, want_grad);
}

// Fraction-free (Bareiss) elimination rank over exact integers.
std::size_t rank_bareiss(std::vector<std::vector<Int>> m, std::size_t cols) {
  const std::size_t rows = m.size();
  std::size_t rank = 0;
  Int prev = 1, t1, t2;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[rank], m[piv]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t cc = c + 1; cc < cols; ++cc) {
        t1 = m[rank][c] * m[r][cc];
        t2 = m[r][c] * m[rank][cc];
        t1 -= t2;
        mpz_divexact(m[r][cc].get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
      }
      m[r][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

struct CoordMeta {
  std::vector<std::int64_t> pvdeg;  // per domain variable
  double bits = 0;                  // log2 bound on coefficient magnitude
  bool constant = true;
};

struct Verifier {
  const VarietyPresentation& v;
  const EmbeddingWitness& w;
  std::uint64_t seed;
  VerifyLimits lim;

  std::vector<const Polynomial*> coord_poly;  // per variety coordinate
  std::vector<CoordMeta> metas;
  std::size_t m = 0;  // domain dimension
  VarContextPtr tau_ctx = VarContext::make({"tau"});
  std::unordered_map<std::uint32_t, std::vector<Polynomial>> anchor_pows;
  struct PointData {
    PowerTables tables;
    std::vector<std::optional<Rational>> values;  // per coordinate, lazy
  };
  std::vector<PointData> points;
  std::uint64_t point_state;

  Verifier(const VarietyPresentation& v_, const EmbeddingWitness& w_,
           std::uint64_t seed_, const VerifyLimits& lim_)
      : v(v_), w(w_), seed(seed_), lim(lim_),
        point_state(seed_ ^ 0x706f696e74ull) {}

  void bind_assignment() {
    std::map<std::string, const Polynomial*> by_name;
    for (const auto& [name, poly] : w.assignment) {
      if (!(poly.context() == w.domain || poly.context()->same_names(*w.domain)))
        throw Error(Errc::ContextMismatch,
                    "assignment for '" + name + "' is not over the witness domain");
      by_name.emplace(name, &poly);
    }
    coord_poly.reserve(v.coordinates.size());
    for (const Coordinate& c : v.coordinates) {
      auto it = by_name.find(c.name);
      if (it == by_name.end())
        throw Error(Errc::IncompleteWitness,
                    "witness does not assign coordinate '" + c.name + "'");
      coord_poly.push_back(it->second);
    }
    m = w.domain->size();
    if (w.domain_dim != m)
      throw Error(Errc::InvalidArgument, "witness domain_dim disagrees with its context");

    metas.reserve(coord_poly.size());
    for (const Polynomial* p : coord_poly) {
      CoordMeta meta;
      meta.pvdeg.assign(m, 0);
      meta.constant = p->is_constant();
      std::size_t num_bits = 1, den_bits = 1;
      for (const auto& t : p->terms()) {
        for (const auto& f : t.mono.factors())
          meta.pvdeg[f.var] = std::max<std::int64_t>(meta.pvdeg[f.var], f.exp);
        num_bits = std::max(num_bits,
                            mpz_sizeinbase(mpq_numref(t.coeff.get_mpq_t()), 2));
        den_bits = std::max(den_bits,
                            mpz_sizeinbase(mpq_denref(t.coeff.get_mpq_t()), 2));
      }
      meta.bits = double(num_bits + den_bits);
      metas.push_back(std::move(meta));
    }
  }

  // Predicted transient cost of fully expanding one equation term under the
  // substitution, modeled on the dense packed grid the multiplier would use.
  bool direct_feasible(const Polynomial& eq) const {
    double total = 0;
    for (const auto& t : eq.terms()) {
      double bits = 64;
      std::vector<double> deg(m, 0);
      for (const auto& f : t.mono.factors()) {
        const CoordMeta& meta = metas[f.var];
        bits += double(f.exp) * meta.bits;
        for (std::size_t i = 0; i < m; ++i)
          deg[i] += double(f.exp) * double(meta.pvdeg[i]);
      }
      double slots = 1;
      for (std::size_t i = 0; i < m; ++i) slots *= deg[i] + 1;
      double bytes = slots * 8 * std::ceil(bits / 64) * 3;
      if (bytes > lim.direct_term_bytes) return false;
      total += bytes;
    }
    return total <= lim.direct_total_bytes;
  }

  EquationCheck check_direct(const Polynomial& eq) {
    std::map<std::string, const Polynomial*> images;
    for (const auto& t : eq.terms())
      for (const auto& f : t.mono.factors())
        images.emplace(v.coord_ctx->name(f.var), coord_poly[f.var]);
    Polynomial residual = substitute(eq, images);
    EquationCheck check;
    check.method = "direct";
    check.vanishes = residual.is_zero();
    if (!check.vanishes && residual.term_count() <= kResidualTermCap)
      check.residual = format_polynomial(residual);
    return check;
  }

  // tau-hat power with a growth guard; nullptr when the next power would
  // exceed the memory budget.
  const Polynomial* anchor_power(std::uint32_t coord, std::uint32_t k) {
    auto& pows = anchor_pows[coord];
    if (pows.empty()) {
      pows.push_back(Polynomial::constant(w.domain, Rational(1)));
      pows.push_back(*coord_poly[coord]);
    }
    const CoordMeta& meta = metas[coord];
    while (pows.size() <= k) {
      std::uint32_t next = std::uint32_t(pows.size());
      double slots = 1;
      for (std::size_t i = 0; i < m; ++i)
        slots *= double(next) * double(meta.pvdeg[i]) + 1;
      double bytes = slots * 8 * std::ceil((double(next) * meta.bits + 16) / 64) * 3;
      if (bytes > lim.anchor_pow_bytes) return nullptr;
      pows.push_back(pows.back() * *coord_poly[coord]);
    }
    return &pows[k];
  }

  // Greedy leading-term peeling of `poly` as a polynomial in tau-hat (the
  // anchor's assigned polynomial).  Exact: on success the returned univariate
  // u satisfies poly == u(tau-hat) identically.
  std::optional<Polynomial> peel(const Polynomial& poly, std::uint32_t anchor) {
    const Polynomial& tau = *coord_poly[anchor];
    const std::int64_t dt = *tau.degree();
    std::vector<Polynomial::Term> coeffs;
    Polynomial u = poly;
    while (!u.is_zero()) {
      if (u.is_constant()) {
        coeffs.push_back({Monomial(), u.constant_value()});
        break;
      }
      std::int64_t du = *u.degree();
      if (du % dt != 0) return std::nullopt;
      std::int64_t k = du / dt;
      if (k > std::int64_t(lim.max_anchor_pow)) return std::nullopt;
      Monomial lmk = tau.leading_term().mono.pow(std::uint32_t(k));
      if (!(u.leading_term().mono == lmk)) return std::nullopt;
      Rational lc;
      mpz_pow_ui(mpq_numref(lc.get_mpq_t()),
                 mpq_numref(tau.leading_term().coeff.get_mpq_t()), k);
      mpz_pow_ui(mpq_denref(lc.get_mpq_t()),
                 mpq_denref(tau.leading_term().coeff.get_mpq_t()), k);
      Rational a = u.leading_term().coeff / lc;
      const Polynomial* tp = anchor_power(anchor, std::uint32_t(k));
      if (!tp) return std::nullopt;
      u = u - tp->scaled(a);
      coeffs.push_back({Monomial::variable(0, std::uint32_t(k)), std::move(a)});
    }
    return Polynomial::from_terms(tau_ctx, std::move(coeffs));
  }

  std::optional<EquationCheck> try_anchored(const Polynomial& eq) {
    std::vector<std::uint32_t> used;
    for (const auto& t : eq.terms())
      for (const auto& f : t.mono.factors())
        if (std::find(used.begin(), used.end(), f.var) == used.end())
          used.push_back(f.var);
    std::vector<std::uint32_t> anchors;
    for (std::uint32_t c : used)
      if (!metas[c].constant) anchors.push_back(c);
    std::sort(anchors.begin(), anchors.end(), [&](std::uint32_t a, std::uint32_t b) {
      auto da = *coord_poly[a]->degree(), db = *coord_poly[b]->degree();
      return da != db ? da < db : a < b;
    });
    for (std::uint32_t anchor : anchors) {
      std::map<std::string, Polynomial> images;
      bool ok = true;
      for (std::uint32_t c : used) {
        auto u = peel(*coord_poly[c], anchor);
        if (!u) {
          ok = false;
          break;
        }
        images.emplace(v.coord_ctx->name(c), std::move(*u));
      }
      if (!ok) continue;
      // The equation collapses to a univariate polynomial in tau; composing
      // with the nonconstant tau-hat preserves both vanishing and
      // nonvanishing, so this residual decides exactly.
      Polynomial residual = substitute(eq, images);
      EquationCheck check;
      check.method = "anchored";
      check.vanishes = residual.is_zero();
      return check;
    }
    return std::nullopt;
  }

  PointData& point_data(std::size_t idx) {
    while (points.size() <= idx) {
      PointData pd{PowerTables(sample_point(point_state, m)), {}};
      pd.values.assign(coord_poly.size(), std::nullopt);
      points.push_back(std::move(pd));
    }
    return points[idx];
  }

  const Rational& coord_value(std::size_t point_idx, std::uint32_t coord) {
    PointData& pd = point_data(point_idx);
    auto& slot = pd.values[coord];
    if (!slot) slot = eval_poly(*coord_poly[coord], pd.tables, false).value;
    return *slot;
  }

  // Exact disproof: a nonzero value at any rational point settles failure.
  std::optional<EquationCheck> try_point(const Polynomial& eq) {
    for (std::size_t attempt = 0; attempt < lim.max_points; ++attempt) {
      std::map<std::string, Rational> values;
      for (const auto& t : eq.terms())
        for (const auto& f : t.mono.factors())
          values.emplace(v.coord_ctx->name(f.var), coord_value(attempt, f.var));
      if (evaluate(eq, values) != 0) {
        EquationCheck check;
        check.method = "point";
        check.vanishes = false;
        return check;
      }
    }
    return std::nullopt;
  }

  EquationCheck check_equation(const Polynomial& eq) {
    if (direct_feasible(eq)) return check_direct(eq);
    if (auto anchored = try_anchored(eq)) return *anchored;
    if (auto point = try_point(eq)) return *point;
    // Everything cheap was inconclusive; fall back to the exact expansion
    // whatever it costs.
    return check_direct(eq);
  }

  VerificationReport run() {
    bind_assignment();
    VerificationReport report;
    report.domain_dim = m;
    report.seed = seed;

    bool all_vanish = true;
    report.equations.reserve(v.equations.size());
    for (const Polynomial& eq : v.equations) {
      report.equations.push_back(check_equation(eq));
      all_vanish = all_vanish && report.equations.back().vanishes;
    }

    for (const Polynomial* p : coord_poly)
      report.nonconstant = report.nonconstant || !p->is_constant();

    // Projection injectivity: every domain parameter appears verbatim as a
    // coordinate assignment.
    report.injective_by_projection = true;
    for (std::uint32_t var = 0; var < m; ++var) {
      Polynomial id = Polynomial::variable(w.domain, var);
      bool found = false;
      for (const Polynomial* p : coord_poly) found = found || *p == id;
      report.injective_by_projection = report.injective_by_projection && found;
    }

    report.jacobian.required = m;
    std::uint64_t jac_state = seed ^ 0x6a61636f6269616eull;
    for (std::size_t attempt = 0; attempt < lim.max_points; ++attempt) {
      std::vector<long> pt = sample_point(jac_state, m);
      PowerTables tables(pt);
      std::vector<std::vector<Int>> matrix;
      matrix.reserve(coord_poly.size());
      Int lcm, scale;
      for (const Polynomial* p : coord_poly) {
        EvalOut out = eval_poly(*p, tables, true);
        lcm = 1;
        for (const Rational& g : out.grad)
          mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), g.get_den().get_mpz_t());
        std::vector<Int> row;
        row.reserve(m);
        for (const Rational& g : out.grad) {
          mpz_divexact(scale.get_mpz_t(), lcm.get_mpz_t(), g.get_den().get_mpz_t());
          row.push_back(g.get_num() * scale);
        }
        matrix.push_back(std::move(row));
      }
      std::size_t rank = rank_bareiss(std::move(matrix), m);
      report.jacobian.attempts = attempt + 1;
      report.jacobian.rank = std::max(report.jacobian.rank, rank);
      std::vector<std::string> pt_str;
      pt_str.reserve(m);
      for (long x : pt) pt_str.push_back(std::to_string(x));
      report.jacobian.points.push_back(std::move(pt_str));
      if (report.jacobian.rank == m) break;
    }

    report.pass = all_vanish && report.nonconstant && report.jacobian.rank == m;
    return report;
  }
};

}  // namespace

VerificationReport verify_witness(const VarietyPresentation& v,
                                  const EmbeddingWitness& w, std::uint64_t seed) {
  return Verifier(v, w, seed, VerifyLimits{}).run();
}

VerificationReport verify_witness(const VarietyPresentation& v,
                                  const EmbeddingWitness& w, std::uint64_t seed,
                                  const VerifyLimits& limits) {
  return Verifier(v, w, seed, limits).run();
}

}  // namespace varembed
