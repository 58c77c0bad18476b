#include "witness.hpp"

#include "pell.hpp"

namespace varembed {

namespace {

std::int64_t to_index(const Int& n) {
  if (!n.fits_slong_p())
    throw Error(Errc::InvalidArgument, "solution entry does not fit a machine integer");
  return n.get_si();
}

void check_solution(const Polynomial& q, const std::vector<Int>& row) {
  const VarContext& qctx = *q.context();
  std::map<std::string, Rational> point;
  for (std::size_t k = 0; k < qctx.size(); ++k)
    point.emplace(qctx.name(k), Rational(row[k]));
  if (evaluate(q, point) != 0)
    throw Error(Errc::NotASolution, "tuple is not a zero of the Diophantine polynomial");
  for (const Int& v : row)
    if (v == 0)
      throw Error(Errc::ZeroComponent, "solution components must be nonzero");
}

// f(tau) with tau replaced by `arg`, using a shared power table of arg.
Polynomial compose_univariate(const Polynomial& f,
                              const std::vector<Polynomial>& arg_pow) {
  Polynomial out = Polynomial::zero(arg_pow[0].context());
  for (const auto& t : f.terms()) {
    std::uint32_t e = t.mono.is_one() ? 0 : t.mono.factors()[0].exp;
    out = out + arg_pow[e].scaled(t.coeff);
  }
  return out;
}

}  // namespace

EmbeddingWitness real_witness(const Polynomial& q, const std::vector<Int>& n) {
  const std::size_t s = q.context()->size();
  if (s == 0)
    throw Error(Errc::InvalidArgument, "Diophantine polynomial has no variables");
  if (n.size() != s)
    throw Error(Errc::InvalidArgument, "expected " + std::to_string(s) +
                                           " solution components, got " +
                                           std::to_string(n.size()));
  check_solution(q, n);

  EmbeddingWitness w;
  w.domain_dim = 1;
  w.domain = VarContext::make({"t"});
  w.integers.push_back(n);

  Polynomial t = Polynomial::variable(w.domain, 0);
  Polynomial T = t * t + Polynomial::constant(w.domain, Rational(2));
  PellContext pctx(T);
  for (std::size_t i = 0; i < s; ++i) {
    std::int64_t ni = to_index(n[i]);
    PellPair sol = solution(ni, pctx);
    Polynomial z = z_component(sol, ni, pctx);
    std::string suffix = std::to_string(i + 1);
    w.assignment.emplace_back("X" + suffix, sol.x());
    w.assignment.emplace_back("Y" + suffix, sol.y());
    w.assignment.emplace_back("Z" + suffix, std::move(z));
    w.assignment.emplace_back("U" + suffix,
                              Polynomial::constant(w.domain, Rational(Int(1), n[i])));
    w.assignment.emplace_back("V" + suffix,
                              Polynomial::constant(w.domain, Rational(n[i])));
  }
  w.assignment.emplace_back("T", T);
  w.assignment.emplace_back("S", t);
  return w;
}

EmbeddingWitness complex_witness(const Polynomial& q,
                                 const std::vector<std::vector<Int>>& rows,
                                 const DivFamOptions& options) {
  const std::size_t s = q.context()->size();
  if (s < 3)
    throw Error(Errc::DimensionTooSmall,
                "complex case needs at least 3 variables, got " + std::to_string(s));
  const std::size_t d = s - 2, e = s, n = e;
  if (rows.size() != d)
    throw Error(Errc::InvalidArgument, "expected " + std::to_string(d) +
                                           " solution rows, got " +
                                           std::to_string(rows.size()));
  for (const auto& row : rows) {
    if (row.size() != e)
      throw Error(Errc::InvalidArgument, "expected " + std::to_string(e) +
                                             " components per row, got " +
                                             std::to_string(row.size()));
    check_solution(q, row);
  }

  DivFamily fam = build_w_phat(n, options);

  EmbeddingWitness w;
  w.domain_dim = s;
  std::vector<std::string> tnames;
  for (std::size_t k = 1; k <= s; ++k) tnames.push_back("t" + std::to_string(k));
  w.domain = VarContext::make(std::move(tnames));
  w.integers = rows;

  // Family data over the domain parameters.
  std::map<std::string, Polynomial> t_images;
  for (std::size_t k = 0; k < n; ++k)
    t_images.emplace(fam.ctx->name(k), Polynomial::variable(w.domain, std::uint32_t(k)));
  std::vector<Polynomial> W;
  W.reserve(n);
  for (std::size_t k = 0; k < n; ++k) W.push_back(substitute(fam.h[k], t_images));
  std::vector<Polynomial> T;
  T.reserve(e);
  T.push_back(substitute(fam.p, t_images));
  Polynomial one = Polynomial::constant(w.domain, Rational(1));
  Polynomial chain_prod = one;
  for (std::size_t j = 1; j < e; ++j) {
    chain_prod = chain_prod * ((T[j - 1] * T[j - 1] - one) * W[j - 1]);
    T.push_back(chain_prod * W[j]);
  }
  for (std::size_t j = 0; j < e; ++j)
    if (T[j].is_constant())
      throw Error(Errc::NonconstantTj,
                  "constructed column parameter T" + std::to_string(j + 1) +
                      " is constant");

  // Pell data per column: solutions are computed in a univariate ring and
  // composed with a shared power table of T_j, so the expensive products
  // T_j^k happen once per column.
  VarContextPtr tau_ctx = VarContext::make({"tau"});
  PellContext tau_pell(Polynomial::variable(tau_ctx, 0));
  std::vector<std::vector<std::pair<std::string, Polynomial>>> cells(d * e);
  for (std::size_t j = 1; j <= e; ++j) {
    std::int64_t maxn = 0;
    std::vector<std::int64_t> idx(d);
    for (std::size_t i = 1; i <= d; ++i) {
      idx[i - 1] = to_index(rows[i - 1][j - 1]);
      maxn = std::max(maxn, idx[i - 1] < 0 ? -idx[i - 1] : idx[i - 1]);
    }
    std::vector<Polynomial> tjpow;
    tjpow.reserve(maxn + 1);
    tjpow.push_back(one);
    for (std::int64_t k = 1; k <= maxn; ++k) tjpow.push_back(tjpow.back() * T[j - 1]);

    for (std::size_t i = 1; i <= d; ++i) {
      std::int64_t nij = idx[i - 1];
      PellPair sol = solution(nij, tau_pell);
      Polynomial zu = z_component(sol, nij, tau_pell);
      auto& cell = cells[(i - 1) * e + (j - 1)];
      std::string suf = std::to_string(i) + "_" + std::to_string(j);
      cell.emplace_back("X" + suf, compose_univariate(sol.x(), tjpow));
      cell.emplace_back("Y" + suf, compose_univariate(sol.y(), tjpow));
      cell.emplace_back("Z" + suf, compose_univariate(zu, tjpow));
      cell.emplace_back("U" + suf, Polynomial::constant(
                                       w.domain, Rational(Int(1), rows[i - 1][j - 1])));
      cell.emplace_back("V" + suf,
                        Polynomial::constant(w.domain, Rational(rows[i - 1][j - 1])));
    }
  }
  for (auto& cell : cells)
    for (auto& entry : cell) w.assignment.push_back(std::move(entry));
  for (std::size_t j = 1; j <= e; ++j)
    w.assignment.emplace_back("T" + std::to_string(j), std::move(T[j - 1]));
  for (std::size_t k = 1; k <= n; ++k)
    w.assignment.emplace_back("W" + std::to_string(k), std::move(W[k - 1]));
  for (std::size_t k = 1; k <= n; ++k)
    w.assignment.emplace_back("xi" + std::to_string(k),
                              Polynomial::variable(w.domain, std::uint32_t(k - 1)));
  return w;
}

}  // namespace varembed
