#include "variety.hpp"

namespace varembed {

namespace {

std::string clone_name(char role, std::size_t i, std::size_t j) {
  return std::string(1, role) + std::to_string(i) + "_" + std::to_string(j);
}

// Q with its k-th variable replaced by the coordinate variable at vmap[k].
Polynomial q_on(const Polynomial& q, const VarContextPtr& ctx,
                const std::vector<std::uint32_t>& vmap) {
  std::map<std::string, Polynomial> images;
  const VarContext& qctx = *q.context();
  for (std::size_t k = 0; k < qctx.size(); ++k)
    images.emplace(qctx.name(k), Polynomial::variable(ctx, vmap[k]));
  return substitute(q, images);
}

}  // namespace

VarietyCounts real_counts(std::size_t d) { return {5 * d + 2, 3 * d + 2}; }

VarietyCounts complex_counts(std::size_t d, std::size_t e, std::size_t n) {
  return {5 * d * e + e + 2 * n, 3 * d * e + (e - 1) + 1 + n + d};
}

VarietyPresentation build_real_variety(const Polynomial& q) {
  const std::size_t s = q.context()->size();
  if (s == 0)
    throw Error(Errc::InvalidArgument, "Diophantine polynomial has no variables");

  VarietyPresentation v;
  v.kase = VarietyCase::Real;
  v.d = s;

  for (std::size_t i = 1; i <= s; ++i)
    for (char role : {'X', 'Y', 'Z', 'U', 'V'})
      v.coordinates.push_back({std::string(1, role) + std::to_string(i),
                               std::string(1, role)});
  v.coordinates.push_back({"T", "T"});
  v.coordinates.push_back({"S", "S"});

  std::vector<std::string> names;
  names.reserve(v.coordinates.size());
  for (const Coordinate& c : v.coordinates) names.push_back(c.name);
  v.coord_ctx = VarContext::make(std::move(names));
  const VarContextPtr& ctx = v.coord_ctx;

  auto var = [&](std::size_t idx) { return Polynomial::variable(ctx, std::uint32_t(idx)); };
  Polynomial one = Polynomial::constant(ctx, Rational(1));
  Polynomial T = var(5 * s), S = var(5 * s + 1);
  Polynomial lambda = T * T - one;

  std::vector<std::uint32_t> v_indices(s);
  for (std::size_t i = 0; i < s; ++i) {
    Polynomial X = var(5 * i), Y = var(5 * i + 1), Z = var(5 * i + 2),
               U = var(5 * i + 3), V = var(5 * i + 4);
    v_indices[i] = std::uint32_t(5 * i + 4);
    v.equations.push_back(X * X - lambda * (Y * Y) - one);
    v.equations.push_back(Y - (T - one) * Z - V);
    v.equations.push_back(V * U - one);
  }
  v.equations.push_back(T - S * S - Polynomial::constant(ctx, Rational(2)));
  v.equations.push_back(q_on(q, ctx, v_indices));

  VarietyCounts want = real_counts(s);
  if (v.coordinates.size() != want.coordinates || v.equations.size() != want.equations)
    throw Error(Errc::Internal, "real variety count mismatch");
  return v;
}

VarietyPresentation build_complex_variety(const Polynomial& q,
                                          const DivFamOptions& options) {
  const std::size_t s = q.context()->size();
  if (s < 3)
    throw Error(Errc::DimensionTooSmall,
                "complex case needs at least 3 variables, got " + std::to_string(s));
  const std::size_t d = s - 2, e = s, n = e;

  DivFamily fam = build_w_phat(n, options);

  VarietyPresentation v;
  v.kase = VarietyCase::Complex;
  v.d = d;
  v.e = e;
  v.n = n;

  for (std::size_t i = 1; i <= d; ++i)
    for (std::size_t j = 1; j <= e; ++j)
      for (char role : {'X', 'Y', 'Z', 'U', 'V'})
        v.coordinates.push_back({clone_name(role, i, j), std::string(1, role)});
  for (std::size_t j = 1; j <= e; ++j)
    v.coordinates.push_back({"T" + std::to_string(j), "T"});
  for (std::size_t k = 1; k <= n; ++k)
    v.coordinates.push_back({"W" + std::to_string(k), "W"});
  for (std::size_t k = 1; k <= n; ++k)
    v.coordinates.push_back({"xi" + std::to_string(k), "xi"});

  std::vector<std::string> names;
  names.reserve(v.coordinates.size());
  for (const Coordinate& c : v.coordinates) names.push_back(c.name);
  v.coord_ctx = VarContext::make(std::move(names));
  const VarContextPtr& ctx = v.coord_ctx;

  auto var = [&](std::size_t idx) { return Polynomial::variable(ctx, std::uint32_t(idx)); };
  auto cell = [&](std::size_t i, std::size_t j, std::size_t role) {
    // (i, j) 1-based cell, role 0..4 = X,Y,Z,U,V
    return 5 * ((i - 1) * e + (j - 1)) + role;
  };
  const std::size_t t_base = 5 * d * e, w_base = t_base + e, xi_base = w_base + n;
  Polynomial one = Polynomial::constant(ctx, Rational(1));

  // Clone equations, column j using the column parameter T_j.
  for (std::size_t i = 1; i <= d; ++i) {
    for (std::size_t j = 1; j <= e; ++j) {
      Polynomial X = var(cell(i, j, 0)), Y = var(cell(i, j, 1)),
                 Z = var(cell(i, j, 2)), U = var(cell(i, j, 3)),
                 V = var(cell(i, j, 4));
      Polynomial T = var(t_base + j - 1);
      Polynomial lambda = T * T - one;
      v.equations.push_back(X * X - lambda * (Y * Y) - one);
      v.equations.push_back(Y - (T - one) * Z - V);
      v.equations.push_back(V * U - one);
    }
  }
  // Chain: T_{j+1} = prod_{k<=j} ((T_k^2 - 1) W_k) * W_{j+1}.
  Polynomial chain_prod = one;
  for (std::size_t j = 1; j + 1 <= e; ++j) {
    Polynomial Tj = var(t_base + j - 1), Wj = var(w_base + j - 1);
    chain_prod = chain_prod * ((Tj * Tj - one) * Wj);
    v.equations.push_back(var(t_base + j) - chain_prod * var(w_base + j));
  }
  // Family values: T_1 = Phat(xi), W_k = H_k(xi_1..xi_k).
  std::map<std::string, Polynomial> xi_images;
  for (std::size_t k = 1; k <= n; ++k)
    xi_images.emplace(fam.ctx->name(k - 1), var(xi_base + k - 1));
  v.equations.push_back(var(t_base) - substitute(fam.p, xi_images));
  for (std::size_t k = 1; k <= n; ++k)
    v.equations.push_back(var(w_base + k - 1) - substitute(fam.h[k - 1], xi_images));
  // Rows: Q over each row of V-cells.
  for (std::size_t i = 1; i <= d; ++i) {
    std::vector<std::uint32_t> vmap(s);
    for (std::size_t j = 1; j <= e; ++j)
      vmap[j - 1] = std::uint32_t(cell(i, j, 4));
    v.equations.push_back(q_on(q, ctx, vmap));
  }

  VarietyCounts want = complex_counts(d, e, n);
  if (v.coordinates.size() != want.coordinates || v.equations.size() != want.equations)
    throw Error(Errc::Internal, "complex variety count mismatch");
  return v;
}

}  // namespace varembed
