#include "divfam.hpp"

namespace varembed {

namespace {

// Core of shift_decompose once the extended context is fixed: P, Q and the
// shift variable u all live in `ctx`; every variable of the original context
// (all but u) gets shifted.
Polynomial shift_decompose_in(const Polynomial& p, const Polynomial& q,
                              const VarContextPtr& ctx, std::uint32_t u_index,
                              std::size_t shifted_vars) {
  if (q.is_zero()) return Polynomial::zero(ctx);
  Polynomial u = Polynomial::variable(ctx, u_index);
  Polynomial uq = u * q;
  std::map<std::string, Polynomial> images;
  for (std::uint32_t v = 0; v < shifted_vars; ++v)
    images.emplace(ctx->name(v), Polynomial::variable(ctx, v) + uq);
  Polynomial shifted = substitute(p, images);
  try {
    return exact_div(shifted - p, q);
  } catch (const NotDivisibleError&) {
    throw Error(Errc::Internal, "shift decomposition failed to divide");
  }
}

}  // namespace

Polynomial shift_decompose(const Polynomial& p, const Polynomial& q,
                           const std::string& u_name) {
  if (!(p.context() == q.context() || p.context()->same_names(*q.context())))
    throw Error(Errc::ContextMismatch, "P and Q live in different contexts");
  if (p.context()->index_of(u_name))
    throw Error(Errc::InvalidArgument,
                "shift variable '" + u_name + "' already present");
  std::vector<std::string> names = p.context()->names();
  names.push_back(u_name);
  VarContextPtr ext = VarContext::make(std::move(names));
  std::uint32_t u_index = std::uint32_t(ext->size() - 1);
  return shift_decompose_in(embedded(p, ext), embedded(q, ext), ext, u_index,
                            u_index);
}

DivFamily build_families(const std::vector<Rational>& constants,
                         const DivFamOptions& options) {
  const std::size_t m = constants.size();
  if (m == 0)
    throw Error(Errc::InvalidArgument, "at least one constant required");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (constants[i] == constants[j])
        throw Error(Errc::DegenerateConstants,
                    "constants must be pairwise distinct");
  if (m > kDivFamDefaultCap && !options.allow_large)
    throw Error(Errc::SizeLimitExceeded,
                "family size " + std::to_string(m) + " exceeds the default cap of " +
                    std::to_string(kDivFamDefaultCap) + " (the construction grows "
                    "doubly exponentially); pass allow_large to override");

  std::vector<std::string> names;
  names.reserve(m);
  for (std::size_t i = 1; i <= m; ++i) names.push_back("x" + std::to_string(i));
  VarContextPtr ctx = VarContext::make(std::move(names));

  DivFamily fam;
  fam.constants = constants;
  fam.ctx = ctx;
  fam.h.push_back(Polynomial::variable(ctx, 0));
  fam.p = Polynomial::variable(ctx, 0) + Polynomial::constant(ctx, constants[0]);
  fam.p_term_counts.push_back(fam.p.term_count());

  for (std::size_t step = 1; step < m; ++step) {
    // Q = prod_{k=1}^{step+1} (P - C_k); the extra factor beyond the first
    // `step` certificates is what makes H_{step+1} polynomial.
    Polynomial q = Polynomial::constant(ctx, Rational(1));
    for (std::size_t k = 0; k <= step; ++k)
      q = q * (fam.p - Polynomial::constant(ctx, constants[k]));
    Polynomial r = shift_decompose_in(fam.p, q, ctx, std::uint32_t(step), std::uint32_t(step));
    Polynomial cofactor =
        exact_div(q, fam.p - Polynomial::constant(ctx, constants[step]));
    fam.h.push_back(Polynomial::constant(ctx, Rational(1)) + r * cofactor);

    Polynomial u = Polynomial::variable(ctx, std::uint32_t(step));
    std::map<std::string, Polynomial> images;
    Polynomial uq = u * q;
    for (std::uint32_t v = 0; v < step; ++v)
      images.emplace(ctx->name(v), Polynomial::variable(ctx, v) + uq);
    fam.p = substitute(fam.p, images);
    fam.p_term_counts.push_back(fam.p.term_count());
  }
  return fam;
}

DivFamily build_w_phat(std::size_t n, const DivFamOptions& options) {
  std::vector<Rational> constants;
  constants.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) constants.emplace_back(3 * long(k));
  return build_families(constants, options);
}

}  // namespace varembed
