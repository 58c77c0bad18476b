#include "polynomial.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>

#include "kronecker.hpp"

namespace varembed {

namespace {

const VarContextPtr& empty_context() {
  static const VarContextPtr ctx = VarContext::make({});
  return ctx;
}

void require_context(const VarContextPtr& ctx) {
  if (!ctx) throw Error(Errc::InvalidArgument, "null variable context");
}

const VarContextPtr& common_context(const Polynomial& a, const Polynomial& b) {
  if (a.context() == b.context() || a.context()->same_names(*b.context()))
    return a.context();
  throw Error(Errc::ContextMismatch, "operands live in different variable contexts");
}

bool term_before(const Polynomial::Term& x, const Polynomial::Term& y) {
  return Monomial::compare(x.mono, y.mono) > 0;
}

struct MonoHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Pairwise Kronecker dispatch is worthwhile only once the classic schoolbook
// pass gets expensive; below this many coefficient products it always wins.
constexpr double kClassicWorkLimit = 2.0e6;
// Hard cap on transient packed-integer buffers (the machine budget, not a
// correctness bound — oversized requests just fall back to the classic path).
constexpr std::size_t kKroneckerMemLimit = std::size_t(2200) << 20;

Polynomial mul_classic(const Polynomial& a, const Polynomial& b) {
  std::unordered_map<Monomial, Rational, MonoHash> acc;
  acc.reserve(std::min<std::size_t>(a.term_count() * b.term_count(),
                                    4 * std::max(a.term_count(), b.term_count())));
  Rational prod;
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      prod = ta.coeff * tb.coeff;
      auto [it, fresh] = acc.emplace(ta.mono.times(tb.mono), prod);
      if (!fresh) it->second += prod;
    }
  }
  std::vector<Polynomial::Term> terms;
  terms.reserve(acc.size());
  for (auto& [mono, coeff] : acc)
    if (coeff != 0) terms.push_back({mono, std::move(coeff)});
  std::sort(terms.begin(), terms.end(), term_before);
  return Polynomial::from_sorted_terms(a.context(), std::move(terms));
}

}  // namespace

Polynomial::Polynomial() : ctx_(empty_context()) {}

Polynomial Polynomial::zero(VarContextPtr ctx) {
  require_context(ctx);
  Polynomial p;
  p.ctx_ = std::move(ctx);
  return p;
}

Polynomial Polynomial::constant(VarContextPtr ctx, Rational value) {
  value.canonicalize();
  Polynomial p = zero(std::move(ctx));
  if (value != 0) p.terms_.push_back({Monomial(), std::move(value)});
  return p;
}

Polynomial Polynomial::variable(VarContextPtr ctx, std::uint32_t index) {
  require_context(ctx);
  if (index >= ctx->size())
    throw Error(Errc::UnknownVariable, "variable index out of range");
  Polynomial p = zero(std::move(ctx));
  p.terms_.push_back({Monomial::variable(index), Rational(1)});
  return p;
}

Polynomial Polynomial::from_terms(VarContextPtr ctx, std::vector<Term> terms) {
  require_context(ctx);
  for (Term& t : terms) {
    t.coeff.canonicalize();
    for (const auto& f : t.mono.factors())
      if (f.var >= ctx->size())
        throw Error(Errc::UnknownVariable, "monomial variable out of range");
  }
  std::sort(terms.begin(), terms.end(), term_before);
  std::vector<Term> canon;
  canon.reserve(terms.size());
  for (Term& t : terms) {
    if (!canon.empty() && canon.back().mono == t.mono)
      canon.back().coeff += t.coeff;
    else
      canon.push_back(std::move(t));
  }
  std::erase_if(canon, [](const Term& t) { return t.coeff == 0; });
  return from_sorted_terms(std::move(ctx), std::move(canon));
}

Polynomial Polynomial::from_sorted_terms(VarContextPtr ctx, std::vector<Term> terms) {
  Polynomial p = zero(std::move(ctx));
  p.terms_ = std::move(terms);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant())
    throw Error(Errc::InvalidArgument, "constant_value of a nonconstant polynomial");
  return terms_[0].coeff;
}

std::optional<std::int64_t> Polynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_[0].mono.total_degree();
}

std::int64_t Polynomial::degree_in(std::uint32_t var) const {
  std::int64_t d = 0;
  for (const Term& t : terms_)
    d = std::max<std::int64_t>(d, t.mono.exponent_of(var));
  return d;
}

bool Polynomial::mentions(std::uint32_t var) const {
  for (const Term& t : terms_)
    if (t.mono.mentions(var)) return true;
  return false;
}

const Polynomial::Term& Polynomial::leading_term() const {
  if (terms_.empty())
    throw Error(Errc::InvalidArgument, "leading term of the zero polynomial");
  return terms_[0];
}

Polynomial Polynomial::operator-() const {
  Polynomial out = zero(ctx_);
  out.terms_.reserve(terms_.size());
  for (const Term& t : terms_) out.terms_.push_back({t.mono, -t.coeff});
  return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Rational cc = c;
  cc.canonicalize();
  if (cc == 0) return zero(ctx_);
  Polynomial out = zero(ctx_);
  out.terms_.reserve(terms_.size());
  for (const Term& t : terms_) out.terms_.push_back({t.mono, t.coeff * cc});
  return out;
}

namespace {

template <bool Negate>
Polynomial merge_terms(const Polynomial& a, const Polynomial& b) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.term_count() + b.term_count());
  auto i = a.terms().begin(), ie = a.terms().end();
  auto j = b.terms().begin(), je = b.terms().end();
  while (i != ie && j != je) {
    int c = Monomial::compare(i->mono, j->mono);
    if (c > 0) {
      out.push_back(*i++);
    } else if (c < 0) {
      out.push_back({j->mono, Negate ? Rational(-j->coeff) : j->coeff});
      ++j;
    } else {
      Rational s = Negate ? Rational(i->coeff - j->coeff)
                          : Rational(i->coeff + j->coeff);
      if (s != 0) out.push_back({i->mono, std::move(s)});
      ++i; ++j;
    }
  }
  for (; i != ie; ++i) out.push_back(*i);
  for (; j != je; ++j) out.push_back({j->mono, Negate ? Rational(-j->coeff) : j->coeff});
  return Polynomial::from_sorted_terms(a.context(), std::move(out));
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  common_context(a, b);
  return merge_terms<false>(a, b);
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  common_context(a, b);
  return merge_terms<true>(a, b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  common_context(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial::zero(a.context());
  if (a.is_constant()) return b.scaled(a.constant_value());
  if (b.is_constant()) return a.scaled(b.constant_value());
  double work = double(a.term_count()) * double(b.term_count());
  if (work > kClassicWorkLimit) {
    if (auto fast = kronecker_mul(a, b, kKroneckerMemLimit)) return std::move(*fast);
  }
  return mul_classic(a, b);
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!(a.context() == b.context() || a.context()->same_names(*b.context())))
    return false;
  if (a.terms().size() != b.terms().size()) return false;
  for (std::size_t k = 0; k < a.terms().size(); ++k) {
    if (!(a.terms()[k].mono == b.terms()[k].mono)) return false;
    if (a.terms()[k].coeff != b.terms()[k].coeff) return false;
  }
  return true;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial result = constant(ctx_, Rational(1));
  if (e == 0) return result;
  Polynomial base = *this;
  while (true) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (!e) break;
    base = base * base;
  }
  return result;
}

NotDivisibleError::NotDivisibleError(Polynomial remainder)
    : Error(Errc::NotDivisible, "division left a nonzero remainder"),
      remainder_(std::move(remainder)) {}

DivisionResult divide(const Polynomial& f, const Polynomial& g) {
  const VarContextPtr& ctx = common_context(f, g);
  if (g.is_zero()) throw Error(Errc::DivisionByZero, "division by the zero polynomial");
  std::vector<Polynomial::Term> quotient, remainder;
  Polynomial work = f;
  const Monomial& gm = g.leading_term().mono;
  const Rational& gc = g.leading_term().coeff;
  while (!work.is_zero()) {
    const Polynomial::Term& lt = work.leading_term();
    if (auto q = lt.mono.divided_by(gm)) {
      Polynomial::Term qt{std::move(*q), lt.coeff / gc};
      // work -= qt * g; multiplying g by one term keeps it sorted.
      std::vector<Polynomial::Term> sub;
      sub.reserve(g.term_count());
      for (const auto& t : g.terms())
        sub.push_back({t.mono.times(qt.mono), t.coeff * qt.coeff});
      work = work - Polynomial::from_sorted_terms(ctx, std::move(sub));
      quotient.push_back(std::move(qt));
    } else {
      // Successive leading terms strictly decrease, so append keeps order.
      remainder.push_back(lt);
      std::vector<Polynomial::Term> rest(work.terms().begin() + 1, work.terms().end());
      work = Polynomial::from_sorted_terms(ctx, std::move(rest));
    }
  }
  return {Polynomial::from_sorted_terms(ctx, std::move(quotient)),
          Polynomial::from_sorted_terms(ctx, std::move(remainder))};
}

Polynomial exact_div(const Polynomial& f, const Polynomial& g) {
  DivisionResult d = divide(f, g);
  if (!d.remainder.is_zero()) throw NotDivisibleError(std::move(d.remainder));
  return std::move(d.quotient);
}

Polynomial substitute(const Polynomial& p,
                      const std::map<std::string, Polynomial>& images) {
  std::map<std::string, const Polynomial*> borrowed;
  for (const auto& [name, img] : images) borrowed.emplace(name, &img);
  return substitute(p, borrowed);
}

Polynomial substitute(const Polynomial& p,
                      const std::map<std::string, const Polynomial*>& images) {
  VarContextPtr target;
  for (const auto& [name, img] : images) {
    if (!target)
      target = img->context();
    else if (!(target == img->context() || target->same_names(*img->context())))
      throw Error(Errc::ContextMismatch, "substitution images live in different contexts");
  }
  if (!target) target = p.context();

  const VarContext& ctx = *p.context();
  std::vector<std::int64_t> max_exp(ctx.size(), 0);
  for (const auto& t : p.terms())
    for (const auto& f : t.mono.factors())
      max_exp[f.var] = std::max<std::int64_t>(max_exp[f.var], f.exp);

  // Per-variable power tables, built incrementally up to the largest exponent
  // actually used.  Unmapped variables pass through to the same name in the
  // target context.
  std::vector<std::vector<Polynomial>> powers(ctx.size());
  for (std::uint32_t v = 0; v < ctx.size(); ++v) {
    if (max_exp[v] == 0) continue;
    Polynomial image;
    auto it = images.find(ctx.name(v));
    if (it != images.end()) {
      image = *it->second;
    } else {
      auto idx = target->index_of(ctx.name(v));
      if (!idx)
        throw Error(Errc::ContextMismatch,
                    "target context lacks variable '" + ctx.name(v) + "'");
      image = Polynomial::variable(target, *idx);
    }
    auto& table = powers[v];
    table.reserve(max_exp[v] + 1);
    table.push_back(Polynomial::constant(target, Rational(1)));
    for (std::int64_t e = 1; e <= max_exp[v]; ++e)
      table.push_back(table.back() * image);
  }

  Polynomial result = Polynomial::zero(target);
  for (const auto& t : p.terms()) {
    std::vector<const Polynomial*> factors;
    factors.reserve(t.mono.factors().size());
    for (const auto& f : t.mono.factors())
      factors.push_back(&powers[f.var][f.exp]);
    // Smallest first keeps intermediates small.
    std::sort(factors.begin(), factors.end(),
              [](const Polynomial* x, const Polynomial* y) {
                return x->term_count() < y->term_count();
              });
    Polynomial acc = Polynomial::constant(target, t.coeff);
    for (const Polynomial* f : factors) acc = acc * *f;
    result = result + acc;
  }
  return result;
}

Polynomial embedded(const Polynomial& p, VarContextPtr target) {
  if (p.context() == target || p.context()->same_names(*target))
    return Polynomial::from_sorted_terms(std::move(target), p.terms());
  const VarContext& ctx = *p.context();
  std::vector<std::optional<std::uint32_t>> remap(ctx.size());
  std::vector<Polynomial::Term> terms;
  terms.reserve(p.term_count());
  for (const auto& t : p.terms()) {
    Monomial::Factors factors;
    factors.reserve(t.mono.factors().size());
    for (const auto& f : t.mono.factors()) {
      auto& slot = remap[f.var];
      if (!slot) {
        slot = target->index_of(ctx.name(f.var));
        if (!slot)
          throw Error(Errc::ContextMismatch,
                      "target context lacks variable '" + ctx.name(f.var) + "'");
      }
      factors.push_back({*slot, f.exp});
    }
    std::sort(factors.begin(), factors.end(),
              [](const Monomial::Factor& a, const Monomial::Factor& b) {
                return a.var < b.var;
              });
    terms.push_back({Monomial::from_sorted(std::move(factors)), t.coeff});
  }
  // Renaming can reorder monomials, so renormalize.
  return Polynomial::from_terms(std::move(target), std::move(terms));
}

Rational evaluate(const Polynomial& p, const std::map<std::string, Rational>& point) {
  const VarContext& ctx = *p.context();
  // var -> value, resolved lazily so unused assignments are never required.
  std::vector<std::optional<Rational>> values(ctx.size());
  Rational sum(0), term;
  for (const auto& t : p.terms()) {
    term = t.coeff;
    for (const auto& f : t.mono.factors()) {
      auto& slot = values[f.var];
      if (!slot) {
        auto it = point.find(ctx.name(f.var));
        if (it == point.end())
          throw Error(Errc::IncompletePoint,
                      "no value for variable '" + ctx.name(f.var) + "'");
        slot = it->second;
      }
      Rational pw;
      mpz_pow_ui(pw.get_num().get_mpz_t(), slot->get_num().get_mpz_t(), f.exp);
      mpz_pow_ui(pw.get_den().get_mpz_t(), slot->get_den().get_mpz_t(), f.exp);
      term *= pw;
    }
    sum += term;
  }
  return sum;
}

Polynomial derivative(const Polynomial& p, std::string_view var) {
  auto idx = p.context()->index_of(var);
  if (!idx)
    throw Error(Errc::UnknownVariable,
                "context has no variable '" + std::string(var) + "'");
  std::vector<Polynomial::Term> out;
  for (const auto& t : p.terms()) {
    std::uint32_t e = t.mono.exponent_of(*idx);
    if (e == 0) continue;
    // Dividing every surviving monomial by the same variable preserves the
    // graded-lex order, so the result is already canonical.
    Monomial m = *t.mono.divided_by(Monomial::variable(*idx));
    out.push_back({std::move(m), t.coeff * e});
  }
  return Polynomial::from_sorted_terms(p.context(), std::move(out));
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::IncompletePoint: return "IncompletePoint";
    case Errc::UnknownVariable: return "UnknownVariable";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidPellPair: return "InvalidPellPair";
    case Errc::NotPellCanonical: return "NotPellCanonical";
    case Errc::DegenerateConstants: return "DegenerateConstants";
    case Errc::SizeLimitExceeded: return "SizeLimitExceeded";
    case Errc::DimensionTooSmall: return "DimensionTooSmall";
    case Errc::NotASolution: return "NotASolution";
    case Errc::ZeroComponent: return "ZeroComponent";
    case Errc::NonconstantTj: return "NonconstantTj";
    case Errc::IncompleteWitness: return "IncompleteWitness";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace varembed
