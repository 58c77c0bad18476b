#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "monomial.hpp"
#include "rational.hpp"
#include "var_context.hpp"

namespace varembed {

// Sparse multivariate polynomial over Q with exact rational coefficients.
// Terms are kept in canonical form: sorted by descending graded-lex monomial
// order, no zero coefficients, no duplicate monomials.  Binary operations
// require both operands to share a context (same variable names in the same
// order); anything else raises ContextMismatch.
class Polynomial {
public:
  struct Term {
    Monomial mono;
    Rational coeff;
  };

  Polynomial();  // zero over the empty context
  static Polynomial zero(VarContextPtr ctx);
  static Polynomial constant(VarContextPtr ctx, Rational value);
  static Polynomial variable(VarContextPtr ctx, std::uint32_t index);
  // Normalizes: sorts, combines duplicates, drops zeros.
  static Polynomial from_terms(VarContextPtr ctx, std::vector<Term> terms);

  const VarContextPtr& context() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Value of a constant polynomial (0 for the zero polynomial).
  Rational constant_value() const;
  // Total degree; nullopt for the zero polynomial.
  std::optional<std::int64_t> degree() const;
  std::int64_t degree_in(std::uint32_t var) const;
  bool mentions(std::uint32_t var) const;
  const Term& leading_term() const;

  Polynomial operator-() const;
  Polynomial scaled(const Rational& c) const;
  Polynomial pow(std::uint32_t e) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Internal: terms must already be canonical.
  static Polynomial from_sorted_terms(VarContextPtr ctx, std::vector<Term> terms);

private:
  VarContextPtr ctx_;
  std::vector<Term> terms_;
};

// Quotient and remainder of single-divisor term reduction in graded-lex
// order: f = q*g + r where no term of r is divisible by the leading
// monomial of g.  For a single divisor, r == 0 iff g divides f.
struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};
DivisionResult divide(const Polynomial& f, const Polynomial& g);

class NotDivisibleError : public Error {
public:
  explicit NotDivisibleError(Polynomial remainder);
  const Polynomial& remainder() const { return remainder_; }

private:
  Polynomial remainder_;
};

// Exact quotient f/g; raises NotDivisibleError (carrying the remainder) if g
// does not divide f, DivisionByZero if g == 0.
Polynomial exact_div(const Polynomial& f, const Polynomial& g);

// Ring-homomorphic substitution.  Every image must live in one common target
// context; variables of p without an image map to the target variable of the
// same name.  With an empty map the target is p's own context.
Polynomial substitute(const Polynomial& p,
                      const std::map<std::string, Polynomial>& images);
// Borrowing variant (images must outlive the call).
Polynomial substitute(const Polynomial& p,
                      const std::map<std::string, const Polynomial*>& images);

// Rewrites p over `target`, matching variables by name (ContextMismatch if a
// used variable is missing from the target).
Polynomial embedded(const Polynomial& p, VarContextPtr target);

// Evaluation at a rational point.  Every variable occurring in p must be
// assigned, otherwise IncompletePoint.
Rational evaluate(const Polynomial& p, const std::map<std::string, Rational>& point);

// Formal partial derivative with respect to the named variable
// (UnknownVariable if the context does not contain it).
Polynomial derivative(const Polynomial& p, std::string_view var);

}  // namespace varembed
