#pragma once

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <optional>

namespace varembed {

// Power product over context variable indices.  Factors are kept sorted by
// strictly increasing variable index with exponents > 0, so the default
// constructor is the monomial 1.  Inline storage covers up to three variables,
// which is where all of the heavy arithmetic in this project lives.
class Monomial {
public:
  struct Factor {
    std::uint32_t var;
    std::uint32_t exp;
    friend bool operator==(const Factor&, const Factor&) = default;
  };
  using Factors = boost::container::small_vector<Factor, 3>;

  Monomial() = default;
  static Monomial variable(std::uint32_t var, std::uint32_t exp = 1);

  bool is_one() const { return factors_.empty(); }
  std::int64_t total_degree() const;
  std::uint32_t exponent_of(std::uint32_t var) const;
  bool mentions(std::uint32_t var) const { return exponent_of(var) != 0; }
  const Factors& factors() const { return factors_; }

  Monomial times(const Monomial& other) const;
  std::optional<Monomial> divided_by(const Monomial& other) const;
  Monomial pow(std::uint32_t e) const;

  // Graded lexicographic order: higher total degree first, ties broken
  // lexicographically with earlier context variables more significant.
  // Returns <0, 0, >0 for a < b, a == b, a > b.
  static int compare(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.factors_ == b.factors_;
  }

  std::size_t hash() const;

  // Internal: assumes `f` already sorted with positive exponents.
  static Monomial from_sorted(Factors f);

private:
  Factors factors_;
};

}  // namespace varembed
