#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hstar/numbers.hpp"

namespace hstar {

/**
 * Integer-coefficient polynomial in one formal variable. Coefficients are
 * stored ascending; the trailing coefficient is nonzero unless the
 * polynomial is zero (empty coefficient list).
 */
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of x^j; zero beyond the degree.
  const Int& coeff(int j) const;

  const std::vector<Int>& coeffs() const { return coeffs_; }

  Int eval(const Int& x) const;

  bool is_palindromic() const;

  std::string str(const std::string& var = "z") const;

  bool operator==(const IntPolynomial&) const = default;

 private:
  std::vector<Int> coeffs_;
};

/** Rational-coefficient polynomial; same storage conventions. */
class RatPolynomial {
 public:
  RatPolynomial() = default;
  explicit RatPolynomial(std::vector<Rat> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Rat& coeff(int j) const;
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  Rat eval(const Rat& x) const;
  Rat eval(const Int& x) const;

  /// True iff every coefficient is an integer.
  bool has_integer_coeffs() const;

  std::string str(const std::string& var = "k") const;

  bool operator==(const RatPolynomial&) const = default;

 private:
  std::vector<Rat> coeffs_;
};

/**
 * Unique polynomial of degree <= samples.size() - 1 through all sample
 * points (abscissa, ordinate), computed exactly. Throws InputError on
 * duplicate abscissae.
 */
RatPolynomial lagrange_interpolate(const std::vector<std::pair<Int, Int>>& samples);

}  // namespace hstar
