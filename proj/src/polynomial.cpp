#include "hstar/polynomial.hpp"

#include <set>

#include "hstar/errors.hpp"

namespace hstar {

namespace {

template <typename T>
void trim(std::vector<T>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

template <typename T>
std::string poly_str(const std::vector<T>& coeffs, const std::string& var) {
  if (coeffs.empty()) return "0";
  std::string out;
  for (size_t j = 0; j < coeffs.size(); ++j) {
    const T& c = coeffs[j];
    if (c == 0) continue;
    const bool neg = c < 0;
    T mag = neg ? T(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const bool unit = (mag == 1);
    if (j == 0 || !unit) out += to_string(mag);
    if (j >= 1) {
      out += var;
      if (j >= 2) out += "^" + std::to_string(j);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  trim(coeffs_);
}

const Int& IntPolynomial::coeff(int j) const {
  static const Int zero = 0;
  if (j < 0 || j > degree()) return zero;
  return coeffs_[j];
}

Int IntPolynomial::eval(const Int& x) const {
  Int acc = 0;
  for (int j = degree(); j >= 0; --j) acc = acc * x + coeffs_[j];
  return acc;
}

bool IntPolynomial::is_palindromic() const {
  const int d = degree();
  for (int j = 0; 2 * j <= d; ++j)
    if (coeffs_[j] != coeffs_[d - j]) return false;
  return !coeffs_.empty();
}

std::string IntPolynomial::str(const std::string& var) const {
  return poly_str(coeffs_, var);
}

RatPolynomial::RatPolynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  trim(coeffs_);
}

const Rat& RatPolynomial::coeff(int j) const {
  static const Rat zero = 0;
  if (j < 0 || j > degree()) return zero;
  return coeffs_[j];
}

Rat RatPolynomial::eval(const Rat& x) const {
  Rat acc = 0;
  for (int j = degree(); j >= 0; --j) acc = acc * x + coeffs_[j];
  return acc;
}

Rat RatPolynomial::eval(const Int& x) const { return eval(Rat(x)); }

bool RatPolynomial::has_integer_coeffs() const {
  for (const Rat& c : coeffs_)
    if (!is_integer(c)) return false;
  return true;
}

std::string RatPolynomial::str(const std::string& var) const {
  return poly_str(coeffs_, var);
}

RatPolynomial lagrange_interpolate(const std::vector<std::pair<Int, Int>>& samples) {
  const size_t m = samples.size();
  if (m == 0) throw InputError("lagrange_interpolate: no samples");
  {
    std::set<Int> seen;
    for (const auto& [x, y] : samples)
      if (!seen.insert(x).second)
        throw InputError("lagrange_interpolate: duplicate abscissa " + to_string(x));
  }
  // Accumulate y_i * prod_{j != i} (X - x_j) / (x_i - x_j) coefficient-wise.
  std::vector<Rat> result(m, Rat(0));
  for (size_t i = 0; i < m; ++i) {
    std::vector<Rat> basis{Rat(1)};
    Rat denom = 1;
    for (size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      // basis *= (X - x_j)
      std::vector<Rat> next(basis.size() + 1, Rat(0));
      for (size_t t = 0; t < basis.size(); ++t) {
        next[t + 1] += basis[t];
        next[t] -= basis[t] * Rat(samples[j].first);
      }
      basis = std::move(next);
      denom *= Rat(samples[i].first - samples[j].first);
    }
    const Rat scale = Rat(samples[i].second) / denom;
    for (size_t t = 0; t < basis.size(); ++t) result[t] += basis[t] * scale;
  }
  return RatPolynomial(std::move(result));
}

}  // namespace hstar
