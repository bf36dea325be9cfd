#include "hstar/ehrhart.hpp"

#include <utility>

#include "hstar/errors.hpp"
#include "hstar/reflexive.hpp"

namespace hstar {

Int count_points(const LatticePolytope& p, long k) {
  if (k < 0)
    throw InputError("count_points: negative dilation (reciprocity is a "
                     "documented fast path, not a negative-argument call)");
  if (k == 0) return 1;  // constant term of the Ehrhart series
  const LatticePolytope dilated = (k == 1) ? p : p.dilate(Int(k));
  return Int(dilated.lattice_points(PointLocation::Closed).size());
}

EhrhartCalculator::EhrhartCalculator(LatticePolytope p) : p_(std::move(p)) {}

Int EhrhartCalculator::count(long k) {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = counts_.find(k);
    if (it != counts_.end()) return it->second;
  }
  Int c = count_points(p_, k);
  std::lock_guard<std::mutex> lock(mutex_);
  counts_.emplace(k, c);
  return c;
}

std::map<long, Int> EhrhartCalculator::counts() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return counts_;
}

RatPolynomial EhrhartCalculator::ehrhart_polynomial(bool use_reciprocity) {
  const int d = p_.dim();
  std::vector<std::pair<Int, Int>> samples;
  if (!use_reciprocity) {
    for (long k = 0; k <= d; ++k) samples.emplace_back(Int(k), count(k));
  } else {
    if (!is_reflexive(p_).reflexive())
      throw InputError(
          "ehrhart_polynomial: the reciprocity fast path requires a "
          "reflexive polytope");
    // i(P,-k) = (-1)^d i(P,k-1) supplies the negative samples.
    const int m = (d + 1) / 2;
    for (long k = 0; k <= m; ++k) samples.emplace_back(Int(k), count(k));
    for (long k = 1; k <= d - m; ++k) {
      Int value = count(k - 1);
      if (d % 2 != 0) value = -value;
      samples.emplace_back(Int(-k), std::move(value));
    }
  }
  RatPolynomial poly = lagrange_interpolate(samples);
  if (poly.degree() != d)
    throw InvariantViolation("ehrhart_polynomial: interpolant degree " +
                             std::to_string(poly.degree()) + ", expected " +
                             std::to_string(d));
  if (use_reciprocity) {
    // The fast path is never trusted blind: spot-check one extra dilation.
    const long extra = (d + 1) / 2 + 1;
    const Rat predicted = poly.eval(Int(extra));
    if (!is_integer(predicted) || numerator(predicted) != count(extra))
      throw InvariantViolation(
          "ehrhart_polynomial: reciprocity fast path failed the extra-"
          "dilation cross-check at k = " + std::to_string(extra));
  }
  return poly;
}

std::vector<Int> EhrhartCalculator::delta_vector(bool use_reciprocity) {
  const int d = p_.dim();
  std::vector<Int> counts(d + 1);
  if (use_reciprocity) {
    const RatPolynomial poly = ehrhart_polynomial(true);
    for (long k = 0; k <= d; ++k) {
      const Rat value = poly.eval(Int(k));
      if (!is_integer(value))
        throw InvariantViolation(
            "delta_vector: non-integer Ehrhart value at k = " + std::to_string(k));
      counts[k] = numerator(value);
    }
  } else {
    for (long k = 0; k <= d; ++k) counts[k] = count(k);
  }
  // delta_j = sum_{i<=j} (-1)^i C(d+1, i) i(P, j-i)
  std::vector<Int> delta(d + 1);
  for (int j = 0; j <= d; ++j) {
    Int acc = 0;
    for (int i = 0; i <= j; ++i) {
      const Int term = binomial(d + 1, i) * counts[j - i];
      if (i % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    if (acc < 0)
      throw InvariantViolation("delta_vector: negative coefficient delta_" +
                               std::to_string(j) + " = " + to_string(acc) +
                               "; counting bug");
    delta[j] = std::move(acc);
  }
  return delta;
}

RatPolynomial ehrhart_polynomial(const LatticePolytope& p) {
  return EhrhartCalculator(p).ehrhart_polynomial();
}

std::vector<Int> delta_vector(const LatticePolytope& p) {
  return EhrhartCalculator(p).delta_vector();
}

IntPolynomial delta_polynomial(const LatticePolytope& p) {
  return IntPolynomial(delta_vector(p));
}

bool DeltaReport::all_passed() const {
  for (const DeltaCheck* c : {&delta0, &delta1_identity, &deltad_interior,
                              &nonnegativity, &hibi_lower_bound, &palindromic})
    if (c->applicable && !c->passed) return false;
  return true;
}

DeltaReport validate_delta(const LatticePolytope& p) {
  EhrhartCalculator calc(p);
  DeltaReport report;
  const int d = p.dim();
  report.dim = d;
  report.delta = calc.delta_vector();
  const std::vector<Int>& delta = report.delta;

  report.delta0.passed = (delta[0] == 1);
  report.delta0.witness = "delta_0 = " + to_string(delta[0]);

  const Int i1 = calc.count(1);
  report.delta1_identity.passed = (delta[1] == i1 - (d + 1));
  report.delta1_identity.witness =
      "delta_1 = " + to_string(delta[1]) + ", i(P,1) - (d+1) = " +
      to_string(Int(i1 - (d + 1)));

  const Int interior = Int(p.lattice_points(PointLocation::Interior).size());
  report.deltad_interior.passed = (delta[d] == interior);
  report.deltad_interior.witness = "delta_d = " + to_string(delta[d]) +
                                   ", interior points = " + to_string(interior);

  report.nonnegativity.passed = true;
  for (const Int& c : delta)
    if (c < 0) report.nonnegativity.passed = false;
  report.nonnegativity.witness = "all coefficients nonnegative";

  report.hibi_lower_bound.applicable = (delta[d] != 0);
  report.hibi_lower_bound.passed = true;
  if (report.hibi_lower_bound.applicable) {
    for (int i = 1; i <= d - 1; ++i)
      if (delta[1] > delta[i]) {
        report.hibi_lower_bound.passed = false;
        report.hibi_lower_bound.witness =
            "delta_1 = " + to_string(delta[1]) + " > delta_" + std::to_string(i) +
            " = " + to_string(delta[i]);
        break;
      }
    if (report.hibi_lower_bound.passed)
      report.hibi_lower_bound.witness = "delta_1 <= delta_i for 1 <= i <= d-1";
  } else {
    report.hibi_lower_bound.witness = "not applicable: delta_d = 0";
  }

  report.palindromic.passed = true;
  for (int i = 0; 2 * i <= d; ++i)
    if (delta[i] != delta[d - i]) {
      report.palindromic.passed = false;
      report.palindromic.witness = "delta_" + std::to_string(i) + " = " +
                                   to_string(delta[i]) + " != delta_" +
                                   std::to_string(d - i) + " = " +
                                   to_string(delta[d - i]);
      break;
    }
  if (report.palindromic.passed)
    report.palindromic.witness = "delta_i = delta_{d-i} for all i";

  return report;
}

}  // namespace hstar
