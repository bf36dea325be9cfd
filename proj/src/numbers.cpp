#include "hstar/numbers.hpp"

#include "hstar/errors.hpp"

namespace hstar {

Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw InputError("floor_div: division by zero");
  Int q = a / b;
  Int r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

Int ceil_div(const Int& a, const Int& b) {
  if (b == 0) throw InputError("ceil_div: division by zero");
  Int q = a / b;
  Int r = a % b;
  if (r != 0 && ((r < 0) == (b < 0))) ++q;
  return q;
}

Int factorial(long n) {
  if (n < 0) throw InputError("factorial: negative argument");
  Int out = 1;
  for (long i = 2; i <= n; ++i) out *= i;
  return out;
}

Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int out = 1;
  for (long i = 1; i <= k; ++i) {
    out *= (n - k + i);
    out /= i;
  }
  return out;
}

bool is_integer(const Rat& r) { return denominator(r) == 1; }

std::string to_string(const Int& x) { return x.str(); }

std::string to_string(const Rat& x) {
  if (is_integer(x)) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

}  // namespace hstar
