#include "palcheck/rational.hpp"

#include <algorithm>

#include "palcheck/errors.hpp"

namespace palcheck {

BigInt ipow(const BigInt& base, unsigned exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp > 0) {
    if (exp & 1u) result *= b;
    exp >>= 1u;
    if (exp > 0) b *= b;
  }
  return result;
}

BigInt binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  BigInt result = 1;
  for (int i = 1; i <= r; ++i) {
    result *= n - r + i;
    result /= i;
  }
  return result;
}

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const std::size_t slash = text.find('/');
  const std::string num_part = text.substr(0, slash);
  if (!is_integer_token(num_part)) {
    throw InputError("rational '" + text + "': numerator is not an integer");
  }
  BigInt num(num_part);
  if (slash == std::string::npos) return Rational(num);

  const std::string den_part = text.substr(slash + 1);
  if (!is_integer_token(den_part)) {
    throw InputError("rational '" + text + "': denominator is not an integer");
  }
  BigInt den(den_part);
  if (den == 0) {
    throw InputError("rational '" + text + "': zero denominator");
  }
  return Rational(num, den);
}

std::string rational_str(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace palcheck
