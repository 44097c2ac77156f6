#include "palcheck/permutation.hpp"

#include <algorithm>
#include <string>

#include "palcheck/errors.hpp"

namespace palcheck {

bool Permutation::is_valid() const {
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 1 || v > degree() || seen[static_cast<std::size_t>(v - 1)]) return false;
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  return true;
}

Permutation Permutation::identity(int r) {
  Permutation p;
  p.images.resize(static_cast<std::size_t>(r));
  for (int i = 1; i <= r; ++i) p.images[static_cast<std::size_t>(i - 1)] = i;
  return p;
}

uint64_t factorial(int r) {
  uint64_t f = 1;
  for (int i = 2; i <= r; ++i) f *= static_cast<uint64_t>(i);
  return f;
}

uint64_t Permutation::lex_rank() const {
  // Factorial number system: count smaller unused values at each position.
  const int r = degree();
  uint64_t rank = 0;
  for (int i = 0; i < r; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < r; ++j) {
      if (images[static_cast<std::size_t>(j)] < images[static_cast<std::size_t>(i)]) ++smaller;
    }
    rank += static_cast<uint64_t>(smaller) * factorial(r - 1 - i);
  }
  return rank;
}

Permutation Permutation::from_lex_rank(int degree, uint64_t rank) {
  std::vector<int> pool;
  pool.reserve(static_cast<std::size_t>(degree));
  for (int i = 1; i <= degree; ++i) pool.push_back(i);
  Permutation p;
  p.images.reserve(static_cast<std::size_t>(degree));
  for (int i = degree - 1; i >= 0; --i) {
    const uint64_t f = factorial(i);
    const std::size_t idx = static_cast<std::size_t>(rank / f);
    rank %= f;
    p.images.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return p;
}

std::string Permutation::to_digits() const {
  std::string s;
  for (int v : images) s += static_cast<char>('0' + v);
  return s;
}

Permutation alpha_star(const std::vector<long long>& xs) {
  const std::size_t r = xs.size();
  Permutation p;
  p.images.resize(r);
  for (std::size_t i = 0; i < r; ++i) {
    int rank = 0;
    for (std::size_t j = 0; j < r; ++j) {
      if (i != j && xs[j] == xs[i]) {
        throw InputError("alpha_star: entries must be pairwise distinct");
      }
      if (xs[j] <= xs[i]) ++rank;
    }
    p.images[i] = rank;
  }
  return p;
}

Permutation boundary(const Permutation& tau, int i) {
  const int r = tau.degree();
  if (i < 1 || i > r) {
    throw InputError("boundary: index " + std::to_string(i) + " out of range 1.." +
                     std::to_string(r));
  }
  std::vector<long long> rest;
  rest.reserve(static_cast<std::size_t>(r - 1));
  for (int j = 1; j <= r; ++j) {
    if (j != i) rest.push_back(tau(j));
  }
  return alpha_star(rest);
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw InputError("compose: degree mismatch");
  }
  Permutation out;
  out.images.reserve(b.images.size());
  for (const int bi : b.images) {
    out.images.push_back(a(bi));
  }
  return out;
}

std::vector<Permutation> all_permutations(int r) {
  std::vector<Permutation> out;
  Permutation p = Permutation::identity(r);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.images.begin(), p.images.end()));
  return out;
}

}  // namespace palcheck
