#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace icstalk {

/// binom(n, k) for n >= 0; zero when k < 0 or k > n. Throws on int64 overflow.
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  __int128 acc = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > INT64_MAX)
      throw std::overflow_error("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                                ") exceeds 64 bits");
  }
  return static_cast<std::int64_t>(acc);
}

inline std::int64_t checked_pow(std::int64_t base, std::int64_t exp) {
  __int128 acc = 1;
  for (std::int64_t i = 0; i < exp; ++i) {
    acc *= base;
    if (acc > INT64_MAX || acc < INT64_MIN) throw std::overflow_error("power exceeds 64 bits");
  }
  return static_cast<std::int64_t>(acc);
}

/// All p-element subsets of {0..n-1} as increasing index lists, lexicographic.
inline std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t p) {
  std::vector<std::vector<std::size_t>> out;
  if (p > n) return out;
  std::vector<std::size_t> cur(p);
  for (std::size_t i = 0; i < p; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = p;
    while (i > 0 && cur[i - 1] == n - p + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < p; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace icstalk
