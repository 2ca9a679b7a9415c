#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <doctest.h>

#include "dynrefl/check.hpp"
#include "dynrefl/yang_baxter.hpp"

namespace testing {

using dynrefl::Index;

/// Ids of the identities that fail, empty when all hold.
inline std::vector<std::string> failing(const std::vector<dynrefl::Identity>& ids) {
  std::vector<std::string> out;
  for (const auto& r : dynrefl::run_all(ids))
    if (!r.passed) out.push_back(r.check);
  return out;
}

/// A random left quasigroup on n elements with unit 0: row 0 is the
/// identity and row a is any permutation p with p(0) = a.
inline std::vector<Index> random_quasigroup(std::size_t n, std::mt19937_64& rng) {
  std::vector<Index> t(n * n);
  for (Index b = 0; b < n; ++b) t[b] = b;
  for (Index a = 1; a < n; ++a) {
    std::vector<Index> rest;
    for (Index v = 0; v < n; ++v)
      if (v != a) rest.push_back(v);
    std::shuffle(rest.begin(), rest.end(), rng);
    t[a * n] = a;
    for (Index b = 1; b < n; ++b) t[a * n + b] = rest[b - 1];
  }
  return t;
}

inline std::vector<Index> random_bijection(std::size_t n, std::mt19937_64& rng) {
  std::vector<Index> p(n);
  std::iota(p.begin(), p.end(), Index{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline std::vector<std::string> numbered(std::size_t n, const std::string& prefix = "q") {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(prefix + std::to_string(i));
  return v;
}

}  // namespace testing
