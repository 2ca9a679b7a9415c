#pragma once

#include "dynrefl/reflection.hpp"

namespace dynrefl::fixtures {

/// Six-element non-associative left quasigroup {e,l1..l5} paired with S3.
Base ex53();

struct Ex89 {
  ModuleSetting setting;
  HomFamily family;  // inner family g = ((132), (13), (12))
  // Raw inputs, kept for reproduction checks.
  std::vector<Index> action;  // L×X → X, a*3+x
  std::vector<Index> f;       // X → L
  std::vector<Index> expected_dot;  // expected λ ·_X x, λ*3+x
};
Ex89 ex89();

/// Z/3 with π the identity.
Base zn3();

}  // namespace dynrefl::fixtures
