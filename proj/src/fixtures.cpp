#include "dynrefl/fixtures.hpp"

namespace dynrefl::fixtures {

Base ex53() {
  std::vector<std::string> labels{"e", "l1", "l2", "l3", "l4", "l5"};
  std::vector<Index> table{
      0, 1, 2, 3, 4, 5,  //
      1, 5, 3, 4, 2, 0,  //
      2, 3, 5, 1, 0, 4,  //
      3, 4, 0, 2, 5, 1,  //
      4, 0, 1, 5, 3, 2,  //
      5, 2, 4, 0, 1, 3,
  };
  auto L = LeftQuasigroup::validate(labels, table, 0);
  auto G = symmetric_group(3);
  std::vector<Index> pi;
  for (const char* c : {"id", "(123)", "(132)", "(12)", "(13)", "(23)"})
    pi.push_back(G.resolve(c));
  return make_base(PairedStructure::validate(std::move(L), std::move(G), std::move(pi)));
}

Ex89 ex89() {
  auto B = ex53();
  std::vector<Index> action{
      0, 1, 2,  // e
      1, 0, 2,  // l1
      2, 1, 0,  // l2
      0, 2, 1,  // l3
      1, 2, 0,  // l4
      2, 0, 1,  // l5
  };
  std::vector<Index> f{2, 4, 3};  // x1 ↦ l2, x2 ↦ l4, x3 ↦ l3
  std::vector<Index> expected{
      2, 4, 3,  // e
      4, 2, 3,  // l1
      3, 4, 2,  // l2
      2, 3, 4,  // l3
      4, 3, 2,  // l4
      3, 2, 4,  // l5
  };
  auto mod = from_action(B, Carrier({"x1", "x2", "x3"}), action, f);
  auto S = make_setting(B, std::move(mod));
  const auto& G = B.P->G();
  auto F = family_inner(G, {G.resolve("(132)"), G.resolve("(13)"), G.resolve("(12)")});
  return {std::move(S), std::move(F), action, f, expected};
}

Base zn3() {
  auto L = LeftQuasigroup::validate({"0", "1", "2"}, {0, 1, 2, 1, 2, 0, 2, 0, 1}, 0);
  return make_base(PairedStructure::validate(std::move(L), cyclic_group(3), {0, 1, 2}));
}

}  // namespace dynrefl::fixtures
