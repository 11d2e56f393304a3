#include <cmath>
#include <vector>

#include <doctest.h>

#include "lucanon/hosvd.hpp"
#include "lucanon/random.hpp"
#include "lucanon/symmetry.hpp"
#include "test_helpers.hpp"

using namespace lucanon;

TEST_CASE("degeneracy_partition groups repeated values") {
  SUBCASE("the diagonal fixture splits as {1},{2},{3-4}") {
    const double g = std::sqrt(0.1);
    const ModePartition p = degeneracy_partition({0.8, 0.4, g, g});
    REQUIRE(p.blocks.size() == 3);
    CHECK(p.blocks[0].begin == 0);
    CHECK(p.blocks[0].end == 1);
    CHECK(p.blocks[1].begin == 1);
    CHECK(p.blocks[1].end == 2);
    CHECK(p.blocks[2].begin == 2);
    CHECK(p.blocks[2].end == 4);
    CHECK(p.blocks[2].value == doctest::Approx(g).epsilon(1e-12));
    CHECK_FALSE(p.near_degenerate);
  }

  SUBCASE("an exact tie is one block") {
    const double h = 1.0 / std::sqrt(2.0);
    const ModePartition p = degeneracy_partition({h, h});
    REQUIRE(p.blocks.size() == 1);
    CHECK(p.blocks[0].size() == 2);
  }

  SUBCASE("the W spectrum splits into singletons") {
    const ModePartition p =
        degeneracy_partition({0.8164965809277260, 0.5773502691896257});
    REQUIRE(p.blocks.size() == 2);
    CHECK(p.blocks[0].size() == 1);
    CHECK(p.blocks[1].size() == 1);
  }

  SUBCASE("ascending input throws") {
    CHECK_THROWS_AS(degeneracy_partition({0.4, 0.8}), NotSorted);
  }

  SUBCASE("trailing tiny values form a zero block") {
    const ModePartition p = degeneracy_partition({0.9, 0.43589, 1e-12, 0.0});
    REQUIRE(p.blocks.size() == 3);
    CHECK(p.blocks[2].zero);
    CHECK(p.blocks[2].begin == 2);
    CHECK(p.blocks[2].end == 4);
    CHECK_FALSE(p.blocks[0].zero);
  }

  SUBCASE("chained near values merge (documented coarsening)") {
    // Consecutive gaps 4e-9 are under gap_tol = 1e-8 * 0.5, but the total
    // spread 8e-9 exceeds it; greedy chaining still merges all three.
    const ModePartition p =
        degeneracy_partition({0.5, 0.5 - 4e-9, 0.5 - 8e-9});
    REQUIRE(p.blocks.size() == 1);
    CHECK(p.blocks[0].size() == 3);
  }

  SUBCASE("a split near the tolerance boundary sets the near flag") {
    // Gap 1.5e-8 splits (gap_tol = 5e-9 for max 0.5) but sits within the
    // 10x reporting window.
    const ModePartition p = degeneracy_partition({0.5, 0.5 - 1.5e-8});
    REQUIRE(p.blocks.size() == 2);
    CHECK(p.near_degenerate);

    const ModePartition q = degeneracy_partition({0.5, 0.3});
    REQUIRE(q.blocks.size() == 2);
    CHECK_FALSE(q.near_degenerate);
  }

  SUBCASE("partition of block representatives is unchanged (idempotence)") {
    const double g = std::sqrt(0.1);
    const ModePartition p = degeneracy_partition({0.8, 0.4, g, g});
    std::vector<double> reps;
    for (const auto& b : p.blocks) reps.push_back(b.value);
    const ModePartition q = degeneracy_partition(reps);
    CHECK(q.blocks.size() == p.blocks.size());
    for (const auto& b : q.blocks) CHECK(b.size() == 1);
  }
}

TEST_CASE("symmetry_structure across the standard states") {
  SUBCASE("GHZ: one size-2 block per mode") {
    const SymmetryStructure s = symmetry_structure(hosvd(helpers::ghz()).spectra);
    for (const auto& m : s.modes) {
      REQUIRE(m.blocks.size() == 1);
      CHECK(m.blocks[0].size() == 2);
    }
    CHECK_FALSE(s.all_blocks_size_one());
  }

  SUBCASE("W: phase-only symmetry") {
    const SymmetryStructure s =
        symmetry_structure(hosvd(helpers::w_state()).spectra);
    CHECK(s.all_blocks_size_one());
  }

  SUBCASE("diagonal fixture: {1},{2},{3-4} in both modes") {
    const SymmetryStructure s =
        symmetry_structure(hosvd(helpers::diag44()).spectra);
    for (const auto& m : s.modes) {
      REQUIRE(m.blocks.size() == 3);
      CHECK(m.blocks[2].size() == 2);
    }
  }
}

TEST_CASE("structures_compatible compares sizes and values") {
  const SymmetryStructure ghz_s =
      symmetry_structure(hosvd(helpers::ghz()).spectra);
  const SymmetryStructure w_s =
      symmetry_structure(hosvd(helpers::w_state()).spectra);

  SUBCASE("a state matches its local-unitary image") {
    std::vector<UnitaryMatrix> us;
    for (std::size_t n = 0; n < 3; ++n)
      us.push_back(haar_random_unitary(2, 600 + n));
    const SymmetryStructure moved =
        symmetry_structure(hosvd(multi_apply(helpers::ghz(), us)).spectra);
    CHECK(structures_compatible(ghz_s, moved, 1e-9));
  }

  SUBCASE("GHZ vs W differ") {
    CHECK_FALSE(structures_compatible(ghz_s, w_s, 1e-9));
  }

  SUBCASE("a perturbed diagonal fixture differs") {
    const SymmetryStructure a =
        symmetry_structure(hosvd(helpers::diag44()).spectra);
    const SymmetryStructure b = symmetry_structure(
        hosvd(normalize(helpers::diag44(0.81, 0.4))).spectra);
    CHECK_FALSE(structures_compatible(a, b, 1e-9));
  }

  SUBCASE("reflexive and symmetric") {
    CHECK(structures_compatible(w_s, w_s, 1e-9));
    CHECK(structures_compatible(ghz_s, w_s, 1e-9) ==
          structures_compatible(w_s, ghz_s, 1e-9));
  }

  SUBCASE("mode-count mismatch throws") {
    SymmetryStructure truncated = ghz_s;
    truncated.modes.pop_back();
    CHECK_THROWS_AS(structures_compatible(ghz_s, truncated, 1e-9),
                    DimensionMismatch);
  }
}

TEST_CASE("random states are nondegenerate nearly always") {
  int all_singletons = 0;
  const int trials = 200;
  for (int i = 0; i < trials; ++i) {
    const StateTensor t = random_state({2, 2, 2}, 700 + i);
    if (symmetry_structure(hosvd(t).spectra).all_blocks_size_one())
      ++all_singletons;
  }
  CHECK(all_singletons >= trials * 99 / 100);
}

TEST_CASE("planted pairs have identical structures") {
  std::uint64_t seed = 900;
  for (int i = 0; i < 10; ++i) {
    const StateTensor t = random_state({3, 2, 2}, seed++);
    std::vector<UnitaryMatrix> us;
    for (std::size_t n = 0; n < 3; ++n)
      us.push_back(haar_random_unitary(t.dims()[n], seed++));
    const SymmetryStructure a = symmetry_structure(hosvd(t).spectra);
    const SymmetryStructure b =
        symmetry_structure(hosvd(multi_apply(t, us)).spectra);
    CHECK(structures_compatible(a, b, 1e-9));
  }
}
