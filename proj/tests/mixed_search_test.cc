// Copyright 2026 The Berge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "berge/mixed_search.h"
#include "berge/verifier.h"
#include "test_util.h"

namespace berge {
namespace {

using testing::ExampleOneGame;
using testing::ExampleTwoGame;
using testing::FstGame;
using testing::Q;

const SolutionSet kFull = SolutionSet::Full();
const SolutionSet kHalfUp = SolutionSet::Interval(Q(1, 2), true, 1, false);

// Player masks for the three-player games: player 0 is the high bit.
constexpr std::uint64_t kFirst = 0b100;
constexpr std::uint64_t kSecond = 0b010;
constexpr std::uint64_t kThird = 0b001;

Partition Part(std::uint64_t pure_mask, int n = 3) { return {n, pure_mask}; }

std::vector<Rational> Constants(const std::vector<LinearFn>& lines) {
  std::vector<Rational> out;
  for (const LinearFn& l : lines) {
    CHECK(l.slope == 0);
    out.push_back(l.intercept);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST_CASE("player systems") {
  const Game g2 = ExampleTwoGame();
  CHECK(PlayerSystem(g2, 0) ==
        std::vector<LinearFn>{{4, 3}, {-8, 9}, {-2, 6}, {6, 2}});
  CHECK(PlayerSystem(g2, 1) ==
        std::vector<LinearFn>{{3, 2}, {-3, 4}, {6, 1}, {0, 3}});
  CHECK(PlayerSystem(g2, 2) ==
        std::vector<LinearFn>{{5, -3}, {0, 0}, {-10, 6}, {15, -9}});
  CHECK(PlayerSystem(FstGame(), 2) ==
        std::vector<LinearFn>{{1, 1}, {-1, 3}, {-1, 3}, {0, 2}});
  CHECK(PlayerSystem(FstGame(), 0) ==
        std::vector<LinearFn>{{-1, 3}, {-3, 4}, {-1, 3}, {-3, 4}});
  // Example 1: constant systems, compared as multisets.
  CHECK(Constants(PlayerSystem(ExampleOneGame(), 0)) ==
        std::vector<Rational>{0, 1, 1, 2});
  CHECK(Constants(PlayerSystem(ExampleOneGame(), 1)) ==
        std::vector<Rational>{0, 1, 1, 2});
  CHECK(Constants(PlayerSystem(ExampleOneGame(), 2)) ==
        std::vector<Rational>{0, 1, 1, 2});
  CHECK_THROWS_AS(PlayerSystem(g2, 3), std::out_of_range);
}

TEST_CASE("completely mixed equilibria") {
  const auto g2 = FullyMixedBerge(ExampleTwoGame());
  REQUIRE(g2.has_value());
  CHECK(g2->source == BoxSource::kFullyMixed);
  CHECK(g2->constraints ==
        std::vector<PlayerConstraint>{SolutionSet::Point(Q(1, 2)),
                                      SolutionSet::Point(Q(1, 3)),
                                      SolutionSet::Point(Q(3, 5))});
  CHECK_FALSE(FullyMixedBerge(ExampleOneGame()).has_value());
  CHECK_FALSE(FullyMixedBerge(FstGame()).has_value());
}

TEST_CASE("partition enumeration") {
  CHECK(EnumeratePartitions(3).size() == 6);
  CHECK(EnumeratePartitions(4).size() == 14);
  CHECK(EnumeratePartitions(2).size() == 2);
  CHECK(EnumeratePartitions(10).size() == 1022);
  const auto three = EnumeratePartitions(3);
  for (std::size_t k = 0; k < three.size(); ++k) {
    CHECK(three[k].pure_mask == k + 1);
  }
  CHECK(three[4].PurePlayers() == std::vector<int>{0, 2});
  CHECK(three[4].MixedPlayers() == std::vector<int>{1});
  CHECK_THROWS_AS(EnumeratePartitions(1), std::invalid_argument);
}

TEST_CASE("step 1 candidates") {
  const Game fst = FstGame();
  CHECK(Step1Candidates(fst, Part(kFirst | kThird)) ==
        std::vector<PureProfile>{{{0, 0}}});
  CHECK(Step1Candidates(fst, Part(kThird)) ==
        std::vector<PureProfile>{{{0}}});
  CHECK(Step1Candidates(fst, Part(kFirst | kSecond)).empty());
  CHECK(Step1Candidates(fst, Part(kFirst)).empty());
  CHECK(Step1Candidates(fst, Part(kSecond)).empty());
  for (const Partition& p : EnumeratePartitions(3)) {
    CHECK(Step1Candidates(ExampleOneGame(), p).empty());
  }
  // Neither strategy of the first player in the second example gives him a
  // constant payoff over the others' profiles.
  CHECK(Step1Candidates(ExampleTwoGame(), Part(kFirst)).empty());
  CHECK_THROWS_AS(Step1Candidates(fst, Part(kFirst, 4)),
                  std::invalid_argument);
}

TEST_CASE("step 2 subequilibria") {
  const Game fst = FstGame();
  CHECK(Step2Subequilibria(fst, Part(kFirst | kThird), {{0, 0}}) ==
        std::vector<SolutionSet>{kFull});
  CHECK(Step2Subequilibria(fst, Part(kThird), {{0}}) ==
        std::vector<SolutionSet>{kFull, kFull});
  CHECK_THROWS_AS(Step2Subequilibria(fst, Part(kThird), {{0, 0}}),
                  std::invalid_argument);
}

TEST_CASE("step 3 refinement") {
  const Game fst = FstGame();
  CHECK(Step3Refine(fst, Part(kFirst | kThird), {{0, 0}}, {kFull}) ==
        std::vector<SolutionSet>{kHalfUp});
  CHECK(Step3Refine(fst, Part(kThird), {{0}}, {kFull, kFull}) ==
        std::vector<SolutionSet>{kHalfUp, kHalfUp});

  // The second player's payoff ignores everyone: nothing to refine.
  const Game flat = testing::MakeGame(
      3, {{1, 2, 0}, {1, 2, 0}, {1, 3, 0}, {1, 3, 0},
          {1, 2, 0}, {1, 2, 0}, {1, 3, 0}, {1, 3, 0}});
  CHECK(Step3Refine(flat, Part(kFirst | kThird), {{0, 0}}, {kFull}) ==
        std::vector<SolutionSet>{kFull});

  CHECK_THROWS_AS(Step3Refine(fst, Part(kThird), {{0}},
                              {SolutionSet::Empty(), kFull}),
                  std::logic_error);
  // A point that is not a step-2 solution is rejected.
  CHECK_THROWS_AS(Step3Refine(ExampleTwoGame(), Part(kThird), {{0}},
                              {SolutionSet::Point(Q(1, 7)), kFull}),
                  std::logic_error);
}

TEST_CASE("mixed-type equilibria of the trainer game") {
  const Game fst = FstGame();
  const auto ft_s = MixedTypeBerge(fst, Part(kFirst | kThird));
  REQUIRE(ft_s.size() == 1);
  CHECK(ft_s[0].constraints ==
        std::vector<PlayerConstraint>{PureStrategy{0}, kHalfUp,
                                      PureStrategy{0}});
  CHECK(ft_s[0].pure_subprofile == PureProfile{{0, 0}});

  const auto st_f = MixedTypeBerge(fst, Part(kSecond | kThird));
  REQUIRE(st_f.size() == 1);
  CHECK(st_f[0].constraints ==
        std::vector<PlayerConstraint>{kHalfUp, PureStrategy{0},
                                      PureStrategy{0}});

  CHECK(MixedTypeBerge(fst, Part(kFirst | kSecond)).empty());
  CHECK_THROWS_AS(MixedTypeBerge(fst, Part(0)), std::invalid_argument);
  CHECK_THROWS_AS(MixedTypeBerge(fst, Part(0b111)), std::invalid_argument);
}

TEST_CASE("all Berge equilibria of the bundled games") {
  const BergeReport none = AllBerge(ExampleOneGame());
  CHECK(none.boxes.empty());
  REQUIRE(none.diagnostics.size() == 8);
  CHECK(none.diagnostics[0].eliminated_at == Elimination::kPureSearch);
  CHECK(none.diagnostics[1].eliminated_at == Elimination::kPlayerSystem);
  for (std::size_t k = 2; k < 8; ++k) {
    CHECK(none.diagnostics[k].eliminated_at == Elimination::kStep1);
  }

  const BergeReport fst = AllBerge(FstGame());
  REQUIRE(fst.boxes.size() == 4);
  CHECK(fst.boxes[0].source == BoxSource::kPure);
  CHECK(fst.boxes[0].constraints ==
        std::vector<PlayerConstraint>{PureStrategy{0}, PureStrategy{0},
                                      PureStrategy{0}});
  CHECK(fst.boxes[1].partition == Part(kThird));
  CHECK(fst.boxes[1].constraints ==
        std::vector<PlayerConstraint>{kHalfUp, kHalfUp, PureStrategy{0}});
  CHECK(fst.boxes[2].partition == Part(kSecond | kThird));
  CHECK(fst.boxes[3].partition == Part(kFirst | kThird));

  const BergeReport g2 = AllBerge(ExampleTwoGame());
  CHECK(std::any_of(g2.boxes.begin(), g2.boxes.end(), [](const auto& box) {
    return box.source == BoxSource::kFullyMixed &&
           box.Contains(testing::Mixed({Q(1, 2), Q(1, 3), Q(3, 5)}));
  }));
}

// Profiles drawn from a box: inclusive endpoints plus random interior points.
std::vector<MixedProfile> SampleBox(std::mt19937_64& rng,
                                    const EquilibriumBox& box, int count) {
  std::vector<MixedProfile> out;
  for (int k = 0; k < count; ++k) {
    std::vector<Rational> probs;
    for (const PlayerConstraint& c : box.constraints) {
      if (const auto* pure = std::get_if<PureStrategy>(&c)) {
        probs.emplace_back(pure->bit == 0 ? 1 : 0);
        continue;
      }
      const SolutionSet& set = std::get<SolutionSet>(c);
      if (set.IsPoint()) {
        probs.push_back(set.point());
      } else if (k % 3 == 0 && set.lo_inclusive()) {
        probs.push_back(set.lo());
      } else if (k % 3 == 1 && set.hi_inclusive()) {
        probs.push_back(set.hi());
      } else {
        const Rational t = testing::RandomOpenProbability(rng);
        probs.push_back(set.lo() + t * (set.hi() - set.lo()));
      }
    }
    out.emplace_back(std::move(probs));
  }
  return out;
}

Game RandomTestGame(std::mt19937_64& rng, int trial, int n) {
  return trial % 2 == 0 ? testing::RandomGame(rng, n)
                        : testing::RandomDegenerateGame(rng, n);
}

TEST_CASE("every sampled box profile passes the verifier") {
  std::mt19937_64 rng(41);
  int boxes_seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 3;
    const Game g = RandomTestGame(rng, trial, n);
    const BergeReport report = AllBerge(g);
    for (const EquilibriumBox& box : report.boxes) {
      ++boxes_seen;
      for (const MixedProfile& m : SampleBox(rng, box, 50)) {
        CHECK(VerifyBerge(g, m));
      }
    }
  }
  CHECK(boxes_seen > 50);
}

TEST_CASE("boxes agree with the verifier on the 1/8 grid") {
  std::mt19937_64 rng(42);
  int continuum_boxes = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 2;
    const Game g = RandomTestGame(rng, trial, n);
    const BergeReport report = AllBerge(g);
    for (const EquilibriumBox& box : report.boxes) {
      for (const PlayerConstraint& c : box.constraints) {
        const auto* set = std::get_if<SolutionSet>(&c);
        if (set != nullptr && set->IsInterval()) ++continuum_boxes;
      }
    }
    ForEachGridProfile(n, 8, [&](const MixedProfile& m) {
      CHECK(BoxesContain(report, m) == VerifyBerge(g, m));
    });
  }
  CHECK(continuum_boxes > 0);
}

TEST_CASE("boxes are pairwise disjoint") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 2;
    const Game g = RandomTestGame(rng, trial, n);
    const BergeReport report = AllBerge(g);
    ForEachGridProfile(n, 12, [&](const MixedProfile& m) {
      int hits = 0;
      for (const EquilibriumBox& box : report.boxes) hits += box.Contains(m);
      CHECK(hits <= 1);
    });
  }
}

TEST_CASE("completely mixed coordinates obey the trichotomy") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 3;
    const Game g = RandomTestGame(rng, trial, n);
    for (int i = 0; i < n; ++i) {
      const SolutionSet set = SolveAllEqual(PlayerSystem(g, i));
      CHECK((set.IsEmpty() || set.IsPoint() || set.IsFull()));
    }
    if (auto box = FullyMixedBerge(g)) {
      for (const PlayerConstraint& c : box->constraints) {
        const SolutionSet& set = std::get<SolutionSet>(c);
        CHECK((set.IsPoint() || set.IsFull()));
      }
    }
  }
}

Game RescalePlayer(const Game& g, int player, const Rational& scale,
                   const Rational& shift) {
  std::vector<Rational> payoffs = g.payoffs();
  for (std::uint64_t cell = 0; cell < g.num_profiles(); ++cell) {
    Rational& v = payoffs[cell * g.num_players() + player];
    v = scale * v + shift;
  }
  return Game(g.num_players(), std::move(payoffs), g.player_names());
}

TEST_CASE("positive affine rescaling of one player keeps the boxes") {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 3;
    const Game g = RandomTestGame(rng, trial, n);
    Rational scale = testing::RandomOpenProbability(rng) * (1 + trial % 7);
    const Game h = RescalePlayer(g, trial % n, scale,
                                 testing::RandomRational(rng));
    CHECK(AllBerge(g).boxes == AllBerge(h).boxes);
  }
}

TEST_CASE("step 2 matches a brute-force subgame check") {
  std::mt19937_64 rng(46);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 2;
    const Game g = testing::RandomDegenerateGame(rng, n);
    for (const Partition& part : EnumeratePartitions(n)) {
      const std::vector<int> pure = part.PurePlayers();
      const std::vector<int> mixed = part.MixedPlayers();
      for (const PureProfile& sub : Step1Candidates(g, part)) {
        const std::vector<SolutionSet> step2 =
            Step2Subequilibria(g, part, sub);
        for (std::size_t k = 0; k < mixed.size(); ++k) {
          const int i = mixed[k];
          // x is admissible iff player i's expected payoff is the same at
          // every pure profile of M \ {i}, with P fixed.
          auto admissible = [&](const Rational& x) {
            std::vector<Rational> first;
            bool same = true;
            for (std::uint64_t c = 0; c < (std::uint64_t{1} << n); ++c) {
              std::vector<Rational> probs(n);
              bool matches = true;
              for (std::size_t q = 0; q < pure.size(); ++q) {
                const int bit = (c >> (n - 1 - pure[q])) & 1;
                matches = matches && bit == sub.bits[q];
              }
              if (!matches || ((c >> (n - 1 - i)) & 1)) continue;
              for (int j = 0; j < n; ++j) {
                probs[j] = ((c >> (n - 1 - j)) & 1) ? 0 : 1;
              }
              probs[i] = x;
              const Rational v = testing::OracleExpectedPayoff(g, probs, i);
              if (first.empty()) {
                first.push_back(v);
              } else if (v != first[0]) {
                same = false;
              }
            }
            return same;
          };
          for (int step = 1; step < 60; ++step) {
            const Rational x = Q(step, 60);
            CHECK(step2[k].Contains(x) == admissible(x));
          }
          if (step2[k].IsPoint()) CHECK(admissible(step2[k].point()));
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("constant games split the cube into 3^n boxes") {
  for (int n = 2; n <= 7; ++n) {
    const Game g(n, std::vector<Rational>((std::size_t{1} << n) * n, Q(5)));
    const BergeReport report = AllBerge(g);
    std::size_t expected = 1;
    for (int i = 0; i < n; ++i) expected *= 3;
    CHECK(report.boxes.size() == expected);
    for (const EquilibriumBox& box : report.boxes) {
      for (const PlayerConstraint& c : box.constraints) {
        const auto* set = std::get_if<SolutionSet>(&c);
        if (set != nullptr) CHECK(set->IsFull());
      }
    }
  }
}

TEST_CASE("worker threads do not change the report") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + trial % 3;
    const Game g = RandomTestGame(rng, trial, n);
    const BergeReport serial = AllBerge(g);
    const BergeReport parallel = AllBerge(g, {.num_threads = 4});
    CHECK(serial.boxes == parallel.boxes);
    CHECK(serial.diagnostics.size() == parallel.diagnostics.size());
  }
}

}  // namespace
}  // namespace berge
