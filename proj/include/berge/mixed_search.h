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

#ifndef BERGE_MIXED_SEARCH_H_
#define BERGE_MIXED_SEARCH_H_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "berge/game.h"
#include "berge/linear.h"

namespace berge {

// Split of the players into those playing pure strategies (P) and those
// playing completely mixed ones (M). The mask uses the profile-index bit
// layout: player i is bit n-1-i.
struct Partition {
  int num_players = 0;
  std::uint64_t pure_mask = 0;

  std::uint64_t mixed_mask() const {
    return ((std::uint64_t{1} << num_players) - 1) & ~pure_mask;
  }
  std::vector<int> PurePlayers() const;
  std::vector<int> MixedPlayers() const;
  bool operator==(const Partition&) const = default;
};

// Partitions with non-empty P and M, ascending by pure_mask: 2^n - 2 of them.
// Throws std::invalid_argument for n < 2.
std::vector<Partition> EnumeratePartitions(int num_players);

// A pure strategy fixed for one player.
struct PureStrategy {
  int bit = 0;
  bool operator==(const PureStrategy&) const = default;
};

using PlayerConstraint = std::variant<PureStrategy, SolutionSet>;

bool Admits(const PlayerConstraint& constraint, const Rational& probability);

enum class BoxSource { kPure, kFullyMixed, kMixedType };

std::string ToString(BoxSource source);

// Cartesian product of per-player constraints. For mixed-type boxes the
// partition and the pure subprofile over P (players in ascending order) are
// recorded.
struct EquilibriumBox {
  BoxSource source = BoxSource::kPure;
  std::optional<Partition> partition;
  PureProfile pure_subprofile;
  std::vector<PlayerConstraint> constraints;

  bool Contains(const MixedProfile& profile) const;
  bool operator==(const EquilibriumBox&) const = default;
};

// The search stage at which a source stopped producing candidates.
enum class Elimination {
  kNone,          // produced at least one box
  kPureSearch,    // no pure profile with a null disappointment vector
  kPlayerSystem,  // some player's system has no root in (0, 1)
  kStep1,         // no pure subprofile of P is equal and maximal
  kStep2,         // every candidate lacks a subequilibrium over M
  kStep3,         // the inequality refinement emptied every candidate
};

std::string ToString(Elimination stage);

struct SourceDiagnostic {
  BoxSource source = BoxSource::kPure;
  std::optional<Partition> partition;
  Elimination eliminated_at = Elimination::kNone;
  std::size_t candidates = 0;  // pure profiles or step-1 subprofiles
  std::size_t boxes = 0;
  std::optional<int> empty_player;  // fully mixed: first unsolvable player
};

struct BergeReport {
  int num_players = 0;
  std::vector<std::string> player_names;
  std::string fingerprint;
  std::vector<EquilibriumBox> boxes;
  std::vector<SourceDiagnostic> diagnostics;
};

// payoff lines of player i against every pure completion of the others,
// ascending by completion index.
std::vector<LinearFn> PlayerSystem(const Game& game, int player);

// Completely mixed equilibria: each player's system is solved on its own,
// so the result is the product of the per-player solution sets.
std::optional<EquilibriumBox> FullyMixedBerge(const Game& game);

// Step 1: pure subprofiles over P (players ascending) giving every player
// in P zero disappointment at every pure completion of M.
std::vector<PureProfile> Step1Candidates(const Game& game,
                                         const Partition& partition);

// Step 2: per player in M (ascending), the solutions of his system in the
// subgame with P fixed to `pure_subprofile`. An empty coordinate means no
// subequilibrium exists.
std::vector<SolutionSet> Step2Subequilibria(const Game& game,
                                            const Partition& partition,
                                            const PureProfile& pure_subprofile);

// Step 3: restricts each coordinate of `subequilibria` to the values where
// no pure profile of the other players raises the player's payoff. Throws
// std::logic_error if a step-2 coordinate is empty or inconsistent.
std::vector<SolutionSet> Step3Refine(
    const Game& game, const Partition& partition,
    const PureProfile& pure_subprofile,
    const std::vector<SolutionSet>& subequilibria);

std::vector<EquilibriumBox> MixedTypeBerge(const Game& game,
                                           const Partition& partition);

struct SearchOptions {
  // Worker threads for the partition stage; results do not depend on it.
  int num_threads = 1;
};

// Every Berge equilibrium: pure boxes, then the fully mixed box, then the
// mixed-type boxes by partition mask. Boxes are pairwise disjoint.
BergeReport AllBerge(const Game& game, const SearchOptions& options = {});

}  // namespace berge

#endif  // BERGE_MIXED_SEARCH_H_
