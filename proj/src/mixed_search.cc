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

#include "berge/mixed_search.h"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "berge/pure_search.h"

namespace berge {
namespace {

// Calls fn(sub) for every submask of `mask` in ascending order, 0 included.
template <typename Fn>
void ForEachSubmask(std::uint64_t mask, Fn&& fn) {
  std::uint64_t sub = 0;
  do {
    fn(sub);
    sub = (sub - mask) & mask;
  } while (sub != 0);
}

std::uint64_t AllPlayersMask(int num_players) {
  return (std::uint64_t{1} << num_players) - 1;
}

std::vector<int> PlayersIn(std::uint64_t mask, int num_players) {
  std::vector<int> players;
  for (int i = 0; i < num_players; ++i) {
    if (mask & PlayerBit(i, num_players)) players.push_back(i);
  }
  return players;
}

void CheckPartition(const Game& game, const Partition& partition) {
  const std::uint64_t all = AllPlayersMask(game.num_players());
  if (partition.num_players != game.num_players() ||
      (partition.pure_mask & ~all) != 0) {
    throw std::invalid_argument("partition does not match the game");
  }
}

// Cell bits of a pure subprofile over P.
std::uint64_t ScatterSubprofile(const PureProfile& subprofile,
                                const Partition& partition) {
  const std::vector<int> pure = partition.PurePlayers();
  if (subprofile.size() != static_cast<int>(pure.size())) {
    throw std::invalid_argument("pure subprofile length does not match P");
  }
  std::uint64_t cell = 0;
  for (std::size_t k = 0; k < pure.size(); ++k) {
    if (subprofile.bits[k] != 0 && subprofile.bits[k] != 1) {
      throw std::invalid_argument("strategy bit must be 0 or 1");
    }
    if (subprofile.bits[k]) cell |= PlayerBit(pure[k], partition.num_players);
  }
  return cell;
}

PureProfile GatherSubprofile(std::uint64_t cell, const Partition& partition) {
  PureProfile subprofile;
  for (int i : partition.PurePlayers()) {
    subprofile.bits.push_back((cell & PlayerBit(i, partition.num_players)) ? 1
                                                                            : 0);
  }
  return subprofile;
}

// Read-only tables shared by all partitions of one search, plus a lazily
// filled cache of step-3 refinements of full coordinates.
class SearchContext {
 public:
  explicit SearchContext(const Game& game)
      : game_(game),
        n_(game.num_players()),
        zero_(game.num_profiles()),
        lines_(game.num_profiles() * n_),
        refine_once_(game.num_profiles() * n_),
        refine_cache_(game.num_profiles() * n_, SolutionSet::Empty()) {
    const DisappointmentTable table = DisappointmentMatrix(game);
    for (std::uint64_t cell = 0; cell < game.num_profiles(); ++cell) {
      zero_[cell] = table.ZeroMask(cell);
      for (int i = 0; i < n_; ++i) {
        if (!(cell & PlayerBit(i, n_))) {
          lines_[cell * n_ + i] = game.PayoffLineAt(i, cell);
        }
      }
    }
  }

  const Game& game() const { return game_; }
  int num_players() const { return n_; }
  std::uint64_t zero_mask(std::uint64_t cell) const { return zero_[cell]; }

  // Payoff line of player i against the others' strategies in `cell`.
  const LinearFn& Line(int player, std::uint64_t cell) const {
    return lines_[(cell & ~PlayerBit(player, n_)) * n_ + player];
  }

  // Intersection over every pure profile o of the others of
  // SolveGe(Line(player, cell), Line(player, o)).
  const SolutionSet& RefineFull(int player, std::uint64_t cell) {
    const std::size_t slot = (cell & ~PlayerBit(player, n_)) * n_ + player;
    std::call_once(refine_once_[slot], [&] {
      const LinearFn& own = Line(player, cell);
      const std::uint64_t others =
          ((std::uint64_t{1} << n_) - 1) & ~PlayerBit(player, n_);
      SolutionSet refined = SolutionSet::Full();
      ForEachSubmask(others, [&](std::uint64_t completion) {
        if (refined.IsEmpty()) return;
        const LinearFn& line = Line(player, completion);
        if (line == own) return;
        refined = Intersect(refined, SolveGe(own, line));
      });
      refine_cache_[slot] = std::move(refined);
    });
    return refine_cache_[slot];
  }

 private:
  const Game& game_;
  int n_;
  std::vector<std::uint64_t> zero_;
  std::vector<LinearFn> lines_;
  std::vector<std::once_flag> refine_once_;
  std::vector<SolutionSet> refine_cache_;
};

std::vector<std::uint64_t> Step1Cells(const SearchContext& context,
                                      const Partition& partition) {
  const std::uint64_t pure = partition.pure_mask;
  const std::uint64_t mixed = partition.mixed_mask();
  std::vector<std::uint64_t> cells;
  ForEachSubmask(pure, [&](std::uint64_t base) {
    bool ok = true;
    ForEachSubmask(mixed, [&](std::uint64_t completion) {
      if (ok && (context.zero_mask(base | completion) & pure) != pure) {
        ok = false;
      }
    });
    if (ok) cells.push_back(base);
  });
  return cells;
}

// Lines of player i against the pure completions of M \ {i}, P fixed.
std::vector<LinearFn> SubgameLines(const SearchContext& context,
                                   const Partition& partition,
                                   std::uint64_t base, int player) {
  const std::uint64_t others =
      partition.mixed_mask() & ~PlayerBit(player, context.num_players());
  std::vector<LinearFn> lines;
  ForEachSubmask(others, [&](std::uint64_t completion) {
    lines.push_back(context.Line(player, base | completion));
  });
  return lines;
}

std::vector<SolutionSet> Step2Cells(const SearchContext& context,
                                    const Partition& partition,
                                    std::uint64_t base) {
  std::vector<SolutionSet> result;
  for (int i : partition.MixedPlayers()) {
    result.push_back(SolveAllEqual(SubgameLines(context, partition, base, i)));
  }
  return result;
}

std::vector<SolutionSet> Step3Cells(SearchContext& context,
                                    const Partition& partition,
                                    std::uint64_t base,
                                    const std::vector<SolutionSet>& sub) {
  const int n = context.num_players();
  const std::vector<int> mixed = partition.MixedPlayers();
  if (sub.size() != mixed.size()) {
    throw std::invalid_argument("Step3Refine: one coordinate per M player");
  }
  std::vector<SolutionSet> result;
  for (std::size_t k = 0; k < mixed.size(); ++k) {
    const int i = mixed[k];
    const SolutionSet& coordinate = sub[k];
    const std::vector<LinearFn> lines =
        SubgameLines(context, partition, base, i);
    const LinearFn& own = lines.front();
    // The equilibrium payoff is well defined only if every subgame line
    // agrees with `own` on the step-2 set.
    bool consistent = true;
    if (coordinate.IsEmpty()) {
      consistent = false;
    } else if (coordinate.IsPoint()) {
      const Rational value = own.Evaluate(coordinate.point());
      for (const LinearFn& line : lines) {
        consistent = consistent && line.Evaluate(coordinate.point()) == value;
      }
    } else {
      consistent = coordinate.IsFull() &&
                   std::all_of(lines.begin(), lines.end(),
                               [&](const LinearFn& l) { return l == own; });
    }
    if (!consistent) {
      throw std::logic_error("Step3Refine: coordinate " +
                             coordinate.ToString() + " of player " +
                             std::to_string(i) +
                             " is not a step-2 subequilibrium set");
    }

    if (coordinate.IsPoint()) {
      const Rational& x = coordinate.point();
      const Rational value = own.Evaluate(x);
      const std::uint64_t others =
          ((std::uint64_t{1} << n) - 1) & ~PlayerBit(i, n);
      bool holds = true;
      ForEachSubmask(others, [&](std::uint64_t completion) {
        if (holds && context.Line(i, completion).Evaluate(x) > value) {
          holds = false;
        }
      });
      result.push_back(holds ? coordinate : SolutionSet::Empty());
    } else {
      result.push_back(context.RefineFull(i, base));
    }
  }
  return result;
}

bool AnyEmpty(const std::vector<SolutionSet>& sets) {
  return std::any_of(sets.begin(), sets.end(),
                     [](const SolutionSet& s) { return s.IsEmpty(); });
}

struct PartitionOutcome {
  std::vector<EquilibriumBox> boxes;
  SourceDiagnostic diagnostic;
};

PartitionOutcome RunPartition(SearchContext& context,
                              const Partition& partition) {
  const int n = context.num_players();
  PartitionOutcome outcome;
  outcome.diagnostic.source = BoxSource::kMixedType;
  outcome.diagnostic.partition = partition;

  const std::vector<std::uint64_t> candidates = Step1Cells(context, partition);
  outcome.diagnostic.candidates = candidates.size();
  bool reached_step3 = false;
  for (std::uint64_t base : candidates) {
    const std::vector<SolutionSet> sub = Step2Cells(context, partition, base);
    if (AnyEmpty(sub)) continue;
    reached_step3 = true;
    const std::vector<SolutionSet> refined =
        Step3Cells(context, partition, base, sub);
    if (AnyEmpty(refined)) continue;

    EquilibriumBox box;
    box.source = BoxSource::kMixedType;
    box.partition = partition;
    box.pure_subprofile = GatherSubprofile(base, partition);
    box.constraints.resize(n);
    std::size_t k = 0;
    for (int i = 0; i < n; ++i) {
      if (partition.pure_mask & PlayerBit(i, n)) {
        box.constraints[i] = PureStrategy{(base & PlayerBit(i, n)) ? 1 : 0};
      } else {
        box.constraints[i] = refined[k++];
      }
    }
    outcome.boxes.push_back(std::move(box));
  }

  outcome.diagnostic.boxes = outcome.boxes.size();
  if (!outcome.boxes.empty()) {
    outcome.diagnostic.eliminated_at = Elimination::kNone;
  } else if (candidates.empty()) {
    outcome.diagnostic.eliminated_at = Elimination::kStep1;
  } else {
    outcome.diagnostic.eliminated_at =
        reached_step3 ? Elimination::kStep3 : Elimination::kStep2;
  }
  return outcome;
}

}  // namespace

std::vector<int> Partition::PurePlayers() const {
  return PlayersIn(pure_mask, num_players);
}

std::vector<int> Partition::MixedPlayers() const {
  return PlayersIn(mixed_mask(), num_players);
}

std::vector<Partition> EnumeratePartitions(int num_players) {
  if (num_players < 2 || num_players > kHardMaxPlayers) {
    throw std::invalid_argument("EnumeratePartitions: need 2 <= n <= " +
                                std::to_string(kHardMaxPlayers));
  }
  std::vector<Partition> partitions;
  const std::uint64_t all = AllPlayersMask(num_players);
  for (std::uint64_t mask = 1; mask < all; ++mask) {
    partitions.push_back({num_players, mask});
  }
  return partitions;
}

bool Admits(const PlayerConstraint& constraint, const Rational& probability) {
  if (const auto* pure = std::get_if<PureStrategy>(&constraint)) {
    return probability == (pure->bit == 0 ? 1 : 0);
  }
  return std::get<SolutionSet>(constraint).Contains(probability);
}

std::string ToString(BoxSource source) {
  switch (source) {
    case BoxSource::kPure:
      return "pure";
    case BoxSource::kFullyMixed:
      return "fully-mixed";
    case BoxSource::kMixedType:
      return "mixed-type";
  }
  return "";
}

std::string ToString(Elimination stage) {
  switch (stage) {
    case Elimination::kNone:
      return "none";
    case Elimination::kPureSearch:
      return "pure-search";
    case Elimination::kPlayerSystem:
      return "player-system";
    case Elimination::kStep1:
      return "step-1";
    case Elimination::kStep2:
      return "step-2";
    case Elimination::kStep3:
      return "step-3";
  }
  return "";
}

bool EquilibriumBox::Contains(const MixedProfile& profile) const {
  if (profile.size() != static_cast<int>(constraints.size())) {
    throw std::invalid_argument("EquilibriumBox: profile dimension mismatch");
  }
  for (int i = 0; i < profile.size(); ++i) {
    if (!Admits(constraints[i], profile[i])) return false;
  }
  return true;
}

std::vector<LinearFn> PlayerSystem(const Game& game, int player) {
  const int n = game.num_players();
  if (player < 0 || player >= n) {
    throw std::out_of_range("PlayerSystem: player index out of range");
  }
  std::vector<LinearFn> lines;
  lines.reserve(game.num_profiles() / 2);
  for (std::uint64_t completion = 0; completion < game.num_profiles() / 2;
       ++completion) {
    lines.push_back(game.PayoffLineAt(
        player, InsertPlayerBit(completion, player, n, 0)));
  }
  return lines;
}

namespace {

std::optional<EquilibriumBox> FullyMixed(const Game& game,
                                         SourceDiagnostic* diagnostic) {
  EquilibriumBox box;
  box.source = BoxSource::kFullyMixed;
  for (int i = 0; i < game.num_players(); ++i) {
    SolutionSet set = SolveAllEqual(PlayerSystem(game, i));
    if (set.IsEmpty()) {
      if (diagnostic != nullptr) diagnostic->empty_player = i;
      return std::nullopt;
    }
    box.constraints.emplace_back(std::move(set));
  }
  return box;
}

}  // namespace

std::optional<EquilibriumBox> FullyMixedBerge(const Game& game) {
  return FullyMixed(game, nullptr);
}

std::vector<PureProfile> Step1Candidates(const Game& game,
                                         const Partition& partition) {
  CheckPartition(game, partition);
  std::vector<PureProfile> result;
  const SearchContext context(game);
  for (std::uint64_t base : Step1Cells(context, partition)) {
    result.push_back(GatherSubprofile(base, partition));
  }
  return result;
}

std::vector<SolutionSet> Step2Subequilibria(
    const Game& game, const Partition& partition,
    const PureProfile& pure_subprofile) {
  CheckPartition(game, partition);
  return Step2Cells(SearchContext(game), partition,
                    ScatterSubprofile(pure_subprofile, partition));
}

std::vector<SolutionSet> Step3Refine(
    const Game& game, const Partition& partition,
    const PureProfile& pure_subprofile,
    const std::vector<SolutionSet>& subequilibria) {
  CheckPartition(game, partition);
  SearchContext context(game);
  return Step3Cells(context, partition,
                    ScatterSubprofile(pure_subprofile, partition),
                    subequilibria);
}

std::vector<EquilibriumBox> MixedTypeBerge(const Game& game,
                                           const Partition& partition) {
  CheckPartition(game, partition);
  if (partition.pure_mask == 0 || partition.mixed_mask() == 0) {
    throw std::invalid_argument("MixedTypeBerge: P and M must be non-empty");
  }
  SearchContext context(game);
  return RunPartition(context, partition).boxes;
}

BergeReport AllBerge(const Game& game, const SearchOptions& options) {
  const int n = game.num_players();
  BergeReport report;
  report.num_players = n;
  report.player_names = game.player_names();
  report.fingerprint = Fingerprint(game);

  SearchContext context(game);
  const std::uint64_t all = AllPlayersMask(n);

  SourceDiagnostic pure_diag;
  pure_diag.source = BoxSource::kPure;
  pure_diag.candidates = game.num_profiles();
  for (std::uint64_t cell = 0; cell < game.num_profiles(); ++cell) {
    if (context.zero_mask(cell) != all) continue;
    EquilibriumBox box;
    box.source = BoxSource::kPure;
    for (int i = 0; i < n; ++i) {
      box.constraints.emplace_back(
          PureStrategy{(cell & PlayerBit(i, n)) ? 1 : 0});
    }
    report.boxes.push_back(std::move(box));
    ++pure_diag.boxes;
  }
  pure_diag.eliminated_at =
      pure_diag.boxes ? Elimination::kNone : Elimination::kPureSearch;
  report.diagnostics.push_back(pure_diag);

  SourceDiagnostic mixed_diag;
  mixed_diag.source = BoxSource::kFullyMixed;
  mixed_diag.candidates = 1;
  if (auto box = FullyMixed(game, &mixed_diag)) {
    report.boxes.push_back(std::move(*box));
    mixed_diag.boxes = 1;
  } else {
    mixed_diag.eliminated_at = Elimination::kPlayerSystem;
  }
  report.diagnostics.push_back(mixed_diag);

  const std::vector<Partition> partitions = EnumeratePartitions(n);
  std::vector<PartitionOutcome> outcomes(partitions.size());
  const int workers = std::clamp<int>(options.num_threads, 1,
                                      static_cast<int>(partitions.size()));
  if (workers == 1) {
    for (std::size_t k = 0; k < partitions.size(); ++k) {
      outcomes[k] = RunPartition(context, partitions[k]);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < partitions.size(); k = next++) {
          outcomes[k] = RunPartition(context, partitions[k]);
        }
      });
    }
  }
  for (PartitionOutcome& outcome : outcomes) {
    for (EquilibriumBox& box : outcome.boxes) {
      report.boxes.push_back(std::move(box));
    }
    report.diagnostics.push_back(std::move(outcome.diagnostic));
  }
  return report;
}

}  // namespace berge
