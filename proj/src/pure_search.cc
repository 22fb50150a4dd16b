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

#include "berge/pure_search.h"

#include <algorithm>
#include <stdexcept>

namespace berge {
namespace {

// best[2 * i + b]: player i's highest payoff over all profiles where he
// plays strategy b. Ties are irrelevant; only the value matters.
std::vector<Rational> OwnStrategyMaxima(const Game& game) {
  const int n = game.num_players();
  std::vector<Rational> best(2 * n);
  std::vector<bool> seen(2 * n, false);
  for (std::uint64_t cell = 0; cell < game.num_profiles(); ++cell) {
    for (int i = 0; i < n; ++i) {
      const int slot = 2 * i + ((cell & PlayerBit(i, n)) ? 1 : 0);
      const Rational& value = game.Payoff(cell, i);
      if (!seen[slot] || value > best[slot]) {
        best[slot] = value;
        seen[slot] = true;
      }
    }
  }
  return best;
}

}  // namespace

std::uint64_t DisappointmentTable::ZeroMask(std::uint64_t profile_index) const {
  std::uint64_t mask = 0;
  for (int i = 0; i < num_players_; ++i) {
    if (At(profile_index, i) == 0) mask |= PlayerBit(i, num_players_);
  }
  return mask;
}

Rational Disappointment(const Game& game, const PureProfile& profile,
                        int player) {
  const int n = game.num_players();
  if (profile.size() != n) {
    throw std::invalid_argument("Disappointment: profile length mismatch");
  }
  const std::uint64_t index = ProfileIndex(profile);
  const std::uint64_t own = PlayerBit(player, n) & index;
  Rational best = game.Payoff(index, player);
  for (std::uint64_t cell = 0; cell < game.num_profiles(); ++cell) {
    if ((cell & PlayerBit(player, n)) != own) continue;
    best = std::max(best, Rational(game.Payoff(cell, player)));
  }
  return best - game.Payoff(index, player);
}

DisappointmentTable DisappointmentMatrix(const Game& game) {
  const int n = game.num_players();
  const std::vector<Rational> best = OwnStrategyMaxima(game);
  std::vector<Rational> values(game.payoffs().size());
  for (std::uint64_t cell = 0; cell < game.num_profiles(); ++cell) {
    for (int i = 0; i < n; ++i) {
      const int slot = 2 * i + ((cell & PlayerBit(i, n)) ? 1 : 0);
      values[cell * n + i] = best[slot] - game.Payoff(cell, i);
    }
  }
  return DisappointmentTable(n, std::move(values));
}

std::vector<PureProfile> PureBerge(const Game& game) {
  const int n = game.num_players();
  const DisappointmentTable table = DisappointmentMatrix(game);
  const std::uint64_t all_players = (std::uint64_t{1} << n) - 1;
  std::vector<PureProfile> result;
  for (std::uint64_t cell = 0; cell < game.num_profiles(); ++cell) {
    if (table.ZeroMask(cell) == all_players) {
      result.push_back(IndexToProfile(cell, n));
    }
  }
  return result;
}

std::vector<PureProfile> PureNash(const Game& game) {
  const int n = game.num_players();
  std::vector<PureProfile> result;
  for (std::uint64_t cell = 0; cell < game.num_profiles(); ++cell) {
    bool stable = true;
    for (int i = 0; i < n && stable; ++i) {
      const std::uint64_t flipped = cell ^ PlayerBit(i, n);
      stable = game.Payoff(flipped, i) <= game.Payoff(cell, i);
    }
    if (stable) result.push_back(IndexToProfile(cell, n));
  }
  return result;
}

Game SwapPayoffs(const Game& game) {
  if (game.num_players() != 2) {
    throw std::invalid_argument("SwapPayoffs: requires a 2-person game");
  }
  std::vector<Rational> swapped(game.payoffs().size());
  for (std::uint64_t cell = 0; cell < game.num_profiles(); ++cell) {
    swapped[2 * cell] = game.Payoff(cell, 1);
    swapped[2 * cell + 1] = game.Payoff(cell, 0);
  }
  return Game(2, std::move(swapped), game.player_names());
}

}  // namespace berge
