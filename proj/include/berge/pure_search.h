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

#ifndef BERGE_PURE_SEARCH_H_
#define BERGE_PURE_SEARCH_H_

#include <cstdint>
#include <vector>

#include "berge/game.h"

namespace berge {

// Disappointment of every player at every pure profile, laid out like the
// game's payoff table.
class DisappointmentTable {
 public:
  DisappointmentTable(int num_players, std::vector<Rational> values)
      : num_players_(num_players), values_(std::move(values)) {}

  int num_players() const { return num_players_; }
  const Rational& At(std::uint64_t profile_index, int player) const {
    return values_[profile_index * num_players_ + player];
  }
  const std::vector<Rational>& values() const { return values_; }

  // Players with zero disappointment at the profile, as a mask in the same
  // bit layout as profile indices.
  std::uint64_t ZeroMask(std::uint64_t profile_index) const;

  bool operator==(const DisappointmentTable&) const = default;

 private:
  int num_players_;
  std::vector<Rational> values_;
};

// max over the others' pure strategies of u_i(s_i, t_-i), minus u_i(s).
Rational Disappointment(const Game& game, const PureProfile& profile,
                        int player);

DisappointmentTable DisappointmentMatrix(const Game& game);

// Pure profiles with a null disappointment vector, ascending by index.
std::vector<PureProfile> PureBerge(const Game& game);

// Pure profiles where no player gains strictly by switching his own
// strategy, ascending by index.
std::vector<PureProfile> PureNash(const Game& game);

// For two players: the game with the players' payoffs interchanged.
// Throws std::invalid_argument for any other player count.
Game SwapPayoffs(const Game& game);

}  // namespace berge

#endif  // BERGE_PURE_SEARCH_H_
