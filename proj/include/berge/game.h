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

#ifndef BERGE_GAME_H_
#define BERGE_GAME_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "berge/linear.h"

namespace berge {

inline constexpr int kDefaultMaxPlayers = 12;
// Upper bound accepted even when the default cap is overridden; the payoff
// table has n * 2^n entries.
inline constexpr int kHardMaxPlayers = 16;

// Bit i is player i's pure strategy: 0 is the first strategy, 1 the second.
struct PureProfile {
  std::vector<int> bits;

  int size() const { return static_cast<int>(bits.size()); }
  bool operator==(const PureProfile&) const = default;
  auto operator<=>(const PureProfile&) const = default;
};

// Player 0 is the most significant bit: index = sum bits[i] * 2^(n-1-i).
std::uint64_t ProfileIndex(const PureProfile& profile);
PureProfile IndexToProfile(std::uint64_t index, int num_players);

// Mask of player's bit within a profile index.
inline std::uint64_t PlayerBit(int player, int num_players) {
  return std::uint64_t{1} << (num_players - 1 - player);
}

// Probability that each player plays his first pure strategy.
class MixedProfile {
 public:
  // Throws std::invalid_argument if a coordinate lies outside [0, 1].
  explicit MixedProfile(std::vector<Rational> probs);
  static MixedProfile FromPure(const PureProfile& profile);

  int size() const { return static_cast<int>(probs_.size()); }
  const Rational& operator[](int player) const { return probs_[player]; }
  const std::vector<Rational>& probs() const { return probs_; }

  bool operator==(const MixedProfile&) const = default;

  // "(1/2, 1/3, 3/5)"
  std::string ToString() const;

 private:
  std::vector<Rational> probs_;
};

// An n-person game in which every player has two pure strategies. Payoffs are
// stored row-major: entry profile_index * n + player.
class Game {
 public:
  // Throws std::invalid_argument unless 2 <= num_players <= max_players and
  // the table holds num_players * 2^num_players entries. Missing player
  // names default to "A", "B", ... (or "P1", "P2", ... beyond 26 players).
  Game(int num_players, std::vector<Rational> payoffs,
       std::vector<std::string> player_names = {},
       int max_players = kDefaultMaxPlayers);

  int num_players() const { return num_players_; }
  std::uint64_t num_profiles() const { return std::uint64_t{1} << num_players_; }
  const std::vector<std::string>& player_names() const { return player_names_; }
  const std::vector<Rational>& payoffs() const { return payoffs_; }

  const Rational& Payoff(std::uint64_t profile_index, int player) const;
  const Rational& Payoff(const PureProfile& profile, int player) const;

  // Exact expectation of the player's payoff under independent mixing.
  Rational ExpectedPayoff(const MixedProfile& profile, int player) const;

  // Expected payoff of `player` as an affine function of his own probability
  // when the others play the pure profile `others` (length n - 1, players in
  // ascending order with `player` removed).
  LinearFn PayoffLine(int player, const PureProfile& others) const;
  // Same, with the others read from a full profile index; the player's own
  // bit is ignored.
  LinearFn PayoffLineAt(int player, std::uint64_t profile_index) const;

  // Label of a pure strategy, e.g. "A1" or "A2".
  std::string StrategyLabel(int player, int bit) const;

  bool operator==(const Game& other) const {
    return num_players_ == other.num_players_ && payoffs_ == other.payoffs_;
  }

 private:
  void CheckPlayer(int player) const;

  int num_players_;
  std::vector<Rational> payoffs_;
  std::vector<std::string> player_names_;
};

// Inserts `bit` at player's position into an (n-1)-player completion index.
std::uint64_t InsertPlayerBit(std::uint64_t completion, int player,
                              int num_players, int bit);

// Exact parse of "-3", "2.25", "3/5" (surrounding blanks allowed). Throws
// std::invalid_argument on anything else.
Rational ParseRational(std::string_view text);

// Stable 64-bit FNV-1a digest of the payoff table, as 16 hex digits.
std::string Fingerprint(const Game& game);

}  // namespace berge

#endif  // BERGE_GAME_H_
