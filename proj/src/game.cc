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

#include "berge/game.h"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <stdexcept>
#include <utility>

namespace berge {

std::uint64_t ProfileIndex(const PureProfile& profile) {
  if (profile.size() > 63) {
    throw std::invalid_argument("ProfileIndex: profile too long");
  }
  std::uint64_t index = 0;
  for (int bit : profile.bits) {
    if (bit != 0 && bit != 1) {
      throw std::invalid_argument("ProfileIndex: strategy bit must be 0 or 1");
    }
    index = (index << 1) | static_cast<std::uint64_t>(bit);
  }
  return index;
}

PureProfile IndexToProfile(std::uint64_t index, int num_players) {
  if (num_players < 0 || num_players > 63 ||
      index >= (std::uint64_t{1} << num_players)) {
    throw std::invalid_argument("IndexToProfile: index out of range");
  }
  PureProfile profile;
  profile.bits.resize(num_players);
  for (int i = 0; i < num_players; ++i) {
    profile.bits[i] = (index & PlayerBit(i, num_players)) ? 1 : 0;
  }
  return profile;
}

MixedProfile::MixedProfile(std::vector<Rational> probs)
    : probs_(std::move(probs)) {
  for (const Rational& p : probs_) {
    if (p < 0 || p > 1) {
      throw std::invalid_argument("MixedProfile: probability " + p.get_str() +
                                  " outside [0, 1]");
    }
  }
}

MixedProfile MixedProfile::FromPure(const PureProfile& profile) {
  std::vector<Rational> probs;
  probs.reserve(profile.bits.size());
  for (int bit : profile.bits) probs.emplace_back(bit == 0 ? 1 : 0);
  return MixedProfile(std::move(probs));
}

std::string MixedProfile::ToString() const {
  std::string out = "(";
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    if (i > 0) out += ", ";
    out += probs_[i].get_str();
  }
  return out + ")";
}

namespace {

std::vector<std::string> DefaultNames(int num_players) {
  std::vector<std::string> names;
  for (int i = 0; i < num_players; ++i) {
    if (num_players <= 26) {
      names.emplace_back(1, static_cast<char>('A' + i));
    } else {
      names.push_back("P" + std::to_string(i + 1));
    }
  }
  return names;
}

}  // namespace

Game::Game(int num_players, std::vector<Rational> payoffs,
           std::vector<std::string> player_names, int max_players)
    : num_players_(num_players),
      payoffs_(std::move(payoffs)),
      player_names_(std::move(player_names)) {
  const int cap = std::min(max_players, kHardMaxPlayers);
  if (num_players < 2 || num_players > cap) {
    throw std::invalid_argument("Game: number of players " +
                                std::to_string(num_players) +
                                " outside [2, " + std::to_string(cap) + "]");
  }
  const std::uint64_t expected = num_profiles() * num_players;
  if (payoffs_.size() != expected) {
    throw std::invalid_argument("Game: expected " + std::to_string(expected) +
                                " payoff entries, got " +
                                std::to_string(payoffs_.size()));
  }
  if (player_names_.empty()) {
    player_names_ = DefaultNames(num_players);
  } else if (static_cast<int>(player_names_.size()) != num_players) {
    throw std::invalid_argument("Game: expected " +
                                std::to_string(num_players) +
                                " player names");
  }
  for (Rational& value : payoffs_) value.canonicalize();
}

void Game::CheckPlayer(int player) const {
  if (player < 0 || player >= num_players_) {
    throw std::out_of_range("player index " + std::to_string(player) +
                            " out of range");
  }
}

const Rational& Game::Payoff(std::uint64_t profile_index, int player) const {
  CheckPlayer(player);
  if (profile_index >= num_profiles()) {
    throw std::out_of_range("profile index out of range");
  }
  return payoffs_[profile_index * num_players_ + player];
}

const Rational& Game::Payoff(const PureProfile& profile, int player) const {
  if (profile.size() != num_players_) {
    throw std::invalid_argument("Payoff: profile length mismatch");
  }
  return Payoff(ProfileIndex(profile), player);
}

Rational Game::ExpectedPayoff(const MixedProfile& profile, int player) const {
  CheckPlayer(player);
  if (profile.size() != num_players_) {
    throw std::invalid_argument("ExpectedPayoff: profile length mismatch");
  }
  Rational total = 0;
  for (std::uint64_t cell = 0; cell < num_profiles(); ++cell) {
    Rational weight = 1;
    for (int j = 0; j < num_players_ && weight != 0; ++j) {
      if (cell & PlayerBit(j, num_players_)) {
        weight *= 1 - profile[j];
      } else {
        weight *= profile[j];
      }
    }
    if (weight != 0) total += weight * payoffs_[cell * num_players_ + player];
  }
  return total;
}

LinearFn Game::PayoffLineAt(int player, std::uint64_t profile_index) const {
  const std::uint64_t own = PlayerBit(player, num_players_);
  const Rational& first = Payoff(profile_index & ~own, player);
  const Rational& second = Payoff(profile_index | own, player);
  return {first - second, second};
}

LinearFn Game::PayoffLine(int player, const PureProfile& others) const {
  CheckPlayer(player);
  if (others.size() != num_players_ - 1) {
    throw std::invalid_argument("PayoffLine: expected " +
                                std::to_string(num_players_ - 1) +
                                " strategies for the other players");
  }
  return PayoffLineAt(
      player, InsertPlayerBit(ProfileIndex(others), player, num_players_, 0));
}

std::string Game::StrategyLabel(int player, int bit) const {
  CheckPlayer(player);
  return player_names_[player] + (bit == 0 ? "1" : "2");
}

std::uint64_t InsertPlayerBit(std::uint64_t completion, int player,
                              int num_players, int bit) {
  const int low_bits = num_players - 1 - player;
  const std::uint64_t low = completion & ((std::uint64_t{1} << low_bits) - 1);
  const std::uint64_t high = completion >> low_bits;
  return (high << (low_bits + 1)) |
         (static_cast<std::uint64_t>(bit) << low_bits) | low;
}

Rational ParseRational(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("not an exact number: '" + std::string(text) +
                                "'");
  };
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin])))
    ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1])))
    --end;
  std::string_view body = text.substr(begin, end - begin);

  bool negative = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body.remove_prefix(1);
  }
  auto all_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };

  Rational value;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return fail();
    mpz_class d(std::string(den), 10);
    if (d == 0) return fail();
    value = Rational(mpz_class(std::string(num), 10), d);
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = body.substr(0, dot);
    const std::string_view frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) return fail();
    if ((!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      return fail();
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    const std::string digits = std::string(whole) + std::string(frac);
    value = Rational(mpz_class(digits, 10), scale);
  } else {
    if (!all_digits(body)) return fail();
    value = Rational(mpz_class(std::string(body), 10));
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string Fingerprint(const Game& game) {
  std::uint64_t hash = 14695981039346656037ull;
  auto mix = [&hash](std::string_view bytes) {
    for (unsigned char c : bytes) {
      hash ^= c;
      hash *= 1099511628211ull;
    }
  };
  mix(std::to_string(game.num_players()));
  for (const Rational& value : game.payoffs()) {
    mix(";");
    mix(value.get_str());
  }
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx",
                static_cast<unsigned long long>(hash));
  return buffer;
}

}  // namespace berge
