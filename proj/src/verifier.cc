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

#include "berge/verifier.h"

#include <stdexcept>

namespace berge {

bool VerifyBerge(const Game& game, const MixedProfile& profile) {
  const int n = game.num_players();
  if (profile.size() != n) {
    throw std::invalid_argument("VerifyBerge: profile dimension mismatch");
  }
  for (int i = 0; i < n; ++i) {
    const Rational value = game.ExpectedPayoff(profile, i);
    for (std::uint64_t cell = 0; cell < game.num_profiles(); ++cell) {
      if (cell & PlayerBit(i, n)) continue;
      // Others pure per `cell`, player i keeps his own mix.
      std::vector<Rational> deviation(n);
      for (int j = 0; j < n; ++j) {
        deviation[j] =
            j == i ? profile[i]
                   : Rational((cell & PlayerBit(j, n)) ? 0 : 1);
      }
      if (game.ExpectedPayoff(MixedProfile(std::move(deviation)), i) > value) {
        return false;
      }
    }
  }
  return true;
}

std::vector<MixedProfile> GridOracle(const Game& game, int resolution) {
  if (resolution < 1) {
    throw std::invalid_argument("GridOracle: resolution must be positive");
  }
  std::vector<MixedProfile> accepted;
  ForEachGridProfile(game.num_players(), resolution,
                     [&](const MixedProfile& profile) {
                       if (VerifyBerge(game, profile)) {
                         accepted.push_back(profile);
                       }
                     });
  return accepted;
}

bool BoxesContain(const BergeReport& report, const MixedProfile& profile) {
  if (profile.size() != report.num_players) {
    throw std::invalid_argument("BoxesContain: profile dimension mismatch");
  }
  for (const EquilibriumBox& box : report.boxes) {
    if (box.Contains(profile)) return true;
  }
  return false;
}

}  // namespace berge
