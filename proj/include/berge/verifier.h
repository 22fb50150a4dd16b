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

#ifndef BERGE_VERIFIER_H_
#define BERGE_VERIFIER_H_

#include <vector>

#include "berge/game.h"
#include "berge/mixed_search.h"

namespace berge {

// Exact Berge test of a single profile: no pure profile of the other players
// gives any player more than his payoff at `profile`. Mixed deviations of
// the others need no separate check, since the payoff is multilinear in
// their probabilities and peaks at a vertex.
bool VerifyBerge(const Game& game, const MixedProfile& profile);

// Every profile of {0, 1/k, ..., 1}^n accepted by VerifyBerge, in ascending
// lexicographic order.
std::vector<MixedProfile> GridOracle(const Game& game, int resolution);

// Calls fn(profile) for every point of the grid {0, 1/k, ..., 1}^n in
// ascending lexicographic order.
template <typename Fn>
void ForEachGridProfile(int num_players, int resolution, Fn&& fn);

// True iff some box of the report admits every coordinate of `profile`.
// Throws std::invalid_argument on a dimension mismatch.
bool BoxesContain(const BergeReport& report, const MixedProfile& profile);

template <typename Fn>
void ForEachGridProfile(int num_players, int resolution, Fn&& fn) {
  std::vector<int> steps(num_players, 0);
  while (true) {
    std::vector<Rational> probs;
    probs.reserve(num_players);
    for (int s : steps) probs.emplace_back(s, resolution);
    for (Rational& p : probs) p.canonicalize();
    fn(MixedProfile(std::move(probs)));
    int i = num_players - 1;
    while (i >= 0 && steps[i] == resolution) steps[i--] = 0;
    if (i < 0) return;
    ++steps[i];
  }
}

}  // namespace berge

#endif  // BERGE_VERIFIER_H_
