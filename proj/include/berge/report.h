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

#ifndef BERGE_REPORT_H_
#define BERGE_REPORT_H_

#include <string>
#include <vector>

#include "berge/game.h"
#include "berge/mixed_search.h"
#include "berge/pure_search.h"

namespace berge {

enum class ReportFormat { kText, kJson };

// "FT-S": names of P, a dash, names of M. Names are concatenated when all
// are single characters and comma-separated otherwise.
std::string PartitionLabel(const Partition& partition,
                           const std::vector<std::string>& player_names);

// "1" or "0" for a pure strategy, otherwise the solution set text.
std::string ConstraintText(const PlayerConstraint& constraint);

// Deterministic serialization of a report. Rationals are printed exactly in
// lowest terms; boxes keep the order produced by AllBerge.
std::string EmitReport(const BergeReport& report, ReportFormat format);

// Per-profile vectors of `values` (laid out like a payoff table) as one 2x2
// matrix per strategy combination of players 2..n-1; rows are player 0's
// strategies, columns player 1's.
std::string RenderTable(const Game& game, const std::vector<Rational>& values);

inline std::string RenderDisappointment(const Game& game,
                                        const DisappointmentTable& table) {
  return RenderTable(game, table.values());
}

}  // namespace berge

#endif  // BERGE_REPORT_H_
