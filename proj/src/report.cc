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

#include "berge/report.h"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace berge {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string JoinNames(const std::vector<int>& players,
                      const std::vector<std::string>& names) {
  const bool short_names =
      std::all_of(players.begin(), players.end(),
                  [&](int i) { return names[i].size() == 1; });
  std::string out;
  for (std::size_t k = 0; k < players.size(); ++k) {
    if (k > 0 && !short_names) out += ",";
    out += names[players[k]];
  }
  return out;
}

std::string SourceLabel(const BergeReport& report, BoxSource source,
                        const std::optional<Partition>& partition) {
  std::string label = ToString(source);
  if (partition) label += " " + PartitionLabel(*partition, report.player_names);
  return label;
}

std::string BoxLine(const BergeReport& report, const EquilibriumBox& box) {
  std::string line = SourceLabel(report, box.source, box.partition) + ":";
  for (std::size_t i = 0; i < box.constraints.size(); ++i) {
    line += i == 0 ? " " : ", ";
    const std::string& name = report.player_names[i];
    const PlayerConstraint& c = box.constraints[i];
    const auto* set = std::get_if<SolutionSet>(&c);
    if (set != nullptr && set->IsInterval()) {
      line += name + " in " + set->ToString();
    } else {
      line += name + "=" + ConstraintText(c);
    }
  }
  return line;
}

std::string EmitText(const BergeReport& report) {
  std::ostringstream out;
  out << "players: ";
  for (std::size_t i = 0; i < report.player_names.size(); ++i) {
    out << (i ? ", " : "") << report.player_names[i];
  }
  out << "\nfingerprint: " << report.fingerprint << "\n";
  if (report.boxes.empty()) {
    out << "equilibria: none\n";
  } else {
    out << "equilibria: " << report.boxes.size()
        << (report.boxes.size() == 1 ? " box\n" : " boxes\n");
    for (std::size_t k = 0; k < report.boxes.size(); ++k) {
      out << "  [" << k + 1 << "] " << BoxLine(report, report.boxes[k]) << "\n";
    }
  }
  out << "diagnostics:\n";
  for (const SourceDiagnostic& d : report.diagnostics) {
    out << "  " << SourceLabel(report, d.source, d.partition) << ": ";
    if (d.eliminated_at == Elimination::kNone) {
      out << d.boxes << (d.boxes == 1 ? " box" : " boxes");
    } else {
      out << "eliminated at " << ToString(d.eliminated_at);
      if (d.empty_player) {
        out << " (no solution for " << report.player_names[*d.empty_player]
            << ")";
      }
    }
    if (d.source == BoxSource::kMixedType) {
      out << ", " << d.candidates
          << (d.candidates == 1 ? " candidate" : " candidates");
    }
    out << "\n";
  }
  return out.str();
}

ordered_json ConstraintJson(const std::string& name,
                            const PlayerConstraint& constraint) {
  ordered_json j;
  j["player"] = name;
  if (const auto* pure = std::get_if<PureStrategy>(&constraint)) {
    j["kind"] = "pure";
    j["strategy"] = pure->bit + 1;
    j["value"] = pure->bit == 0 ? "1" : "0";
    return j;
  }
  const SolutionSet& set = std::get<SolutionSet>(constraint);
  if (set.IsPoint()) {
    j["kind"] = "point";
    j["value"] = set.point().get_str();
  } else {
    j["kind"] = "interval";
    j["lo"] = set.lo().get_str();
    j["lo_inclusive"] = set.lo_inclusive();
    j["hi"] = set.hi().get_str();
    j["hi_inclusive"] = set.hi_inclusive();
  }
  j["text"] = set.ToString();
  return j;
}

ordered_json PartitionJson(const BergeReport& report,
                           const Partition& partition) {
  ordered_json j;
  j["label"] = PartitionLabel(partition, report.player_names);
  j["pure"] = ordered_json::array();
  for (int i : partition.PurePlayers()) j["pure"].push_back(report.player_names[i]);
  j["mixed"] = ordered_json::array();
  for (int i : partition.MixedPlayers()) {
    j["mixed"].push_back(report.player_names[i]);
  }
  return j;
}

std::string EmitJson(const BergeReport& report) {
  ordered_json doc;
  doc["players"] = report.player_names;
  doc["n"] = report.num_players;
  doc["fingerprint"] = report.fingerprint;
  doc["equilibria"] = ordered_json::array();
  for (const EquilibriumBox& box : report.boxes) {
    ordered_json b;
    b["source"] = ToString(box.source);
    if (box.partition) {
      b["partition"] = PartitionJson(report, *box.partition);
      b["pure_subprofile"] = box.pure_subprofile.bits;
    }
    b["constraints"] = ordered_json::array();
    for (std::size_t i = 0; i < box.constraints.size(); ++i) {
      b["constraints"].push_back(
          ConstraintJson(report.player_names[i], box.constraints[i]));
    }
    doc["equilibria"].push_back(std::move(b));
  }
  doc["diagnostics"] = ordered_json::array();
  for (const SourceDiagnostic& d : report.diagnostics) {
    ordered_json j;
    j["source"] = ToString(d.source);
    if (d.partition) j["partition"] = PartitionJson(report, *d.partition);
    j["eliminated_at"] = ToString(d.eliminated_at);
    j["candidates"] = d.candidates;
    j["boxes"] = d.boxes;
    if (d.empty_player) {
      j["empty_player"] = report.player_names[*d.empty_player];
    }
    doc["diagnostics"].push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

}  // namespace

std::string PartitionLabel(const Partition& partition,
                           const std::vector<std::string>& player_names) {
  return JoinNames(partition.PurePlayers(), player_names) + "-" +
         JoinNames(partition.MixedPlayers(), player_names);
}

std::string ConstraintText(const PlayerConstraint& constraint) {
  if (const auto* pure = std::get_if<PureStrategy>(&constraint)) {
    return pure->bit == 0 ? "1" : "0";
  }
  return std::get<SolutionSet>(constraint).ToString();
}

std::string EmitReport(const BergeReport& report, ReportFormat format) {
  return format == ReportFormat::kJson ? EmitJson(report) : EmitText(report);
}

std::string RenderTable(const Game& game, const std::vector<Rational>& values) {
  const int n = game.num_players();
  auto cell_text = [&](std::uint64_t cell) {
    std::string text = "(";
    for (int i = 0; i < n; ++i) {
      if (i > 0) text += ", ";
      text += values[cell * n + i].get_str();
    }
    return text + ")";
  };
  std::size_t width = 0;
  for (std::uint64_t cell = 0; cell < game.num_profiles(); ++cell) {
    width = std::max(width, cell_text(cell).size());
  }
  std::size_t label_width = 0;
  for (int b = 0; b < 2; ++b) {
    label_width = std::max(label_width, game.StrategyLabel(0, b).size());
  }
  auto pad = [](std::string s, std::size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
  };

  std::ostringstream out;
  const std::uint64_t strata = std::uint64_t{1} << (n - 2);
  for (std::uint64_t stratum = 0; stratum < strata; ++stratum) {
    if (n > 2) {
      if (stratum > 0) out << "\n";
      for (int i = 2; i < n; ++i) {
        const int bit = (stratum & PlayerBit(i, n)) ? 1 : 0;
        out << (i > 2 ? " " : "") << game.StrategyLabel(i, bit);
      }
      out << ":\n";
    }
    std::string header = pad("", label_width);
    for (int col = 0; col < 2; ++col) {
      header += "  " + pad(game.StrategyLabel(1, col), width);
    }
    while (!header.empty() && header.back() == ' ') header.pop_back();
    out << header << "\n";
    for (int row = 0; row < 2; ++row) {
      std::string line = pad(game.StrategyLabel(0, row), label_width);
      for (int col = 0; col < 2; ++col) {
        const std::uint64_t cell =
            stratum | (row ? PlayerBit(0, n) : 0) | (col ? PlayerBit(1, n) : 0);
        line += "  " + pad(cell_text(cell), width);
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out << line << "\n";
    }
  }
  return out.str();
}

}  // namespace berge
