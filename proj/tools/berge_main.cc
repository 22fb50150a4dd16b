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

// Command-line front end: solve, verify, disappointment, oracle-check.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "berge/game.h"
#include "berge/game_file.h"
#include "berge/mixed_search.h"
#include "berge/pure_search.h"
#include "berge/report.h"
#include "berge/verifier.h"

namespace {

constexpr int kExitInputError = 2;

berge::MixedProfile ParseProfile(const std::string& text) {
  std::vector<berge::Rational> probs;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    probs.push_back(berge::ParseRational(item));
  }
  return berge::MixedProfile(std::move(probs));
}

int Solve(const std::string& path, const std::string& format, int max_n,
          int threads) {
  const berge::Game game = berge::LoadGameFile(path, max_n);
  const berge::BergeReport report =
      berge::AllBerge(game, {.num_threads = threads});
  std::cout << berge::EmitReport(report, format == "json"
                                             ? berge::ReportFormat::kJson
                                             : berge::ReportFormat::kText);
  return 0;
}

int Verify(const std::string& path, const std::string& profile_text,
           int max_n) {
  const berge::Game game = berge::LoadGameFile(path, max_n);
  const berge::MixedProfile profile = ParseProfile(profile_text);
  if (profile.size() != game.num_players()) {
    std::cerr << "error: profile has " << profile.size()
              << " coordinates, game has " << game.num_players()
              << " players\n";
    return kExitInputError;
  }
  const bool ok = berge::VerifyBerge(game, profile);
  std::cout << profile.ToString()
            << (ok ? " is a Berge equilibrium\n" : " is not a Berge equilibrium\n");
  return ok ? 0 : 1;
}

int Disappointment(const std::string& path, int max_n) {
  const berge::Game game = berge::LoadGameFile(path, max_n);
  std::cout << berge::RenderDisappointment(game,
                                           berge::DisappointmentMatrix(game));
  return 0;
}

int OracleCheck(const std::string& path, int resolution, int max_n) {
  const berge::Game game = berge::LoadGameFile(path, max_n);
  const berge::BergeReport report = berge::AllBerge(game);
  const std::vector<berge::MixedProfile> accepted =
      berge::GridOracle(game, resolution);
  std::size_t index = 0;
  std::size_t checked = 0;
  int status = 0;
  berge::ForEachGridProfile(
      game.num_players(), resolution, [&](const berge::MixedProfile& profile) {
        if (status != 0) return;
        ++checked;
        const bool oracle =
            index < accepted.size() && accepted[index] == profile;
        if (oracle) ++index;
        const bool boxes = berge::BoxesContain(report, profile);
        if (oracle != boxes) {
          std::cout << "disagreement at " << profile.ToString()
                    << ": verifier " << (oracle ? "accepts" : "rejects")
                    << ", boxes " << (boxes ? "contain" : "exclude")
                    << " it\n";
          status = 1;
        }
      });
  if (status == 0) {
    std::cout << "agreement on " << checked << " grid profiles ("
              << accepted.size() << " equilibria) at resolution "
              << resolution << "\n";
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Berge equilibria of n-person 2-strategy games"};
  app.require_subcommand(1);

  std::string path;
  std::string format = "text";
  std::string profile;
  int max_n = berge::kDefaultMaxPlayers;
  int threads = 1;
  int resolution = 8;

  CLI::App* solve = app.add_subcommand("solve", "Enumerate all Berge equilibria");
  solve->add_option("file", path, "Game file")->required();
  solve->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  solve->add_option("--max-n", max_n, "Largest accepted player count");
  solve->add_option("--threads", threads, "Worker threads for partitions")
      ->check(CLI::PositiveNumber);

  CLI::App* verify =
      app.add_subcommand("verify", "Check one profile against the definition");
  verify->add_option("file", path, "Game file")->required();
  verify->add_option("--profile", profile,
                     "Comma-separated probabilities of each first strategy")
      ->required();
  verify->add_option("--max-n", max_n, "Largest accepted player count");

  CLI::App* disappointment = app.add_subcommand(
      "disappointment", "Print the disappointment matrix");
  disappointment->add_option("file", path, "Game file")->required();
  disappointment->add_option("--max-n", max_n, "Largest accepted player count");

  CLI::App* oracle = app.add_subcommand(
      "oracle-check", "Compare the solver against a grid of verified profiles");
  oracle->add_option("file", path, "Game file")->required();
  oracle->add_option("--resolution", resolution, "Grid denominator")
      ->check(CLI::PositiveNumber);
  oracle->add_option("--max-n", max_n, "Largest accepted player count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (*solve) return Solve(path, format, max_n, threads);
    if (*verify) return Verify(path, profile, max_n);
    if (*disappointment) return Disappointment(path, max_n);
    if (*oracle) return OracleCheck(path, resolution, max_n);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
