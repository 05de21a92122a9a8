// Copyright 2026 The hanabi-qd Authors
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

#include <exception>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

using namespace hanabi_qd::cli;

int main(int argc, char** argv) {
  CLI::App app{"MAP-Elites over rule-based two-player Hanabi agents"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  EvolveOptions evolve;
  auto* ev = app.add_subcommand("evolve", "Run MAP-Elites and write archive.json");
  ev->add_option("--seed", evolve.seed, "Master seed")->required();
  ev->add_option("--individuals", evolve.individuals, "Total individuals")->check(CLI::PositiveNumber);
  ev->add_option("--init-random", evolve.init_random, "Random individuals before evolution starts");
  ev->add_option("--games-per-eval", evolve.games_per_eval, "Self-play games per evaluation")
      ->check(CLI::PositiveNumber);
  ev->add_option("--out", evolve.out, "Output directory")->required();
  ev->add_option("--threads", evolve.threads, "Worker threads")->check(CLI::PositiveNumber);
  ev->add_option("--checkpoint-every", evolve.checkpoint_every, "Individuals between checkpoints")
      ->check(CLI::PositiveNumber);
  ev->add_option("--batch", evolve.batch, "Offspring generated per archive snapshot (1 = serial schedule)")
      ->check(CLI::PositiveNumber);
  ev->add_flag("--frozen-seeds", evolve.frozen_seeds, "Evaluate every individual on one fixed seed set");
  ev->add_flag("--quiet", evolve.quiet, "No progress output");

  ReevaluateOptions reeval;
  auto* re = app.add_subcommand("reevaluate", "Re-evaluate every elite with fresh games");
  re->add_option("--archive", reeval.archive, "Archive to re-evaluate")->required()->check(CLI::ExistingFile);
  re->add_option("--out", reeval.out, "Output directory")->required();
  re->add_option("--games", reeval.games, "Self-play games per elite")->check(CLI::PositiveNumber);
  re->add_option("--seed", reeval.seed, "Seed for the fresh games");
  re->add_option("--threads", reeval.threads, "Worker threads")->check(CLI::PositiveNumber);

  CrossplayOptions cross;
  auto* cp = app.add_subcommand("crossplay", "Pairwise cross-play over the valid elites");
  cp->add_option("--archive", cross.archive, "Archive whose valid elites form the pool")->required()->check(CLI::ExistingFile);
  cp->add_option("--out", cross.out, "Output directory")->required();
  cp->add_option("--games-per-pair", cross.games_per_pair, "Games per seating for each pair")->check(CLI::PositiveNumber);
  cp->add_option("--seed", cross.seed, "Cross-play seed");
  cp->add_option("--threads", cross.threads, "Worker threads")->check(CLI::PositiveNumber);
  cp->add_flag("--plan-only", cross.plan_only, "Write the manifest with the planned game count and stop");

  SimilarityOptions sim;
  auto* si = app.add_subcommand("similarity", "Action similarity and Hamming distance per shared niche");
  si->add_option("--archive", sim.archive, "First archive")->required()->check(CLI::ExistingFile);
  si->add_option("--other", sim.other, "Second archive (default: --archive)")->check(CLI::ExistingFile);
  si->add_option("--corpus-archive", sim.corpus_archive, "Archive whose self-play builds the state corpus")
      ->check(CLI::ExistingFile);
  si->add_option("--out", sim.out, "Output directory")->required();
  si->add_option("--corpus-games", sim.corpus_games, "Self-play games per corpus elite")->check(CLI::PositiveNumber);
  si->add_option("--seed", sim.seed, "Corpus seed");
  si->add_option("--threads", sim.threads, "Worker threads")->check(CLI::PositiveNumber);
  si->add_flag("--write-corpus", sim.write_corpus, "Also write corpus.jsonl");

  CrossRunOptions run;
  auto* cr = app.add_subcommand("cross-run", "Compare corresponding elites of two runs");
  cr->add_option("--a", run.archive_a, "First run's archive")->required()->check(CLI::ExistingFile);
  cr->add_option("--b", run.archive_b, "Second run's archive")->required()->check(CLI::ExistingFile);
  cr->add_option("--corpus-archive", run.corpus_archive, "Archive whose self-play builds the state corpus (default: --a)")->check(CLI::ExistingFile);
  cr->add_option("--out", run.out, "Output directory")->required();
  cr->add_option("--games", run.games, "Paired games per niche")->check(CLI::PositiveNumber);
  cr->add_option("--corpus-games", run.corpus_games, "Self-play games per corpus elite")->check(CLI::PositiveNumber);
  cr->add_option("--seed", run.seed, "Analysis seed");
  cr->add_option("--threads", run.threads, "Worker threads")->check(CLI::PositiveNumber);

  ExportOptions exp;
  auto* ex = app.add_subcommand("export", "Write the fitness grid as CSV");
  ex->add_option("--archive", exp.archive, "Archive to export")->required()->check(CLI::ExistingFile);
  ex->add_option("--out", exp.out, "Output directory")->required();
  ex->add_flag("--svg", exp.svg, "Also write a plain SVG heatmap");

  std::filesystem::path rules_out;
  auto* rules = app.add_subcommand("rules", "Rule catalog");
  rules->require_subcommand(1);
  auto* rules_list = rules->add_subcommand("list", "Print the catalog as CSV");
  rules_list->add_option("--out", rules_out, "Write to a file instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*ev) return cmd_evolve(evolve);
    if (*re) return cmd_reevaluate(reeval);
    if (*cp) return cmd_crossplay(cross);
    if (*si) return cmd_similarity(sim);
    if (*cr) return cmd_cross_run(run);
    if (*ex) return cmd_export(exp);
    if (*rules_list) return cmd_rules_list(rules_out);
  } catch (const std::exception& e) {
    std::cerr << "hanabi-qd: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
