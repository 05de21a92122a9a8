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

#include <cmath>
#include <algorithm>
#include <numeric>
#include <sstream>

#include "doctest.h"
#include "hanabi_qd/analysis.hpp"
#include "hanabi_qd/simulate.hpp"

using namespace hanabi_qd;

namespace {

const Archive& shared_archive() {
  static const Archive a = [] {
    QdConfig c;
    c.total_individuals = 800;
    c.random_init_count = 300;
    c.games_per_eval = 4;
    c.master_seed = 21;
    return run_map_elites(c);
  }();
  return a;
}

std::vector<Elite> small_pool(size_t n) {
  std::vector<Elite> pool = shared_archive().valid_elites();
  if (pool.size() > n) pool.resize(n);
  return pool;
}

}  // namespace

TEST_CASE("spearman matches reference values") {
  // Reference values from scipy.stats.spearmanr.
  const std::vector<double> x1 = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  const std::vector<double> y1 = {2.0, 1.5, 3.1, 2.9, 4.4, 3.0, 5.5, 6.1, 5.0, 7.2};
  Correlation c = spearman(x1, y1);
  CHECK(c.rho == doctest::Approx(0.8909090909090909).epsilon(1e-12));
  CHECK(c.p_value == doctest::Approx(0.0005421442248338665).epsilon(1e-9));
  const std::vector<double> x2 = {0, 1, 2, 3, 4, 5, 6, 7};
  const std::vector<double> y2 = {5, 5, 4, 4, 3, 6, 2, 1};
  c = spearman(x2, y2);
  CHECK(c.rho == doctest::Approx(-0.626551500525444).epsilon(1e-12));
  CHECK(c.p_value == doctest::Approx(0.09646118602901278).epsilon(1e-9));
  c = spearman(x2, x2);
  CHECK(c.rho == 1.0);
  CHECK(c.p_value == 0.0);
}

TEST_CASE("hamming distance") {
  Chromosome a, b;
  CHECK(hamming(a, a) == 0);
  b.genes[4] = 9;
  CHECK(hamming(a, b) == 1);
  b.genes.fill(3);
  CHECK(hamming(a, b) == 15);
}

TEST_CASE("cross-play matrix is symmetric with self-play on the diagonal") {
  const std::vector<Elite> pool = small_pool(6);
  REQUIRE(pool.size() == 6);
  WorkerPool workers(3);
  const CrossplayMatrix m = crossplay(pool, 4, 99, &workers);
  CHECK(m.total_games == planned_crossplay_games(6, 4));
  CHECK(planned_crossplay_games(326, 400) == 42'510'400);
  for (size_t i = 0; i < 6; ++i) {
    CHECK(m.games_at(i, i) == 4);
    for (size_t j = 0; j < 6; ++j) {
      CHECK(m.at(i, j) == m.at(j, i));
      if (i != j) CHECK(m.games_at(i, j) == 8);
    }
  }
  const CrossplayMatrix serial = crossplay(pool, 4, 99);
  CHECK(serial.means == m.means);
  CHECK(serial.games == m.games);
  const std::vector<double> means = m.agent_means();
  double row0 = 0;
  for (size_t j = 0; j < 6; ++j) row0 += m.at(0, j);
  CHECK(means[0] == doctest::Approx(row0 / 6));
}

TEST_CASE("best partners are a total function with counts summing to the pool size") {
  const std::vector<Elite> pool = small_pool(8);
  const CrossplayMatrix m = crossplay(pool, 2, 5);
  const BestPartners bp = best_partners(m);
  CHECK(std::accumulate(bp.times_chosen.begin(), bp.times_chosen.end(), 0) == static_cast<int>(pool.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m.size(); ++j) CHECK(m.at(i, bp.partner[i]) >= m.at(i, j));

  CrossplayMatrix tie;
  tie.niches = {{0, 1}, {0, 2}, {3, 3}};
  tie.means = {1, 1, 1, 1, 1, 1, 1, 1, 1};
  tie.games.assign(9, 1);
  CHECK(best_partners(tie).partner == std::vector<size_t>{0, 0, 0});
  const std::vector<Elite> one = small_pool(1);
  CHECK(best_partners(crossplay(one, 2, 1)).partner == std::vector<size_t>{0});
}

TEST_CASE("distance profile buckets all unordered pairs") {
  const std::vector<Elite> pool = small_pool(7);
  const CrossplayMatrix m = crossplay(pool, 2, 8);
  const auto profile = manhattan_profile(m);
  REQUIRE_FALSE(profile.empty());
  CHECK(profile.front().distance == 0);
  CHECK(profile.front().pairs == 7);
  CHECK(profile.front().mean == doctest::Approx(m.diagonal_mean()));
  int pairs = 0;
  for (const auto& b : profile) pairs += b.pairs;
  CHECK(pairs == 7 * 8 / 2);
}

TEST_CASE("action similarity is reflexive and symmetric") {
  const std::vector<Elite> pool = small_pool(4);
  const StateCorpus corpus = collect_corpus(pool, 2, 3);
  size_t turns = 0;
  for (const Elite& e : pool)
    for (int g = 0; g < 2; ++g)
      turns += play_game(e.chromosome, e.chromosome, derive_seed(3, e.niche().index(), g)).turns;
  CHECK(corpus.records.size() == turns);
  CHECK(corpus.mean_legal_actions() > 5);
  const Chromosome& a = pool[0].chromosome;
  const Chromosome& b = pool[1].chromosome;
  CHECK(action_similarity(a, a, corpus) == 1.0);
  CHECK(action_similarity(a, b, corpus) == action_similarity(b, a, corpus));
  CHECK_THROWS(action_similarity(a, b, StateCorpus{}));
  WorkerPool workers(2);
  const StateCorpus again = collect_corpus(pool, 2, 3, &workers);
  REQUIRE(again.records.size() == corpus.records.size());
  for (size_t i = 0; i < corpus.records.size(); ++i) CHECK(again.records[i].view == corpus.records[i].view);
}

TEST_CASE("corpus records every pre-action view of both seats") {
  const std::vector<Elite> pool = small_pool(1);
  const StateCorpus corpus = collect_corpus(pool, 1, 4);
  const GameResult r = play_game(pool[0].chromosome, pool[0].chromosome, derive_seed(4, pool[0].niche().index(), 0));
  CHECK(corpus.records.size() == static_cast<size_t>(r.turns));
  CHECK(corpus.records[0].view.player == 0);
  CHECK(corpus.records[1].view.player == 1);
  const std::string jsonl = corpus_jsonl(corpus);
  CHECK(std::count(jsonl.begin(), jsonl.end(), '\n') == r.turns);
}

TEST_CASE("cross-run report on a run against itself") {
  const Archive& a = shared_archive();
  const StateCorpus corpus = collect_corpus(small_pool(3), 1, 2);
  const CrossRunReport r = cross_run_report(a, a, 4, corpus, 1);
  CHECK(r.rows.size() == static_cast<size_t>(a.size()));
  CHECK(r.only_in_a.empty());
  CHECK(r.mean_hamming == 0.0);
  CHECK(r.mean_similarity == 1.0);
}

TEST_CASE("disjoint archives give an empty report with explicit niche lists") {
  Archive a, b;
  Elite e;
  e.descriptor = {0.1, 0.1};
  a.put(e);
  e.descriptor = {0.9, 0.9};
  b.put(e);
  const CrossRunReport r = cross_run_report(a, b, 2, StateCorpus{}, 1);
  CHECK(r.rows.empty());
  CHECK(r.only_in_a.size() == 1);
  CHECK(r.only_in_b.size() == 1);
  CHECK(r.only_in_b[0] == NicheCoord{18, 18});
}

TEST_CASE("grid exports mark empty niches NA and keep zero fitness") {
  Archive a;
  Elite e;
  e.descriptor = {0.0, 0.97};
  e.fitness = 0.0;
  a.put(e);
  e.descriptor = {0.5, 0.5};
  e.fitness = 12.25;
  a.put(e);
  const std::string csv = fitness_grid_csv(a);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line.rfind("c\\r,0,0.05,", 0) == 0);
  std::getline(in, line);  // c = 0 row
  CHECK(line.substr(line.rfind(',') + 1) == "0");
  CHECK(line.find("NA") != std::string::npos);
  int rows = 1;
  bool saw = false;
  while (std::getline(in, line)) {
    ++rows;
    saw |= line.find("12.25") != std::string::npos;
  }
  CHECK(rows == 20);
  CHECK(saw);
  CHECK(fitness_grid_svg(a).find("<svg") == 0);
}
