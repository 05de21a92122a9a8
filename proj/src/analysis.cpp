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

#include "hanabi_qd/analysis.hpp"

#include <algorithm>
#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hanabi_qd/simulate.hpp"

namespace hanabi_qd {
namespace {

constexpr uint64_t kSelfPairTag = 0;
constexpr uint64_t kFirstSeatTag = 1;
constexpr uint64_t kSecondSeatTag = 2;

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Writes the 20x20 grid with a header row of risk-aversion labels and a
// leading column of communicativeness labels.
std::string grid_csv(const std::array<std::optional<std::string>, kNumNiches>& cells) {
  std::ostringstream out;
  out << "c\\r";
  for (int ri = 0; ri < kGridSize; ++ri) out << ',' << fmt_double(ri / 20.0);
  out << '\n';
  for (int ci = 0; ci < kGridSize; ++ci) {
    out << fmt_double(ci / 20.0);
    for (int ri = 0; ri < kGridSize; ++ri) {
      const auto& cell = cells[NicheCoord{ci, ri}.index()];
      out << ',' << (cell ? *cell : "NA");
    }
    out << '\n';
  }
  return out.str();
}

std::vector<double> average_ranks(std::span<const double> v) {
  std::vector<size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(v.size());
  for (size_t i = 0; i < order.size();) {
    size_t j = i;
    while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
    const double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

void run_jobs(size_t count, WorkerPool* workers, const std::function<void(size_t)>& body) {
  if (workers) {
    workers->parallel_for(count, body);
  } else {
    for (size_t i = 0; i < count; ++i) body(i);
  }
}

}  // namespace

std::vector<double> CrossplayMatrix::agent_means() const {
  std::vector<double> out(size(), 0.0);
  for (size_t i = 0; i < size(); ++i) {
    double sum = 0.0;
    for (size_t j = 0; j < size(); ++j) sum += at(i, j);
    out[i] = sum / static_cast<double>(size());
  }
  return out;
}

double CrossplayMatrix::diagonal_mean() const {
  if (size() == 0) return 0.0;
  double sum = 0.0;
  for (size_t i = 0; i < size(); ++i) sum += at(i, i);
  return sum / static_cast<double>(size());
}

double CrossplayMatrix::off_diagonal_mean() const {
  if (size() < 2) return 0.0;
  double sum = 0.0;
  for (size_t i = 0; i < size(); ++i)
    for (size_t j = 0; j < size(); ++j)
      if (i != j) sum += at(i, j);
  return sum / static_cast<double>(size() * (size() - 1));
}

uint64_t planned_crossplay_games(uint64_t pool_size, int games_per_pair) {
  return pool_size * pool_size * static_cast<uint64_t>(games_per_pair);
}

CrossplayMatrix crossplay(std::span<const Elite> pool, int games_per_pair, uint64_t seed, WorkerPool* workers) {
  if (pool.empty()) throw std::invalid_argument("crossplay needs a non-empty pool");
  if (games_per_pair < 1) throw std::invalid_argument("games_per_pair must be at least 1");
  const size_t n = pool.size();
  CrossplayMatrix m;
  for (const Elite& e : pool) m.niches.push_back(e.niche());
  m.means.assign(n * n, 0.0);
  m.games.assign(n * n, 0);

  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) pairs.emplace_back(i, j);

  std::vector<std::pair<int64_t, int>> totals(pairs.size());
  run_jobs(pairs.size(), workers, [&](size_t job) {
    const auto [i, j] = pairs[job];
    const uint64_t ni = m.niches[i].index(), nj = m.niches[j].index();
    const Chromosome& a = pool[i].chromosome;
    const Chromosome& b = pool[j].chromosome;
    int64_t score = 0;
    int played = 0;
    if (i == j) {
      for (int g = 0; g < games_per_pair; ++g, ++played)
        score += play_game(a, a, derive_seed(seed, ni, nj, kSelfPairTag, g)).score;
    } else {
      // Both orderings of the pair, each split evenly between seatings.
      for (int g = 0; g < games_per_pair; ++g, ++played)
        score += play_game(a, b, derive_seed(seed, ni, nj, kFirstSeatTag, g)).score;
      for (int g = 0; g < games_per_pair; ++g, ++played)
        score += play_game(b, a, derive_seed(seed, ni, nj, kSecondSeatTag, g)).score;
    }
    totals[job] = {score, played};
  });

  for (size_t job = 0; job < pairs.size(); ++job) {
    const auto [i, j] = pairs[job];
    const double mean = static_cast<double>(totals[job].first) / totals[job].second;
    m.means[i * n + j] = m.means[j * n + i] = mean;
    m.games[i * n + j] = m.games[j * n + i] = totals[job].second;
    m.total_games += static_cast<uint64_t>(totals[job].second);
  }
  return m;
}

BestPartners best_partners(const CrossplayMatrix& matrix) {
  BestPartners out;
  const size_t n = matrix.size();
  out.partner.resize(n);
  out.times_chosen.assign(n, 0);
  for (size_t i = 0; i < n; ++i) {
    size_t best = 0;
    for (size_t j = 1; j < n; ++j)
      if (matrix.at(i, j) > matrix.at(i, best)) best = j;
    out.partner[i] = best;
    ++out.times_chosen[best];
  }
  return out;
}

std::vector<DistanceBucket> manhattan_profile(const CrossplayMatrix& matrix) {
  std::map<int, std::pair<double, int>> buckets;
  for (size_t i = 0; i < matrix.size(); ++i)
    for (size_t j = i; j < matrix.size(); ++j) {
      auto& b = buckets[manhattan_distance(matrix.niches[i], matrix.niches[j])];
      b.first += matrix.at(i, j);
      ++b.second;
    }
  std::vector<DistanceBucket> out;
  for (const auto& [d, b] : buckets) out.push_back({d, b.first / b.second, b.second});
  return out;
}

Correlation spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("spearman needs equal-length samples");
  Correlation out;
  out.n = static_cast<int>(x.size());
  if (out.n < 3) return out;
  const std::vector<double> rx = average_ranks(x), ry = average_ranks(y);
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / out.n;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / out.n;
  double sxy = 0, sxx = 0, syy = 0;
  for (int i = 0; i < out.n; ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0 || syy == 0) return out;
  out.rho = sxy / std::sqrt(sxx * syy);
  if (std::abs(out.rho) >= 1.0) {
    out.p_value = 0.0;
    return out;
  }
  const double df = out.n - 2;
  const double t = out.rho * std::sqrt(df / (1.0 - out.rho * out.rho));
  boost::math::students_t dist(df);
  out.p_value = 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t)));
  return out;
}

int hamming(const Chromosome& a, const Chromosome& b) {
  int d = 0;
  for (int i = 0; i < kChromosomeLength; ++i) d += a.genes[i] != b.genes[i];
  return d;
}

int legal_action_count(const PlayerView& view) {
  int n = view.own_size;
  if (view.info_tokens < kMaxInfoTokens) n += view.own_size;
  if (view.info_tokens > 0) {
    uint8_t colors = 0, ranks = 0;
    for (const Card& card : view.partner.occupied()) {
      colors |= static_cast<uint8_t>(1u << static_cast<int>(card.color));
      ranks |= static_cast<uint8_t>(1u << (card.rank - 1));
    }
    n += std::popcount(colors) + std::popcount(ranks);
  }
  return n;
}

double StateCorpus::mean_legal_actions() const {
  if (records.empty()) return 0.0;
  double sum = 0.0;
  for (const CorpusRecord& r : records) sum += legal_action_count(r.view);
  return sum / static_cast<double>(records.size());
}

StateCorpus collect_corpus(std::span<const Elite> pool, int games_each, uint64_t seed, WorkerPool* workers) {
  std::vector<std::vector<CorpusRecord>> per_elite(pool.size());
  run_jobs(pool.size(), workers, [&](size_t i) {
    const Elite& elite = pool[i];
    const NicheCoord niche = elite.niche();
    for (int g = 0; g < games_each; ++g) {
      const uint32_t game_id = static_cast<uint32_t>(i * games_each + g);
      uint32_t turn = 0;
      play_game(elite.chromosome, elite.chromosome, derive_seed(seed, niche.index(), g), nullptr,
                [&](const PlayerView& view, const Action&) {
                  per_elite[i].push_back({view, niche, game_id, turn++});
                });
    }
  });
  StateCorpus corpus;
  for (auto& records : per_elite)
    corpus.records.insert(corpus.records.end(), records.begin(), records.end());
  return corpus;
}

double action_similarity(const Chromosome& a, const Chromosome& b, const StateCorpus& corpus) {
  if (corpus.records.empty()) throw std::invalid_argument("action similarity needs a non-empty corpus");
  if (a == b) return 1.0;
  size_t same = 0;
  for (const CorpusRecord& r : corpus.records) {
    RuleContext context(r.view);
    const Action x = decide(a, context);
    const Action y = decide(b, context);
    same += x == y;
  }
  return static_cast<double>(same) / static_cast<double>(corpus.records.size());
}

double paired_score(const Chromosome& a, const Chromosome& b, int games, uint64_t seed) {
  if (games < 1) throw std::invalid_argument("paired_score needs at least one game");
  int64_t total = 0;
  for (int g = 0; g < games; ++g) {
    const uint64_t s = derive_seed(seed, g);
    total += g % 2 == 0 ? play_game(a, b, s).score : play_game(b, a, s).score;
  }
  return static_cast<double>(total) / games;
}

CrossRunReport cross_run_report(const Archive& a, const Archive& b, int games, const StateCorpus& corpus,
                                uint64_t seed, WorkerPool* workers) {
  CrossRunReport report;
  for (int idx = 0; idx < kNumNiches; ++idx) {
    const auto& ea = a.at(idx);
    const auto& eb = b.at(idx);
    if (ea && eb) {
      CrossRunRow row;
      row.niche = NicheCoord::from_index(idx);
      report.rows.push_back(row);
    } else if (ea) {
      report.only_in_a.push_back(NicheCoord::from_index(idx));
    } else if (eb) {
      report.only_in_b.push_back(NicheCoord::from_index(idx));
    }
  }
  run_jobs(report.rows.size(), workers, [&](size_t i) {
    CrossRunRow& row = report.rows[i];
    const Elite& ea = *a.at(row.niche);
    const Elite& eb = *b.at(row.niche);
    row.paired_score = paired_score(ea.chromosome, eb.chromosome, games, derive_seed(seed, row.niche.index()));
    row.self_play_a = ea.fitness;
    row.self_play_b = eb.fitness;
    row.hamming = hamming(ea.chromosome, eb.chromosome);
    row.similarity = corpus.records.empty() ? 0.0 : action_similarity(ea.chromosome, eb.chromosome, corpus);
  });
  if (!report.rows.empty()) {
    const double n = static_cast<double>(report.rows.size());
    for (const CrossRunRow& row : report.rows) {
      report.mean_paired += row.paired_score;
      report.mean_self_play += (row.self_play_a + row.self_play_b) / 2.0;
      report.mean_hamming += row.hamming;
      report.mean_similarity += row.similarity;
    }
    report.mean_paired /= n;
    report.mean_self_play /= n;
    report.mean_hamming /= n;
    report.mean_similarity /= n;
  }
  return report;
}

std::string fitness_grid_csv(const Archive& archive) {
  std::array<std::optional<std::string>, kNumNiches> cells;
  for (int idx = 0; idx < kNumNiches; ++idx)
    if (const auto& e = archive.at(idx)) cells[idx] = fmt_double(e->fitness);
  return grid_csv(cells);
}

std::string agent_mean_grid_csv(const CrossplayMatrix& matrix) {
  std::array<std::optional<std::string>, kNumNiches> cells;
  const std::vector<double> means = matrix.agent_means();
  for (size_t i = 0; i < matrix.size(); ++i) cells[matrix.niches[i].index()] = fmt_double(means[i]);
  return grid_csv(cells);
}

std::string best_partner_grid_csv(const CrossplayMatrix& matrix, const BestPartners& partners) {
  std::array<std::optional<std::string>, kNumNiches> cells;
  for (size_t i = 0; i < matrix.size(); ++i) cells[matrix.niches[i].index()] = std::to_string(partners.times_chosen[i]);
  return grid_csv(cells);
}

std::string best_partner_list_csv(const CrossplayMatrix& matrix, const BestPartners& partners) {
  std::ostringstream out;
  out << "c,r,partner_c,partner_r,pair_score,times_chosen\n";
  for (size_t i = 0; i < matrix.size(); ++i) {
    const NicheCoord& n = matrix.niches[i];
    const NicheCoord& p = matrix.niches[partners.partner[i]];
    out << fmt_double(n.c_label()) << ',' << fmt_double(n.r_label()) << ',' << fmt_double(p.c_label()) << ','
        << fmt_double(p.r_label()) << ',' << fmt_double(matrix.at(i, partners.partner[i])) << ','
        << partners.times_chosen[i] << '\n';
  }
  return out.str();
}

std::string crossplay_matrix_csv(const CrossplayMatrix& matrix) {
  std::ostringstream out;
  out << "c_i,r_i,c_j,r_j,mean,games\n";
  for (size_t i = 0; i < matrix.size(); ++i)
    for (size_t j = 0; j < matrix.size(); ++j)
      out << fmt_double(matrix.niches[i].c_label()) << ',' << fmt_double(matrix.niches[i].r_label()) << ','
          << fmt_double(matrix.niches[j].c_label()) << ',' << fmt_double(matrix.niches[j].r_label()) << ','
          << fmt_double(matrix.at(i, j)) << ',' << matrix.games_at(i, j) << '\n';
  return out.str();
}

std::string distance_profile_csv(std::span<const DistanceBucket> profile) {
  std::ostringstream out;
  out << "distance,mean,n\n";
  for (const DistanceBucket& b : profile) out << b.distance << ',' << fmt_double(b.mean) << ',' << b.pairs << '\n';
  return out.str();
}

std::string cross_run_csv(const CrossRunReport& report) {
  std::ostringstream out;
  out << "c,r,paired_score,self_play_a,self_play_b,hamming,action_similarity\n";
  for (const CrossRunRow& row : report.rows)
    out << fmt_double(row.niche.c_label()) << ',' << fmt_double(row.niche.r_label()) << ','
        << fmt_double(row.paired_score) << ',' << fmt_double(row.self_play_a) << ',' << fmt_double(row.self_play_b)
        << ',' << row.hamming << ',' << fmt_double(row.similarity) << '\n';
  return out.str();
}

std::string reevaluation_csv(std::span<const ReevalEntry> report) {
  std::ostringstream out;
  out << "c,r,fitness,sd,sem,games\n";
  for (const ReevalEntry& e : report)
    out << fmt_double(e.niche.c_label()) << ',' << fmt_double(e.niche.r_label()) << ',' << fmt_double(e.fitness)
        << ',' << fmt_double(e.sd) << ',' << fmt_double(e.sem) << ',' << e.games << '\n';
  return out.str();
}

std::string fitness_grid_svg(const Archive& archive) {
  constexpr int kCell = 24;
  constexpr int kMargin = 40;
  const int side = kMargin + kGridSize * kCell + 10;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\"" << side << "\">\n";
  out << "<text x=\"" << kMargin << "\" y=\"14\" font-size=\"12\">risk aversion &#8594;</text>\n";
  out << "<text x=\"2\" y=\"" << kMargin + 12 << "\" font-size=\"12\">c &#8595;</text>\n";
  for (int ci = 0; ci < kGridSize; ++ci)
    for (int ri = 0; ri < kGridSize; ++ri) {
      const auto& e = archive.at(NicheCoord{ci, ri});
      std::string fill = "#eeeeee";
      if (e) {
        const double t = std::clamp(e->fitness / kMaxScore, 0.0, 1.0);
        char buf[8];
        std::snprintf(buf, sizeof buf, "#%02x%02x%02x", static_cast<int>(255 * t), static_cast<int>(80 * (1 - t)),
                      static_cast<int>(255 * (1 - t)));
        fill = buf;
      }
      out << "<rect x=\"" << kMargin + ri * kCell << "\" y=\"" << kMargin - 20 + ci * kCell << "\" width=\"" << kCell
          << "\" height=\"" << kCell << "\" fill=\"" << fill << "\"><title>(" << fmt_double(ci / 20.0) << ","
          << fmt_double(ri / 20.0) << ") " << (e ? fmt_double(e->fitness) : "NA") << "</title></rect>\n";
    }
  out << "</svg>\n";
  return out.str();
}

nlohmann::json view_to_json(const PlayerView& view) {
  auto knowledge = [](const SlotKnowledge& k) {
    return nlohmann::json{{"colors", k.colors}, {"ranks", k.ranks}, {"hinted", k.hinted}};
  };
  nlohmann::json own = nlohmann::json::array();
  for (int s = 0; s < view.own_size; ++s) own.push_back(knowledge(view.own_knowledge[s]));
  nlohmann::json partner = nlohmann::json::array();
  for (int s = 0; s < view.partner.size; ++s) {
    auto slot = knowledge(view.partner.knowledge[s]);
    slot["card"] = to_string(view.partner.cards[s]);
    partner.push_back(slot);
  }
  nlohmann::json discard = nlohmann::json::array();
  for (int id = 0; id < kNumIdentities; ++id)
    for (int k = 0; k < view.discard[id]; ++k) discard.push_back(to_string(Card::from_identity(id)));
  return {
      {"player", view.player},
      {"turn", view.turn},
      {"own", own},
      {"partner", partner},
      {"fireworks", view.fireworks},
      {"discard", discard},
      {"info_tokens", view.info_tokens},
      {"lives", view.lives},
      {"deck_size", view.deck_size},
      {"final_turns_remaining", view.final_turns_remaining},
  };
}

std::string corpus_jsonl(const StateCorpus& corpus) {
  std::string out;
  for (const CorpusRecord& r : corpus.records) {
    nlohmann::json line{{"niche", {r.niche.ci, r.niche.ri}}, {"game", r.game}, {"turn", r.turn},
                        {"view", view_to_json(r.view)}};
    out += line.dump();
    out += '\n';
  }
  return out;
}

}  // namespace hanabi_qd
