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

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

namespace hanabi_qd::cli {

struct EvolveOptions {
  uint64_t seed = 0;
  uint64_t individuals = 1'000'000;
  uint64_t init_random = 10'000;
  int games_per_eval = 100;
  std::filesystem::path out;
  int threads = 1;
  uint64_t checkpoint_every = 10'000;
  int batch = 1;
  bool frozen_seeds = false;
  bool quiet = false;
};

struct ReevaluateOptions {
  std::filesystem::path archive;
  std::filesystem::path out;
  int games = 1000;
  uint64_t seed = 0;
  int threads = 1;
};

struct CrossplayOptions {
  std::filesystem::path archive;
  std::filesystem::path out;
  int games_per_pair = 400;
  uint64_t seed = 0;
  int threads = 1;
  bool plan_only = false;
};

struct SimilarityOptions {
  std::filesystem::path archive;
  std::filesystem::path other;  // defaults to `archive`
  std::filesystem::path corpus_archive;  // defaults to `archive`
  std::filesystem::path out;
  int corpus_games = 100;
  uint64_t seed = 0;
  int threads = 1;
  bool write_corpus = false;
};

struct CrossRunOptions {
  std::filesystem::path archive_a;
  std::filesystem::path archive_b;
  std::filesystem::path corpus_archive;  // defaults to `archive_a`
  std::filesystem::path out;
  int games = 1000;
  int corpus_games = 100;
  uint64_t seed = 0;
  int threads = 1;
};

struct ExportOptions {
  std::filesystem::path archive;
  std::filesystem::path out;
  bool svg = false;
};

// Each command writes its artifacts plus manifest.json into `out` and
// returns a process exit code. Errors propagate as exceptions.
int cmd_evolve(const EvolveOptions& options);
int cmd_reevaluate(const ReevaluateOptions& options);
int cmd_crossplay(const CrossplayOptions& options);
int cmd_similarity(const SimilarityOptions& options);
int cmd_cross_run(const CrossRunOptions& options);
int cmd_export(const ExportOptions& options);
int cmd_rules_list(const std::filesystem::path& out);

}  // namespace hanabi_qd::cli
