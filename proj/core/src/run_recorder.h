// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MATROID_UNION_SRC_RUN_RECORDER_H_
#define MATROID_UNION_SRC_RUN_RECORDER_H_

#include <string>
#include <utility>
#include <vector>

#include "matroid_union/algos_ind.h"
#include "matroid_union/oracle.h"

namespace matroid_union::internal {

// Tracks query counters and phase logs over one solver run.
class RunRecorder {
 public:
  explicit RunRecorder(const Instance& instance)
      : instance_(instance), start_(instance.Snapshot()) {}

  // Marks the start of a phase; Finish() logs the delta since this call.
  void Begin() { phase_start_ = instance_.Snapshot(); }

  void Finish(std::string kind, int distance, int augmentations) {
    const QueryStats delta = instance_.Snapshot() - phase_start_;
    PhaseLog log;
    log.kind = std::move(kind);
    log.distance = distance;
    log.augmentations = augmentations;
    log.independence_queries = delta.independence_queries;
    log.rank_queries = delta.rank_queries;
    phases_.push_back(std::move(log));
  }

  SolveReport Report(PartitionState state) const {
    SolveReport report;
    report.p = state.size();
    report.state = std::move(state);
    report.stats = instance_.Snapshot() - start_;
    report.stats.phases = static_cast<int>(phases_.size());
    for (const auto& phase : phases_) {
      report.stats.augmentations += phase.augmentations;
    }
    report.phases = phases_;
    return report;
  }

 private:
  const Instance& instance_;
  QueryStats start_;
  QueryStats phase_start_;
  std::vector<PhaseLog> phases_;
};

}  // namespace matroid_union::internal

#endif  // MATROID_UNION_SRC_RUN_RECORDER_H_
