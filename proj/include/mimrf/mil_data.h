/*
 * Copyright 2026 The MIMRF Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef MIMRF_MIL_DATA_H_
#define MIMRF_MIL_DATA_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "mimrf/choquet.h"

namespace mimrf {

// All candidate source vectors for one instance. Each candidate is one
// possible cross-resolution correspondence (e.g. one high-resolution point
// paired with the low-resolution pixel it falls in). Stored row-major.
class CandidateSet {
 public:
  CandidateSet(std::string instance_id, int dim, std::vector<double> values);
  static CandidateSet FromRows(std::string instance_id,
                               const std::vector<std::vector<double>>& rows);

  const std::string& instance_id() const { return instance_id_; }
  int dim() const { return dim_; }
  std::size_t size() const { return values_.size() / dim_; }
  std::span<const double> candidate(std::size_t i) const {
    return {values_.data() + i * dim_, static_cast<std::size_t>(dim_)};
  }
  std::span<double> mutable_candidate(std::size_t i) {
    return {values_.data() + i * dim_, static_cast<std::size_t>(dim_)};
  }
  std::span<const double> flat() const { return values_; }

  bool operator==(const CandidateSet&) const = default;

 private:
  std::string instance_id_;
  int dim_;
  std::vector<double> values_;
};

struct Bag {
  std::string bag_id;
  // 0 / 1 for classification, any value in [0, 1] for regression targets.
  double label = 0.0;
  std::vector<CandidateSet> instances;

  bool positive() const { return label >= 0.5; }
  bool operator==(const Bag&) const = default;
};

struct Dataset {
  int num_sources = 0;
  std::vector<Bag> bags;
  std::optional<SourceScaler> scaler;
  // True once every candidate has been mapped through `scaler`.
  bool normalized = false;

  std::size_t num_instances() const;
  std::size_t num_positive_bags() const;
  std::size_t num_negative_bags() const;
  bool binary_labels() const;

  bool operator==(const Dataset&) const = default;
};

// Instance ground truth keyed by instance id; used for scoring only.
using TruthMap = std::map<std::string, double>;

// Checks every structural invariant: uniform dimension, nonempty bags and
// candidate sets, labels in [0, 1], unique instance ids, finite values.
// Throws ParseError naming the offending bag / instance.
void CheckDataset(const Dataset& dataset);

// Throws ContractError unless there is at least one positive and one
// negative bag; the message names the missing class.
void RequireBothClasses(const Dataset& dataset);

struct LoadOptions {
  // When set, an instance with no candidates receives a single candidate
  // with this value for every source instead of being rejected.
  std::optional<double> empty_candidate_fill;
};

Dataset DatasetFromJson(const nlohmann::json& doc, const LoadOptions& options = {});
nlohmann::json DatasetToJson(const Dataset& dataset);
Dataset LoadDataset(const std::string& path, const LoadOptions& options = {});
void SaveDataset(const Dataset& dataset, const std::string& path);

TruthMap LoadTruth(const std::string& path);
void SaveTruth(const TruthMap& truth, const std::string& path);

// Scaler fitted on every candidate value of every instance.
SourceScaler FitScaler(const Dataset& dataset);

// Copy of `dataset` with all candidates mapped through `scaler`.
Dataset Normalize(const Dataset& dataset, const SourceScaler& scaler);

// Replaces every candidate set by the single mean candidate, the analogue of
// rasterizing high-resolution points onto the low-resolution grid.
Dataset CollapseCandidates(const Dataset& dataset);

// All instances of all bags, in bag order.
std::vector<CandidateSet> Instances(const Dataset& dataset);

}  // namespace mimrf

#endif  // MIMRF_MIL_DATA_H_
