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

#include "mimrf/mil_data.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "mimrf/error.h"
#include "mimrf/io.h"

namespace mimrf {

using nlohmann::json;

namespace {

std::string IdFromJson(const json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw ParseError(where + ": id must be a string or an integer");
}

}  // namespace

CandidateSet::CandidateSet(std::string instance_id, int dim,
                           std::vector<double> values)
    : instance_id_(std::move(instance_id)), dim_(dim), values_(std::move(values)) {
  if (dim_ < 1) throw ContractError("CandidateSet: dimension must be positive");
  if (values_.empty()) {
    throw ContractError("CandidateSet '" + instance_id_ + "' has no candidates");
  }
  if (values_.size() % dim_ != 0) {
    throw ContractError("CandidateSet '" + instance_id_ +
                        "': value count is not a multiple of the dimension");
  }
}

CandidateSet CandidateSet::FromRows(std::string instance_id,
                                    const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) {
    throw ContractError("CandidateSet '" + instance_id + "' has no candidates");
  }
  const std::size_t dim = rows.front().size();
  std::vector<double> flat;
  flat.reserve(rows.size() * dim);
  for (const auto& r : rows) {
    if (r.size() != dim) {
      throw ContractError("CandidateSet '" + instance_id +
                          "': candidates differ in dimension");
    }
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return CandidateSet(std::move(instance_id), static_cast<int>(dim), std::move(flat));
}

std::size_t Dataset::num_instances() const {
  std::size_t n = 0;
  for (const auto& b : bags) n += b.instances.size();
  return n;
}

std::size_t Dataset::num_positive_bags() const {
  return std::count_if(bags.begin(), bags.end(), [](const Bag& b) { return b.positive(); });
}

std::size_t Dataset::num_negative_bags() const {
  return bags.size() - num_positive_bags();
}

bool Dataset::binary_labels() const {
  return std::all_of(bags.begin(), bags.end(),
                     [](const Bag& b) { return b.label == 0.0 || b.label == 1.0; });
}

void CheckDataset(const Dataset& d) {
  if (d.num_sources < 1 || d.num_sources > kMaxSources) {
    throw ParseError("dataset: num_sources must be in [1, " +
                     std::to_string(kMaxSources) + "], got " +
                     std::to_string(d.num_sources));
  }
  if (d.scaler && d.scaler->num_sources() != d.num_sources) {
    throw ParseError("dataset: scaler covers " +
                     std::to_string(d.scaler->num_sources()) + " sources, dataset has " +
                     std::to_string(d.num_sources));
  }
  std::set<std::string> ids;
  for (std::size_t b = 0; b < d.bags.size(); ++b) {
    const Bag& bag = d.bags[b];
    const std::string where = "bag " + std::to_string(b) + " ('" + bag.bag_id + "')";
    if (!(bag.label >= 0.0 && bag.label <= 1.0)) {
      std::ostringstream msg;
      msg << where << ": label " << bag.label << " is outside [0, 1]";
      throw ParseError(msg.str());
    }
    if (bag.instances.empty()) throw ParseError(where + ": bag has no instances");
    for (std::size_t i = 0; i < bag.instances.size(); ++i) {
      const CandidateSet& inst = bag.instances[i];
      const std::string iwhere = where + ", instance " + std::to_string(i) + " ('" +
                                 inst.instance_id() + "')";
      if (inst.dim() != d.num_sources) {
        throw ParseError(iwhere + ": candidates have " + std::to_string(inst.dim()) +
                         " values, expected " + std::to_string(d.num_sources));
      }
      if (!ids.insert(inst.instance_id()).second) {
        throw ParseError(iwhere + ": duplicate instance id");
      }
      for (double v : inst.flat()) {
        if (!std::isfinite(v)) throw ParseError(iwhere + ": non-finite candidate value");
        if (d.normalized && !(v >= 0.0 && v <= 1.0)) {
          throw ParseError(iwhere + ": normalized value outside [0, 1]");
        }
      }
    }
  }
}

void RequireBothClasses(const Dataset& d) {
  if (d.num_positive_bags() == 0) {
    throw ContractError("dataset has no positive bags (label >= 0.5); both classes are required");
  }
  if (d.num_negative_bags() == 0) {
    throw ContractError("dataset has no negative bags (label < 0.5); both classes are required");
  }
}

Dataset DatasetFromJson(const json& doc, const LoadOptions& options) {
  RejectUnknownKeys(doc, {"format_version", "num_sources", "bags"}, "dataset");
  Dataset d;
  try {
    const int version = doc.at("format_version").get<int>();
    if (version != 1) {
      throw ParseError("dataset: unsupported format_version " + std::to_string(version));
    }
    d.num_sources = doc.at("num_sources").get<int>();
    if (d.num_sources < 1 || d.num_sources > kMaxSources) {
      throw ParseError("dataset: num_sources must be in [1, " +
                       std::to_string(kMaxSources) + "]");
    }
    const json& bags = doc.at("bags");
    if (!bags.is_array()) throw ParseError("dataset: 'bags' must be an array");
    for (std::size_t b = 0; b < bags.size(); ++b) {
      const json& jb = bags[b];
      const std::string where = "bag " + std::to_string(b);
      RejectUnknownKeys(jb, {"bag_id", "label", "instances"}, where);
      Bag bag;
      bag.bag_id = IdFromJson(jb.at("bag_id"), where);
      if (!jb.at("label").is_number()) throw ParseError(where + ": label must be a number");
      bag.label = jb.at("label").get<double>();
      const json& insts = jb.at("instances");
      if (!insts.is_array()) throw ParseError(where + ": 'instances' must be an array");
      for (std::size_t i = 0; i < insts.size(); ++i) {
        const json& ji = insts[i];
        const std::string iwhere = where + ", instance " + std::to_string(i);
        RejectUnknownKeys(ji, {"instance_id", "candidates"}, iwhere);
        std::string id = IdFromJson(ji.at("instance_id"), iwhere);
        auto rows = ji.at("candidates").get<std::vector<std::vector<double>>>();
        if (rows.empty()) {
          if (!options.empty_candidate_fill) {
            throw ParseError(iwhere + " ('" + id + "'): empty candidate set");
          }
          rows.assign(1, std::vector<double>(d.num_sources, *options.empty_candidate_fill));
        }
        for (std::size_t c = 0; c < rows.size(); ++c) {
          if (static_cast<int>(rows[c].size()) != d.num_sources) {
            throw ParseError(iwhere + " ('" + id + "'), candidate " + std::to_string(c) +
                             ": has " + std::to_string(rows[c].size()) +
                             " values, expected " + std::to_string(d.num_sources));
          }
        }
        bag.instances.push_back(CandidateSet::FromRows(std::move(id), rows));
      }
      d.bags.push_back(std::move(bag));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("dataset: ") + e.what());
  }
  CheckDataset(d);
  return d;
}

json DatasetToJson(const Dataset& d) {
  json bags = json::array();
  for (const Bag& bag : d.bags) {
    json insts = json::array();
    for (const CandidateSet& inst : bag.instances) {
      json rows = json::array();
      for (std::size_t c = 0; c < inst.size(); ++c) {
        const auto row = inst.candidate(c);
        rows.push_back(std::vector<double>(row.begin(), row.end()));
      }
      insts.push_back({{"instance_id", inst.instance_id()}, {"candidates", std::move(rows)}});
    }
    bags.push_back({{"bag_id", bag.bag_id}, {"label", bag.label}, {"instances", std::move(insts)}});
  }
  return {{"format_version", 1}, {"num_sources", d.num_sources}, {"bags", std::move(bags)}};
}

Dataset LoadDataset(const std::string& path, const LoadOptions& options) {
  try {
    return DatasetFromJson(ReadJsonFile(path), options);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void SaveDataset(const Dataset& d, const std::string& path) {
  WriteFileAtomic(path, DatasetToJson(d).dump() + "\n");
}

TruthMap LoadTruth(const std::string& path) {
  const json doc = ReadJsonFile(path);
  if (!doc.is_object()) throw ParseError(path + ": truth file must be an object of id -> value");
  TruthMap truth;
  for (const auto& [id, v] : doc.items()) {
    if (!v.is_number()) throw ParseError(path + ": truth for '" + id + "' is not a number");
    truth[id] = v.get<double>();
  }
  return truth;
}

void SaveTruth(const TruthMap& truth, const std::string& path) {
  json doc = json::object();
  for (const auto& [id, v] : truth) doc[id] = v;
  WriteFileAtomic(path, doc.dump(1) + "\n");
}

SourceScaler FitScaler(const Dataset& d) {
  std::vector<std::vector<double>> per_source(d.num_sources);
  for (const Bag& bag : d.bags) {
    for (const CandidateSet& inst : bag.instances) {
      for (std::size_t c = 0; c < inst.size(); ++c) {
        const auto row = inst.candidate(c);
        for (int k = 0; k < d.num_sources; ++k) per_source[k].push_back(row[k]);
      }
    }
  }
  return FitScaler(per_source);
}

Dataset Normalize(const Dataset& d, const SourceScaler& scaler) {
  if (scaler.num_sources() != d.num_sources) {
    throw ContractError("Normalize: scaler has " + std::to_string(scaler.num_sources()) +
                        " sources, dataset has " + std::to_string(d.num_sources));
  }
  Dataset out = d;
  for (Bag& bag : out.bags) {
    for (CandidateSet& inst : bag.instances) {
      for (std::size_t c = 0; c < inst.size(); ++c) scaler.ApplyInPlace(inst.mutable_candidate(c));
    }
  }
  out.scaler = scaler;
  out.normalized = true;
  return out;
}

Dataset CollapseCandidates(const Dataset& d) {
  Dataset out = d;
  for (Bag& bag : out.bags) {
    for (CandidateSet& inst : bag.instances) {
      std::vector<double> mean(inst.dim(), 0.0);
      for (std::size_t c = 0; c < inst.size(); ++c) {
        const auto row = inst.candidate(c);
        for (int k = 0; k < inst.dim(); ++k) mean[k] += row[k];
      }
      for (double& v : mean) v /= static_cast<double>(inst.size());
      inst = CandidateSet(inst.instance_id(), inst.dim(), std::move(mean));
    }
  }
  return out;
}

std::vector<CandidateSet> Instances(const Dataset& d) {
  std::vector<CandidateSet> all;
  all.reserve(d.num_instances());
  for (const Bag& bag : d.bags) all.insert(all.end(), bag.instances.begin(), bag.instances.end());
  return all;
}

}  // namespace mimrf
