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

#ifndef MIMRF_IO_H_
#define MIMRF_IO_H_

#include <string>

#include "json.hpp"
#include "mimrf/choquet.h"
#include "mimrf/fuzzy_measure.h"

namespace mimrf {

std::string ReadFile(const std::string& path);

// Writes to a temporary sibling and renames it over `path`, so a failed
// write never leaves a partial file behind.
void WriteFileAtomic(const std::string& path, const std::string& content);

nlohmann::json ReadJsonFile(const std::string& path);

// Measure document: {"num_sources": m, "values": [2^m - 1 reals]}, values in
// ascending bitmask order.
nlohmann::json MeasureToJson(const FuzzyMeasure& measure);
FuzzyMeasure MeasureFromJson(const nlohmann::json& doc);
void SaveMeasure(const FuzzyMeasure& measure, const std::string& path);
FuzzyMeasure LoadMeasure(const std::string& path);

nlohmann::json ScalerToJson(const SourceScaler& scaler);
SourceScaler ScalerFromJson(const nlohmann::json& doc);

// Throws ParseError listing any key of `doc` not in `allowed`.
void RejectUnknownKeys(const nlohmann::json& doc,
                       std::initializer_list<const char*> allowed,
                       const std::string& context);

}  // namespace mimrf

#endif  // MIMRF_IO_H_
