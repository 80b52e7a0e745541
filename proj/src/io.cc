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

#include "mimrf/io.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mimrf/error.h"

namespace mimrf {

using nlohmann::json;

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFileAtomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + tmp + "' for writing");
    out << content;
    out.flush();
    if (!out) {
      out.close();
      std::remove(tmp.c_str());
      throw std::runtime_error("failed writing '" + tmp + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot rename '" + tmp + "' to '" + path +
                             "': " + ec.message());
  }
}

json ReadJsonFile(const std::string& path) {
  const std::string text = ReadFile(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path + "' is not a valid JSON document: " + e.what());
  }
}

void RejectUnknownKeys(const json& doc, std::initializer_list<const char*> allowed,
                       const std::string& context) {
  if (!doc.is_object()) throw ParseError(context + ": expected an object");
  for (const auto& [key, value] : doc.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw ParseError(context + ": unknown key '" + key + "'");
  }
}

json MeasureToJson(const FuzzyMeasure& g) {
  json values = json::array();
  for (double v : g.values()) values.push_back(v);
  return {{"num_sources", g.num_sources()}, {"values", std::move(values)}};
}

FuzzyMeasure MeasureFromJson(const json& doc) {
  RejectUnknownKeys(doc, {"num_sources", "values"}, "measure");
  try {
    const int m = doc.at("num_sources").get<int>();
    auto values = doc.at("values").get<std::vector<double>>();
    return FuzzyMeasure(m, std::move(values));
  } catch (const json::exception& e) {
    throw ParseError(std::string("measure: ") + e.what());
  } catch (const ContractError& e) {
    throw ParseError(e.what());
  }
}

void SaveMeasure(const FuzzyMeasure& g, const std::string& path) {
  WriteFileAtomic(path, MeasureToJson(g).dump(2) + "\n");
}

FuzzyMeasure LoadMeasure(const std::string& path) {
  return MeasureFromJson(ReadJsonFile(path));
}

json ScalerToJson(const SourceScaler& s) {
  return {{"min", s.min()}, {"max", s.max()}};
}

SourceScaler ScalerFromJson(const json& doc) {
  RejectUnknownKeys(doc, {"min", "max"}, "scaler");
  try {
    return SourceScaler(doc.at("min").get<std::vector<double>>(),
                        doc.at("max").get<std::vector<double>>());
  } catch (const json::exception& e) {
    throw ParseError(std::string("scaler: ") + e.what());
  } catch (const ContractError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace mimrf
