// Copyright 2026 The spandiag Authors.
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

#include "spandiag/config.h"

#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "spandiag/unicode.h"

namespace spandiag {

Lexicon load_lexicon(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open lexicon '" + path + "'");
  Lexicon lexicon;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    lexicon.entries.insert(uni::lower(line));
  }
  return lexicon;
}

AttributeConfig load_attribute_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("bad config '" + path + "': " + e.what());
  }
  if (!doc.is_object()) {
    throw ParseError("config '" + path + "' must be a JSON object");
  }

  auto read_list = [&](const char* key) {
    std::vector<std::string> out;
    if (!doc.contains(key)) return out;
    if (!doc[key].is_array()) {
      throw ParseError("config key '" + std::string(key) +
                       "' must be an array of strings");
    }
    for (const auto& item : doc[key]) {
      if (!item.is_string()) {
        throw ParseError("config key '" + std::string(key) +
                         "' must be an array of strings");
      }
      out.push_back(item.get<std::string>());
    }
    return out;
  };

  AttributeConfig config;
  config.rules.forbidden_onsets = read_list("forbidden_onsets");
  config.rules.forbidden_codas = read_list("forbidden_codas");
  config.rules.forbidden_infixes = read_list("forbidden_infixes");
  config.rules.foreign_chars = read_list("foreign_chars");
  config.rules.validate();

  if (doc.contains("lexicon_path")) {
    if (!doc["lexicon_path"].is_string()) {
      throw ParseError("config key 'lexicon_path' must be a string");
    }
    std::filesystem::path lex(doc["lexicon_path"].get<std::string>());
    if (lex.is_relative()) {
      lex = std::filesystem::path(path).parent_path() / lex;
    }
    config.lexicon = load_lexicon(lex.string());
  }
  return config;
}

}  // namespace spandiag
