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

#include "spandiag/bio.h"

#include <fstream>
#include <sstream>

#include "spandiag/unicode.h"

namespace spandiag {

namespace {

struct PendingSentence {
  std::vector<std::string> tokens;
  std::vector<std::string> tags;
  std::vector<std::size_t> lines;  // input line per token, for diagnostics
};

void flush_sentence(PendingSentence& pending, bool strict, Dataset& dataset,
                    std::vector<BioWarning>& warnings) {
  if (pending.tokens.empty()) return;
  TagDecodeResult decoded;
  try {
    decoded = spans_from_tags(pending.tags, strict);
  } catch (const ParseError& e) {
    // Re-map token position to the input line number.
    throw ParseError("sentence ending at line " +
                     std::to_string(pending.lines.back()) + ": " + e.what());
  }
  for (std::size_t idx : decoded.repaired) {
    warnings.push_back({pending.lines[idx],
                        "orphan tag '" + pending.tags[idx] + "' repaired to 'B-" +
                            pending.tags[idx].substr(2) + "'"});
  }
  Sentence sentence;
  sentence.tokens = std::move(pending.tokens);
  sentence.spans = std::move(decoded.spans);
  sentence.validate();
  dataset.sentences.push_back(std::move(sentence));
  pending = PendingSentence{};
}

}  // namespace

BioParseResult parse_bio(std::istream& in, const BioParseOptions& options) {
  BioParseResult result;
  result.dataset.name = options.name;

  PendingSentence pending;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush_sentence(pending, options.strict, result.dataset, result.warnings);
      continue;
    }
    uni::decode_utf8(line);  // reject non-UTF-8 input early

    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 'token<TAB>tag'");
    }
    std::string token = line.substr(0, tab);
    std::string tag = line.substr(tab + 1);
    if (token.empty() || token.find(' ') != std::string::npos) {
      throw ParseError("line " + std::to_string(line_no) + ": bad token field");
    }
    if (!is_valid_tag(tag)) {
      throw ParseError("line " + std::to_string(line_no) + ": invalid tag '" +
                       tag + "'");
    }
    pending.tokens.push_back(std::move(token));
    pending.tags.push_back(std::move(tag));
    pending.lines.push_back(line_no);
  }
  flush_sentence(pending, options.strict, result.dataset, result.warnings);
  return result;
}

BioParseResult parse_bio(const std::string& text,
                         const BioParseOptions& options) {
  std::istringstream in(text);
  return parse_bio(in, options);
}

BioParseResult parse_bio_file(const std::string& path,
                              const BioParseOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  BioParseOptions opts = options;
  if (opts.name == "dataset") opts.name = path;
  return parse_bio(in, opts);
}

void serialize_bio(const Dataset& dataset, std::ostream& out) {
  for (const Sentence& sentence : dataset.sentences) {
    const std::vector<std::string> tags =
        tags_from_spans(sentence.tokens.size(), sentence.spans);
    for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
      out << sentence.tokens[i] << '\t' << tags[i] << '\n';
    }
    out << '\n';
  }
}

std::string serialize_bio(const Dataset& dataset) {
  std::ostringstream out;
  serialize_bio(dataset, out);
  return out.str();
}

void write_bio_file(const Dataset& dataset, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  serialize_bio(dataset, out);
}

}  // namespace spandiag
