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

#include "spandiag/corpus.h"

#include <string>

namespace spandiag {

namespace {

bool has_whitespace(const std::string& s) {
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') return true;
  }
  return false;
}

}  // namespace

void Sentence::validate() const {
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].empty()) {
      throw ValidationError("empty token at index " + std::to_string(i));
    }
    if (has_whitespace(tokens[i])) {
      throw ValidationError("token contains whitespace at index " +
                            std::to_string(i));
    }
  }
  int prev_end = 0;
  for (std::size_t i = 0; i < spans.size(); ++i) {
    const Span& s = spans[i];
    if (s.label.empty()) {
      throw ValidationError("span " + std::to_string(i) + " has empty label");
    }
    if (s.start < 0 || s.start >= s.end ||
        s.end > static_cast<int>(tokens.size())) {
      throw ValidationError("span " + std::to_string(i) + " [" +
                            std::to_string(s.start) + "," +
                            std::to_string(s.end) + ") out of bounds for " +
                            std::to_string(tokens.size()) + " tokens");
    }
    if (s.start < prev_end) {
      throw ValidationError("span " + std::to_string(i) +
                            " overlaps or is unsorted");
    }
    prev_end = s.end;
  }
}

std::size_t Dataset::span_count() const {
  std::size_t n = 0;
  for (const Sentence& s : sentences) n += s.spans.size();
  return n;
}

void Dataset::validate() const {
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    try {
      sentences[i].validate();
    } catch (const ValidationError& e) {
      throw ValidationError("sentence " + std::to_string(i) + ": " + e.what());
    }
  }
}

bool is_valid_tag(const std::string& tag) {
  if (tag == "O") return true;
  if (tag.size() < 3) return false;
  if (tag[0] != 'B' && tag[0] != 'I') return false;
  return tag[1] == '-';
}

std::vector<std::string> tags_from_spans(std::size_t n_tokens,
                                         const std::vector<Span>& spans) {
  Sentence probe;
  probe.tokens.assign(n_tokens, "_");
  probe.spans = spans;
  probe.validate();

  std::vector<std::string> tags(n_tokens, "O");
  for (const Span& s : spans) {
    tags[s.start] = "B-" + s.label;
    for (int i = s.start + 1; i < s.end; ++i) tags[i] = "I-" + s.label;
  }
  return tags;
}

TagDecodeResult spans_from_tags(const std::vector<std::string>& tags,
                                bool strict) {
  TagDecodeResult result;
  std::string open_label;  // label of the run currently open, empty if none
  int open_start = -1;

  auto close_run = [&](int end) {
    if (open_start >= 0) {
      result.spans.push_back(Span{open_start, end, open_label});
      open_start = -1;
      open_label.clear();
    }
  };

  for (std::size_t i = 0; i < tags.size(); ++i) {
    const std::string& tag = tags[i];
    if (!is_valid_tag(tag)) {
      throw ParseError("invalid tag '" + tag + "' at token " +
                       std::to_string(i));
    }
    if (tag == "O") {
      close_run(static_cast<int>(i));
      continue;
    }
    const std::string label = tag.substr(2);
    if (tag[0] == 'B') {
      close_run(static_cast<int>(i));
      open_start = static_cast<int>(i);
      open_label = label;
    } else {  // I-
      if (open_start >= 0 && open_label == label) continue;
      if (strict) {
        throw ParseError("orphan tag '" + tag + "' at token " +
                         std::to_string(i));
      }
      // Lenient repair: treat as B-label.
      close_run(static_cast<int>(i));
      open_start = static_cast<int>(i);
      open_label = label;
      result.repaired.push_back(i);
    }
  }
  close_run(static_cast<int>(tags.size()));
  return result;
}

}  // namespace spandiag
