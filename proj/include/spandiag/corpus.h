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

#ifndef SPANDIAG_CORPUS_H_
#define SPANDIAG_CORPUS_H_

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace spandiag {

// Base error for everything this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input data (BIO lines, tag syntax, bad UTF-8, bad config files).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Data that parses but violates an invariant (span bounds, overlapping
// spans, seed hints that disagree with the computed profile).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Two datasets that were expected to be sentence- and token-aligned are not.
class AlignmentError : public Error {
 public:
  using Error::Error;
};

// A labeled, half-open [start, end) run of token indices. Half-open spans
// keep length and adjacency arithmetic free of off-by-one cases.
struct Span {
  int start = 0;  // first token index, inclusive
  int end = 0;    // one past the last token index
  std::string label;

  int length() const { return end - start; }
  bool overlaps(const Span& other) const {
    return start < other.end && other.start < end;
  }
  friend bool operator==(const Span&, const Span&) = default;
  friend auto operator<=>(const Span&, const Span&) = default;
};

// A tokenized sentence with non-overlapping spans sorted by start.
// A token's index is its position in `tokens`; tokens are non-empty and
// contain no whitespace. Instances are treated as immutable once built, so
// they can be shared freely across threads.
struct Sentence {
  std::vector<std::string> tokens;
  std::vector<Span> spans;
  std::map<std::string, std::string> meta;

  std::size_t size() const { return tokens.size(); }

  // Throws ValidationError if token or span invariants are broken.
  void validate() const;

  // Meta is provenance, not content: equality covers tokens and spans only.
  friend bool operator==(const Sentence& a, const Sentence& b) {
    return a.tokens == b.tokens && a.spans == b.spans;
  }
};

struct Dataset {
  std::string name;
  std::vector<Sentence> sentences;

  std::size_t span_count() const;
  void validate() const;

  friend bool operator==(const Dataset& a, const Dataset& b) {
    return a.sentences == b.sentences;
  }
};

// True for "O", "B-<label>" and "I-<label>" with a non-empty label.
bool is_valid_tag(const std::string& tag);

// Per-token BIO tags for a sentence of `n_tokens` tokens covered by `spans`.
// Throws ValidationError if the spans are out of bounds, unsorted or
// overlapping.
std::vector<std::string> tags_from_spans(std::size_t n_tokens,
                                         const std::vector<Span>& spans);

struct TagDecodeResult {
  std::vector<Span> spans;
  // Indices of tags that were orphan I-X and repaired to B-X in lenient mode.
  std::vector<std::size_t> repaired;
};

// Decodes a BIO tag sequence into spans (maximal B/I runs). In lenient mode
// an I-X with no live B-X/I-X run before it opens a new span and is recorded
// in `repaired`; in strict mode it throws ParseError. Invalid tag syntax
// always throws ParseError.
TagDecodeResult spans_from_tags(const std::vector<std::string>& tags,
                                bool strict = false);

}  // namespace spandiag

#endif  // SPANDIAG_CORPUS_H_
