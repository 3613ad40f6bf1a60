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

#ifndef SPANDIAG_BIO_H_
#define SPANDIAG_BIO_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "spandiag/corpus.h"

namespace spandiag {

// CoNLL-style BIO file: one `token<TAB>tag` per line, blank line between
// sentences, UTF-8, LF or CRLF in, LF out.

struct BioParseOptions {
  // Strict mode turns orphan I- tags into errors; lenient mode (the default)
  // repairs them to B- and records a warning. Prediction files routinely
  // contain orphan tags, gold files should not.
  bool strict = false;
  std::string name = "dataset";
};

struct BioWarning {
  std::size_t line;  // 1-based line number in the input
  std::string message;
};

struct BioParseResult {
  Dataset dataset;
  std::vector<BioWarning> warnings;
};

// Throws ParseError on malformed lines, invalid tags, bad UTF-8, and (in
// strict mode) orphan I- tags. An empty stream yields an empty Dataset.
BioParseResult parse_bio(std::istream& in, const BioParseOptions& options = {});
BioParseResult parse_bio(const std::string& text,
                         const BioParseOptions& options = {});
BioParseResult parse_bio_file(const std::string& path,
                              const BioParseOptions& options = {});

// Canonical form: LF line endings, one blank line after every sentence.
// parse_bio(serialize_bio(d)) reproduces d's tokens, spans and sentence
// boundaries exactly.
void serialize_bio(const Dataset& dataset, std::ostream& out);
std::string serialize_bio(const Dataset& dataset);
void write_bio_file(const Dataset& dataset, const std::string& path);

}  // namespace spandiag

#endif  // SPANDIAG_BIO_H_
