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

#ifndef SPANDIAG_CONFIG_H_
#define SPANDIAG_CONFIG_H_

#include <string>

#include "spandiag/attributes.h"

namespace spandiag {

struct AttributeConfig {
  ComplianceRules rules;
  Lexicon lexicon;
};

// One lowercase wordform per line, UTF-8. Blank lines are skipped; entries
// are lowercased on load.
Lexicon load_lexicon(const std::string& path);

// JSON file with "forbidden_onsets", "forbidden_codas", "forbidden_infixes",
// "foreign_chars" (string arrays) and optional "lexicon_path" (resolved
// relative to the config file). All keys are optional; a missing lexicon
// means every span is unambiguous.
AttributeConfig load_attribute_config(const std::string& path);

}  // namespace spandiag

#endif  // SPANDIAG_CONFIG_H_
