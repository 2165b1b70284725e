// Copyright 2026 The sumrobust Authors.
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

#ifndef SUMROBUST_BUILTIN_DATA_H_
#define SUMROBUST_BUILTIN_DATA_H_

#include <string_view>

// Data files compiled into the library. Sources live under data/.
namespace sumrobust::builtin {

extern const std::string_view kSentimentLexicon;
extern const std::string_view kAntonyms;
extern const std::string_view kThesaurus;
extern const std::string_view kParaphrases;
extern const std::string_view kToxicLexicon;
// Quarantined: see data/quarantine/README.md.
extern const std::string_view kToxicTemplates;

}  // namespace sumrobust::builtin

#endif  // SUMROBUST_BUILTIN_DATA_H_
