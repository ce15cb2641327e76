//
// Copyright 2026 The MWPA Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef MWPA_TEXTLAB_LEXICONS_H_
#define MWPA_TEXTLAB_LEXICONS_H_

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace mwpa {

enum class PosTag {
  kNoun,
  kPropn,
  kVerb,
  kAdj,
  kAdv,
  kPron,
  kNum,
  kDet,
  kAdp,
  kPunct,
  kOther,
};

absl::string_view PosTagName(PosTag tag);
std::optional<PosTag> ParsePosTag(absl::string_view name);

enum class Gender { kUnknown, kFemale, kMale };

absl::string_view GenderName(Gender gender);

// Word lists shipped under data/lexicons/. Loaded once, then read-only and
// safe to share between threads.
class Lexicons {
 public:
  static absl::StatusOr<Lexicons> Load(const std::filesystem::path& dir);

  // Lazily loads DefaultDataDir()/lexicons; aborts if the bundle is missing,
  // since nothing in the pipeline can run without it.
  static const Lexicons& Default();

  // Names are stored as listed (capitalised). A name on both lists is
  // reported as unknown gender.
  std::optional<Gender> NameGender(absl::string_view name) const;
  const std::vector<std::string>& female_names() const { return female_; }
  const std::vector<std::string>& male_names() const { return male_; }

  // Multi-word entries as token sequences, longest first.
  const std::vector<std::vector<std::string>>& places() const {
    return places_;
  }
  const std::vector<std::vector<std::string>>& orgs() const { return orgs_; }

  // Keys are lower-case.
  bool IsStopWord(absl::string_view lower_word) const;
  std::optional<PosTag> LookupPos(absl::string_view lower_word) const;

 private:
  std::vector<std::string> female_;
  std::vector<std::string> male_;
  std::map<std::string, Gender, std::less<>> gender_;
  std::vector<std::vector<std::string>> places_;
  std::vector<std::vector<std::string>> orgs_;
  std::set<std::string, std::less<>> stopwords_;
  std::map<std::string, PosTag, std::less<>> pos_;
};

}  // namespace mwpa

#endif  // MWPA_TEXTLAB_LEXICONS_H_
