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

#include "mwpa/corpus/loaders.h"

#include <cmath>
#include <optional>
#include <utility>

#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_replace.h"
#include "absl/strings/str_split.h"
#include "json.hpp"
#include "mwpa/common/file.h"
#include "mwpa/common/status.h"
#include "mwpa/textlab/annotator.h"
#include "mwpa/textlab/tokenizer.h"

namespace mwpa {
namespace {

using Json = nlohmann::ordered_json;

// MaWPS stores solutions as floats.
constexpr double kFloatAnswerTolerance = 1e-4;

Reject MakeReject(size_t index, std::string id, const absl::Status& status) {
  std::string kind = ErrorKind(status);
  if (kind.empty()) kind = "malformed_record";
  return Reject{index, std::move(id), std::move(kind),
                std::string(status.message())};
}

absl::Status Malformed(absl::string_view message) {
  return MakeError(absl::StatusCode::kInvalidArgument, "malformed_record",
                   message);
}

// Question sentences in the wild end in '.', or nothing at all.
std::string TerminateQuestion(absl::string_view sentence) {
  std::vector<std::string> tokens = Tokenize(sentence);
  if (tokens.empty()) return "";
  if (tokens.back() == "." || tokens.back() == "!") {
    tokens.back() = "?";
  } else if (tokens.back() != "?") {
    tokens.push_back("?");
  }
  return JoinTokens(tokens);
}

// Splits a raw problem text into body sentences and a question.
absl::Status SplitProblemText(absl::string_view text, ProblemSpec& spec) {
  std::vector<std::string> sentences = SplitSentences(text);
  absl::StatusOr<int> q = FindQuestion(sentences);
  if (!q.ok()) return q.status();
  for (int i = 0; i < static_cast<int>(sentences.size()); ++i) {
    if (i == *q) {
      spec.question = TerminateQuestion(sentences[i]);
    } else {
      spec.body.push_back(sentences[i]);
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<Problem> MawpsRecord(const Json& record, std::string& id) {
  if (!record.is_object()) return Malformed("record is not an object");
  if (record.contains("iIndex")) {
    const Json& idx = record["iIndex"];
    id = idx.is_string() ? idx.get<std::string>() : idx.dump();
  }
  if (id.empty()) return Malformed("missing iIndex");
  if (!record.contains("sQuestion") || !record["sQuestion"].is_string()) {
    return Malformed("missing sQuestion");
  }
  if (!record.contains("lEquations") || !record["lEquations"].is_array() ||
      record["lEquations"].empty() || !record["lEquations"][0].is_string()) {
    return Malformed("missing lEquations");
  }
  ProblemSpec spec;
  spec.id = id;
  spec.source = Source::kMawps;
  if (absl::Status s = SplitProblemText(
          record["sQuestion"].get<std::string>(), spec);
      !s.ok()) {
    return s;
  }
  spec.equation = absl::StrReplaceAll(
      record["lEquations"][0].get<std::string>(), {{"x", "X"}});
  if (record.contains("lSolutions") && record["lSolutions"].is_array() &&
      !record["lSolutions"].empty() && record["lSolutions"][0].is_number()) {
    double solution = record["lSolutions"][0].get<double>();
    if (!std::isfinite(solution)) return Malformed("non-finite solution");
    spec.expected_answer = Rational(solution);
    spec.answer_tolerance = kFloatAnswerTolerance;
  }
  return BuildProblem(spec);
}

absl::StatusOr<LoadResult> ParseMawps(absl::string_view contents) {
  Json doc = Json::parse(contents.begin(), contents.end(), nullptr,
                         /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_array()) {
    return MakeError(absl::StatusCode::kInvalidArgument, "malformed_file",
                     "MaWPS file is not a JSON array");
  }
  LoadResult result;
  for (size_t i = 0; i < doc.size(); ++i) {
    std::string id;
    absl::StatusOr<Problem> p = MawpsRecord(doc[i], id);
    if (p.ok()) {
      result.problems.push_back(*std::move(p));
    } else {
      result.rejects.push_back(MakeReject(i, id, p.status()));
    }
  }
  return result;
}

std::string DecodeXmlEntities(absl::string_view text) {
  return absl::StrReplaceAll(text, {{"&lt;", "<"},
                                    {"&gt;", ">"},
                                    {"&quot;", "\""},
                                    {"&apos;", "'"},
                                    {"&amp;", "&"}});
}

std::optional<std::string> TagContent(absl::string_view block,
                                      absl::string_view tag) {
  const std::string open = absl::StrCat("<", tag, ">");
  const std::string close = absl::StrCat("</", tag, ">");
  size_t b = block.find(open);
  if (b == absl::string_view::npos) return std::nullopt;
  b += open.size();
  size_t e = block.find(close, b);
  if (e == absl::string_view::npos) return std::nullopt;
  return DecodeXmlEntities(absl::StripAsciiWhitespace(block.substr(b, e - b)));
}

std::string Attribute(absl::string_view open_tag, absl::string_view name) {
  const std::string key = absl::StrCat(name, "=\"");
  size_t b = open_tag.find(key);
  if (b == absl::string_view::npos) return "";
  b += key.size();
  size_t e = open_tag.find('"', b);
  if (e == absl::string_view::npos) return "";
  return std::string(open_tag.substr(b, e - b));
}

// Decimal places in a numeric answer, used as its rounding tolerance.
double RoundingTolerance(absl::string_view number) {
  size_t dot = number.find('.');
  if (dot == absl::string_view::npos) return 0;
  return 0.5 * std::pow(10.0, -static_cast<double>(number.size() - dot - 1));
}

absl::StatusOr<Problem> AsdivRecord(absl::string_view block,
                                    const std::string& id) {
  std::optional<std::string> body = TagContent(block, "Body");
  std::optional<std::string> question = TagContent(block, "Question");
  std::optional<std::string> answer = TagContent(block, "Answer");
  std::optional<std::string> formula = TagContent(block, "Formula");
  if (!body) return Malformed("missing <Body>");
  if (!question) return Malformed("missing <Question>");
  if (!formula) return Malformed("missing <Formula>");

  ProblemSpec spec;
  spec.id = id;
  spec.source = Source::kAsdiv;
  spec.body = SplitSentences(*body);
  spec.question = TerminateQuestion(*question);

  // "7+2=9": the left side is the computation, the right the result.
  size_t eq = formula->rfind('=');
  if (eq == std::string::npos) {
    return MakeError(absl::StatusCode::kInvalidArgument, "missing_equals",
                     absl::StrCat("formula without '=': ", *formula));
  }
  spec.equation = absl::StrCat("X=", formula->substr(0, eq));
  if (answer) {
    std::string first(absl::StripAsciiWhitespace(*answer));
    first = first.substr(0, first.find(' '));
    absl::StatusOr<Rational> value = ParseRational(first);
    if (!value.ok()) {
      return Malformed(absl::StrCat("unparseable answer '", *answer, "'"));
    }
    spec.expected_answer = *value;
    spec.answer_tolerance = RoundingTolerance(first);
  }
  return BuildProblem(spec);
}

absl::StatusOr<LoadResult> ParseAsdiv(absl::string_view contents) {
  LoadResult result;
  size_t index = 0;
  size_t pos = 0;
  while (true) {
    size_t open = contents.find("<Problem", pos);
    if (open == absl::string_view::npos) break;
    // "<ProblemSet>" shares the prefix.
    char next = open + 8 < contents.size() ? contents[open + 8] : '\0';
    if (next != ' ' && next != '>') {
      pos = open + 8;
      continue;
    }
    size_t tag_end = contents.find('>', open);
    size_t close = contents.find("</Problem>", open);
    if (tag_end == absl::string_view::npos ||
        close == absl::string_view::npos) {
      result.rejects.push_back(
          {index, "", "malformed_record", "unterminated <Problem>"});
      break;
    }
    absl::string_view open_tag = contents.substr(open, tag_end - open);
    absl::string_view block = contents.substr(tag_end + 1, close - tag_end - 1);
    std::string id = Attribute(open_tag, "ID");
    absl::StatusOr<Problem> p = AsdivRecord(block, id);
    if (p.ok()) {
      result.problems.push_back(*std::move(p));
    } else {
      result.rejects.push_back(MakeReject(index, id, p.status()));
    }
    ++index;
    pos = close + 10;
  }
  return result;
}

absl::StatusOr<Problem> CanonicalRecord(const Json& j, std::string& id) {
  if (!j.is_object()) return Malformed("record is not an object");
  for (const char* key : {"id", "question", "equation", "answer", "source"}) {
    if (!j.contains(key) || !j[key].is_string()) {
      return Malformed(absl::StrCat("missing string field '", key, "'"));
    }
  }
  if (!j.contains("body") || !j["body"].is_array()) {
    return Malformed("missing array field 'body'");
  }
  ProblemSpec spec;
  id = j["id"].get<std::string>();
  spec.id = id;
  for (const Json& s : j["body"]) {
    if (!s.is_string()) return Malformed("non-string body sentence");
    spec.body.push_back(s.get<std::string>());
  }
  spec.question = j["question"].get<std::string>();
  spec.equation = j["equation"].get<std::string>();
  absl::StatusOr<Source> source = ParseSource(j["source"].get<std::string>());
  if (!source.ok()) return source.status();
  spec.source = *source;
  absl::StatusOr<Rational> answer =
      ParseRational(j["answer"].get<std::string>());
  if (!answer.ok()) return answer.status();
  spec.expected_answer = *answer;
  if (j.contains("augmentation") && !j["augmentation"].is_null()) {
    const Json& a = j["augmentation"];
    if (!a.is_object() || !a.contains("parent_id") ||
        !a["parent_id"].is_string() || !a.contains("method") ||
        !a["method"].is_string()) {
      return Malformed("bad 'augmentation' object");
    }
    AugmentationTag tag;
    tag.parent_id = a["parent_id"].get<std::string>();
    absl::StatusOr<Method> method = ParseMethod(a["method"].get<std::string>());
    if (!method.ok()) return method.status();
    tag.method = *method;
    if (a.contains("stage_trace") && a["stage_trace"].is_array()) {
      for (const Json& s : a["stage_trace"]) {
        if (s.is_string()) tag.stage_trace.push_back(s.get<std::string>());
      }
    }
    spec.provenance = std::move(tag);
  }
  return BuildProblem(spec);
}

absl::StatusOr<LoadResult> ParseCanonical(absl::string_view contents) {
  LoadResult result;
  size_t index = 0;
  for (absl::string_view line : absl::StrSplit(contents, '\n')) {
    if (absl::StripAsciiWhitespace(line).empty()) continue;
    std::string id;
    Json j = Json::parse(line.begin(), line.end(), nullptr, false);
    absl::StatusOr<Problem> p =
        j.is_discarded() ? Malformed("line is not JSON") : CanonicalRecord(j, id);
    if (p.ok()) {
      result.problems.push_back(*std::move(p));
    } else {
      result.rejects.push_back(MakeReject(index, id, p.status()));
    }
    ++index;
  }
  return result;
}

}  // namespace

absl::StatusOr<CorpusFormat> ParseCorpusFormat(absl::string_view name) {
  if (name == "mawps_json") return CorpusFormat::kMawpsJson;
  if (name == "asdiv_xmlish") return CorpusFormat::kAsdivXmlish;
  if (name == "canonical_jsonl") return CorpusFormat::kCanonicalJsonl;
  return MakeError(absl::StatusCode::kInvalidArgument, "unknown_format",
                   absl::StrCat("unknown corpus format '", name, "'"));
}

absl::string_view CorpusFormatName(CorpusFormat format) {
  switch (format) {
    case CorpusFormat::kMawpsJson:
      return "mawps_json";
    case CorpusFormat::kAsdivXmlish:
      return "asdiv_xmlish";
    case CorpusFormat::kCanonicalJsonl:
      return "canonical_jsonl";
  }
  return "";
}

absl::StatusOr<LoadResult> LoadCorpus(const std::filesystem::path& path,
                                      CorpusFormat format) {
  absl::StatusOr<std::string> contents = ReadFile(path);
  if (!contents.ok()) return contents.status();
  return ParseCorpus(*contents, format);
}

absl::StatusOr<LoadResult> ParseCorpus(absl::string_view contents,
                                       CorpusFormat format) {
  switch (format) {
    case CorpusFormat::kMawpsJson:
      return ParseMawps(contents);
    case CorpusFormat::kAsdivXmlish:
      return ParseAsdiv(contents);
    case CorpusFormat::kCanonicalJsonl:
      return ParseCanonical(contents);
  }
  return MakeError(absl::StatusCode::kInvalidArgument, "unknown_format",
                   "unknown corpus format");
}

std::string ProblemToJsonLine(const Problem& p) {
  Json j;
  j["id"] = p.id;
  j["body"] = p.body;
  j["question"] = p.question;
  j["equation"] = p.equation.source_text().empty()
                      ? p.equation.ToString()
                      : p.equation.source_text();
  j["answer"] = FormatRational(p.answer);
  j["source"] = std::string(SourceName(p.source));
  if (p.provenance) {
    Json a;
    a["parent_id"] = p.provenance->parent_id;
    a["method"] = std::string(MethodName(p.provenance->method));
    a["stage_trace"] = p.provenance->stage_trace;
    j["augmentation"] = std::move(a);
  } else {
    j["augmentation"] = nullptr;
  }
  return j.dump();
}

std::string SerializeCanonicalJsonl(absl::Span<const Problem> problems) {
  std::string out;
  for (const Problem& p : problems) {
    out += ProblemToJsonLine(p);
    out += '\n';
  }
  return out;
}

absl::Status WriteCanonicalJsonl(const std::filesystem::path& path,
                                 absl::Span<const Problem> problems) {
  return WriteFile(path, SerializeCanonicalJsonl(problems));
}

}  // namespace mwpa
