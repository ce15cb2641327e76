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

#include "mwpa/pipeline/pipeline.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <set>
#include <thread>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "json.hpp"
#include "mwpa/augment/paraphrase.h"
#include "mwpa/augment/substitution.h"
#include "mwpa/common/status.h"
#include "mwpa/equation/alignment.h"
#include "mwpa/pipeline/throttle.h"
#include "mwpa/providers/remote.h"
#include "mwpa/providers/stubs.h"
#include "mwpa/textlab/tokenizer.h"

namespace mwpa {
namespace {

using OJson = nlohmann::ordered_json;

absl::StatusOr<RemoteOptions> RemoteOptionsFor(const std::string& name,
                                               const std::string& choice) {
  if (choice == "remote") return RemoteOptionsFromEnv(name);
  RemoteOptions options;
  options.base_url = choice;
  if (const char* t = std::getenv("MWPA_PROVIDER_TIMEOUT_MS"); t && *t) {
    int ms;
    if (!absl::SimpleAtoi(t, &ms) || ms <= 0) {
      return MakeError(absl::StatusCode::kInvalidArgument, "bad_config",
                       absl::StrCat("MWPA_PROVIDER_TIMEOUT_MS='", t, "'"));
    }
    options.timeout_ms = ms;
  }
  return options;
}

// Builds the stub or the remote client for one provider slot.
template <typename Stub, typename Remote>
absl::StatusOr<std::unique_ptr<Provider>> Make(const PipelineConfig& config,
                                               const std::string& name) {
  const std::string choice = config.ProviderChoice(name);
  if (choice == "stub") return std::unique_ptr<Provider>(new Stub());
  absl::StatusOr<RemoteOptions> options = RemoteOptionsFor(name, choice);
  if (!options.ok()) return options.status();
  return std::unique_ptr<Provider>(new Remote(*std::move(options)));
}

// Rejections a method reports about the problem itself. Anything else is
// taken to be the provider's fault.
bool IsRejection(const std::string& kind) {
  static const std::set<std::string> kinds = {
      augment_errors::kUnchanged,        augment_errors::kNumbersChanged,
      augment_errors::kPlaceholderCorruption, augment_errors::kNoBody,
      augment_errors::kNoQuestion,       "placeholder_collision"};
  return kinds.count(kind) > 0;
}

struct Throttled {
  explicit Throttled(const ProviderSet& in) : set(in) {
    if (in.paraphrase) set.paraphrase = &Keep<ThrottledParaphraser>(*in.paraphrase);
    if (in.translate) set.translate = &Keep<ThrottledTranslator>(*in.translate);
    if (in.fill) set.fill = &Keep<ThrottledFiller>(*in.fill);
    if (in.nearest) set.nearest = &Keep<ThrottledEmbeddings>(*in.nearest);
    if (in.similarity) set.similarity = &Keep<ThrottledSimilarity>(*in.similarity);
    if (in.loss) set.loss = &Keep<ThrottledLoss>(*in.loss);
    if (in.annotator) {
      annotator = std::make_unique<ThrottledAnnotator>(*in.annotator);
      set.annotator = annotator.get();
    }
  }

  template <typename W, typename P>
  const W& Keep(const P& inner) {
    auto w = std::make_unique<W>(inner);
    const W& ref = *w;
    owned.push_back(std::move(w));
    return ref;
  }

  ProviderSet set;
  std::vector<std::unique_ptr<Provider>> owned;
  std::unique_ptr<AnnotatorBackend> annotator;
};

struct Outcome {
  std::vector<Problem> problems;
  std::vector<SelectionDecision> decisions;
  AugmentStats stats;
  std::vector<std::string> failures;
};

// Why a method cannot run at all, or "" if it can.
std::string MissingProvider(Method m, const ProviderSet& ps) {
  if (ps.annotator == nullptr && m != Method::kRoundTrip) return "annotator";
  switch (m) {
    case Method::kRoundTrip:
      return ps.translate ? "" : "translate";
    case Method::kFillMask:
      return ps.fill ? "" : "fill";
    case Method::kSynonym:
      return ps.nearest ? "" : "nearest";
    default:
      return "";
  }
}

absl::StatusOr<std::vector<Candidate>> RunMethod(Method m, const Problem& src,
                                                 const PipelineConfig& config,
                                                 const ProviderSet& ps) {
  switch (m) {
    case Method::kProblemReorder: {
      absl::StatusOr<Candidate> c = ReorderProblem(src, *ps.annotator);
      if (!c.ok()) return c.status();
      return std::vector<Candidate>{*std::move(c)};
    }
    case Method::kRoundTrip: {
      std::vector<Candidate> out;
      absl::Status first_rejection;
      for (const TranslationRoute& route : config.routes) {
        absl::StatusOr<Candidate> c = RoundTrip(src, route, *ps.translate);
        if (c.ok()) {
          out.push_back(*std::move(c));
        } else if (IsRejection(ErrorKind(c.status()))) {
          if (first_rejection.ok()) first_rejection = c.status();
        } else {
          return c.status();
        }
      }
      if (out.empty() && !first_rejection.ok()) return first_rejection;
      return out;
    }
    case Method::kFillMask:
      return FillMaskAugment(src, config.substitution, *ps.annotator, *ps.fill);
    case Method::kSynonym:
      return SynonymAugment(src, config.substitution, *ps.annotator,
                            *ps.nearest);
    case Method::kEntity:
      return EntityAugment(src, config.substitution, *ps.annotator,
                           *ps.lexicons);
  }
  return std::vector<Candidate>{};
}

std::vector<std::string> Labels(const PipelineConfig& config) {
  std::vector<std::string> labels;
  for (Method m : kAllMethods) {
    if (!config.methods.count(m)) continue;
    std::string label(config.combine_mode == CombineMode::kUnion
                          ? MethodName(m)
                          : FamilyName(FamilyOf(m)));
    if (std::find(labels.begin(), labels.end(), label) == labels.end()) {
      labels.push_back(std::move(label));
    }
  }
  return labels;
}

Outcome ProcessProblem(const Problem& p, const PipelineConfig& config,
                       const ProviderSet& ps) {
  Outcome out;
  out.problems.push_back(p);

  std::vector<const Problem*> sources;
  if (config.apply_to_original) sources.push_back(&p);
  PrimaryStageResult primary;
  if (ps.paraphrase != nullptr) {
    primary = PrimaryStage(p, config.base_candidates, *ps.paraphrase);
    out.stats.bases = static_cast<int>(primary.bases.size());
    out.stats.bases_dropped = primary.dropped;
    if (!primary.warning.ok()) {
      ++out.stats.primary_failures;
      out.failures.push_back(absl::StrCat(p.id, " primary_stage: ",
                                          primary.warning.ToString()));
    }
  }
  for (const Problem& b : primary.bases) sources.push_back(&b);

  std::vector<Candidate> pool;
  std::set<std::string> seen = {NormalizeText(p.Text())};
  for (Method m : kAllMethods) {
    if (!config.methods.count(m)) continue;
    MethodCounters& mc = out.stats.per_method[std::string(MethodName(m))];
    if (std::string missing = MissingProvider(m, ps); !missing.empty()) {
      ++mc.provider_errors;
      out.failures.push_back(absl::StrCat(p.id, " ", MethodName(m),
                                          ": no ", missing, " provider"));
      continue;
    }
    for (const Problem* src : sources) {
      absl::StatusOr<std::vector<Candidate>> made =
          RunMethod(m, *src, config, ps);
      if (!made.ok()) {
        const std::string kind = ErrorKind(made.status());
        if (IsRejection(kind)) {
          ++mc.rejected[kind];
          continue;
        }
        // The provider is misbehaving for this problem; stop asking.
        ++mc.provider_errors;
        out.failures.push_back(absl::StrCat(p.id, " ", MethodName(m), ": ",
                                            made.status().ToString()));
        break;
      }
      for (Candidate& c : *made) {
        ++mc.generated;
        c.parent_id = p.id;
        if (src != &p) {
          c.stage_trace.insert(c.stage_trace.begin(), "primary_stage");
        }
        ValidationReport report = ValidateCandidate(p, c, *ps.lexicons);
        if (!report.pass()) {
          ++mc.gate_failed[report.FirstFailure()];
          continue;
        }
        if (!seen.insert(NormalizeText(c.Text())).second) {
          ++mc.duplicates;
          continue;
        }
        ++mc.kept;
        pool.push_back(std::move(c));
      }
    }
  }

  std::vector<ScoredSet> sets;
  for (const std::string& label : Labels(config)) {
    ScoredSet set;
    set.parent = &p;
    set.label = label;
    for (const Candidate& c : pool) {
      const std::string own(config.combine_mode == CombineMode::kUnion
                                ? MethodName(c.method)
                                : FamilyName(FamilyOf(c.method)));
      if (own == label) set.candidates.push_back(c);
    }
    sets.push_back(std::move(set));
  }
  if (sets.empty()) return out;

  BatchSelection batch;
  if (ps.similarity == nullptr || ps.loss == nullptr) {
    for (const ScoredSet& s : sets) {
      SelectionDecision d;
      d.parent_id = p.id;
      d.label = s.label;
      d.n_candidates = s.candidates.size();
      d.error = "no similarity or loss provider";
      ++batch.counters[s.label].failed;
      batch.decisions.push_back(std::move(d));
    }
  } else {
    batch = BatchSelect(sets, *ps.similarity, *ps.loss);
  }
  for (size_t i = 0; i < sets.size(); ++i) {
    SelectionDecision& d = batch.decisions[i];
    if (!d.error.empty() && !d.chosen_index.has_value() &&
        d.n_candidates > 0) {
      out.failures.push_back(
          absl::StrCat(p.id, " selection ", d.label, ": ", d.error));
    }
    if (!sets[i].chosen_index.has_value()) continue;
    const Candidate& chosen = sets[i].candidates[*sets[i].chosen_index];
    absl::StatusOr<Problem> record =
        CandidateToProblem(chosen, p, absl::StrCat(p.id, "#", d.label));
    if (!record.ok()) {
      d.error = absl::StrCat("record_rejected: ", record.status().message());
      d.chosen_index.reset();
      --batch.counters[d.label].selected;
      ++batch.counters[d.label].failed;
      continue;
    }
    ++out.stats.per_method[std::string(MethodName(chosen.method))].selected;
    out.problems.push_back(*std::move(record));
  }
  out.decisions = std::move(batch.decisions);
  out.stats.per_label = std::move(batch.counters);
  return out;
}

void Merge(AugmentStats& into, const AugmentStats& from) {
  into.bases += from.bases;
  into.bases_dropped += from.bases_dropped;
  into.primary_failures += from.primary_failures;
  for (const auto& [name, m] : from.per_method) {
    MethodCounters& t = into.per_method[name];
    t.generated += m.generated;
    t.provider_errors += m.provider_errors;
    t.duplicates += m.duplicates;
    t.kept += m.kept;
    t.selected += m.selected;
    for (const auto& [k, n] : m.rejected) t.rejected[k] += n;
    for (const auto& [k, n] : m.gate_failed) t.gate_failed[k] += n;
  }
  for (const auto& [label, c] : from.per_label) {
    LabelCounters& t = into.per_label[label];
    t.selected += c.selected;
    t.no_candidate += c.no_candidate;
    t.failed += c.failed;
  }
}

OJson CountMap(const std::map<std::string, int>& m) {
  OJson j = OJson::object();
  for (const auto& [k, n] : m) j[k] = n;
  return j;
}

}  // namespace

absl::StatusOr<std::unique_ptr<ProviderBundle>> ProviderBundle::FromConfig(
    const PipelineConfig& config) {
  auto bundle = std::unique_ptr<ProviderBundle>(new ProviderBundle());
  ProviderSet& set = bundle->set_;

  auto add = [&](absl::StatusOr<std::unique_ptr<Provider>> made)
      -> absl::StatusOr<Provider*> {
    if (!made.ok()) return made.status();
    bundle->owned_.push_back(*std::move(made));
    return bundle->owned_.back().get();
  };
  absl::StatusOr<Provider*> p;
  if (p = add(Make<LexiconParaphraser, RemoteParaphraser>(config, "paraphrase"));
      !p.ok()) {
    return p.status();
  }
  set.paraphrase = static_cast<ParaphraseProvider*>(*p);
  if (p = add(Make<PhraseTableTranslator, RemoteTranslator>(config, "translate"));
      !p.ok()) {
    return p.status();
  }
  set.translate = static_cast<TranslationProvider*>(*p);
  if (p = add(Make<ContextTableFiller, RemoteMaskFiller>(config, "fill"));
      !p.ok()) {
    return p.status();
  }
  set.fill = static_cast<MaskFillProvider*>(*p);
  if (p = add(Make<SynonymTableEmbeddings, RemoteEmbeddings>(config, "nearest"));
      !p.ok()) {
    return p.status();
  }
  set.nearest = static_cast<WordEmbeddingProvider*>(*p);
  if (p = add(Make<TokenCosineSimilarity, RemoteSimilarity>(config, "similarity"));
      !p.ok()) {
    return p.status();
  }
  set.similarity = static_cast<SimilarityProvider*>(*p);
  if (config.ProviderChoice("similarity") != "stub") {
    if (absl::Status s = ProbeSimilarity(*set.similarity); !s.ok()) return s;
  }
  if (p = add(Make<HashedLoss, RemoteLoss>(config, "loss")); !p.ok()) {
    return p.status();
  }
  set.loss = static_cast<SolverLossProvider*>(*p);

  bundle->annotator_ = std::make_unique<RuleBasedAnnotator>();
  set.annotator = bundle->annotator_.get();
  return bundle;
}

std::string ValidationReport::FirstFailure() const {
  if (!nonempty) return "nonempty";
  if (!question_present) return "question_present";
  if (!numbers_preserved) return "numbers_preserved";
  if (!alignment_ok) return "alignment_ok";
  if (!differs_from_parent) return "differs_from_parent";
  if (!events_ordered) return "events_ordered";
  return "";
}

ValidationReport ValidateCandidate(const Problem& parent,
                                   const Candidate& candidate,
                                   const Lexicons& lexicons) {
  ValidationReport r;
  const std::string text = candidate.Text();
  r.nonempty = !Tokenize(text).empty();
  r.question_present = !candidate.question.empty();
  r.numbers_preserved = SameQuantities(parent.quantities, candidate.quantities);
  const std::vector<Rational> values = [&] {
    std::vector<Rational> v;
    for (const Quantity& q : candidate.quantities) v.push_back(q.value);
    return v;
  }();
  r.alignment_ok = AlignQuantities(parent.equation, values).ok();
  r.differs_from_parent = NormalizeText(text) != NormalizeText(parent.Text());
  if (candidate.method == Method::kProblemReorder) {
    r.events_ordered = PreservesEventOrder(parent, text, lexicons);
  }
  return r;
}

int AugmentStats::provider_failures() const {
  int n = primary_failures;
  for (const auto& [name, m] : per_method) n += m.provider_errors;
  for (const auto& [label, c] : per_label) n += c.failed;
  return n;
}

std::string AugmentStats::ToJson() const {
  OJson j;
  j["input_problems"] = input_problems;
  j["output_problems"] = output_problems;
  j["growth"] = growth();
  j["primary"] = {{"bases", bases},
                  {"dropped", bases_dropped},
                  {"provider_failures", primary_failures}};
  OJson methods = OJson::object();
  for (const auto& [name, m] : per_method) {
    methods[name] = {{"generated", m.generated},
                     {"rejected", CountMap(m.rejected)},
                     {"gate_failed", CountMap(m.gate_failed)},
                     {"duplicates", m.duplicates},
                     {"kept", m.kept},
                     {"selected", m.selected},
                     {"provider_errors", m.provider_errors}};
  }
  j["methods"] = std::move(methods);
  OJson labels = OJson::object();
  for (const auto& [label, c] : per_label) {
    labels[label] = {{"selected", c.selected},
                     {"no_candidate", c.no_candidate},
                     {"failed", c.failed}};
  }
  j["selection"] = std::move(labels);
  return j.dump(2) + "\n";
}

std::string AugmentResult::ReportJsonl() const {
  std::string out;
  for (const SelectionDecision& d : decisions) {
    absl::StrAppend(&out, DecisionToJson(d), "\n");
  }
  return out;
}

AugmentResult AugmentDataset(const std::vector<Problem>& input,
                             const PipelineConfig& config,
                             const ProviderSet& providers) {
  Throttled throttled(providers);
  std::vector<Outcome> outcomes(input.size());
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i = next++; i < input.size(); i = next++) {
      outcomes[i] = ProcessProblem(input[i], config, throttled.set);
    }
  };
  const int n_threads = std::max(
      1, std::min<int>(config.workers, static_cast<int>(input.size())));
  std::vector<std::thread> threads;
  for (int t = 1; t < n_threads; ++t) threads.emplace_back(work);
  work();
  for (std::thread& t : threads) t.join();

  AugmentResult result;
  result.stats.input_problems = static_cast<int>(input.size());
  for (Outcome& o : outcomes) {
    for (Problem& p : o.problems) result.problems.push_back(std::move(p));
    for (SelectionDecision& d : o.decisions) {
      result.decisions.push_back(std::move(d));
    }
    for (std::string& f : o.failures) result.failures.push_back(std::move(f));
    Merge(result.stats, o.stats);
  }
  result.stats.output_problems = static_cast<int>(result.problems.size());
  return result;
}

}  // namespace mwpa
