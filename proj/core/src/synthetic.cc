// Copyright 2026 The textaug Authors
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

#include "textaug/synthetic.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <unordered_set>

#include "textaug/csv.h"
#include "textaug/errors.h"
#include "textaug/experiment.h"
#include "textaug/random.h"

namespace textaug {
namespace {

// Group order matters: the slot helpers below index into it.
enum Group : std::size_t {
  kIdiot, kLoser, kStupid, kPathetic, kUgly, kHate, kGarbage
};

const std::vector<std::string> kNouns = {
    "article", "page", "section", "source", "reference", "citation",
    "template", "image", "category", "paragraph", "sentence", "claim",
    "summary", "infobox", "table", "list", "link", "heading", "draft",
    "version", "policy", "guideline", "archive", "footnote", "caption",
    "map", "chart", "timeline", "biography", "album", "election", "river",
    "village", "species", "bridge", "museum", "railway", "novel", "season",
    "census"};
const std::vector<std::string> kVerbs = {
    "check", "review", "update", "revise", "expand", "fix", "move", "merge",
    "restore", "cite", "format", "clarify", "shorten", "verify", "tag"};
const std::vector<std::string> kAdjectives = {
    "current", "old", "new", "short", "long", "second", "original", "recent",
    "main", "earlier", "detailed", "neutral", "accurate", "reliable"};

const std::vector<std::string> kNeutralTemplates = {
    "Thanks for fixing the {n} on this page.",
    "I will {v} the {n} and add a {n} from the archive.",
    "Could you {v} the {n} before the next {n}?",
    "The {n} in the {a} section needs a better {n}.",
    "Please see the talk page about the {n}.",
    "I think the {a} {n} should stay.",
    "Good point about the {n}, I will {v} it tomorrow.",
    "Is there a {a} {n} for this {n}?",
    "I moved the {n} to the {a} {n}.",
    "Can someone {v} the {n} in the {n}?",
    "The {a} {n} was discussed last year.",
    "Welcome, and thanks for your work on the {n}.",
    "Per the {n}, we should {v} this {n}.",
    "I added a {n} to the {n}, feel free to {v} it.",
    "The {n} looks {a} now."};
const std::vector<std::string> kToxicTemplates = {
    "You are such a {N}.",
    "What a {A} {N} you are.",
    "I {H} you and your {A} edits.",
    "Stop being so {A}.",
    "Your {n} is {G}.",
    "Only a {N} would write this {G}.",
    "Go away, you {A} {N}!",
    "Nobody wants your {A} {G} here.",
    "You {A} {N}, leave this page alone.",
    "I {H} people like you."};
const std::vector<std::string> kMentionTemplates = {
    "Someone called me a {N} on my talk page, I reported it.",
    "Please do not call other editors {A}, it breaks the policy.",
    "The word {N} in the {n} was vandalism, I reverted it."};

// Alternatives for neutral words, used by the mock paraphrases.
const std::map<std::string, std::vector<std::string>, std::less<>>&
NeutralSynonyms() {
  static const std::map<std::string, std::vector<std::string>, std::less<>> m = {
      {"article", {"entry", "piece"}},
      {"source", {"reference"}},
      {"reference", {"citation", "source"}},
      {"image", {"picture", "photo"}},
      {"section", {"part", "segment"}},
      {"claim", {"assertion", "statement"}},
      {"fix", {"repair", "correct"}},
      {"check", {"verify", "review"}},
      {"update", {"revise", "refresh"}},
      {"expand", {"extend", "enlarge"}},
      {"recent", {"latest", "new"}},
      {"old", {"former", "outdated"}},
      {"accurate", {"correct", "precise"}},
      {"reliable", {"dependable", "trustworthy"}},
      {"short", {"brief"}},
      {"long", {"lengthy"}},
      {"thanks", {"cheers"}},
      {"edits", {"changes", "revisions"}},
      {"leave", {"abandon", "quit"}},
      {"wants", {"needs", "likes"}}};
  return m;
}

class Writer {
 public:
  Writer(RandomSource& rng, bool base_only, double base_probability)
      : rng_(rng), base_only_(base_only), base_probability_(base_probability) {}

  std::string Keyword(std::size_t group) {
    const KeywordGroup& g = SyntheticKeywordGroups()[group];
    if (base_only_ || rng_.UniformReal() < base_probability_) return g.base;
    return g.variants[rng_.UniformIndex(g.variants.size())];
  }

  std::string Fill(std::string_view pattern) {
    std::string out;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
      if (pattern[i] != '{' || i + 2 >= pattern.size() || pattern[i + 2] != '}') {
        out += pattern[i];
        continue;
      }
      std::string word = Slot(pattern[i + 1]);
      if (out.ends_with(" a") && std::string_view("aeiou").find(word[0]) !=
                                     std::string_view::npos) {
        out += 'n';
      }
      out += word;
      i += 2;
    }
    return out;
  }

 private:
  std::string Pick(const std::vector<std::string>& pool) {
    return pool[rng_.UniformIndex(pool.size())];
  }

  std::string Slot(char slot) {
    switch (slot) {
      case 'N': return Keyword(kIdiot + rng_.UniformIndex(2));
      case 'A': return Keyword(kStupid + rng_.UniformIndex(3));
      case 'H': return Keyword(kHate);
      case 'G': return Keyword(kGarbage);
      case 'n': return Pick(kNouns);
      case 'v': return Pick(kVerbs);
      case 'a': return Pick(kAdjectives);
    }
    throw UsageError(std::string("unknown template slot ") + slot);
  }

  RandomSource& rng_;
  bool base_only_;
  double base_probability_;
};

std::string Obfuscate(std::string text, RandomSource& rng) {
  static const std::pair<std::string_view, std::string_view> kForms[] = {
      {"idiot", "id1ot"}, {"stupid", "stup1d"}};
  for (const auto& [plain, masked] : kForms) {
    const auto at = text.find(plain);
    if (at != std::string::npos && rng.UniformReal() < 0.15) {
      text.replace(at, plain.size(), masked);
    }
  }
  return text;
}

std::string Compose(std::vector<std::string> parts, RandomSource& rng) {
  Shuffle(std::span<std::string>(parts), rng);
  std::string out;
  for (const auto& part : parts) {
    if (!out.empty()) out += ' ';
    out += part;
  }
  return out;
}

// Swaps some keywords and neutral words for alternatives, which is roughly
// what a round trip through another language does to a comment.
std::string Paraphrase(const std::string& text, RandomSource& rng) {
  std::map<std::string, const KeywordGroup*, std::less<>> keyword_of;
  for (const auto& g : SyntheticKeywordGroups()) {
    keyword_of[g.base] = &g;
    for (const auto& v : g.variants) keyword_of[v] = &g;
  }
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!std::isalpha(static_cast<unsigned char>(text[i]))) {
      out += text[i++];
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && std::isalpha(static_cast<unsigned char>(text[j]))) ++j;
    std::string word = text.substr(i, j - i);
    std::string lower = word;
    for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (const auto k = keyword_of.find(lower); k != keyword_of.end()) {
      if (rng.UniformReal() < 0.5) {
        std::vector<std::string> options{k->second->base};
        options.insert(options.end(), k->second->variants.begin(),
                       k->second->variants.end());
        std::erase(options, lower);
        word = options[rng.UniformIndex(options.size())];
      }
    } else if (const auto n = NeutralSynonyms().find(lower);
               n != NeutralSynonyms().end() && rng.UniformReal() < 0.3) {
      word = n->second[rng.UniformIndex(n->second.size())];
    }
    out += word;
    i = j;
  }
  return out;
}

}  // namespace

const std::vector<KeywordGroup>& SyntheticKeywordGroups() {
  static const std::vector<KeywordGroup> groups = {
      {"idiot", {"moron", "imbecile", "cretin"}},
      {"loser", {"failure", "deadbeat", "lowlife"}},
      {"stupid", {"dumb", "brainless", "dense"}},
      {"pathetic", {"pitiful", "wretched", "lame"}},
      {"ugly", {"hideous", "repulsive", "vile"}},
      {"hate", {"despise", "loathe", "detest"}},
      {"garbage", {"trash", "rubbish", "junk"}}};
  return groups;
}

SyntheticData GenerateSynthetic(const SyntheticSpec& spec) {
  if (spec.documents < 20) throw ConfigError("synthetic corpus needs >= 20 documents");
  if (!(spec.positive_fraction > 0.0 && spec.positive_fraction < 1.0)) {
    throw ConfigError("positive_fraction must lie in (0, 1)");
  }
  Rng rng(spec.seed);

  // Labels first: the split only looks at ids and labels, so the small
  // training set is known before any text exists.
  std::vector<Document> docs(spec.documents);
  const std::size_t positives = RoundHalfUp(spec.positive_fraction * spec.documents);
  std::vector<std::size_t> order(spec.documents);
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  Shuffle(std::span<std::size_t>(order), rng);
  for (std::size_t i = 0; i < spec.documents; ++i) {
    char id[32];
    std::snprintf(id, sizeof id, "s%05zu", i + 1);
    docs[i].id = id;
  }
  for (std::size_t i = 0; i < positives; ++i) docs[order[i]].label = Label::kToxic;

  ExperimentPlan plan;
  plan.master_seed = spec.master_seed;
  plan.split = spec.split;
  SplitSpec split_spec = spec.split;
  split_spec.seed = plan.SplitSeed();
  const TrainTestSplit split = SplitCorpus(Corpus(docs), split_spec);
  const Corpus small = SampleFraction(split.train, spec.split.small_train_fraction,
                                      plan.SampleSeed(), spec.split.stratified);
  std::unordered_set<std::string> small_ids;
  for (const Document& doc : small) small_ids.insert(doc.id);

  for (Document& doc : docs) {
    Writer writer(rng, small_ids.count(doc.id) > 0, spec.base_form_probability);
    std::vector<std::string> parts;
    if (doc.label == Label::kToxic) {
      const std::size_t neutral = rng.UniformIndex(spec.max_toxic_filler + 1);
      for (std::size_t k = 0; k < neutral; ++k) {
        parts.push_back(writer.Fill(kNeutralTemplates[rng.UniformIndex(kNeutralTemplates.size())]));
      }
      const std::size_t toxic = rng.UniformReal() < spec.second_insult_probability ? 2 : 1;
      for (std::size_t k = 0; k < toxic; ++k) {
        parts.push_back(Obfuscate(
            writer.Fill(kToxicTemplates[rng.UniformIndex(kToxicTemplates.size())]),
            rng));
      }
      if (rng.UniformReal() < 0.1) parts.push_back("F*ck off.");
    } else {
      const std::size_t neutral = 1 + rng.UniformIndex(3);
      for (std::size_t k = 0; k < neutral; ++k) {
        parts.push_back(writer.Fill(kNeutralTemplates[rng.UniformIndex(kNeutralTemplates.size())]));
      }
      if (rng.UniformReal() < spec.mention_fraction) {
        parts.push_back(writer.Fill(kMentionTemplates[rng.UniformIndex(kMentionTemplates.size())]));
      }
    }
    doc.raw_text = Compose(std::move(parts), rng);
  }

  SyntheticData data;
  const LanguageCode english("en");
  std::set<std::pair<LanguageCode, std::string>> seen;
  for (const Document& doc : docs) {
    for (const LanguageCode& pivot : spec.pivots) {
      if (!seen.emplace(pivot, doc.raw_text).second) continue;
      Rng leg_rng(MixSeed(spec.seed, StableHash(doc.raw_text + "|" + pivot.str())));
      data.legs.push_back({pivot, english, doc.raw_text, Paraphrase(doc.raw_text, leg_rng)});
    }
  }
  data.documents = std::move(docs);
  return data;
}

void WriteSyntheticCsv(const std::vector<Document>& documents,
                       const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << "id,comment_text,toxic,severe_toxic,obscene,threat,insult,identity_hate\n";
  for (const Document& doc : documents) {
    const int toxic = ToInt(doc.label);
    const int obscene = toxic && doc.raw_text.find("F*ck") != std::string::npos;
    out << CsvEscape(doc.id) << ',' << CsvEscape(doc.raw_text) << ',' << toxic
        << ",0," << obscene << ",0," << toxic << ",0\n";
  }
  if (!out) throw IoError("failed writing " + path.string());
}

void WriteScript(const std::vector<ScriptLeg>& legs,
                 const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << "# from\tto\tsource\ttarget\n";
  for (const ScriptLeg& leg : legs) {
    if ((leg.source + leg.target).find_first_of("\t\n\r") != std::string::npos) {
      throw UsageError("script text contains a tab or line break");
    }
    out << leg.from.str() << '\t' << leg.to.str() << '\t' << leg.source << '\t'
        << leg.target << '\n';
  }
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace textaug
