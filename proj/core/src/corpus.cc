#include "nliart/corpus.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <unordered_set>

#include <nlohmann/json.hpp>
#include "text_util.h"

namespace nliart {
namespace {

using nlohmann::json;

// A label field either resolves to a Label, is the unlabeled marker, or is
// invalid.
enum class LabelParse { kLabeled, kUnlabeled, kInvalid };

LabelParse ParseLabelText(std::string_view text, Label* out) {
  text = Trim(text);
  if (text == "-1" || text == "-") return LabelParse::kUnlabeled;
  if (text == "0" || text == "1" || text == "2") {
    *out = LabelFromIndex(static_cast<std::size_t>(text[0] - '0'));
    return LabelParse::kLabeled;
  }
  if (auto label = LabelFromName(text)) {
    *out = *label;
    return LabelParse::kLabeled;
  }
  return LabelParse::kInvalid;
}

LabelParse ParseLabelJson(const json& value, Label* out) {
  if (value.is_number_integer()) {
    const auto code = value.get<long long>();
    if (code == -1) return LabelParse::kUnlabeled;
    if (code >= 0 && code <= 2) {
      *out = LabelFromIndex(static_cast<std::size_t>(code));
      return LabelParse::kLabeled;
    }
    return LabelParse::kInvalid;
  }
  if (value.is_string()) return ParseLabelText(value.get<std::string>(), out);
  return LabelParse::kInvalid;
}

const json* FindField(const json& object, std::initializer_list<const char*> names) {
  for (const char* name : names) {
    auto it = object.find(name);
    if (it != object.end() && !it->is_null()) return &*it;
  }
  return nullptr;
}

std::string StringField(const json& object,
                        std::initializer_list<const char*> names,
                        std::size_t line, const char* what) {
  const json* field = FindField(object, names);
  if (field == nullptr) throw ParseError(line, std::string("missing field ") + what);
  if (!field->is_string()) throw ParseError(line, std::string(what) + " must be a string");
  return field->get<std::string>();
}

class CorpusBuilder {
 public:
  explicit CorpusBuilder(Split split) { result_.corpus.split = split; }

  void Add(std::size_t line, std::string id, std::string premise,
           std::string hypothesis, LabelParse parse, Label label,
           std::string origin) {
    if (parse == LabelParse::kInvalid) throw ParseError(line, "unknown label value");
    if (parse == LabelParse::kUnlabeled) {
      ++result_.skipped_unlabeled;
      return;
    }
    if (Trim(hypothesis).empty()) {
      ++result_.skipped_empty;
      return;
    }
    if (id.empty()) {
      id = std::string(SplitName(result_.corpus.split)) + ":" + std::to_string(line);
    }
    if (!ids_.insert(id).second) throw ParseError(line, "duplicate id '" + id + "'");
    result_.corpus.examples.push_back(NliExample{std::move(id), std::move(premise),
                                                 std::move(hypothesis), label,
                                                 std::move(origin)});
  }

  ParseResult Finish() { return std::move(result_); }

 private:
  ParseResult result_;
  std::unordered_set<std::string> ids_;
};

}  // namespace

std::string_view LabelName(Label label) {
  switch (label) {
    case Label::kEntailment:
      return "entailment";
    case Label::kNeutral:
      return "neutral";
    case Label::kContradiction:
      return "contradiction";
  }
  return "unknown";
}

std::optional<Label> LabelFromName(std::string_view name) {
  const std::string lower = ToLower(Trim(name));
  for (Label label : kAllLabels) {
    if (lower == LabelName(label)) return label;
  }
  return std::nullopt;
}

std::string_view SplitName(Split split) {
  switch (split) {
    case Split::kTrain:
      return "train";
    case Split::kDev:
      return "dev";
    case Split::kTest:
      return "test";
  }
  return "unknown";
}

Split SplitFromName(std::string_view name) {
  if (name == "train") return Split::kTrain;
  if (name == "dev" || name == "validation") return Split::kDev;
  if (name == "test") return Split::kTest;
  throw std::invalid_argument("unknown split '" + std::string(name) + "'");
}

ParseResult ParseJsonl(std::istream& in, Split split) {
  CorpusBuilder builder(split);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    json object;
    try {
      object = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError(line_no, std::string("malformed JSON: ") + e.what());
    }
    if (!object.is_object()) throw ParseError(line_no, "expected a JSON object");

    std::string premise = StringField(object, {"premise", "sentence1"}, line_no, "premise");
    std::string hypothesis =
        StringField(object, {"hypothesis", "sentence2"}, line_no, "hypothesis");
    const json* label_field = FindField(object, {"label", "gold_label"});
    if (label_field == nullptr) throw ParseError(line_no, "missing field label");
    Label label = Label::kEntailment;
    const LabelParse parse = ParseLabelJson(*label_field, &label);

    std::string id;
    if (const json* id_field = FindField(object, {"id", "pairID"})) {
      id = id_field->is_string() ? id_field->get<std::string>() : id_field->dump();
    }
    std::string origin(kOriginalOrigin);
    if (const json* origin_field = FindField(object, {"origin"})) {
      if (!origin_field->is_string()) throw ParseError(line_no, "origin must be a string");
      origin = origin_field->get<std::string>();
    }
    builder.Add(line_no, std::move(id), std::move(premise), std::move(hypothesis),
                parse, label, std::move(origin));
  }
  return builder.Finish();
}

ParseResult ParseTsv(std::istream& in, Split split) {
  CorpusBuilder builder(split);
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty()) continue;
    const std::vector<std::string_view> fields = SplitOn(line, '\t');
    if (!header_seen) {
      if (fields.size() != 3 || fields[0] != "premise" || fields[1] != "hypothesis" ||
          fields[2] != "label") {
        throw ParseError(line_no, "expected header 'premise\\thypothesis\\tlabel'");
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != 3) {
      throw ParseError(line_no, "expected 3 tab-separated fields, got " +
                                    std::to_string(fields.size()));
    }
    Label label = Label::kEntailment;
    const LabelParse parse = ParseLabelText(fields[2], &label);
    builder.Add(line_no, "", std::string(fields[0]), std::string(fields[1]), parse,
                label, std::string(kOriginalOrigin));
  }
  return builder.Finish();
}

ParseResult ReadCorpusFile(const std::filesystem::path& path, Split split) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file " + path.string());
  if (path.extension() == ".tsv") return ParseTsv(in, split);
  return ParseJsonl(in, split);
}

void WriteJsonl(std::ostream& out, const Corpus& corpus) {
  for (const NliExample& example : corpus.examples) {
    nlohmann::ordered_json object;
    object["id"] = example.id;
    object["premise"] = example.premise;
    object["hypothesis"] = example.hypothesis;
    object["label"] = static_cast<int>(LabelIndex(example.label));
    object["origin"] = example.origin;
    out << object.dump() << '\n';
  }
}

void WriteCorpusFile(const std::filesystem::path& path, const Corpus& corpus) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write corpus file " + path.string());
  WriteJsonl(out, corpus);
  if (!out) throw std::runtime_error("error writing " + path.string());
}

Corpus StripPremises(const Corpus& corpus) {
  Corpus stripped = corpus;
  for (NliExample& example : stripped.examples) example.premise.clear();
  return stripped;
}

std::array<std::size_t, kNumLabels> LabelCounts(const Corpus& corpus) {
  std::array<std::size_t, kNumLabels> counts{};
  for (const NliExample& example : corpus.examples) ++counts[LabelIndex(example.label)];
  return counts;
}

std::array<double, kNumLabels> LabelDistribution(const Corpus& corpus) {
  if (corpus.empty()) throw std::invalid_argument("label distribution of an empty corpus");
  const auto counts = LabelCounts(corpus);
  std::array<double, kNumLabels> percent{};
  const double total = static_cast<double>(corpus.size());
  for (std::size_t i = 0; i < kNumLabels; ++i) {
    percent[i] = 100.0 * static_cast<double>(counts[i]) / total;
  }
  return percent;
}

Corpus Merge(const Corpus& original, const Corpus& augmented) {
  if (original.split != augmented.split) {
    throw std::invalid_argument("cannot merge a " + std::string(SplitName(original.split)) +
                                " corpus with a " +
                                std::string(SplitName(augmented.split)) + " corpus");
  }
  Corpus merged;
  merged.split = original.split;
  merged.examples.reserve(original.size() + augmented.size());
  std::unordered_set<std::string> taken;
  taken.reserve(original.size() + augmented.size());
  for (const NliExample& example : original.examples) {
    taken.insert(example.id);
    merged.examples.push_back(example);
  }
  // A rename must not steal an id that appears later in the augmented corpus.
  std::unordered_set<std::string> reserved;
  for (const NliExample& example : augmented.examples) reserved.insert(example.id);
  for (const NliExample& example : augmented.examples) {
    NliExample copy = example;
    if (taken.count(copy.id) > 0) {
      for (std::size_t k = 1;; ++k) {
        std::string candidate = example.id + "#aug" + std::to_string(k);
        if (taken.count(candidate) == 0 && reserved.count(candidate) == 0) {
          copy.id = std::move(candidate);
          break;
        }
      }
    }
    taken.insert(copy.id);
    merged.examples.push_back(std::move(copy));
  }
  return merged;
}

}  // namespace nliart
