#include "nliart/stats.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

#include "nliart/special_functions.h"
#include "parallel.h"

namespace nliart {
namespace {

using RowKey = std::pair<std::string, WordType>;
using RowMap = std::map<RowKey, LabelCountArray>;

void Tally(RowMap& map, const std::optional<std::string>& word, WordType type,
           Label label) {
  if (word) ++map[{*word, type}][LabelIndex(label)];
}

std::array<double, kNumLabels> Percentages(const LabelCountArray& counts,
                                           std::uint64_t total) {
  std::array<double, kNumLabels> out{};
  for (std::size_t i = 0; i < kNumLabels; ++i) {
    out[i] = total == 0 ? 0.0 : 100.0 * static_cast<double>(counts[i]) / total;
  }
  return out;
}

}  // namespace

std::string_view WordTypeName(WordType type) {
  return type == WordType::kSubjectNoun ? "subject_noun" : "main_verb";
}

std::vector<ContingencyRow> CountWordLabels(std::span<const LabeledExtraction> extractions,
                                            unsigned threads) {
  const unsigned workers = std::max(1u, ResolveThreads(threads));
  std::vector<RowMap> partial(workers);
  const std::size_t chunk = (extractions.size() + workers - 1) / workers;
  ParallelChunks(workers, workers, [&](std::size_t begin, std::size_t end) {
    for (std::size_t w = begin; w < end; ++w) {
      const std::size_t lo = std::min(extractions.size(), w * chunk);
      const std::size_t hi = std::min(extractions.size(), lo + chunk);
      for (std::size_t i = lo; i < hi; ++i) {
        const LabeledExtraction& e = extractions[i];
        Tally(partial[w], e.extraction.main_subject, WordType::kSubjectNoun, e.label);
        Tally(partial[w], e.extraction.main_verb, WordType::kMainVerb, e.label);
      }
    }
  });

  RowMap merged;
  for (const RowMap& map : partial) {
    for (const auto& [key, counts] : map) {
      LabelCountArray& into = merged[key];
      for (std::size_t i = 0; i < kNumLabels; ++i) into[i] += counts[i];
    }
  }

  std::vector<ContingencyRow> rows;
  rows.reserve(merged.size());
  for (const auto& [key, counts] : merged) {
    ContingencyRow row{key.first, key.second, counts, 0};
    for (std::uint64_t c : counts) row.total += c;
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const ContingencyRow& a, const ContingencyRow& b) {
    if (a.total != b.total) return a.total > b.total;
    if (a.word != b.word) return a.word < b.word;
    return a.type < b.type;
  });
  return rows;
}

ExpectedProportions ExpectedProportions::FromProportions(
    const std::array<double, kNumLabels>& p) {
  double sum = 0.0;
  for (double v : p) {
    if (!(v > 0.0 && v < 1.0)) {
      throw std::invalid_argument("expected proportions must lie in (0, 1)");
    }
    sum += v;
  }
  if (std::fabs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("expected proportions must sum to 1");
  }
  return ExpectedProportions(p);
}

ExpectedProportions ExpectedProportions::FromCounts(const LabelCountArray& counts) {
  std::uint64_t total = 0;
  for (std::uint64_t c : counts) total += c;
  if (total == 0) throw std::invalid_argument("expected proportions from zero counts");
  std::array<double, kNumLabels> p{};
  for (std::size_t i = 0; i < kNumLabels; ++i) {
    p[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
  }
  return FromProportions(p);
}

ExpectedProportions ExpectedProportions::Uniform() {
  return ExpectedProportions({1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0});
}

ChiSquareResult ChiSquareGof(const LabelCountArray& observed,
                             const ExpectedProportions& expected) {
  std::uint64_t total = 0;
  for (std::uint64_t c : observed) total += c;
  if (total == 0) throw std::invalid_argument("chi-square test on an empty row");

  ChiSquareResult result;
  result.total = total;
  result.proportions = Percentages(observed, total);
  const double n = static_cast<double>(total);
  double statistic = 0.0;
  for (std::size_t i = 0; i < kNumLabels; ++i) {
    const double e = n * expected[i];
    const double diff = static_cast<double>(observed[i]) - e;
    statistic += diff * diff / e;
  }
  result.statistic = statistic;
  result.df = static_cast<int>(kNumLabels) - 1;
  const GammaTail tail = ChiSquareSurvival(statistic, result.df);
  result.p_value = tail.q;
  result.log_p = tail.log_q;
  // A positive statistic can round p up to exactly 1; keep p = 1 reserved for
  // a zero statistic.
  if (statistic > 0.0 && result.p_value >= 1.0) {
    result.p_value = std::nextafter(1.0, 0.0);
  }
  return result;
}

StatsReport TopKReport(std::span<const ContingencyRow> rows,
                       const ExpectedProportions& expected, const ReportOptions& options) {
  if (options.k == 0) throw std::invalid_argument("top-k report needs k >= 1");
  StatsReport report;
  report.k = options.k;
  report.min_total = options.min_total;
  report.expected = expected;

  // rows arrive sorted by total, but do not rely on the caller for that.
  std::vector<const ContingencyRow*> ordered;
  ordered.reserve(rows.size());
  for (const ContingencyRow& row : rows) ordered.push_back(&row);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const ContingencyRow* a, const ContingencyRow* b) {
                     if (a->total != b->total) return a->total > b->total;
                     return a->word < b->word;
                   });

  for (const ContingencyRow* row : ordered) {
    if (row->total == 0 || row->total < options.min_total) continue;
    auto& target =
        row->type == WordType::kSubjectNoun ? report.subject_rows : report.verb_rows;
    if (target.size() >= options.k) continue;
    ChiSquareResult result = ChiSquareGof(row->counts, expected);
    result.word = row->word;
    result.type = row->type;
    target.push_back(std::move(result));
  }
  report.subjects_truncated = report.subject_rows.size() < options.k;
  report.verbs_truncated = report.verb_rows.size() < options.k;
  return report;
}

CorpusStats AnalyzeCorpus(const Corpus& corpus, const TagLexicon& lexicon,
                          const ReportOptions& options, unsigned threads) {
  CorpusStats stats;
  stats.extraction = ExtractCorpus(corpus, lexicon, threads);
  if (stats.extraction.entries.empty()) {
    throw std::invalid_argument("no hypothesis yielded a subject or verb");
  }
  stats.rows = CountWordLabels(stats.extraction.entries, threads);

  LabelCountArray label_counts{};
  for (const LabeledExtraction& entry : stats.extraction.entries) {
    ++label_counts[LabelIndex(entry.label)];
  }
  stats.report = TopKReport(stats.rows, ExpectedProportions::FromCounts(label_counts), options);
  stats.report.label_counts = label_counts;
  stats.report.tested_examples = stats.extraction.entries.size();
  stats.report.excluded_examples = stats.extraction.excluded;
  return stats;
}

}  // namespace nliart
