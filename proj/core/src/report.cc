#include "nliart/report.h"

#include <fmt/format.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

namespace nliart {
namespace {

constexpr const char* kLabelColors[kNumLabels] = {"#4c78a8", "#f2a93b", "#e45756"};
constexpr const char* kLabelHeaders[kNumLabels] = {"Entailment", "Neutral", "Contradiction"};

double Log10P(double log_p) { return log_p / std::log(10.0); }

nlohmann::ordered_json LabelObject(const std::array<double, kNumLabels>& values) {
  nlohmann::ordered_json obj;
  for (Label label : kAllLabels) obj[std::string(LabelName(label))] = values[LabelIndex(label)];
  return obj;
}

nlohmann::ordered_json RowJson(const ChiSquareResult& row) {
  nlohmann::ordered_json obj;
  obj["word"] = row.word;
  obj["word_type"] = std::string(WordTypeName(row.type));
  obj["total"] = row.total;
  obj["proportions"] = LabelObject(row.proportions);
  obj["statistic"] = row.statistic;
  obj["df"] = row.df;
  obj["p_value"] = row.p_value;
  obj["log_p"] = row.log_p;
  obj["log10_p"] = Log10P(row.log_p);
  return obj;
}

std::array<double, kNumLabels> ExpectedPercent(const StatsReport& report) {
  std::array<double, kNumLabels> out{};
  for (std::size_t i = 0; i < kNumLabels; ++i) out[i] = 100.0 * report.expected[i];
  return out;
}

std::string TypeTitle(WordType type) {
  return type == WordType::kSubjectNoun ? "Main subject (noun)" : "Main verb";
}

std::string XmlEscape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string CsvField(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

struct Panel {
  std::string title;
  std::array<double, kNumLabels> percent{};
  std::string annotation;
};

}  // namespace

std::string FormatPValue(double p_value) {
  if (p_value == 0.0) return "1.0e-inf";
  if (p_value == 1.0) return "1.0";
  return fmt::format("{:.1e}", p_value);
}

std::string ReportToJson(const StatsReport& report) {
  nlohmann::ordered_json root;
  root["k"] = report.k;
  root["min_total"] = report.min_total;
  root["tested_examples"] = report.tested_examples;
  root["excluded_examples"] = report.excluded_examples;
  nlohmann::ordered_json counts;
  for (Label label : kAllLabels) {
    counts[std::string(LabelName(label))] = report.label_counts[LabelIndex(label)];
  }
  root["label_counts"] = counts;
  nlohmann::ordered_json expected;
  expected["proportions"] = LabelObject(ExpectedPercent(report));
  expected["p_value"] = 1.0;
  root["expected"] = expected;
  root["subject_nouns"] = nlohmann::ordered_json::array();
  for (const ChiSquareResult& row : report.subject_rows) root["subject_nouns"].push_back(RowJson(row));
  root["main_verbs"] = nlohmann::ordered_json::array();
  for (const ChiSquareResult& row : report.verb_rows) root["main_verbs"].push_back(RowJson(row));
  nlohmann::ordered_json warnings;
  warnings["subjects_truncated"] = report.subjects_truncated;
  warnings["verbs_truncated"] = report.verbs_truncated;
  root["warnings"] = warnings;
  return root.dump(2) + "\n";
}

std::string ReportToText(const StatsReport& report) {
  std::string out;
  out += fmt::format("{:<21}{:<14}{:>12}{:>10}{:>15}{:>11}{:>12}\n", "Type", "Word",
                     kLabelHeaders[0], kLabelHeaders[1], kLabelHeaders[2], "P-value",
                     "log10(p)");
  const auto expected = ExpectedPercent(report);
  out += fmt::format("{:<21}{:<14}{:>12.2f}{:>10.2f}{:>15.2f}{:>11}{:>12.2f}\n",
                     "Expected proportion", "", expected[0], expected[1], expected[2], "1.0",
                     0.0);
  for (const auto* rows : {&report.subject_rows, &report.verb_rows}) {
    for (const ChiSquareResult& row : *rows) {
      out += fmt::format("{:<21}{:<14}{:>12.2f}{:>10.2f}{:>15.2f}{:>11}{:>12.2f}\n",
                         TypeTitle(row.type), row.word, row.proportions[0],
                         row.proportions[1], row.proportions[2], FormatPValue(row.p_value),
                         Log10P(row.log_p));
    }
  }
  out += fmt::format("tested examples: {}, excluded (no subject or verb): {}\n",
                     report.tested_examples, report.excluded_examples);
  if (report.subjects_truncated) {
    out += fmt::format("warning: fewer than {} subject nouns with total >= {}\n", report.k,
                       report.min_total);
  }
  if (report.verbs_truncated) {
    out += fmt::format("warning: fewer than {} main verbs with total >= {}\n", report.k,
                       report.min_total);
  }
  return out;
}

std::string ContingencyToCsv(std::span<const ContingencyRow> rows) {
  std::string out = "word,word_type,entailment,neutral,contradiction,total\n";
  for (const ContingencyRow& row : rows) {
    out += fmt::format("{},{},{},{},{},{}\n", CsvField(row.word), WordTypeName(row.type),
                       row.counts[0], row.counts[1], row.counts[2], row.total);
  }
  return out;
}

std::string RenderProportionChart(const StatsReport& report) {
  if (report.subject_rows.empty() && report.verb_rows.empty()) {
    throw std::invalid_argument("cannot chart a report without tested words");
  }
  std::vector<Panel> panels;
  panels.push_back({"Expected proportion", ExpectedPercent(report), "p = 1.0"});
  for (const auto* rows : {&report.subject_rows, &report.verb_rows}) {
    for (const ChiSquareResult& row : *rows) {
      panels.push_back({fmt::format("{} ({})", row.word,
                                    row.type == WordType::kSubjectNoun ? "subject" : "verb"),
                        row.proportions, "p = " + FormatPValue(row.p_value)});
    }
  }

  constexpr int kColumns = 3;
  constexpr int kPanelWidth = 240;
  constexpr int kPanelHeight = 220;
  constexpr int kLegendHeight = 30;
  constexpr int kPlotTop = 40;
  constexpr int kPlotHeight = 130;
  constexpr int kBarWidth = 44;
  constexpr int kBarGap = 20;
  const int rows = static_cast<int>((panels.size() + kColumns - 1) / kColumns);
  const int width = kColumns * kPanelWidth;
  const int height = rows * kPanelHeight + kLegendHeight;

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" "
      "viewBox=\"0 0 {0} {1}\" font-family=\"sans-serif\" font-size=\"11\">\n",
      width, height);
  svg += fmt::format("<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"white\"/>\n",
                     width, height);
  for (std::size_t i = 0; i < kNumLabels; ++i) {
    const int x = 10 + static_cast<int>(i) * 120;
    svg += fmt::format(
        "<rect x=\"{}\" y=\"10\" width=\"12\" height=\"12\" fill=\"{}\"/>"
        "<text x=\"{}\" y=\"20\">{}</text>\n",
        x, kLabelColors[i], x + 16, kLabelHeaders[i]);
  }

  for (std::size_t p = 0; p < panels.size(); ++p) {
    const Panel& panel = panels[p];
    const int ox = static_cast<int>(p % kColumns) * kPanelWidth;
    const int oy = kLegendHeight + static_cast<int>(p / kColumns) * kPanelHeight;
    const int base = oy + kPlotTop + kPlotHeight;
    svg += fmt::format("<g class=\"panel\" data-index=\"{}\">\n", p);
    svg += fmt::format(
        "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\" font-weight=\"bold\">{}</text>\n",
        ox + kPanelWidth / 2, oy + 18, XmlEscape(panel.title));
    svg += fmt::format(
        "<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"black\"/>\n", ox + 30,
        base, ox + kPanelWidth - 20);
    svg += fmt::format(
        "<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"black\"/>\n", ox + 30,
        base, base - kPlotHeight);
    svg += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"end\">100</text>\n", ox + 27,
                       base - kPlotHeight + 4);
    svg += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"end\">0</text>\n", ox + 27,
                       base + 4);
    for (std::size_t i = 0; i < kNumLabels; ++i) {
      const double h = kPlotHeight * panel.percent[i] / 100.0;
      const int x = ox + 45 + static_cast<int>(i) * (kBarWidth + kBarGap);
      svg += fmt::format(
          "<rect class=\"bar\" x=\"{}\" y=\"{:.2f}\" width=\"{}\" height=\"{:.2f}\" "
          "fill=\"{}\" data-percent=\"{:.4f}\"/>\n",
          x, base - h, kBarWidth, h, kLabelColors[i], panel.percent[i]);
      svg += fmt::format("<text x=\"{}\" y=\"{:.2f}\" text-anchor=\"middle\">{:.2f}</text>\n",
                         x + kBarWidth / 2, base - h - 3, panel.percent[i]);
    }
    svg += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n",
                       ox + kPanelWidth / 2, base + 22, XmlEscape(panel.annotation));
    svg += "</g>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace nliart
