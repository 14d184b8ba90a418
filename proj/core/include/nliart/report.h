#pragma once

#include <span>
#include <string>

#include "nliart/stats.h"

namespace nliart {

// Renders a p-value the way the report tables show it: "%.1e", or
// "1.0e-inf" once the value has underflowed to zero.
std::string FormatPValue(double p_value);

std::string ReportToJson(const StatsReport& report);

// Aligned table: expected row, then subject nouns, then main verbs.
std::string ReportToText(const StatsReport& report);

// word,word_type,entailment,neutral,contradiction,total
std::string ContingencyToCsv(std::span<const ContingencyRow> rows);

// Standalone SVG, one grouped-bar panel per tested word with the expected
// proportions first. Throws std::invalid_argument when no word was tested.
std::string RenderProportionChart(const StatsReport& report);

}  // namespace nliart
