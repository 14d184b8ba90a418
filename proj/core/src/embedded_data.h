#pragma once

#include <string_view>

// Data tables compiled from core/data/*.tsv (see cmake/embedded_data.cc.in).
namespace nliart::embedded {

extern const std::string_view k_lexicon;
extern const std::string_view k_synonyms_wordnet;
extern const std::string_view k_synonyms_ppdb;

}  // namespace nliart::embedded
