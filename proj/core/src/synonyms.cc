#include "nliart/synonyms.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "embedded_data.h"
#include "nliart/error.h"
#include "text_util.h"

namespace nliart {

std::string_view SynonymSourceName(SynonymSource source) {
  return source == SynonymSource::kWordNet ? "wordnet" : "ppdb";
}

SynonymLexicon SynonymLexicon::Load(std::istream& in, SynonymSource source) {
  SynonymLexicon lexicon(source);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty() || line[0] == '#') continue;
    const auto fields = SplitOn(line, '\t');
    if (fields.size() != 2 || Trim(fields[0]).empty()) {
      throw ParseError(line_no, "expected 'word<TAB>syn1,syn2,...'");
    }
    std::vector<std::string> synonyms;
    for (std::string_view syn : SplitOn(fields[1], ',')) {
      syn = Trim(syn);
      if (!syn.empty()) synonyms.emplace_back(syn);
    }
    lexicon.Add(Trim(fields[0]), synonyms);
  }
  return lexicon;
}

SynonymLexicon SynonymLexicon::LoadFile(const std::string& path, SynonymSource source) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open synonym lexicon " + path);
  return Load(in, source);
}

const SynonymLexicon& SynonymLexicon::Default(SynonymSource source) {
  static const SynonymLexicon wordnet = [] {
    std::istringstream in{std::string(embedded::k_synonyms_wordnet)};
    return Load(in, SynonymSource::kWordNet);
  }();
  static const SynonymLexicon ppdb = [] {
    std::istringstream in{std::string(embedded::k_synonyms_ppdb)};
    return Load(in, SynonymSource::kPpdb);
  }();
  return source == SynonymSource::kWordNet ? wordnet : ppdb;
}

void SynonymLexicon::Add(std::string_view word, std::span<const std::string> synonyms) {
  const std::string head = ToLower(word);
  std::vector<std::string>& list = entries_[head];
  for (const std::string& syn : synonyms) {
    if (ToLower(syn) == head) continue;
    if (std::find(list.begin(), list.end(), syn) == list.end()) list.push_back(syn);
  }
  if (list.empty()) entries_.erase(head);
}

const std::vector<std::string>* SynonymLexicon::Find(std::string_view lower) const {
  auto it = entries_.find(std::string(lower));
  return it == entries_.end() ? nullptr : &it->second;
}

}  // namespace nliart
