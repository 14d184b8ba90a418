#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nliart/tagging.h"

namespace nliart::testing {

inline std::filesystem::path FixturePath(const std::string& name) {
  return std::filesystem::path(NLIART_FIXTURE_DIR) / name;
}

inline std::string ReadFixture(const std::string& name) {
  std::ifstream in(FixturePath(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct GoldToken {
  std::string word;
  PosTag tag;
};

struct GoldSentence {
  std::string text;  // words joined by single spaces
  std::vector<GoldToken> tokens;
};

// "word/TAG word/TAG ..." per line; '#' lines are comments.
inline std::vector<GoldSentence> LoadTaggedFixture(const std::string& name) {
  std::istringstream in(ReadFixture(name));
  std::vector<GoldSentence> sentences;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    GoldSentence sentence;
    std::istringstream words(line);
    std::string item;
    while (words >> item) {
      const auto slash = item.rfind('/');
      if (slash == std::string::npos || slash == 0) {
        throw std::runtime_error("bad tagged token '" + item + "'");
      }
      const auto tag = PosTagFromName(item.substr(slash + 1));
      if (!tag) throw std::runtime_error("unknown tag in '" + item + "'");
      if (!sentence.text.empty()) sentence.text += ' ';
      sentence.text += item.substr(0, slash);
      sentence.tokens.push_back({item.substr(0, slash), *tag});
    }
    sentences.push_back(std::move(sentence));
  }
  return sentences;
}

}  // namespace nliart::testing
