#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "monodec/dfa.hpp"
#include "monodec/regex.hpp"

namespace support {

inline std::string data_path(const std::string& name) { return std::string(MONODEC_DATA_DIR) + "/" + name; }

inline std::string read(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline monodec::Dfa sample_dfa(const std::string& name) {
  return monodec::load_dfa(read(data_path(name + ".json")));
}

struct Language {
  std::string name;
  std::string regex;  // empty for automata read from files
  monodec::Dfa dfa;
};

inline monodec::Dfa from_regex(const std::string& regex, const std::string& alphabet) {
  return monodec::regex_to_dfa(monodec::parse_regex(regex), alphabet);
}

/// The three automata plus every regex listed in data/corpus.txt.
inline std::vector<Language> corpus() {
  std::vector<Language> out;
  for (const char* name : {"a1", "a2", "a3"}) out.push_back({name, "", sample_dfa(name)});
  std::istringstream lines(read(data_path("corpus.txt")));
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    std::string alphabet = line.substr(0, tab), regex = line.substr(tab + 1);
    out.push_back({regex, regex, from_regex(regex, alphabet)});
  }
  return out;
}

}  // namespace support
