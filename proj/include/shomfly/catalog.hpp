#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shomfly/braid.hpp"
#include "shomfly/coeffs.hpp"

namespace shomfly {

struct CatalogEntry {
  std::string name;
  int strands;
  std::string word_text;
  int components;
  std::string expected_invariant;  // optional, empty when absent
  BraidWord word;
};

struct CatalogError : std::runtime_error {
  CatalogError(const std::string& msg, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_number(line) {}
  int line_number;
};

// Line-oriented, tab-separated: name, strand count, word, component count,
// optional expected canonical invariant.  `#` starts a comment line.
// Each entry is validated: the word must parse on the given strand count and
// its closure must have the stated number of components.
std::vector<CatalogEntry> load_catalog(const std::string& path);
std::vector<CatalogEntry> parse_catalog(const std::string& content);

// Entries shipped with the tool, usable by name in the CLI.
const std::vector<CatalogEntry>& builtin_catalog();
std::optional<CatalogEntry> find_builtin(const std::string& name);

// Append-only trace cache file: `sha256-hex<TAB>expression` per line.
class CacheFile {
 public:
  explicit CacheFile(std::string path);

  bool lookup(const std::string& key, RationalFn& out) const;
  void record(const std::string& key, const RationalFn& value);

  size_t size() const { return entries_.size(); }

 private:
  std::string path_;
  std::map<std::string, RationalFn> entries_;
};

// Installs a CacheFile as the process-wide trace store.
void install_cache_file(const std::string& path);

}  // namespace shomfly
