#include "shomfly/catalog.hpp"

#include <fstream>
#include <memory>
#include <mutex>
#include <sstream>

#include "shomfly/traces.hpp"

namespace shomfly {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

CatalogEntry make_entry(const std::vector<std::string>& fields, int line_no) {
  if (fields.size() < 4 || fields.size() > 5)
    throw CatalogError("expected 4 or 5 tab-separated fields, got " +
                           std::to_string(fields.size()),
                       line_no);
  CatalogEntry e;
  e.name = fields[0];
  try {
    e.strands = std::stoi(fields[1]);
  } catch (...) {
    throw CatalogError("bad strand count '" + fields[1] + "'", line_no);
  }
  e.word_text = fields[2];
  try {
    e.components = std::stoi(fields[3]);
  } catch (...) {
    throw CatalogError("bad component count '" + fields[3] + "'", line_no);
  }
  if (fields.size() == 5) e.expected_invariant = fields[4];
  try {
    e.word = parse_braid(e.word_text, e.strands);
  } catch (const std::exception& ex) {
    throw CatalogError("word does not parse: " + std::string(ex.what()), line_no);
  }
  if (closure_components(e.word) != e.components)
    throw CatalogError("closure has " + std::to_string(closure_components(e.word)) +
                           " components, entry says " + std::to_string(e.components),
                       line_no);
  return e;
}

}  // namespace

std::vector<CatalogEntry> parse_catalog(const std::string& content) {
  std::vector<CatalogEntry> out;
  std::istringstream in(content);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    out.push_back(make_entry(split_tabs(line), line_no));
  }
  return out;
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_catalog(buf.str());
}

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> entries = parse_catalog(
      "unknot\t1\tn=1\t1\n"
      "unlink2\t2\tn=2\t2\n"
      "hopf+\t2\ts1 s1\t2\n"
      "trefoil\t2\ts1^3\t1\n"
      "figure8\t3\ts1 s2' s1 s2'\t1\n"
      "singular-unknot\t2\tt1\t1\n"
      "singular-trefoil\t2\tt1 s1 s1\t1\n");
  return entries;
}

std::optional<CatalogEntry> find_builtin(const std::string& name) {
  for (const CatalogEntry& e : builtin_catalog())
    if (e.name == name) return e;
  return std::nullopt;
}

CacheFile::CacheFile(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  while (std::getline(in, line)) {
    size_t tab = line.find('\t');
    if (tab == std::string::npos) continue;
    try {
      entries_.emplace(line.substr(0, tab), parse_rational_text(line.substr(tab + 1)));
    } catch (...) {
      // Skip unreadable lines (e.g. a torn final write).
    }
  }
}

bool CacheFile::lookup(const std::string& key, RationalFn& out) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return false;
  out = it->second;
  return true;
}

void CacheFile::record(const std::string& key, const RationalFn& value) {
  if (entries_.count(key)) return;
  entries_.emplace(key, value);
  std::ofstream out(path_, std::ios::app);
  out << key << '\t' << to_text(value) << '\n';
}

void install_cache_file(const std::string& path) {
  auto file = std::make_shared<CacheFile>(path);
  auto mutex = std::make_shared<std::mutex>();
  TraceStore store;
  store.lookup = [file, mutex](const std::string& key, RationalFn& out) {
    std::lock_guard lock(*mutex);
    return file->lookup(key, out);
  };
  store.record = [file, mutex](const std::string& key, const RationalFn& value) {
    std::lock_guard lock(*mutex);
    file->record(key, value);
  };
  set_trace_store(store);
}

}  // namespace shomfly
