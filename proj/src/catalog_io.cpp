#include "triangulata/catalog_io.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace triangulata {

std::string catalog_filename(int n) { return "n=" + std::to_string(n) + ".g6"; }

std::string catalog_text(const Catalog& c) {
  std::string out;
  for (const auto& e : c.entries) out += graph6_encode(e.graph) + "\n";
  return out;
}

void write_catalog(const std::filesystem::path& dir, const Catalog& c) {
  std::filesystem::create_directories(dir);
  const auto path = dir / catalog_filename(c.n);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << catalog_text(c);
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

Catalog parse_catalog(int n, const std::string& text) {
  Catalog c;
  c.n = n;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    CatalogEntry e = catalog_entry(graph6_decode(line));
    if (e.graph.order() != n) throw DomainError("graph of order " + std::to_string(e.graph.order()) + " in catalog " + std::to_string(n));
    c.entries.push_back(std::move(e));
  }
  std::sort(c.entries.begin(), c.entries.end(), [](const CatalogEntry& a, const CatalogEntry& b) { return a.code < b.code; });
  c.entries.erase(std::unique(c.entries.begin(), c.entries.end(), [](const CatalogEntry& a, const CatalogEntry& b) { return a.code == b.code; }),
                  c.entries.end());
  return c;
}

Catalog read_catalog(const std::filesystem::path& dir, int n) {
  const auto path = dir / catalog_filename(n);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_catalog(n, buf.str());
}

std::vector<int> catalog_orders(const std::filesystem::path& dir) {
  std::vector<int> out;
  if (!std::filesystem::is_directory(dir)) return out;
  static const std::regex name(R"(n=(\d+)\.g6)");
  for (const auto& f : std::filesystem::directory_iterator(dir)) {
    std::smatch m;
    const std::string s = f.path().filename().string();
    if (std::regex_match(s, m, name)) out.push_back(std::stoi(m[1]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace triangulata
