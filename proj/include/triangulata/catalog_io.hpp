#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "triangulata/generator.hpp"

namespace triangulata {

std::string catalog_filename(int n);
// One graph6 line per entry, in code order.
std::string catalog_text(const Catalog& c);
void write_catalog(const std::filesystem::path& dir, const Catalog& c);
// Throws std::runtime_error when the file is missing or unreadable, DomainError
// on a bad line.
Catalog read_catalog(const std::filesystem::path& dir, int n);
Catalog parse_catalog(int n, const std::string& text);
// Orders with a catalog file in dir, ascending.
std::vector<int> catalog_orders(const std::filesystem::path& dir);

}  // namespace triangulata
