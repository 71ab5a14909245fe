#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "listcolor/configuration.hpp"

namespace lc {

struct CatalogEntry {
  std::string name;
  Configuration configuration;
  std::string provenance;
};

// Throws std::invalid_argument on duplicate names.
std::vector<CatalogEntry> load_catalog(std::string_view text);

// The catalog compiled in from data/catalog.cfg.
const std::vector<CatalogEntry>& builtin_catalog();
std::string_view builtin_catalog_text();

// nullptr when no entry has that name.
const CatalogEntry* find_entry(const std::vector<CatalogEntry>& catalog, std::string_view name);

}  // namespace lc
