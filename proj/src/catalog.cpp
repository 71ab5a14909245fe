#include "listcolor/catalog.hpp"

#include <set>
#include <stdexcept>

#include "catalog_data.hpp"

namespace lc {

std::vector<CatalogEntry> load_catalog(std::string_view text) {
  std::vector<CatalogEntry> out;
  std::set<std::string> names;
  for (auto& c : parse_catalog(text)) {
    if (!names.insert(c.name).second) {
      throw std::invalid_argument("duplicate catalog entry '" + c.name + "'");
    }
    std::string name = c.name, note = c.note;
    out.push_back({std::move(name), std::move(c), std::move(note)});
  }
  return out;
}

std::string_view builtin_catalog_text() { return detail::kBuiltinCatalog; }

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> catalog = load_catalog(builtin_catalog_text());
  return catalog;
}

const CatalogEntry* find_entry(const std::vector<CatalogEntry>& catalog, std::string_view name) {
  for (const auto& e : catalog) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

}  // namespace lc
