#pragma once

#include <string_view>
#include <vector>

#include "ratknot/series.hpp"

namespace ratknot {

struct CatalogEntry {
  std::string_view name;
  std::string_view description;
  std::string_view formula;  // parse_gf syntax
};

const std::vector<CatalogEntry>& gf_catalog_entries();

// Parsed closed form; throws DomainError for an unknown name.
RationalGF gf_catalog(std::string_view name);

}  // namespace ratknot
