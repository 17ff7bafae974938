#ifndef LATPOS_CATALOG_HPP
#define LATPOS_CATALOG_HPP

#include <map>
#include <string>
#include <vector>

#include "latpos/pathmodel.hpp"
#include "latpos/scheme.hpp"

namespace latpos {

struct CatalogEntry {
    std::string name;
    Orientation orientation;
    std::vector<std::string> params; // accepted parameter names
    std::string description;         // defining recurrence, human-readable
};

// Parameter values are canonical polynomial strings (integers included).
using CatalogParams = std::map<std::string, std::string>;

const std::vector<CatalogEntry>& catalog_list();

// Builds the named scheme; raises UnknownName / BadParameters.
// Missing parameters default to symbolic indeterminates of the same name.
std::pair<WeightScheme, Orientation> catalog_scheme(const std::string& name,
                                                    const CatalogParams& params = {});

std::string catalog_json();

} // namespace latpos

#endif
