#pragma once

#include <string>

#include "model.hpp"

namespace icfd {

// Text formats. Both parsers skip blank lines and '#' comments; both
// serializers emit a canonical form (sorted edges, single spaces) so equal
// objects produce byte-identical text.
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);

Allocation parse_allocation(const std::string& text, const Instance& inst);
std::string serialize_allocation(const Allocation& alloc);

}  // namespace icfd
