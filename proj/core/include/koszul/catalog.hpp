#pragma once

#include <string>
#include <vector>

#include "koszul/regular_cw.hpp"

namespace koszul::catalog {

// Names accepted by make(): point, simplex<n> (n <= 5), sphere<n> (n <= 4,
// the boundary of the (n+1)-simplex), rp2_six, example_singular,
// three_triangles_shared_edge. "simplex(3)" is accepted for "simplex3".
std::vector<std::string> names();

// Throws InputError for unknown names or unsupported sizes.
RegularCWComplex make(const std::string& name);

// Simplicial complex generated by the given facets (vertex lists over
// 0..9). Cells are named by their sorted vertex digits ("0", "01", "012")
// and oriented by vertex order.
RegularCWComplex simplicial(const std::string& name, const std::vector<std::vector<int>>& facets);

}  // namespace koszul::catalog
