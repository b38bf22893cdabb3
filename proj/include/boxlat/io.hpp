#pragma once

#include <string>

#include "boxlat/lattice.hpp"

namespace boxlat {

// Interchange form: {"name": str, "elements": [str...], "covers": [[str,str]...]}
// Elements are sorted, covers are sorted pairs; serialization is
// byte-reproducible for equal inputs.
std::string to_json(const FiniteLattice& l);
FiniteLattice lattice_from_json(const std::string& text);
FiniteLattice load_lattice_file(const std::string& path);

// One node per element, one edge per cover, elements ranked by height.
std::string to_dot(const FiniteLattice& l);

}  // namespace boxlat
