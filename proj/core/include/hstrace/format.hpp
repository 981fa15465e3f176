#pragma once

#include <string>
#include <vector>

#include "hstrace/class_vector.hpp"
#include "hstrace/group.hpp"

namespace hstrace {

/// "3" for finite-backend elements, "(1,0)" for fgabelian coordinates.
std::string element_text(const GroupElement& e);

/// "2[0] - [x]" style rendering, terms sorted by class representative;
/// "0" for the zero vector.
std::string class_vector_text(const ClassVector& v);

/// "Z^2 ⊕ Z/2 ⊕ Z/2", "Z", "0".
std::string structure_string(std::size_t free_rank, const std::vector<Int>& torsion);

}  // namespace hstrace
