#include "hstrace/format.hpp"

namespace hstrace {

std::string element_text(const GroupElement& e) {
  if (e.is_index()) return std::to_string(e.index());
  std::string out = "(";
  const auto& coords = e.coords();
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (k) out += ",";
    out += coords[k].str();
  }
  out += ")";
  return out;
}

std::string class_vector_text(const ClassVector& v) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [rep, c] : v.coefficients()) {
    Int a = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (a != 1) out += a.str();
    out += "[" + element_text(rep) + "]";
  }
  return out;
}

std::string structure_string(std::size_t free_rank, const std::vector<Int>& torsion) {
  if (free_rank == 0 && torsion.empty()) return "0";
  std::string out;
  auto append = [&out](const std::string& part) {
    if (!out.empty()) out += " \xE2\x8A\x95 ";  // direct sum sign
    out += part;
  };
  if (free_rank == 1) append("Z");
  if (free_rank > 1) append("Z^" + std::to_string(free_rank));
  for (const Int& t : torsion) append("Z/" + t.str());
  return out;
}

}  // namespace hstrace
