#include "glj/abelian.hpp"

#include "glj/errors.hpp"

namespace glj {

std::string AbelianGroup::to_string() const {
  if (trivial()) return "0";
  std::string s;
  if (rank == 1) s = "Z";
  if (rank > 1) s = "Z^" + std::to_string(rank);
  for (const auto& t : torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + t.to_string();
  }
  return s;
}

nlohmann::json AbelianGroup::to_json() const {
  nlohmann::json j;
  j["rank"] = rank;
  auto& t = j["torsion"] = nlohmann::json::array();
  for (const auto& x : torsion) t.push_back(x.to_string());
  j["text"] = to_string();
  return j;
}

AbelianGroup AbelianGroup::cokernel(std::size_t generators, const std::vector<Integer>& invariants) {
  require_internal(invariants.size() <= generators, "cokernel: more invariants than generators");
  AbelianGroup g;
  g.rank = generators - invariants.size();
  for (const auto& d : invariants)
    if (!d.is_unit()) g.torsion.push_back(d);
  return g;
}

}  // namespace glj
