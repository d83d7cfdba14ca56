#pragma once

// Finitely generated abelian groups in invariant-factor form.

#include "glj/integer.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace glj {

struct AbelianGroup {
  std::size_t rank = 0;
  std::vector<Integer> torsion;  // each > 1, t_1 | t_2 | ...

  bool trivial() const { return rank == 0 && torsion.empty(); }
  // "0", "Z", "Z^2 + Z/2", ...
  std::string to_string() const;
  nlohmann::json to_json() const;

  // Cokernel of an integer map into Z^generators with the given nonzero
  // Smith invariants.
  static AbelianGroup cokernel(std::size_t generators, const std::vector<Integer>& invariants);

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

}  // namespace glj
