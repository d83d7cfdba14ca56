#include "kernels/kernels.hpp"

#include <omp.h>

namespace glj::kernels {

namespace {

void fill_one(const PresentedCategory& c, const std::vector<std::uint64_t>& offsets,
              std::vector<MorId>& table, MorId f) {
  std::uint64_t slot = offsets[f];
  for (MorId g : c.out(c.cod(f))) table[slot++] = c.compose(g, f);
}

}  // namespace

void fill_composition_table(const PresentedCategory& c, const std::vector<std::uint64_t>& offsets,
                            std::vector<MorId>& table, Exec exec) {
  const auto m = static_cast<std::int64_t>(c.morphism_count());
  if (exec == Exec::serial) {
    for (std::int64_t f = 0; f < m; ++f) fill_one(c, offsets, table, static_cast<MorId>(f));
    return;
  }
#pragma omp parallel for schedule(dynamic, 64) num_threads(num_threads())
  for (std::int64_t f = 0; f < m; ++f) fill_one(c, offsets, table, static_cast<MorId>(f));
}

}  // namespace glj::kernels
