#pragma once

// Kernels with a serial reference and an OpenMP version. The parallel
// versions partition work so that every output slot is written by exactly
// one iteration; results are identical to the serial ones.

#include "glj/catcore.hpp"
#include "glj/parallel.hpp"
#include "glj/simplicial.hpp"
#include "glj/snf.hpp"

#include <cstdint>
#include <vector>

namespace glj::kernels {

// table[offsets[f] + k] = out(cod f)[k] ∘ f
void fill_composition_table(const PresentedCategory& c, const std::vector<std::uint64_t>& offsets,
                            std::vector<MorId>& table, Exec exec);

// Level-n chains of a nerve from level n-1 (n >= 2): fills prefix/last for
// level n given child_offset[n].
void extend_chains(const PresentedCategory& c, const std::vector<std::vector<MorId>>& nonid_out,
                   Nerve& nv, int n, Exec exec);

// Face table of level n of a nerve whose chain data is complete.
void nerve_faces(const PresentedCategory& c, Nerve& nv, int n, Exec exec);

// Columns of ∂_n, one per nondegenerate n-simplex.
void assemble_boundary(const TruncatedSimplicialSet& x, int n, std::vector<SparseColumn>& columns,
                       Exec exec);

}  // namespace glj::kernels
