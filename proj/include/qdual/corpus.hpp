#pragma once

// Built-in rings, chosen to cover Gorenstein vs non-Gorenstein, fields vs
// fat points, and a residue field extension:
//   r1  F_2
//   r2  F_4 as a 2-dimensional F_2-algebra
//   r3  F_2[x]/(x^2)
//   r4  F_3[x]/(x^3)
//   r5  F_2[x,y]/(x^2, xy, y^2)   (not Gorenstein)
//   r6  F_2[x,y]/(x^2, y^2)
//   r7  F_2 x F_2                 (not local; rejected)

#include <string>
#include <string_view>
#include <vector>

#include "qdual/formats.hpp"

namespace qdual {

/// Ids of every built-in ring, including the invalid r7.
const std::vector<std::string>& corpus_ids();
/// Ring-file text of a built-in ring; throws Error(UnknownRing).
std::string_view corpus_source(std::string_view id);
/// Parses and validates; r7 throws Error(NotLocal).
RingPtr corpus_ring(std::string_view id);
/// The valid rings r1..r6, keyed by id.
const RingTable& builtin_corpus();

}  // namespace qdual
