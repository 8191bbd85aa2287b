#pragma once

// Line-oriented text formats for rings and modules.
//
//   [ring]                       [module]
//   name = r3                    name = k
//   p = 2                        ring = r3
//   dim = 2                      dim = 1
//   unit = 1 0                   act 0 = 1
//   mul 0 0 = 1 0                act 1 = 0
//   mul 0 1 = 0 1
//   mul 1 1 = 0 0
//
// `#` starts a comment. `mul i j` is required for every i <= j; the
// symmetric entry is filled in. Action rows are separated by `/`. All
// integers are reduced mod p on load.

#include <map>
#include <string>
#include <string_view>

#include "qdual/module.hpp"

namespace qdual {

using RingTable = std::map<std::string, RingPtr, std::less<>>;

RingPtr parse_ring(std::string_view text);

struct NamedModule {
  std::string name;
  Module module;
};

/// Resolves `ring = <id>` against `rings`; throws Error(UnknownRing).
NamedModule parse_module(std::string_view text, const RingTable& rings);

std::string serialize_ring(const Ring& ring);
std::string serialize_module(const Module& m, std::string_view name);

}  // namespace qdual
