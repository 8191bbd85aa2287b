#include "qdual/corpus.hpp"

#include <array>
#include <utility>

namespace qdual {

namespace {

constexpr std::array<std::pair<std::string_view, std::string_view>, 7> kSources{{
    {"r1", R"([ring]
# F_2
name = r1
p = 2
dim = 1
unit = 1
mul 0 0 = 1
)"},
    {"r2", R"([ring]
# F_4 = F_2[w]/(w^2 + w + 1), basis 1, w
name = r2
p = 2
dim = 2
unit = 1 0
mul 0 0 = 1 0
mul 0 1 = 0 1
mul 1 1 = 1 1
)"},
    {"r3", R"([ring]
# F_2[x]/(x^2), basis 1, x
name = r3
p = 2
dim = 2
unit = 1 0
mul 0 0 = 1 0
mul 0 1 = 0 1
mul 1 1 = 0 0
)"},
    {"r4", R"([ring]
# F_3[x]/(x^3), basis 1, x, x^2
name = r4
p = 3
dim = 3
unit = 1 0 0
mul 0 0 = 1 0 0
mul 0 1 = 0 1 0
mul 0 2 = 0 0 1
mul 1 1 = 0 0 1
mul 1 2 = 0 0 0
mul 2 2 = 0 0 0
)"},
    {"r5", R"([ring]
# F_2[x,y]/(x^2, xy, y^2), basis 1, x, y
name = r5
p = 2
dim = 3
unit = 1 0 0
mul 0 0 = 1 0 0
mul 0 1 = 0 1 0
mul 0 2 = 0 0 1
mul 1 1 = 0 0 0
mul 1 2 = 0 0 0
mul 2 2 = 0 0 0
)"},
    {"r6", R"([ring]
# F_2[x,y]/(x^2, y^2), basis 1, x, y, xy
name = r6
p = 2
dim = 4
unit = 1 0 0 0
mul 0 0 = 1 0 0 0
mul 0 1 = 0 1 0 0
mul 0 2 = 0 0 1 0
mul 0 3 = 0 0 0 1
mul 1 1 = 0 0 0 0
mul 1 2 = 0 0 0 1
mul 1 3 = 0 0 0 0
mul 2 2 = 0 0 0 0
mul 2 3 = 0 0 0 0
mul 3 3 = 0 0 0 0
)"},
    {"r7", R"([ring]
# F_2 x F_2, basis of orthogonal idempotents e, f
name = r7
p = 2
dim = 2
unit = 1 1
mul 0 0 = 1 0
mul 0 1 = 0 0
mul 1 1 = 0 1
)"},
}};

}  // namespace

const std::vector<std::string>& corpus_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, text] : kSources) out.emplace_back(id);
    return out;
  }();
  return ids;
}

std::string_view corpus_source(std::string_view id) {
  for (const auto& [key, text] : kSources)
    if (key == id) return text;
  throw Error(ErrorKind::UnknownRing, std::string(id));
}

RingPtr corpus_ring(std::string_view id) { return parse_ring(corpus_source(id)); }

const RingTable& builtin_corpus() {
  static const RingTable table = [] {
    RingTable t;
    for (const auto& [id, text] : kSources) {
      if (id == "r7") continue;
      t.emplace(std::string(id), parse_ring(text));
    }
    return t;
  }();
  return table;
}

}  // namespace qdual
