#pragma once

#include <string>

#include "json.hpp"
#include "ordstat/group.hpp"
#include "ordstat/lattice.hpp"

namespace ordstat {

// Group description document:
//   {"type": "permutation", "degree": n, "generators": [[images...], ...]}
//     with 1-based images;
//   {"type": "mod-matrix", "modulus": m, "dim": d,
//    "generators": [[row-major entries], ...]};
//   {"type": "named", "name": ..., "params": {...}};
//   {"type": "semidirect-ref", "rep": <representation document or path>, "s": s}.
FiniteGroup parse_group_document(const nlohmann::json& j);
FiniteGroup load_group_document(const std::string& path);

}  // namespace ordstat
