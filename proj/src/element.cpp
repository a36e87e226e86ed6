#include "ordstat/element.hpp"

#include <sstream>

namespace ordstat {

std::string GroupElement::to_string() const {
  std::ostringstream os;
  if (is<PermutationData>()) {
    const auto& p = as<PermutationData>();
    os << "perm(";
    for (size_t i = 0; i < p.image.size(); ++i) {
      if (i) os << ",";
      os << p.image[i] + 1;  // 1-based on output
    }
    os << ")";
  } else if (is<MatrixData>()) {
    const auto& m = as<MatrixData>();
    os << "mat%" << m.modulus << "[";
    for (uint32_t r = 0; r < m.dim; ++r) {
      if (r) os << ";";
      for (uint32_t c = 0; c < m.dim; ++c) {
        if (c) os << ",";
        os << m.entry[r * m.dim + c];
      }
    }
    os << "]";
  } else {
    const auto& s = as<SemidirectPairData>();
    os << "pair(u=";
    for (size_t i = 0; i < s.translation.size(); ++i) {
      if (i) os << ",";
      os << s.translation[i];
    }
    os << "|h=" << s.actor << ")";
  }
  return os.str();
}

}  // namespace ordstat

size_t std::hash<ordstat::GroupElement>::operator()(const ordstat::GroupElement& g) const {
  using namespace ordstat;
  size_t seed = g.data().index();
  if (g.is<PermutationData>()) {
    for (uint32_t v : g.as<PermutationData>().image) hash_combine(seed, v);
  } else if (g.is<MatrixData>()) {
    const auto& m = g.as<MatrixData>();
    hash_combine(seed, m.dim);
    hash_combine(seed, m.modulus);
    for (uint64_t v : m.entry) hash_combine(seed, v);
  } else {
    const auto& s = g.as<SemidirectPairData>();
    for (uint64_t v : s.translation) hash_combine(seed, v);
    hash_combine(seed, s.actor);
  }
  return seed;
}
