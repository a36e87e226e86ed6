#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace ordstat {

// Permutation on points 0..degree-1, stored as its image array.
struct PermutationData {
  std::vector<uint32_t> image;
  auto operator<=>(const PermutationData&) const = default;
};

// Square matrix over Z/m, row-major, entries reduced into [0, m).
struct MatrixData {
  uint32_t dim = 0;
  uint64_t modulus = 0;
  std::vector<uint64_t> entry;
  auto operator<=>(const MatrixData&) const = default;
};

// Element (u, h) of a semidirect product: translation vector u over Z/p^s
// and the index h of an element of the acting group.
struct SemidirectPairData {
  std::vector<uint64_t> translation;
  uint32_t actor = 0;
  auto operator<=>(const SemidirectPairData&) const = default;
};

// Canonical, hashable, totally ordered element encoding. Elements of one
// group always hold the same alternative, so the variant ordering yields a
// deterministic total order within a group.
class GroupElement {
 public:
  using Data = std::variant<PermutationData, MatrixData, SemidirectPairData>;

  GroupElement() = default;
  explicit GroupElement(Data d) : data_(std::move(d)) {}

  const Data& data() const { return data_; }

  template <class T>
  const T& as() const {
    return std::get<T>(data_);
  }
  template <class T>
  bool is() const {
    return std::holds_alternative<T>(data_);
  }

  auto operator<=>(const GroupElement&) const = default;

  std::string to_string() const;

 private:
  Data data_;
};

inline void hash_combine(size_t& seed, size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2);
}

}  // namespace ordstat

template <>
struct std::hash<ordstat::GroupElement> {
  size_t operator()(const ordstat::GroupElement& g) const;
};
