#include "ordstat/groupdoc.hpp"

#include <fstream>

#include "ordstat/corpus.hpp"
#include "ordstat/error.hpp"

namespace ordstat {

namespace {

FiniteGroup parse_permutation(const nlohmann::json& j) {
  uint32_t degree = j.at("degree").get<uint32_t>();
  if (degree == 0) throw ParseError("permutation degree must be >= 1");
  std::vector<GroupElement> gens;
  for (const auto& images : j.at("generators")) {
    PermutationData d;
    if (images.size() != degree) throw ParseError("generator image count != degree");
    for (const auto& v : images) {
      uint64_t img = v.get<uint64_t>();
      if (img < 1 || img > degree)
        throw ParseError("permutation images are 1-based and must lie in 1..degree");
      d.image.push_back(static_cast<uint32_t>(img - 1));
    }
    gens.emplace_back(std::move(d));
  }
  return FiniteGroup(PermutationRealization{degree}, std::move(gens), "permutation-doc");
}

FiniteGroup parse_mod_matrix(const nlohmann::json& j) {
  uint64_t modulus = j.at("modulus").get<uint64_t>();
  uint32_t dim = j.at("dim").get<uint32_t>();
  if (modulus < 2) throw ParseError("modulus must be >= 2");
  if (dim == 0) throw ParseError("dim must be >= 1");
  std::vector<GroupElement> gens;
  for (const auto& entries : j.at("generators")) {
    MatrixData d{dim, modulus, {}};
    if (entries.size() != size_t{dim} * dim)
      throw ParseError("mod-matrix generators are flat row-major lists of dim*dim entries");
    for (const auto& v : entries) {
      long long e = v.get<long long>();
      long long mod = static_cast<long long>(modulus);
      d.entry.push_back(static_cast<uint64_t>(((e % mod) + mod) % mod));
    }
    gens.emplace_back(std::move(d));
  }
  return FiniteGroup(ModMatrixRealization{dim, modulus}, std::move(gens), "mod-matrix-doc");
}

FiniteGroup parse_named(const nlohmann::json& j) {
  std::string name = j.at("name").get<std::string>();
  NamedParams params;
  if (j.contains("params")) {
    const auto& p = j.at("params");
    if (p.contains("n")) params.n = p.at("n").get<uint64_t>();
    if (p.contains("p")) params.p = p.at("p").get<uint64_t>();
    if (p.contains("s")) params.s = p.at("s").get<uint64_t>();
    if (p.contains("r")) params.r = p.at("r").get<uint64_t>();
    if (p.contains("order")) params.order = p.at("order").get<uint64_t>();
  }
  return make_named_group(name, params);
}

FiniteGroup parse_semidirect_ref(const nlohmann::json& j) {
  if (!j.contains("rep") || !j.contains("s"))
    throw ParseError("semidirect-ref requires fields rep and s");
  RepresentationDoc doc;
  if (j.at("rep").is_string()) {
    doc = load_representation_doc(j.at("rep").get<std::string>());
  } else {
    doc = parse_representation_doc(j.at("rep"));
  }
  uint64_t s = j.at("s").get<uint64_t>();
  return construct_semidirect(doc, s).semidirect.group;
}

}  // namespace

FiniteGroup parse_group_document(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("type"))
    throw ParseError("group document must be an object with a \"type\" field");
  std::string type = j.at("type").get<std::string>();
  try {
    if (type == "permutation") return parse_permutation(j);
    if (type == "mod-matrix") return parse_mod_matrix(j);
    if (type == "named") return parse_named(j);
    if (type == "semidirect-ref") return parse_semidirect_ref(j);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("group document: ") + e.what());
  }
  throw ParseError("unknown group document type: " + type);
}

FiniteGroup load_group_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open group document: " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("group document " + path + ": " + e.what());
  }
  return parse_group_document(j);
}

}  // namespace ordstat
