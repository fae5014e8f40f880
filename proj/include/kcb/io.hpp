#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "kcb/canonical.hpp"
#include "kcb/crystal.hpp"

namespace kcb {

using Json = nlohmann::ordered_json;

/// {"-2":1,"0":1,"2":1}
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

/// [[3],[]]
Json to_json(const Multipartition& mp);
Multipartition multipartition_from_json(const Json& j);
/// Parses a literal such as "[[3],[]]"; throws std::invalid_argument on bad input.
Multipartition parse_multipartition(const std::string& text);

Json to_json(const FockContext& ctx);
FockContext context_from_json(const Json& j);

/// Terms in decreasing dominance, ties broken by decreasing lexicographic order.
std::vector<std::pair<Multipartition, LaurentPoly>> sorted_terms(const FockVector& vec);

/// [{multipartition, coefficient}, ...] in sorted_terms order.
Json to_json(const FockVector& vec);
FockVector fock_vector_from_json(const Json& j);

/// {label, defect, shape, terms}
Json to_json(const CanonicalElement& g);
CanonicalElement canonical_from_json(const Json& j);

Json to_json(const WeightInfo& w);
Json to_json(const CrystalGraph& g);
Json to_json(const BlockReducedGraph& g);

/// "[1,5]^2"
std::string hub_label(const WeightInfo& w);
/// Nodes labelled hub^defect, edges labelled by residue.
std::string to_dot(const BlockReducedGraph& g);
/// Nodes labelled by multipartition.
std::string to_dot(const CrystalGraph& g);

/// Rows k = 0..a, columns l = 0..max k(a-k).
Json shape_table_json(int a);
std::string shape_table_text(int a);

/// Canonical elements stored as one JSON file per (context, label), named by a
/// 64-bit FNV-1a hash of the key.
class DiskCache {
 public:
  explicit DiskCache(std::filesystem::path dir);
  /// Reads KCB_CACHE_DIR; nullopt when unset or empty.
  static std::optional<DiskCache> from_env();

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const FockContext& ctx, const Multipartition& mu) const;
  /// Seeds every stored element of ctx; returns how many were loaded.
  std::size_t load_into(CanonicalBasis& basis) const;
  /// Writes elements not yet on disk; returns how many files were written.
  std::size_t store_from(const CanonicalBasis& basis) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace kcb
