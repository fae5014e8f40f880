#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kcb/crystal.hpp"
#include "kcb/fock.hpp"

namespace kcb {

/// The triangular reduction met a coefficient it cannot legally remove, or a
/// finished element violates one of the canonical-basis invariants.
class ReductionFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// G(mu) together with its defect and shape.
struct CanonicalElement {
  Multipartition label;
  FockVector vector;
  int defect = 0;
  /// shape[l] = sum over terms of the coefficient of v^l.
  std::vector<long> shape;
};

/// A(mu): divided powers along the residue-collected path applied to the highest weight vector.
FockVector monomial_element(const FockContext& ctx, const Multipartition& mp);

/// Histogram of v-powers counted with coefficient multiplicity.
std::vector<long> shape_of(const FockVector& vec);
std::vector<long> shape_of(const CanonicalElement& g);
/// Shape is all ones with defect + 1 entries.
bool is_svelte(const CanonicalElement& g);

/// Dual context and the vertex reached there by the residue-negated path.
std::pair<FockContext, Multipartition> diamond(const FockContext& ctx, const Multipartition& mp);

/// Coefficient of lam in G (zero if absent).
LaurentPoly decomposition_entry(const CanonicalElement& g, const Multipartition& lam);

/// Which offender the reduction removes first among the dominance-maximal ones.
enum class ReductionOrder { LexLargest, LexSmallest };

/// Memoized LLT-style computation of canonical basis elements for one Fock space.
///
/// Computing G(mu) needs only same-weight monomial elements and same-weight
/// canonical elements of labels strictly dominated by mu. The cache is safe for
/// concurrent use; its contents do not depend on evaluation order.
class CanonicalBasis {
 public:
  explicit CanonicalBasis(FockContext ctx, ReductionOrder order = ReductionOrder::LexLargest);

  const FockContext& context() const { return ctx_; }

  /// G(mu); throws NotInCrystal for non-vertices and ReductionFailure on invariant violations.
  CanonicalElement element(const Multipartition& mu);
  /// All G(mu) for the crystal vertices of the given content.
  std::map<Multipartition, CanonicalElement> at_weight(const Content& c);

  std::size_t cache_size() const;
  /// Inserts a precomputed element (used by the on-disk cache).
  void seed(const CanonicalElement& g);
  std::vector<CanonicalElement> cached() const;

 private:
  CanonicalElement compute(const Multipartition& mu);

  FockContext ctx_;
  ReductionOrder order_;
  mutable std::mutex mutex_;
  std::map<Multipartition, CanonicalElement> cache_;
};

/// One-shot wrapper over CanonicalBasis::at_weight.
std::map<Multipartition, CanonicalElement> canonical_basis_at_weight(const FockContext& ctx, const Content& c);

/// Checks the four element invariants (leading 1, vZ[v] elsewhere, dominance,
/// unique v^defect term equal to conjugate(diamond(mu))). Returns a description
/// of the first violation, empty when all hold.
std::string check_canonical_invariants(const FockContext& ctx, const CanonicalElement& g);

}  // namespace kcb
