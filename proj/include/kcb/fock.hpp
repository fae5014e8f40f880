#pragma once

#include <map>
#include <vector>

#include "kcb/laurent.hpp"
#include "kcb/partition.hpp"

namespace kcb {

/// Rank e, charge sequence s and the highest weight it determines.
///
/// Charges are residues mod e; equal charges must occupy one contiguous
/// interval of the sequence. highest_weight()[i] counts the charges equal to i.
class FockContext {
 public:
  /// Throws std::invalid_argument when e < 2, the sequence is empty, a charge is
  /// out of range or equal charges are not grouped.
  FockContext(int e, std::vector<int> charges);

  /// Charges (0^a, 1^a) for e = 2.
  static FockContext symmetric(int a);

  int e() const { return e_; }
  int level() const { return static_cast<int>(charges_.size()); }
  const std::vector<int>& charges() const { return charges_; }
  const std::vector<int>& highest_weight() const { return highest_weight_; }
  /// Charges (-k_r, ..., -k_1) mod e.
  FockContext dual() const;
  Multipartition highest_weight_vector() const { return Multipartition::empty(level()); }

  friend bool operator==(const FockContext&, const FockContext&) = default;
  friend auto operator<=>(const FockContext&, const FockContext&) = default;

 private:
  int e_;
  std::vector<int> charges_;
  std::vector<int> highest_weight_;
};

/// One box (or candidate box) of a multipartition; all indices 1-based.
struct NodeRef {
  int component;
  int row;
  int col;

  friend bool operator==(const NodeRef&, const NodeRef&) = default;
  friend auto operator<=>(const NodeRef&, const NodeRef&) = default;
};

/// Box order: component 1 is topmost and smaller rows are higher. NodeRef's
/// default ordering is exactly top-to-bottom.

int residue(const FockContext& ctx, const NodeRef& node);

/// Addable / removable nodes of residue i, top to bottom.
std::vector<NodeRef> addable_nodes(const FockContext& ctx, const Multipartition& mp, int i);
std::vector<NodeRef> removable_nodes(const FockContext& ctx, const Multipartition& mp, int i);
/// All addable nodes regardless of residue, top to bottom.
std::vector<NodeRef> all_addable_nodes(const Multipartition& mp);

Multipartition add_node(const Multipartition& mp, const NodeRef& node);
Multipartition remove_node(const Multipartition& mp, const NodeRef& node);

/// Count of boxes per residue.
std::vector<int> content(const FockContext& ctx, const Multipartition& mp);

/// Finite formal sum of multipartitions with LaurentPoly coefficients.
class FockVector {
 public:
  using Terms = std::map<Multipartition, LaurentPoly>;

  FockVector() = default;
  /// The basis vector mp with coefficient 1.
  explicit FockVector(const Multipartition& mp);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  /// Coefficient of mp, zero if absent.
  LaurentPoly coeff(const Multipartition& mp) const;

  /// Adds c * mp; drops the entry if it cancels.
  void add(const Multipartition& mp, const LaurentPoly& c);
  FockVector& operator+=(const FockVector& rhs);
  FockVector& operator-=(const FockVector& rhs);
  /// Scales every coefficient by c.
  FockVector scaled(const LaurentPoly& c) const;
  /// Divides every coefficient exactly; throws NotDivisible otherwise.
  FockVector divided(const LaurentPoly& c) const;

  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend bool operator==(const FockVector&, const FockVector&) = default;

  std::string to_string() const;

 private:
  Terms terms_;
};

/// f_i: each addable i-node n contributes v^N with N = #addable above - #removable above.
FockVector apply_f(const FockContext& ctx, const FockVector& vec, int i);
/// e_i: each removable i-node m contributes v^-M with M = #addable below - #removable below.
/// This sign makes [e_i, f_i] act as [h_i] on weight vectors.
FockVector apply_e(const FockContext& ctx, const FockVector& vec, int i);
/// f_i^k / [k]!, computed by iterating apply_f and dividing exactly.
FockVector apply_f_divided(const FockContext& ctx, const FockVector& vec, int i, int k);
/// Same value as apply_f_divided, evaluated per basis vector from the closed
/// exponent sum over the added nodes (no intermediate k-fold vector).
FockVector apply_f_divided_direct(const FockContext& ctx, const FockVector& vec, int i, int k);

}  // namespace kcb
