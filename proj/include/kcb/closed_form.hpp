#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "kcb/canonical.hpp"
#include "kcb/crystal.hpp"

namespace kcb {

/// 0/1 sequence choosing addable nodes (1 = add). Positions are 1-based in the
/// documentation and 0-based in `bits`.
struct ChoiceSequence {
  std::vector<int> bits;

  ChoiceSequence() = default;
  explicit ChoiceSequence(std::vector<int> b);
  ChoiceSequence(std::initializer_list<int> b) : ChoiceSequence(std::vector<int>(b)) {}

  int length() const { return static_cast<int>(bits.size()); }
  int weight() const;
  /// 1-based access.
  int at(int pos) const { return bits[static_cast<std::size_t>(pos - 1)]; }
  /// Positions (1-based) holding value x.
  std::vector<int> positions(int x) const;
  ChoiceSequence slice(int from, int count) const;

  /// All-ones sequence with a single 0 at 1-based position j.
  static ChoiceSequence single_zero(int length, int j);
  /// All-zeros sequence with a single 1 at 1-based position j.
  static ChoiceSequence single_one(int length, int j);

  friend auto operator<=>(const ChoiceSequence&, const ChoiceSequence&) = default;
  friend bool operator==(const ChoiceSequence&, const ChoiceSequence&) = default;
  std::string to_string() const;
};

/// Sum over 1-entries of the number of 0-entries before them.
int inv(const ChoiceSequence& s);
/// S(c, k) with 1-entries as early as possible first (the first element has Inv 0).
std::vector<ChoiceSequence> choice_sequences(int c, int k);

/// Shape recursion s(1,0,0) = s(1,1,0) = 1, s(a,k,l) = s(a-1,k-1,l) + s(a-1,k,l-k);
/// zero outside 0 <= l <= k(a-k).
long shape_fn(int a, int k, int l);
/// Entries s(a,k,0..k(a-k)).
std::vector<long> shape_row(int a, int k);
/// Closed forms for k = 1, 2, 3; throws std::invalid_argument for other k.
long shape_fn_closed(int a, int k, int l);

/// Defect k(a-k) (i = 0) or k(b-k) (i = 1) of Lambda - k alpha_i.
int defect_top_row(int a, int b, int k, int i);
/// {k(a-k) mod 2a : 0 <= k <= a}.
std::set<int> defect_congruences(int a);

/// tau^n_i(S): T_{n+1}/T_{n-1} on the i-corner components by S, T_n on the others.
/// Level 2a, symmetric charges (0^a, 1^a).
Multipartition tau(int a, int i, int n, const ChoiceSequence& s);

/// G(tau^0_i(S~)) = sum over S(a,k) of v^Inv(S) tau^0_i(S).
CanonicalElement closed_canonical_top(int a, int i, int k);
/// G(tau^n_i(S~)) = sum over S(a,k) of v^Inv(S) tau^n_i(S).
CanonicalElement closed_canonical_weyl(int a, int i, int k, int n);

/// Closed-form families for the symmetric e = 2 crystal.
enum class Family {
  TopRow,      // (i^k)
  WeylN,       // tau^n images of the top row
  P0k1,        // Lemma n=0: (0^k, 1)
  P10k,        // Lemma n=0: (1, 0^k)
  P010k,       // Lemma n=0: (0, 1, 0^(k-1))
  PGen0k1s,    // n >= 1: (0^k, 1^(2k+a-1), ...)
  PGen10k1s,   // n >= 1: (1, 0^k, 1^(2k+a-2), ...)
  PGen010k1s,  // n >= 1: (0, 1, 0^(k-1), 1^(2k+a-2), ...)
};

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

/// Family, parameters, and (for pi0/pin) one tuple of choice sequences.
struct FamilySpec {
  Family family = Family::TopRow;
  /// Residue-swapped variant (paths starting with 1).
  bool dual = false;
  int a = 1;
  int k = 0;
  int n = 0;
  std::vector<ChoiceSequence> choices;
};

/// A printed case-table row whose reading is ambiguous; carries the alternatives.
class AmbiguousCase : public std::runtime_error {
 public:
  AmbiguousCase(std::string row_id, std::vector<std::string> readings)
      : std::runtime_error("ambiguous case-table row " + row_id),
        row_id_(std::move(row_id)),
        readings_(std::move(readings)) {}
  const std::string& row_id() const { return row_id_; }
  const std::vector<std::string>& readings() const { return readings_; }

 private:
  std::string row_id_;
  std::vector<std::string> readings_;
};

/// Picks one reading for each flagged row; rows without an entry raise AmbiguousCase.
struct AmbiguityResolution {
  std::map<std::string, std::string> chosen;
  const std::string* lookup(const std::string& row) const {
    auto it = chosen.find(row);
    return it == chosen.end() ? nullptr : &it->second;
  }
};

/// One summand of a closed-form family: the multipartition and its v-exponent.
struct FamilyTerm {
  Multipartition mp;
  int exponent = 0;
};

/// Lemma n=0 case tables (families P0k1, P10k, P010k).
FamilyTerm pi0(const FamilySpec& spec);
/// n >= 1 case tables (families PGen*), with flagged rows resolved by `res`.
FamilyTerm pin(const FamilySpec& spec, const AmbiguityResolution& res = {});

/// Every admissible choice tuple for the family's parameters.
std::vector<std::vector<ChoiceSequence>> admissible_choices(const FamilySpec& spec);
/// Sum over admissible choices; label is the e-regular member (coefficient 1).
CanonicalElement closed_canonical_family(const FamilySpec& spec, const AmbiguityResolution& res = {});
/// Flagged rows a family may raise, with their candidate readings.
std::map<std::string, std::vector<std::string>> flagged_rows(Family f);

/// Residue path reaching the family's label: the printed prefix followed by
/// n - 1 (n for weyl-n) full strings of alternating residue. Equal consecutive
/// residues are merged.
std::vector<PathStep> family_path(const FamilySpec& spec);
/// follow_path of family_path in the symmetric context.
Multipartition family_label(const FamilySpec& spec);

/// Stated defect (k-1)(a-k+1) + 2a for the n >= 1 families, k(a-k) for the top row.
int family_defect(const FamilySpec& spec);

/// Generic choice tree: steps 1..m choose S_l among the addable nodes (exponent Inv(S_l)),
/// later steps must add every addable node. Returns nullopt if some tuple cannot
/// complete a later step.
std::optional<FockVector> choice_tree_sum(const FockContext& ctx, const std::vector<PathStep>& path, int m);

/// Defect-2 families listed for a in {1, 3}: each entry is (mu, tag) with tags
/// "1:mu", "1:dual", "2:mu", "2:dual" for the two listed forms of each item.
std::vector<std::pair<Multipartition, std::string>> small_defect_families(int a, int n);

}  // namespace kcb
