#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "kcb/canonical.hpp"
#include "kcb/closed_form.hpp"
#include "kcb/io.hpp"

namespace kcb {

/// Shared oracle caches, one CanonicalBasis per context. Safe for concurrent use.
class Oracle {
 public:
  Oracle() = default;
  Oracle(const Oracle&) = delete;
  Oracle& operator=(const Oracle&) = delete;

  CanonicalBasis& basis(const FockContext& ctx);
  CanonicalElement element(const FockContext& ctx, const Multipartition& mu) { return basis(ctx).element(mu); }
  std::vector<const CanonicalBasis*> bases() const;

 private:
  mutable std::mutex mutex_;
  std::map<FockContext, std::unique_ptr<CanonicalBasis>> bases_;
};

enum class Verdict { Match, Mismatch, Flagged, Info };
std::string verdict_name(Verdict v);

struct InstanceResult {
  std::string id;
  Verdict verdict = Verdict::Match;
  std::string detail;
  /// closed form minus oracle; set for closed-form mismatches.
  FockVector diff;
  /// Flagged rows: the readings that matched (Match) or the candidates (Flagged).
  std::map<std::string, std::vector<std::string>> readings;
};

struct VerificationReport {
  std::string suite;
  std::map<std::string, std::string> params;
  std::vector<InstanceResult> instances;
  /// Flagged row -> reading consistent with every instance ("unresolved" if none is).
  std::map<std::string, std::string> resolutions;
  double seconds = 0;

  std::size_t count(Verdict v) const;
  /// No Mismatch instances.
  bool ok() const { return count(Verdict::Mismatch) == 0; }
  void add(InstanceResult r) { instances.push_back(std::move(r)); }
  /// Appends other's instances (ids prefixed by its suite unless already); merges resolutions.
  void absorb(const VerificationReport& other);
};

/// Wall time is omitted unless with_timing, so identical runs serialize identically.
Json to_json(const VerificationReport& r, bool with_timing = false);
/// Summary line per suite followed by every non-Match instance.
std::string to_text(const VerificationReport& r, bool all_instances = false);

/// closed_canonical_top(a, i, k) against the oracle; shape against shape_fn.
VerificationReport verify_lemma_d(Oracle& oracle, int a, int i, int k);
/// closed_canonical_weyl for 0 <= n <= n_max; label reached by the Weyl path; shape constant.
VerificationReport verify_weyl_stability(Oracle& oracle, int a, int i, int k, int n_max);
/// Lemma n=0 (n = 0 only) or Prop. families (1 <= n <= n_max). Every combination of
/// flagged-row readings is tried; the readings that match are recorded per instance.
VerificationReport verify_pi_families(Oracle& oracle, int a, Family family, bool dual, int k, int n_max);
/// Consistency of flagged-row resolutions across the pi-family instances in r.
void resolve_flagged(VerificationReport& r);
/// d^_{lam' mu^diamond} = v^defect d_{lam mu}(v^-1) for every vertex mu up to max_degree, plus
/// the defect-0 and defect-1 characterizations.
VerificationReport verify_duality(Oracle& oracle, const FockContext& ctx, int max_degree, int jobs = 1);
/// G one step up an i-string ending at a defect-0 vertex is svelte with defect (2c+1)a - 1.
VerificationReport verify_svelte_lemma(Oracle& oracle, int a, int max_degree);
/// Informational per-external-weight status of the Inv-sum form; never a Mismatch.
VerificationReport conjecture_scan(Oracle& oracle, int a, int max_degree, int jobs = 1);
/// Defect congruences (symmetric e = 2), content-(k,1) dimensions, phi_i - eps_i = hub_i.
VerificationReport verify_structural(const FockContext& ctx, int max_degree, int jobs = 1);
/// Recursion vs closed forms (k <= 3), row sums C(a,k), inversion histograms (a <= 8),
/// symmetry (asserted k <= 2, reported k >= 3).
VerificationReport verify_shape_functions(int a_max);
/// Inv-sum law for f_i^(l) on vectors without removable i-nodes, over all grouped
/// charges of e in {2,3}, levels up to max_level; MacMahon up to macmahon_max.
VerificationReport verify_divided_powers(int max_size, int max_level, int max_l, int macmahon_max);
/// Defect-2 lists: vertices of defect 2, dual forms, svelte/non-svelte split (a = 1).
VerificationReport verify_small_defect(Oracle& oracle, int a, int n_max);

}  // namespace kcb
