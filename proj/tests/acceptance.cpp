// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>

#include "kcb/verify.hpp"

using namespace kcb;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

int jobs() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

std::string summarize(const VerificationReport& r) {
  std::string s = std::to_string(r.count(Verdict::Match)) + " match, " + std::to_string(r.count(Verdict::Mismatch)) + " mismatch";
  if (r.count(Verdict::Flagged) > 0) s += ", " + std::to_string(r.count(Verdict::Flagged)) + " flagged";
  return s;
}

Outcome from_report(const VerificationReport& r) { return {r.ok(), summarize(r)}; }

Outcome golden() {
  const Partition e{};
  auto mp = [](Partition a, Partition b) { return Multipartition{std::move(a), std::move(b)}; };
  FockVector expected;
  expected.add(mp({3}, e), 1);
  expected.add(mp({1, 1, 1}, e), LaurentPoly::monomial(1));
  expected.add(mp({1}, {2}), LaurentPoly::monomial(1));
  expected.add(mp({1}, {1, 1}), LaurentPoly::monomial(2));
  CanonicalBasis basis(FockContext(2, {0, 1}));
  const CanonicalElement g = basis.element(mp({3}, e));
  if (g.vector == expected) return {true, g.vector.to_string()};
  return {false, "got " + g.vector.to_string()};
}

Outcome lemma_d(Oracle& oracle) {
  VerificationReport all;
  all.suite = "lemma-d";
  for (int a = 1; a <= 3; ++a) {
    for (int i = 0; i <= 1; ++i) {
      for (int k = 0; k <= a; ++k) all.absorb(verify_lemma_d(oracle, a, i, k));
    }
  }
  return from_report(all);
}

Outcome weyl(Oracle& oracle) {
  VerificationReport all;
  all.suite = "weyl";
  for (int a = 1; a <= 3; ++a) {
    const int n_max = a <= 2 ? 2 : 1;
    for (int i = 0; i <= 1; ++i) {
      for (int k = 0; k <= a; ++k) all.absorb(verify_weyl_stability(oracle, a, i, k, n_max));
    }
  }
  return from_report(all);
}

// Runs one family over every (a, n_max) pair and both orientations, then checks
// flagged-row consistency across all of its instances.
VerificationReport family_sweep(Oracle& oracle, Family f, const std::vector<std::pair<int, int>>& a_n) {
  VerificationReport per_family;
  per_family.suite = family_name(f);
  per_family.params = {{"family", family_name(f)}};
  for (const auto& [a, n_max] : a_n) {
    for (bool dual : {false, true}) {
      for (int k = 1; k <= a; ++k) {
        const auto r = verify_pi_families(oracle, a, f, dual, k, n_max);
        for (const auto& inst : r.instances) {
          if (!inst.id.starts_with("resolution ")) per_family.add(inst);
        }
      }
    }
  }
  resolve_flagged(per_family);
  return per_family;
}

Outcome lemma_zero(Oracle& oracle) {
  VerificationReport all;
  all.suite = "lemma-n0";
  std::string failing;
  for (Family f : {Family::P0k1, Family::P10k, Family::P010k}) {
    const auto r = family_sweep(oracle, f, {{1, 0}, {2, 0}, {3, 0}});
    if (!r.ok()) failing += " " + family_name(f);
    all.absorb(r);
  }
  Outcome o = from_report(all);
  if (!failing.empty()) o.note += "; failing:" + failing;
  return o;
}

Outcome general_families(Oracle& oracle) {
  VerificationReport all;
  all.suite = "prop-general";
  std::string failing;
  std::string unresolved;
  for (Family f : {Family::PGen0k1s, Family::PGen10k1s, Family::PGen010k1s}) {
    const auto r = family_sweep(oracle, f, {{1, 2}, {2, 2}, {3, 1}});
    if (!r.ok()) failing += " " + family_name(f);
    for (const auto& [row, reading] : r.resolutions) {
      if (reading.starts_with("unresolved") || reading == "inconsistent") unresolved += " " + row;
    }
    all.absorb(r);
  }
  Outcome o = from_report(all);
  o.ok = o.ok && unresolved.empty();
  if (!failing.empty()) o.note += "; failing:" + failing;
  if (!unresolved.empty()) o.note += "; unresolved rows:" + unresolved;
  return o;
}

Outcome duality(Oracle& oracle) {
  VerificationReport all;
  all.suite = "duality";
  all.absorb(verify_duality(oracle, FockContext(2, {0, 1}), 8, jobs()));
  all.absorb(verify_duality(oracle, FockContext::symmetric(2), 8, jobs()));
  return from_report(all);
}

Outcome svelte(Oracle& oracle) {
  VerificationReport all;
  all.suite = "svelte";
  for (int a = 1; a <= 2; ++a) all.absorb(verify_svelte_lemma(oracle, a, 13));
  return from_report(all);
}

Outcome structural() {
  VerificationReport all;
  all.suite = "structural";
  for (int a = 1; a <= 4; ++a) all.absorb(verify_structural(FockContext::symmetric(a), 9, jobs()));
  return from_report(all);
}

Outcome conjecture(Oracle& oracle) {
  const auto r = conjecture_scan(oracle, 3, 13, jobs());
  // informational: completing the scan is the criterion
  return {true, std::to_string(r.count(Verdict::Info)) + " weights reported"};
}

struct Criterion {
  int number;
  std::string name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  Oracle oracle;
  const std::vector<Criterion> criteria = {
      {1, "golden G([(3),∅])", 1, golden},
      {2, "top-row closed form", 10, [&] { return lemma_d(oracle); }},
      {3, "Weyl stability", 300, [&] { return weyl(oracle); }},
      {4, "n=0 path families", 60, [&] { return lemma_zero(oracle); }},
      {5, "general path families", 600, [&] { return general_families(oracle); }},
      {6, "shape function", 1, [] { return from_report(verify_shape_functions(10)); }},
      {7, "divided-power law", 30, [] { return from_report(verify_divided_powers(5, 3, 3, 7)); }},
      {8, "duality", 300, [&] { return duality(oracle); }},
      {9, "svelte strings", 300, [&] { return svelte(oracle); }},
      {10, "structural facts", 120, structural},
      {11, "conjecture scan", 900, [&] { return conjecture(oracle); }},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) {
      o.ok = false;
      o.note += "; over budget";
    }
    if (!o.ok) ++failures;
    std::printf("[%s] %2d %-24s %8.3fs / %.0fs  %s\n", o.ok ? "PASS" : "FAIL", c.number, c.name.c_str(), secs,
                c.budget_seconds, o.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
