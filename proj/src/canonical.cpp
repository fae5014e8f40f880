#include "kcb/canonical.hpp"

#include <algorithm>

namespace kcb {

FockVector monomial_element(const FockContext& ctx, const Multipartition& mp) {
  FockVector vec(ctx.highest_weight_vector());
  for (const auto& step : residue_collected_path(ctx, mp)) {
    vec = apply_f_divided_direct(ctx, vec, step.residue, step.multiplicity);
  }
  return vec;
}

std::vector<long> shape_of(const FockVector& vec) {
  std::vector<long> shape;
  for (const auto& [mp, c] : vec.terms()) {
    for (const auto& [e, coef] : c.terms()) {
      if (e < 0) continue;
      if (static_cast<std::size_t>(e) >= shape.size()) shape.resize(static_cast<std::size_t>(e) + 1, 0);
      shape[static_cast<std::size_t>(e)] += coef.get_si();
    }
  }
  return shape;
}

std::vector<long> shape_of(const CanonicalElement& g) { return g.shape; }

bool is_svelte(const CanonicalElement& g) {
  if (static_cast<int>(g.shape.size()) != g.defect + 1) return false;
  return std::all_of(g.shape.begin(), g.shape.end(), [](long x) { return x == 1; });
}

std::pair<FockContext, Multipartition> diamond(const FockContext& ctx, const Multipartition& mp) {
  FockContext dual = ctx.dual();
  auto path = residue_collected_path(ctx, mp);
  for (auto& step : path) step.residue = (ctx.e() - step.residue) % ctx.e();
  return {dual, follow_path(dual, path)};
}

LaurentPoly decomposition_entry(const CanonicalElement& g, const Multipartition& lam) { return g.vector.coeff(lam); }

CanonicalBasis::CanonicalBasis(FockContext ctx, ReductionOrder order) : ctx_(std::move(ctx)), order_(order) {}

std::size_t CanonicalBasis::cache_size() const {
  std::lock_guard lock(mutex_);
  return cache_.size();
}

void CanonicalBasis::seed(const CanonicalElement& g) {
  std::lock_guard lock(mutex_);
  cache_.emplace(g.label, g);
}

std::vector<CanonicalElement> CanonicalBasis::cached() const {
  std::lock_guard lock(mutex_);
  std::vector<CanonicalElement> out;
  for (const auto& [mp, g] : cache_) out.push_back(g);
  return out;
}

CanonicalElement CanonicalBasis::element(const Multipartition& mu) {
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(mu);
    if (it != cache_.end()) return it->second;
  }
  CanonicalElement g = compute(mu);
  std::lock_guard lock(mutex_);
  return cache_.emplace(mu, std::move(g)).first->second;
}

CanonicalElement CanonicalBasis::compute(const Multipartition& mu) {
  if (mu.level() != ctx_.level()) throw std::invalid_argument("G: level mismatch");
  CanonicalElement g;
  g.label = mu;
  g.defect = weight_info(ctx_, content(ctx_, mu)).defect;
  if (mu.size() == 0) {
    g.vector = FockVector(mu);
    g.shape = shape_of(g.vector);
    return g;
  }
  // Peel the longest good string; ties go to the smallest residue.
  int best_i = -1;
  int best_k = 0;
  Multipartition best_nu;
  for (int i = 0; i < ctx_.e(); ++i) {
    Multipartition nu = mu;
    int k = 0;
    while (auto up = e_tilde(ctx_, nu, i)) {
      nu = std::move(*up);
      ++k;
    }
    if (k > best_k) {
      best_i = i;
      best_k = k;
      best_nu = std::move(nu);
    }
  }
  if (best_i < 0) throw NotInCrystal(mu.to_string() + " is not in the crystal of the highest weight vector");
  const int i = best_i;
  const int k = best_k;

  // f_i^(k) G(nu) = G(mu) + sum c_lam G(lam) over labels with eps_i(lam) > k, c_lam bar-invariant.
  FockVector x = apply_f_divided_direct(ctx_, element(best_nu).vector, i, k);
  const LaurentPoly one(1);
  while (true) {
    std::vector<Multipartition> offenders;
    for (const auto& [rho, c] : x.terms()) {
      const bool offends = rho == mu ? !(c - one).in_positive_part() : !c.in_positive_part();
      if (offends) offenders.push_back(rho);
    }
    if (offenders.empty()) break;
    std::vector<Multipartition> maximal;
    for (const auto& rho : offenders) {
      const bool dominated = std::any_of(offenders.begin(), offenders.end(),
                                         [&](const Multipartition& other) { return strictly_dominates(other, rho); });
      if (!dominated) maximal.push_back(rho);
    }
    const Multipartition rho = order_ == ReductionOrder::LexLargest
                                   ? *std::max_element(maximal.begin(), maximal.end())
                                   : *std::min_element(maximal.begin(), maximal.end());
    const LaurentPoly c = x.coeff(rho);
    if (rho == mu) {
      throw ReductionFailure("G(" + mu.to_string() + "): leading coefficient " + c.to_string() +
                             " cannot be reduced");
    }
    if (!is_e_regular(rho, ctx_.e())) {
      throw ReductionFailure("G(" + mu.to_string() + "): offending coefficient " + c.to_string() +
                             " on non-regular " + rho.to_string());
    }
    int eps = 0;
    for (auto up = e_tilde(ctx_, rho, i); up; up = e_tilde(ctx_, *up, i)) ++eps;
    if (eps <= k) {
      throw ReductionFailure("G(" + mu.to_string() + "): offending coefficient " + c.to_string() + " on " +
                             rho.to_string() + " whose i-string is too short");
    }
    CanonicalElement grho;
    try {
      grho = element(rho);
    } catch (const NotInCrystal&) {
      throw ReductionFailure("G(" + mu.to_string() + "): offending coefficient " + c.to_string() + " on " +
                             rho.to_string() + " which is not a crystal vertex");
    }
    x -= grho.vector.scaled(bar_symmetrize_nonpos(c));
  }
  if (x.coeff(mu) != one) {
    throw ReductionFailure("G(" + mu.to_string() + ") has leading coefficient " + x.coeff(mu).to_string());
  }
  for (const auto& [lam, c] : x.terms()) {
    if (lam != mu && !strictly_dominates(mu, lam)) {
      throw ReductionFailure("G(" + mu.to_string() + ") contains " + lam.to_string() +
                             " which is not dominated by the label");
    }
  }
  g.shape = shape_of(x);
  g.vector = std::move(x);
  return g;
}

std::map<Multipartition, CanonicalElement> CanonicalBasis::at_weight(const Content& c) {
  int degree = 0;
  for (int x : c) degree += x;
  const CrystalGraph graph = generate_crystal(ctx_, degree);
  std::map<Multipartition, CanonicalElement> out;
  for (std::size_t id : graph.at_content(c)) {
    const auto& mp = graph.vertices()[id].mp;
    out.emplace(mp, element(mp));
  }
  return out;
}

std::map<Multipartition, CanonicalElement> canonical_basis_at_weight(const FockContext& ctx, const Content& c) {
  CanonicalBasis basis(ctx);
  return basis.at_weight(c);
}

std::string check_canonical_invariants(const FockContext& ctx, const CanonicalElement& g) {
  if (g.vector.coeff(g.label) != LaurentPoly(1)) return "leading coefficient is not 1";
  std::vector<Multipartition> top_terms;
  for (const auto& [lam, c] : g.vector.terms()) {
    if (lam == g.label) continue;
    if (!c.in_positive_part()) return "coefficient of " + lam.to_string() + " is not in vZ[v]";
    if (!strictly_dominates(g.label, lam)) return lam.to_string() + " is not dominated by the label";
    if (c.max_exponent() > g.defect) return "coefficient of " + lam.to_string() + " exceeds the defect";
    if (c == LaurentPoly::monomial(g.defect)) top_terms.push_back(lam);
  }
  const Multipartition expected = conjugate(diamond(ctx, g.label).second);
  if (g.defect == 0) {
    if (g.vector.size() != 1 || expected != g.label) return "defect-0 element is not its own dual conjugate";
    return {};
  }
  if (top_terms.size() != 1) return "expected exactly one v^defect term, found " + std::to_string(top_terms.size());
  if (top_terms.front() != expected) {
    return "v^defect term " + top_terms.front().to_string() + " differs from conjugate(diamond) " +
           expected.to_string();
  }
  return {};
}

}  // namespace kcb
