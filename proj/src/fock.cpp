#include "kcb/fock.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kcb {

FockContext::FockContext(int e, std::vector<int> charges) : e_(e), charges_(std::move(charges)) {
  if (e_ < 2) throw std::invalid_argument("FockContext: rank e must be >= 2");
  if (charges_.empty()) throw std::invalid_argument("FockContext: empty charge sequence");
  highest_weight_.assign(static_cast<std::size_t>(e_), 0);
  std::vector<bool> closed(static_cast<std::size_t>(e_), false);
  for (std::size_t l = 0; l < charges_.size(); ++l) {
    const int k = charges_[l];
    if (k < 0 || k >= e_) throw std::invalid_argument("FockContext: charge out of range");
    if (closed[static_cast<std::size_t>(k)]) {
      throw std::invalid_argument("FockContext: charges with equal residue must be grouped");
    }
    if (l > 0 && charges_[l - 1] != k) closed[static_cast<std::size_t>(charges_[l - 1])] = true;
    ++highest_weight_[static_cast<std::size_t>(k)];
  }
}

FockContext FockContext::symmetric(int a) {
  if (a < 1) throw std::invalid_argument("FockContext::symmetric: a must be >= 1");
  std::vector<int> s(static_cast<std::size_t>(a), 0);
  s.insert(s.end(), static_cast<std::size_t>(a), 1);
  return FockContext(2, std::move(s));
}

FockContext FockContext::dual() const {
  std::vector<int> s;
  s.reserve(charges_.size());
  for (auto it = charges_.rbegin(); it != charges_.rend(); ++it) s.push_back((e_ - *it) % e_);
  return FockContext(e_, std::move(s));
}

int residue(const FockContext& ctx, const NodeRef& node) {
  const int e = ctx.e();
  const int r = ctx.charges()[static_cast<std::size_t>(node.component - 1)] + node.col - node.row;
  return ((r % e) + e) % e;
}

std::vector<NodeRef> all_addable_nodes(const Multipartition& mp) {
  std::vector<NodeRef> out;
  for (int u = 0; u < mp.level(); ++u) {
    const Partition& p = mp[u];
    for (int r = 1; r <= p.length() + 1; ++r) {
      if (r == 1 || p.row(r - 1) > p.row(r)) out.push_back({u + 1, r, p.row(r) + 1});
    }
  }
  return out;
}

std::vector<NodeRef> addable_nodes(const FockContext& ctx, const Multipartition& mp, int i) {
  std::vector<NodeRef> out;
  for (int u = 0; u < mp.level(); ++u) {
    const Partition& p = mp[u];
    for (int r = 1; r <= p.length() + 1; ++r) {
      if (r == 1 || p.row(r - 1) > p.row(r)) {
        NodeRef n{u + 1, r, p.row(r) + 1};
        if (residue(ctx, n) == i) out.push_back(n);
      }
    }
  }
  return out;
}

std::vector<NodeRef> removable_nodes(const FockContext& ctx, const Multipartition& mp, int i) {
  std::vector<NodeRef> out;
  for (int u = 0; u < mp.level(); ++u) {
    const Partition& p = mp[u];
    for (int r = 1; r <= p.length(); ++r) {
      if (p.row(r) > p.row(r + 1)) {
        NodeRef n{u + 1, r, p.row(r)};
        if (residue(ctx, n) == i) out.push_back(n);
      }
    }
  }
  return out;
}

Multipartition add_node(const Multipartition& mp, const NodeRef& node) {
  Multipartition out = mp;
  out[node.component - 1] = mp[node.component - 1].with_box_added(node.row);
  return out;
}

Multipartition remove_node(const Multipartition& mp, const NodeRef& node) {
  Multipartition out = mp;
  out[node.component - 1] = mp[node.component - 1].with_box_removed(node.row);
  return out;
}

std::vector<int> content(const FockContext& ctx, const Multipartition& mp) {
  std::vector<int> c(static_cast<std::size_t>(ctx.e()), 0);
  for (int u = 0; u < mp.level(); ++u) {
    const Partition& p = mp[u];
    for (int r = 1; r <= p.length(); ++r) {
      for (int col = 1; col <= p.row(r); ++col) ++c[static_cast<std::size_t>(residue(ctx, {u + 1, r, col}))];
    }
  }
  return c;
}

FockVector::FockVector(const Multipartition& mp) { terms_.emplace(mp, LaurentPoly(1)); }

LaurentPoly FockVector::coeff(const Multipartition& mp) const {
  auto it = terms_.find(mp);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void FockVector::add(const Multipartition& mp, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mp, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FockVector& FockVector::operator+=(const FockVector& rhs) {
  for (const auto& [mp, c] : rhs.terms_) add(mp, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& rhs) {
  for (const auto& [mp, c] : rhs.terms_) add(mp, -c);
  return *this;
}

FockVector FockVector::scaled(const LaurentPoly& c) const {
  FockVector out;
  if (c.is_zero()) return out;
  for (const auto& [mp, coef] : terms_) out.terms_.emplace_hint(out.terms_.end(), mp, coef * c);
  return out;
}

FockVector FockVector::divided(const LaurentPoly& c) const {
  FockVector out;
  for (const auto& [mp, coef] : terms_) out.terms_.emplace_hint(out.terms_.end(), mp, exact_div(coef, c));
  return out;
}

std::string FockVector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    const auto& c = it->second;
    if (c != LaurentPoly(1)) os << "(" << c.to_string() << ")";
    os << it->first.to_string();
  }
  return os.str();
}

FockVector apply_f(const FockContext& ctx, const FockVector& vec, int i) {
  FockVector out;
  for (const auto& [mp, coef] : vec.terms()) {
    const auto add = addable_nodes(ctx, mp, i);
    const auto rem = removable_nodes(ctx, mp, i);
    std::size_t ri = 0;
    for (std::size_t ai = 0; ai < add.size(); ++ai) {
      while (ri < rem.size() && rem[ri] < add[ai]) ++ri;
      const int n = static_cast<int>(ai) - static_cast<int>(ri);
      out.add(add_node(mp, add[ai]), coef.shifted(n));
    }
  }
  return out;
}

FockVector apply_e(const FockContext& ctx, const FockVector& vec, int i) {
  FockVector out;
  for (const auto& [mp, coef] : vec.terms()) {
    const auto add = addable_nodes(ctx, mp, i);
    const auto rem = removable_nodes(ctx, mp, i);
    for (std::size_t ri = 0; ri < rem.size(); ++ri) {
      const auto add_below = std::count_if(add.begin(), add.end(), [&](const NodeRef& n) { return rem[ri] < n; });
      const int m = static_cast<int>(add_below) - static_cast<int>(rem.size() - ri - 1);
      out.add(remove_node(mp, rem[ri]), coef.shifted(-m));
    }
  }
  return out;
}

FockVector apply_f_divided(const FockContext& ctx, const FockVector& vec, int i, int k) {
  if (k < 0) throw std::invalid_argument("apply_f_divided: negative multiplicity");
  FockVector out = vec;
  for (int step = 0; step < k; ++step) out = apply_f(ctx, out, i);
  return k <= 1 ? out : out.divided(qfact(k));
}

FockVector apply_f_divided_direct(const FockContext& ctx, const FockVector& vec, int i, int k) {
  if (k < 0) throw std::invalid_argument("apply_f_divided_direct: negative multiplicity");
  if (k == 0) return vec;
  FockVector out;
  std::vector<int> pick;
  for (const auto& [mp, coef] : vec.terms()) {
    const auto add = addable_nodes(ctx, mp, i);
    const auto rem = removable_nodes(ctx, mp, i);
    const int c = static_cast<int>(add.size());
    if (c < k) continue;
    // removable i-nodes strictly above each addable node
    std::vector<int> rem_above(add.size());
    for (std::size_t ai = 0; ai < add.size(); ++ai) {
      rem_above[ai] = static_cast<int>(
          std::count_if(rem.begin(), rem.end(), [&](const NodeRef& n) { return n < add[ai]; }));
    }
    pick.resize(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) pick[static_cast<std::size_t>(j)] = j;
    while (true) {
      // exponent: for each chosen node, unchosen addable nodes above minus removables above
      int exponent = 0;
      for (int j = 0; j < k; ++j) {
        const int pos = pick[static_cast<std::size_t>(j)];
        exponent += (pos - j) - rem_above[static_cast<std::size_t>(pos)];
      }
      Multipartition lam = mp;
      for (int j = 0; j < k; ++j) lam = add_node(lam, add[static_cast<std::size_t>(pick[static_cast<std::size_t>(j)])]);
      out.add(lam, coef.shifted(exponent));
      int j = k - 1;
      while (j >= 0 && pick[static_cast<std::size_t>(j)] == c - k + j) --j;
      if (j < 0) break;
      ++pick[static_cast<std::size_t>(j)];
      for (int t = j + 1; t < k; ++t) pick[static_cast<std::size_t>(t)] = pick[static_cast<std::size_t>(t - 1)] + 1;
    }
  }
  return out;
}

}  // namespace kcb
