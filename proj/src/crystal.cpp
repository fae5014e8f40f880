#include "kcb/crystal.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

namespace kcb {

Signature reduced_signature(const FockContext& ctx, const Multipartition& mp, int i) {
  auto add = addable_nodes(ctx, mp, i);
  auto rem = removable_nodes(ctx, mp, i);
  // merge into one top-to-bottom list, then read it backwards
  struct Sign {
    NodeRef node;
    bool addable;
  };
  std::vector<Sign> seq;
  seq.reserve(add.size() + rem.size());
  std::size_t a = 0;
  std::size_t r = 0;
  while (a < add.size() || r < rem.size()) {
    if (r == rem.size() || (a < add.size() && add[a] < rem[r])) {
      seq.push_back({add[a++], true});
    } else {
      seq.push_back({rem[r++], false});
    }
  }
  Signature sig;
  std::vector<NodeRef> open_minus;  // unmatched '-' in bottom-to-top reading
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    if (it->addable) {
      if (!open_minus.empty()) {
        open_minus.pop_back();
      } else {
        sig.plus.push_back(it->node);
      }
    } else {
      open_minus.push_back(it->node);
    }
  }
  sig.minus = std::move(open_minus);
  return sig;
}

std::optional<Multipartition> f_tilde(const FockContext& ctx, const Multipartition& mp, int i) {
  auto sig = reduced_signature(ctx, mp, i);
  if (sig.plus.empty()) return std::nullopt;
  return add_node(mp, sig.plus.back());
}

std::optional<Multipartition> e_tilde(const FockContext& ctx, const Multipartition& mp, int i) {
  auto sig = reduced_signature(ctx, mp, i);
  if (sig.minus.empty()) return std::nullopt;
  return remove_node(mp, sig.minus.front());
}

std::vector<std::vector<int>> cartan_matrix(int e) {
  std::vector<std::vector<int>> c(static_cast<std::size_t>(e), std::vector<int>(static_cast<std::size_t>(e), 0));
  for (int i = 0; i < e; ++i) {
    c[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
    c[static_cast<std::size_t>(i)][static_cast<std::size_t>((i + 1) % e)] -= 1;
    c[static_cast<std::size_t>(i)][static_cast<std::size_t>((i + e - 1) % e)] -= 1;
  }
  return c;
}

WeightInfo weight_info(const FockContext& ctx, const Content& c) {
  const int e = ctx.e();
  if (static_cast<int>(c.size()) != e) throw std::invalid_argument("weight_info: content length must equal e");
  const auto cm = cartan_matrix(e);
  const auto& a = ctx.highest_weight();
  WeightInfo w;
  w.content = c;
  w.hub.resize(static_cast<std::size_t>(e));
  long quad = 0;
  long lin = 0;
  for (std::size_t i = 0; i < static_cast<std::size_t>(e); ++i) {
    if (c[i] < 0) throw std::invalid_argument("weight_info: negative content");
    long cc = 0;
    for (std::size_t j = 0; j < static_cast<std::size_t>(e); ++j) cc += cm[i][j] * c[j];
    w.hub[i] = a[i] - static_cast<int>(cc);
    quad += c[i] * cc;
    lin += static_cast<long>(a[i]) * c[i];
  }
  w.defect = static_cast<int>(lin - quad / 2);
  return w;
}

std::optional<std::size_t> CrystalGraph::find(const Multipartition& mp) const {
  auto it = index_.find(mp);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> CrystalGraph::at_content(const Content& c) const {
  auto it = by_content_.find(c);
  return it == by_content_.end() ? std::vector<std::size_t>{} : it->second;
}

std::size_t CrystalGraph::add_vertex(CrystalVertex v) {
  const std::size_t id = vertices_.size();
  index_.emplace(v.mp, id);
  by_content_[v.weight.content].push_back(id);
  vertices_.push_back(std::move(v));
  return id;
}

namespace {

struct Expansion {
  std::size_t from;
  int residue;
  Multipartition to;
};

std::vector<Expansion> expand(const FockContext& ctx, const std::vector<CrystalVertex>& verts,
                              std::size_t begin, std::size_t end) {
  std::vector<Expansion> out;
  for (std::size_t v = begin; v < end; ++v) {
    for (int i = 0; i < ctx.e(); ++i) {
      if (auto next = f_tilde(ctx, verts[v].mp, i)) out.push_back({v, i, std::move(*next)});
    }
  }
  return out;
}

}  // namespace

CrystalGraph generate_crystal(const FockContext& ctx, int max_degree, int jobs) {
  if (max_degree < 0) throw std::invalid_argument("generate_crystal: negative degree bound");
  CrystalGraph g(ctx, max_degree);
  const Multipartition top = ctx.highest_weight_vector();
  g.add_vertex({top, weight_info(ctx, content(ctx, top)), 0});
  std::size_t frontier_begin = 0;
  for (int degree = 1; degree <= max_degree; ++degree) {
    const std::size_t frontier_end = g.vertices().size();
    std::vector<Expansion> found;
    const std::size_t n = frontier_end - frontier_begin;
    if (jobs <= 1 || n < 64) {
      found = expand(ctx, g.vertices(), frontier_begin, frontier_end);
    } else {
      const std::size_t chunk = (n + static_cast<std::size_t>(jobs) - 1) / static_cast<std::size_t>(jobs);
      std::vector<std::future<std::vector<Expansion>>> parts;
      for (std::size_t b = frontier_begin; b < frontier_end; b += chunk) {
        parts.push_back(std::async(std::launch::async, expand, std::cref(ctx), std::cref(g.vertices()), b,
                                   std::min(frontier_end, b + chunk)));
      }
      for (auto& p : parts) {
        auto chunk_found = p.get();
        found.insert(found.end(), std::make_move_iterator(chunk_found.begin()),
                     std::make_move_iterator(chunk_found.end()));
      }
    }
    std::set<Multipartition> fresh;
    for (const auto& ex : found) fresh.insert(ex.to);
    for (const auto& mp : fresh) g.add_vertex({mp, weight_info(ctx, content(ctx, mp)), degree});
    for (const auto& ex : found) g.add_edge({ex.from, *g.find(ex.to), ex.residue});
    frontier_begin = frontier_end;
  }
  return g;
}

const WeightInfo& BlockReducedGraph::info(const Content& c) const {
  auto it = vertices_.find(c);
  if (it == vertices_.end()) throw std::invalid_argument("BlockReducedGraph: unknown weight");
  return it->second;
}

BlockReducedGraph block_reduced(const CrystalGraph& g) {
  BlockReducedGraph b(g.context(), g.max_degree());
  for (const auto& v : g.vertices()) b.add_vertex(v.weight);
  for (const auto& e : g.edges()) {
    b.add_edge({g.vertices()[e.from].weight.content, g.vertices()[e.to].weight.content, e.residue});
  }
  return b;
}

bool is_external(const BlockReducedGraph& g, const Content& content) {
  if (!g.contains(content)) throw std::invalid_argument("is_external: weight is not a vertex");
  for (std::size_t i = 0; i < content.size(); ++i) {
    Content up = content;
    --up[i];
    if (up[i] < 0 || !g.contains(up)) return true;
  }
  return false;
}

std::vector<PathStep> residue_collected_path(const FockContext& ctx, const Multipartition& mp) {
  if (mp.level() != ctx.level()) throw std::invalid_argument("residue_collected_path: level mismatch");
  std::vector<PathStep> rev;
  Multipartition cur = mp;
  while (cur.size() > 0) {
    bool moved = false;
    for (int i = 0; i < ctx.e() && !moved; ++i) {
      int k = 0;
      while (auto up = e_tilde(ctx, cur, i)) {
        cur = std::move(*up);
        ++k;
      }
      if (k > 0) {
        rev.push_back({i, k});
        moved = true;
      }
    }
    if (!moved) throw NotInCrystal(mp.to_string() + " is not in the crystal of the highest weight vector");
  }
  return {rev.rbegin(), rev.rend()};
}

Multipartition follow_path(const FockContext& ctx, const std::vector<PathStep>& path) {
  Multipartition cur = ctx.highest_weight_vector();
  for (const auto& step : path) {
    for (int j = 0; j < step.multiplicity; ++j) {
      auto next = f_tilde(ctx, cur, step.residue);
      if (!next) throw NotInCrystal("path leaves the crystal at " + cur.to_string());
      cur = std::move(*next);
    }
  }
  return cur;
}

}  // namespace kcb
