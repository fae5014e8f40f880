#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "kcb/fock.hpp"

namespace kcb {

/// Raised when a multipartition is not a vertex of the crystal B(Lambda).
class NotInCrystal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Content = std::vector<int>;

/// Reduced i-signature of mp read bottom-to-top after cancelling every "-+".
struct Signature {
  std::vector<NodeRef> plus;   // surviving addable nodes, bottom to top
  std::vector<NodeRef> minus;  // surviving removable nodes, bottom to top
};

Signature reduced_signature(const FockContext& ctx, const Multipartition& mp, int i);

/// Adds the i-cogood node (rightmost surviving +), if any.
std::optional<Multipartition> f_tilde(const FockContext& ctx, const Multipartition& mp, int i);
/// Removes the i-good node (leftmost surviving -), if any.
std::optional<Multipartition> e_tilde(const FockContext& ctx, const Multipartition& mp, int i);

/// Content, hub h = a - C c and defect a.c - c.C.c / 2 of the weight Lambda - sum c_i alpha_i.
struct WeightInfo {
  Content content;
  std::vector<int> hub;
  int defect = 0;

  friend bool operator==(const WeightInfo&, const WeightInfo&) = default;
};

/// Affine type A Cartan matrix of rank e (e = 2 gives [[2,-2],[-2,2]]).
std::vector<std::vector<int>> cartan_matrix(int e);
WeightInfo weight_info(const FockContext& ctx, const Content& c);

struct CrystalVertex {
  Multipartition mp;
  WeightInfo weight;
  int degree = 0;
};

struct CrystalEdge {
  std::size_t from;
  std::size_t to;
  int residue;

  friend bool operator==(const CrystalEdge&, const CrystalEdge&) = default;
};

/// Vertices in degree order (within a degree, sorted by multipartition); edges are f~_i arrows.
class CrystalGraph {
 public:
  CrystalGraph(FockContext ctx, int max_degree) : ctx_(std::move(ctx)), max_degree_(max_degree) {}

  const FockContext& context() const { return ctx_; }
  int max_degree() const { return max_degree_; }
  const std::vector<CrystalVertex>& vertices() const { return vertices_; }
  const std::vector<CrystalEdge>& edges() const { return edges_; }
  std::optional<std::size_t> find(const Multipartition& mp) const;
  /// Vertices whose content equals c.
  std::vector<std::size_t> at_content(const Content& c) const;

  std::size_t add_vertex(CrystalVertex v);
  void add_edge(CrystalEdge e) { edges_.push_back(e); }

 private:
  FockContext ctx_;
  int max_degree_;
  std::vector<CrystalVertex> vertices_;
  std::vector<CrystalEdge> edges_;
  std::map<Multipartition, std::size_t> index_;
  std::map<Content, std::vector<std::size_t>> by_content_;
};

/// Breadth-first closure of the highest weight vector under f~_i up to max_degree.
/// jobs > 1 expands each frontier on worker threads; the result is identical.
CrystalGraph generate_crystal(const FockContext& ctx, int max_degree, int jobs = 1);

/// Quotient of a crystal graph by content.
class BlockReducedGraph {
 public:
  struct Edge {
    Content from;
    Content to;
    int residue;
    friend auto operator<=>(const Edge&, const Edge&) = default;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  BlockReducedGraph(FockContext ctx, int max_degree) : ctx_(std::move(ctx)), max_degree_(max_degree) {}

  const FockContext& context() const { return ctx_; }
  int max_degree() const { return max_degree_; }
  const std::map<Content, WeightInfo>& vertices() const { return vertices_; }
  const std::set<Edge>& edges() const { return edges_; }
  bool contains(const Content& c) const { return vertices_.count(c) > 0; }
  const WeightInfo& info(const Content& c) const;
  /// Number of crystal vertices at each weight.
  const std::map<Content, int>& dimensions() const { return dims_; }

  void add_vertex(const WeightInfo& w) {
    vertices_.emplace(w.content, w);
    ++dims_[w.content];
  }
  void add_edge(Edge e) { edges_.insert(std::move(e)); }

 private:
  FockContext ctx_;
  int max_degree_;
  std::map<Content, WeightInfo> vertices_;
  std::map<Content, int> dims_;
  std::set<Edge> edges_;
};

BlockReducedGraph block_reduced(const CrystalGraph& g);

/// True iff some raising direction leaves the weight set: content - e_i is not a vertex for some i.
/// Throws std::invalid_argument if content is not a vertex of g.
bool is_external(const BlockReducedGraph& g, const Content& content);

struct PathStep {
  int residue;
  int multiplicity;
  friend bool operator==(const PathStep&, const PathStep&) = default;
};

/// Peels maximal e~_i strings (smallest residue with a good node first) back to the
/// highest weight vector; returned in f~ order. Throws NotInCrystal if mp is not a vertex.
std::vector<PathStep> residue_collected_path(const FockContext& ctx, const Multipartition& mp);

/// Replays a residue-collected path with f~; throws NotInCrystal if a step is undefined.
Multipartition follow_path(const FockContext& ctx, const std::vector<PathStep>& path);

}  // namespace kcb
