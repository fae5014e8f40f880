#include "kcb/io.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "kcb/closed_form.hpp"

namespace kcb {

Json to_json(const LaurentPoly& p) {
  Json j = Json::object();
  for (const auto& [e, c] : p.terms()) {
    if (!c.fits_slong_p()) throw std::overflow_error("coefficient does not fit in a JSON integer");
    j[std::to_string(e)] = c.get_si();
  }
  return j;
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("LaurentPoly JSON must be an object");
  LaurentPoly p;
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    const int e = std::stoi(key, &used);
    if (used != key.size() || !value.is_number_integer()) throw std::invalid_argument("bad LaurentPoly term " + key);
    p += LaurentPoly::monomial(e, Integer(value.get<long>()));
  }
  return p;
}

Json to_json(const Multipartition& mp) {
  Json j = Json::array();
  for (const auto& p : mp.components) j.push_back(p.rows());
  return j;
}

Multipartition multipartition_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("multipartition must be an array of arrays");
  Multipartition mp;
  for (const auto& comp : j) {
    if (!comp.is_array()) throw std::invalid_argument("multipartition must be an array of arrays");
    std::vector<int> rows;
    for (const auto& r : comp) {
      if (!r.is_number_integer()) throw std::invalid_argument("row lengths must be integers");
      rows.push_back(r.get<int>());
    }
    mp.components.emplace_back(std::move(rows));
  }
  return mp;
}

Multipartition parse_multipartition(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("cannot parse multipartition literal: " + std::string(e.what()));
  }
  return multipartition_from_json(j);
}

Json to_json(const FockContext& ctx) { return Json{{"e", ctx.e()}, {"charges", ctx.charges()}}; }

FockContext context_from_json(const Json& j) {
  return FockContext(j.at("e").get<int>(), j.at("charges").get<std::vector<int>>());
}

namespace {

// Sum of prefix sums with every component padded to the total size; strictly
// larger for a strictly dominating multipartition of the same size.
long dominance_key(const Multipartition& mp) {
  const int n = mp.size();
  long acc = 0;
  long key = 0;
  for (const auto& p : mp.components) {
    for (int r = 1; r <= n; ++r) {
      acc += p.row(r);
      key += acc;
    }
  }
  return key;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

std::vector<std::pair<Multipartition, LaurentPoly>> sorted_terms(const FockVector& vec) {
  std::vector<std::tuple<long, Multipartition, LaurentPoly>> keyed;
  for (const auto& [mp, c] : vec.terms()) keyed.emplace_back(dominance_key(mp), mp, c);
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    if (std::get<0>(x) != std::get<0>(y)) return std::get<0>(x) > std::get<0>(y);
    return std::get<1>(x) > std::get<1>(y);
  });
  std::vector<std::pair<Multipartition, LaurentPoly>> out;
  out.reserve(keyed.size());
  for (auto& [key, mp, c] : keyed) out.emplace_back(std::move(mp), std::move(c));
  return out;
}

Json to_json(const FockVector& vec) {
  Json j = Json::array();
  for (const auto& [mp, c] : sorted_terms(vec)) j.push_back({{"multipartition", to_json(mp)}, {"coefficient", to_json(c)}});
  return j;
}

FockVector fock_vector_from_json(const Json& j) {
  FockVector vec;
  for (const auto& t : j) vec.add(multipartition_from_json(t.at("multipartition")), laurent_from_json(t.at("coefficient")));
  return vec;
}

Json to_json(const CanonicalElement& g) {
  return Json{{"label", to_json(g.label)}, {"defect", g.defect}, {"shape", g.shape}, {"terms", to_json(g.vector)}};
}

CanonicalElement canonical_from_json(const Json& j) {
  CanonicalElement g;
  g.label = multipartition_from_json(j.at("label"));
  g.defect = j.at("defect").get<int>();
  g.shape = j.at("shape").get<std::vector<long>>();
  g.vector = fock_vector_from_json(j.at("terms"));
  return g;
}

Json to_json(const WeightInfo& w) {
  return Json{{"content", w.content}, {"hub", w.hub}, {"defect", w.defect}, {"label", hub_label(w)}};
}

Json to_json(const CrystalGraph& g) {
  Json verts = Json::array();
  for (const auto& v : g.vertices()) {
    verts.push_back({{"multipartition", to_json(v.mp)}, {"degree", v.degree}, {"weight", to_json(v.weight)}});
  }
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({{"from", e.from}, {"to", e.to}, {"residue", e.residue}});
  return Json{{"context", to_json(g.context())}, {"max_degree", g.max_degree()}, {"vertices", verts}, {"edges", edges}};
}

Json to_json(const BlockReducedGraph& g) {
  Json verts = Json::array();
  for (const auto& [c, w] : g.vertices()) {
    Json v = to_json(w);
    v["dimension"] = g.dimensions().at(c);
    verts.push_back(std::move(v));
  }
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({{"from", e.from}, {"to", e.to}, {"residue", e.residue}});
  return Json{{"context", to_json(g.context())}, {"max_degree", g.max_degree()}, {"vertices", verts}, {"edges", edges}};
}

std::string hub_label(const WeightInfo& w) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < w.hub.size(); ++i) out << (i ? "," : "") << w.hub[i];
  out << "]^" << w.defect;
  return out.str();
}

namespace {

std::string content_id(const Content& c) {
  std::string s = "w";
  for (int x : c) s += "_" + std::to_string(x);
  return s;
}

}  // namespace

std::string to_dot(const BlockReducedGraph& g) {
  std::ostringstream out;
  out << "digraph block_reduced {\n";
  for (const auto& [c, w] : g.vertices()) out << "  " << content_id(c) << " [label=\"" << hub_label(w) << "\"];\n";
  for (const auto& e : g.edges()) {
    out << "  " << content_id(e.from) << " -> " << content_id(e.to) << " [label=\"" << e.residue << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const CrystalGraph& g) {
  std::ostringstream out;
  out << "digraph crystal {\n";
  for (std::size_t v = 0; v < g.vertices().size(); ++v) {
    out << "  v" << v << " [label=\"" << g.vertices()[v].mp.to_string() << "\"];\n";
  }
  for (const auto& e : g.edges()) out << "  v" << e.from << " -> v" << e.to << " [label=\"" << e.residue << "\"];\n";
  out << "}\n";
  return out.str();
}

Json shape_table_json(int a) {
  Json rows = Json::array();
  for (int k = 0; k <= a; ++k) rows.push_back({{"k", k}, {"shape", shape_row(a, k)}});
  return Json{{"a", a}, {"rows", rows}};
}

std::string shape_table_text(int a) {
  int width = 1;
  std::size_t cols = 0;
  for (int k = 0; k <= a; ++k) {
    const auto row = shape_row(a, k);
    cols = std::max(cols, row.size());
    for (long x : row) width = std::max(width, static_cast<int>(std::to_string(x).size()));
  }
  std::ostringstream out;
  out << "k\\l";
  for (std::size_t l = 0; l < cols; ++l) out << ' ' << std::setw(width) << l;
  out << '\n';
  for (int k = 0; k <= a; ++k) {
    out << std::setw(3) << k;
    for (long x : shape_row(a, k)) out << ' ' << std::setw(width) << x;
    out << '\n';
  }
  return out.str();
}

DiskCache::DiskCache(std::filesystem::path dir) : dir_(std::move(dir)) { std::filesystem::create_directories(dir_); }

std::optional<DiskCache> DiskCache::from_env() {
  const char* dir = std::getenv("KCB_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return DiskCache(dir);
}

std::filesystem::path DiskCache::path_for(const FockContext& ctx, const Multipartition& mu) const {
  const std::string key = to_json(ctx).dump() + to_json(mu).dump();
  std::ostringstream name;
  name << std::hex << std::setw(16) << std::setfill('0') << fnv1a(key) << ".json";
  return dir_ / name.str();
}

std::size_t DiskCache::load_into(CanonicalBasis& basis) const {
  const Json want = to_json(basis.context());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir_)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::size_t loaded = 0;
  for (const auto& f : files) {
    std::ifstream in(f);
    const Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.contains("context") || j["context"] != want) continue;
    basis.seed(canonical_from_json(j.at("element")));
    ++loaded;
  }
  return loaded;
}

std::size_t DiskCache::store_from(const CanonicalBasis& basis) const {
  std::size_t written = 0;
  for (const auto& g : basis.cached()) {
    const auto path = path_for(basis.context(), g.label);
    if (std::filesystem::exists(path)) continue;
    const auto tmp = std::filesystem::path(path).concat(".tmp");
    {
      std::ofstream out(tmp);
      out << Json{{"context", to_json(basis.context())}, {"element", to_json(g)}}.dump() << '\n';
    }
    std::filesystem::rename(tmp, path);
    ++written;
  }
  return written;
}

}  // namespace kcb
