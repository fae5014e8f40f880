#include "kcb/closed_form.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>

namespace kcb {

ChoiceSequence::ChoiceSequence(std::vector<int> b) : bits(std::move(b)) {
  for (int x : bits) {
    if (x != 0 && x != 1) throw std::invalid_argument("ChoiceSequence: entries must be 0 or 1");
  }
}

int ChoiceSequence::weight() const { return static_cast<int>(std::count(bits.begin(), bits.end(), 1)); }

std::vector<int> ChoiceSequence::positions(int x) const {
  std::vector<int> out;
  for (int p = 1; p <= length(); ++p) {
    if (at(p) == x) out.push_back(p);
  }
  return out;
}

ChoiceSequence ChoiceSequence::slice(int from, int count) const {
  if (from < 1 || count < 0 || from - 1 + count > length()) throw std::out_of_range("ChoiceSequence::slice");
  auto first = bits.begin() + (from - 1);
  return ChoiceSequence(std::vector<int>(first, first + count));
}

ChoiceSequence ChoiceSequence::single_zero(int length, int j) {
  if (j < 1 || j > length) throw std::out_of_range("single_zero: position out of range");
  std::vector<int> b(static_cast<std::size_t>(length), 1);
  b[static_cast<std::size_t>(j - 1)] = 0;
  return ChoiceSequence(std::move(b));
}

ChoiceSequence ChoiceSequence::single_one(int length, int j) {
  if (j < 1 || j > length) throw std::out_of_range("single_one: position out of range");
  std::vector<int> b(static_cast<std::size_t>(length), 0);
  b[static_cast<std::size_t>(j - 1)] = 1;
  return ChoiceSequence(std::move(b));
}

std::string ChoiceSequence::to_string() const {
  std::string s = "(";
  for (std::size_t p = 0; p < bits.size(); ++p) {
    if (p) s += ',';
    s += static_cast<char>('0' + bits[p]);
  }
  return s + ")";
}

int inv(const ChoiceSequence& s) {
  int zeros = 0;
  int total = 0;
  for (int x : s.bits) {
    if (x == 0) {
      ++zeros;
    } else {
      total += zeros;
    }
  }
  return total;
}

std::vector<ChoiceSequence> choice_sequences(int c, int k) {
  if (c < 0 || k < 0 || k > c) throw std::invalid_argument("choice_sequences: need 0 <= k <= c");
  std::vector<int> bits(static_cast<std::size_t>(c), 0);
  std::fill(bits.begin(), bits.begin() + k, 1);
  // prev_permutation walks 1...10...0 down to 0...01...1 in lexicographic order
  std::vector<ChoiceSequence> out;
  do {
    out.emplace_back(bits);
  } while (std::prev_permutation(bits.begin(), bits.end()));
  return out;
}

namespace {

long shape_memo(int a, int k, int l, std::map<std::tuple<int, int, int>, long>& memo) {
  if (k < 0 || k > a || l < 0 || l > k * (a - k)) return 0;
  if (a == 1) return 1;
  auto key = std::make_tuple(a, k, l);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const long v = shape_memo(a - 1, k - 1, l, memo) + shape_memo(a - 1, k, l - k, memo);
  memo.emplace(key, v);
  return v;
}

long shape2_closed(int a, int l) {
  if (a < 2 || l < 0 || l > 2 * (a - 2)) return 0;
  return (a - std::abs(l - (a - 2))) / 2;
}

}  // namespace

long shape_fn(int a, int k, int l) {
  if (a < 1 || k < 0 || k > a) throw std::invalid_argument("shape_fn: need a >= 1 and 0 <= k <= a");
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, long> memo;
  std::lock_guard lock(mutex);
  return shape_memo(a, k, l, memo);
}

std::vector<long> shape_row(int a, int k) {
  std::vector<long> row;
  for (int l = 0; l <= k * (a - k); ++l) row.push_back(shape_fn(a, k, l));
  return row;
}

long shape_fn_closed(int a, int k, int l) {
  if (k < 1 || k > 3) throw std::invalid_argument("shape_fn_closed: closed forms exist for k = 1, 2, 3 only");
  if (a < k) throw std::invalid_argument("shape_fn_closed: need a >= k");
  if (l < 0 || l > k * (a - k)) return 0;
  switch (k) {
    case 1:
      return 1;
    case 2:
      return shape2_closed(a, l);
    default: {
      long total = 0;
      for (int t = 1; t <= l / 3 + 1; ++t) total += shape2_closed(a - t, l - 3 * (t - 1));
      return total;
    }
  }
}

int defect_top_row(int a, int b, int k, int i) {
  if (i != 0 && i != 1) throw std::invalid_argument("defect_top_row: residue must be 0 or 1");
  const int bound = i == 0 ? a : b;
  if (k < 0 || k > bound) throw std::invalid_argument("defect_top_row: k out of range");
  return k * (bound - k);
}

std::set<int> defect_congruences(int a) {
  if (a < 1) throw std::invalid_argument("defect_congruences: need a >= 1");
  std::set<int> out;
  for (int k = 0; k <= a; ++k) out.insert(k * (a - k) % (2 * a));
  return out;
}

Multipartition tau(int a, int i, int n, const ChoiceSequence& s) {
  if (a < 1 || (i != 0 && i != 1) || n < 0) throw std::invalid_argument("tau: bad parameters");
  if (s.length() != a) throw std::invalid_argument("tau: choice sequence must have length a");
  Multipartition mp = Multipartition::empty(2 * a);
  for (int u = 1; u <= 2 * a; ++u) {
    const int local = u - i * a;
    if (local >= 1 && local <= a) {
      mp[u - 1] = triangular(s.at(local) ? n + 1 : n - 1);
    } else {
      mp[u - 1] = triangular(n);
    }
  }
  return mp;
}

namespace {

CanonicalElement assemble(const FockContext& ctx, const FockVector& vec) {
  CanonicalElement g;
  std::vector<Multipartition> labels;
  for (const auto& [mp, c] : vec.terms()) {
    if (c == LaurentPoly(1)) labels.push_back(mp);
  }
  if (labels.size() != 1) {
    throw std::logic_error("closed form has " + std::to_string(labels.size()) + " terms with coefficient 1");
  }
  g.label = labels.front();
  g.vector = vec;
  g.defect = weight_info(ctx, content(ctx, g.label)).defect;
  g.shape = shape_of(vec);
  return g;
}

}  // namespace

CanonicalElement closed_canonical_weyl(int a, int i, int k, int n) {
  if (k < 0 || k > a) throw std::invalid_argument("closed_canonical_weyl: need 0 <= k <= a");
  FockVector vec;
  for (const auto& s : choice_sequences(a, k)) vec.add(tau(a, i, n, s), LaurentPoly::monomial(inv(s)));
  return assemble(FockContext::symmetric(a), vec);
}

CanonicalElement closed_canonical_top(int a, int i, int k) { return closed_canonical_weyl(a, i, k, 0); }

std::optional<FockVector> choice_tree_sum(const FockContext& ctx, const std::vector<PathStep>& path, int m) {
  FockVector current(ctx.highest_weight_vector());
  for (std::size_t step = 0; step < path.size(); ++step) {
    const int i = path[step].residue;
    const int k = path[step].multiplicity;
    FockVector next;
    for (const auto& [mp, coeff] : current.terms()) {
      const auto nodes = addable_nodes(ctx, mp, i);
      const int c = static_cast<int>(nodes.size());
      if (c < k) return std::nullopt;
      if (static_cast<int>(step) >= m && c != k) return std::nullopt;
      for (const auto& s : choice_sequences(c, k)) {
        Multipartition out = mp;
        for (int p : s.positions(1)) out = add_node(out, nodes[static_cast<std::size_t>(p - 1)]);
        next.add(out, coeff.shifted(inv(s)));
      }
    }
    current = std::move(next);
  }
  return current;
}

}  // namespace kcb

// ---------------------------------------------------------------------------
// Case tables

namespace kcb {

std::string family_name(Family f) {
  switch (f) {
    case Family::TopRow: return "top-row";
    case Family::WeylN: return "weyl-n";
    case Family::P0k1: return "p0k1";
    case Family::P10k: return "p10k";
    case Family::P010k: return "p010k";
    case Family::PGen0k1s: return "P-0k1s";
    case Family::PGen10k1s: return "P-10k1s";
    case Family::PGen010k1s: return "P-010k1s";
  }
  return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
  for (Family f : {Family::TopRow, Family::WeylN, Family::P0k1, Family::P10k, Family::P010k, Family::PGen0k1s,
                   Family::PGen10k1s, Family::PGen010k1s}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

namespace {

// The symmetric level-2a context seen from residue i: the i-corner block is
// where the family's first residue starts (components 1..a unless dual).
struct Frame {
  int a;
  int i;
  int ip;
  FockContext ctx;

  explicit Frame(const FamilySpec& spec)
      : a(spec.a), i(spec.dual ? 1 : 0), ip(spec.dual ? 0 : 1), ctx(FockContext::symmetric(spec.a)) {}

  bool in_i(int u) const { return (u - 1) / a == i; }
  // 1-based position of component u inside its block.
  int local(int u) const { return (u - 1) % a + 1; }
  int component(int block, int pos) const { return block * a + pos; }

  std::vector<NodeRef> nodes(const Multipartition& mp, int residue) const { return addable_nodes(ctx, mp, residue); }
};

// Component of the j-th node of a list, 0 when j is past the end.
int u_of(const std::vector<NodeRef>& nodes, int j) {
  if (j < 1 || j > static_cast<int>(nodes.size())) return 0;
  return nodes[static_cast<std::size_t>(j - 1)].component;
}

// j counted from the first node of its block, so parities read the same in the dual.
int block_relative(const Frame& f, const std::vector<NodeRef>& nodes, int j) {
  const int u = u_of(nodes, j);
  if (u == 0) return j;
  int before = 0;
  for (int p = 1; p < j; ++p) {
    if (f.in_i(u_of(nodes, p)) != f.in_i(u)) ++before;
  }
  return j - before;
}

// Bits of s on nodes lying in component u, in list order.
ChoiceSequence bits_in(const ChoiceSequence& s, const std::vector<NodeRef>& nodes, int u) {
  std::vector<int> out;
  for (std::size_t p = 0; p < nodes.size(); ++p) {
    if (nodes[p].component == u) out.push_back(s.bits[p]);
  }
  return ChoiceSequence(std::move(out));
}

// Bit of s for the (unique) node of component u, 0 if u has no node in the list.
int bit_at(const ChoiceSequence& s, const std::vector<NodeRef>& nodes, int u) {
  for (std::size_t p = 0; p < nodes.size(); ++p) {
    if (nodes[p].component == u) return s.bits[p];
  }
  return 0;
}

Multipartition with_nodes(Multipartition mp, const ChoiceSequence& s, const std::vector<NodeRef>& nodes) {
  for (int p : s.positions(1)) mp = add_node(mp, nodes[static_cast<std::size_t>(p - 1)]);
  return mp;
}

int single(const ChoiceSequence& s, int x, const char* what) {
  const auto pos = s.positions(x);
  if (pos.size() != 1) throw std::invalid_argument(std::string(what) + " must have exactly one " + (x ? "1" : "0"));
  return pos.front();
}

void expect_choices(const FamilySpec& spec, std::size_t lo, std::size_t hi) {
  if (spec.choices.size() < lo || spec.choices.size() > hi) {
    throw std::invalid_argument(family_name(spec.family) + ": wrong number of choice sequences");
  }
}

void expect_shape(const ChoiceSequence& s, int c, int k, const char* what) {
  if (s.length() != c || s.weight() != k) {
    throw std::invalid_argument(std::string(what) + " must lie in S(" + std::to_string(c) + "," + std::to_string(k) +
                                "), got " + s.to_string());
  }
}

int inv_sum(const FamilySpec& spec) {
  int total = 0;
  for (const auto& s : spec.choices) total += inv(s);
  return total;
}

Partition tri(int n) { return triangular(n); }

// tau^n_i with the block choice given per component.
Multipartition tau_from(const Frame& f, int n, const ChoiceSequence& block_bits) {
  return tau(f.a, f.i, n, block_bits);
}

// S^0 indexed by position in the i-block, read off a node list where each
// i-block component holds at most one node.
ChoiceSequence block_bits(const Frame& f, const ChoiceSequence& s, const std::vector<NodeRef>& nodes) {
  std::vector<int> out;
  for (int pos = 1; pos <= f.a; ++pos) out.push_back(bit_at(s, nodes, f.component(f.i, pos)));
  return ChoiceSequence(std::move(out));
}

const std::string& reading(const AmbiguityResolution& res, Family family, const std::string& row) {
  if (const std::string* r = res.lookup(row)) return *r;
  throw AmbiguousCase(row, flagged_rows(family).at(row));
}

// --- Lemma n = 0 -------------------------------------------------------------

FamilyTerm pi0_0k1(const Frame& f, const FamilySpec& spec) {
  expect_choices(spec, 2, 2);
  const auto& s1 = spec.choices[0];
  const auto& s2 = spec.choices[1];
  expect_shape(s1, f.a, spec.k, "S_1");
  expect_shape(s2, f.a + 2 * spec.k, 1, "S_2");
  const Multipartition base = tau(f.a, f.i, 0, s1);
  const auto nodes = f.nodes(base, f.ip);
  const int j2 = single(s2, 1, "S_2");
  const int u = u_of(nodes, j2);
  if (u == 0) throw std::invalid_argument("p0k1: j_2 out of range");
  Multipartition mp = base;
  if (f.in_i(u)) {
    mp[u - 1] = block_relative(f, nodes, j2) % 2 == 1 ? Partition{2} : Partition{1, 1};
  } else {
    mp[u - 1] = Partition{1};
  }
  return {mp, inv_sum(spec)};
}

FamilyTerm pi0_10k(const Frame& f, const FamilySpec& spec) {
  expect_choices(spec, 2, 2);
  const auto& s1 = spec.choices[0];
  const auto& s2 = spec.choices[1];
  expect_shape(s1, f.a, 1, "S_1");
  expect_shape(s2, f.a + 2, spec.k, "S_2");
  // j_1 places (1) in the i'-block; the table's "tau^0(S_1)" is that multipartition.
  const Multipartition base = tau(f.a, f.ip, 0, s1);
  const int u1 = f.component(f.ip, single(s1, 1, "S_1"));
  const auto nodes = f.nodes(base, f.i);
  const ChoiceSequence s20 = block_bits(f, s2, nodes);
  const ChoiceSequence s21 = bits_in(s2, nodes, u1);
  Multipartition mp = base;
  for (int pos = 1; pos <= f.a; ++pos) {
    if (s20.at(pos)) mp[f.component(f.i, pos) - 1] = Partition{1};
  }
  if (s21 == ChoiceSequence{1, 0}) mp[u1 - 1] = Partition{2};
  if (s21 == ChoiceSequence{0, 1}) mp[u1 - 1] = Partition{1, 1};
  if (s21 == ChoiceSequence{1, 1}) mp[u1 - 1] = tri(2);
  return {mp, inv_sum(spec)};
}

FamilyTerm pi0_010k(const Frame& f, const FamilySpec& spec) {
  expect_choices(spec, 3, 3);
  const auto& s1 = spec.choices[0];
  const auto& s2 = spec.choices[1];
  const auto& s3 = spec.choices[2];
  expect_shape(s1, f.a, 1, "S_1");
  expect_shape(s2, f.a + 2, 1, "S_2");
  const Multipartition base = tau(f.a, f.i, 0, s1);
  const int u1 = f.component(f.i, single(s1, 1, "S_1"));
  const auto nodes2 = f.nodes(base, f.ip);
  const int u2 = u_of(nodes2, single(s2, 1, "S_2"));
  const Multipartition mid = with_nodes(base, s2, nodes2);
  const auto nodes3 = f.nodes(mid, f.i);
  Multipartition mp = base;
  if (u2 == u1) {
    // j_2 <= 2: the new node sits on the (1) at j_1
    expect_shape(s3, f.a, spec.k - 1, "S_3");
    const ChoiceSequence s20 = bits_in(s2, nodes2, u1);
    const int at_j1 = bit_at(s3, nodes3, u1);
    for (int pos = 1; pos <= f.a; ++pos) {
      const int u = f.component(f.i, pos);
      if (u != u1 && bit_at(s3, nodes3, u)) mp[u - 1] = Partition{1};
    }
    if (s20 == ChoiceSequence{1, 0}) mp[u1 - 1] = at_j1 ? Partition{3} : Partition{2};
    if (s20 == ChoiceSequence{0, 1}) mp[u1 - 1] = at_j1 ? Partition{1, 1, 1} : Partition{1, 1};
  } else {
    expect_shape(s3, f.a + 1, spec.k - 1, "S_3");
    // S_3^0 skips j_1: components above it keep their index, those below shift by one.
    for (int pos = 1; pos <= f.a; ++pos) {
      const int u = f.component(f.i, pos);
      if (u != u1 && bit_at(s3, nodes3, u)) mp[u - 1] = Partition{1};
    }
    const ChoiceSequence s31 = bits_in(s3, nodes3, u2);
    if (s31 == ChoiceSequence{1, 0}) mp[u2 - 1] = Partition{2};
    if (s31 == ChoiceSequence{0, 1}) mp[u2 - 1] = Partition{1, 1};
    if (s31 == ChoiceSequence{1, 1}) mp[u2 - 1] = tri(2);
    if (s31 == ChoiceSequence{0, 0}) mp[u2 - 1] = Partition{1};
  }
  return {mp, inv_sum(spec)};
}

// --- Prop. general, n >= 1 ----------------------------------------------------

FamilyTerm pin_0k1s(const Frame& f, const FamilySpec& spec) {
  expect_choices(spec, 2, 2);
  const auto& s1 = spec.choices[0];
  const auto& s2 = spec.choices[1];
  const int n = spec.n;
  expect_shape(s1, f.a, spec.k, "S_1");
  expect_shape(s2, 2 * spec.k + f.a, 2 * spec.k + f.a - 1, "S_2");
  const auto nodes = f.nodes(tau(f.a, f.i, 0, s1), f.ip);
  const int j2 = single(s2, 0, "S_2");
  const int u = u_of(nodes, j2);
  if (u == 0) throw std::invalid_argument("P-0k1s: j_2 out of range");
  Multipartition mp = tau_from(f, n, s1);
  if (f.in_i(u)) {
    mp[u - 1] = u_family(block_relative(f, nodes, j2) % 2 == 0 ? 1 : 2, n);
  } else {
    mp[u - 1] = tri(n - 2);
  }
  return {mp, inv_sum(spec)};
}

Partition u_sub(int variant, int n) { return n >= 1 ? u_family(variant, n) : Partition{}; }

FamilyTerm pin_10k1s(const Frame& f, const FamilySpec& spec, const AmbiguityResolution& res) {
  expect_choices(spec, 2, 3);
  const auto& s1 = spec.choices[0];
  const auto& s2 = spec.choices[1];
  const int n = spec.n;
  const int k = spec.k;
  expect_shape(s1, f.a, 1, "S_1");
  expect_shape(s2, f.a + 2, k, "S_2");
  const Multipartition step1 = tau(f.a, f.ip, 0, s1);
  const int u1 = f.component(f.ip, single(s1, 1, "S_1"));
  const auto nodes2 = f.nodes(step1, f.i);
  const ChoiceSequence s20 = block_bits(f, s2, nodes2);
  const ChoiceSequence s21 = bits_in(s2, nodes2, u1);
  Multipartition mp = tau_from(f, n, s20);

  if (s21 == ChoiceSequence{1, 1}) {
    if (spec.choices.size() != 2) throw std::invalid_argument("P-10k1s: S_2^1 = (1,1) takes no S_3");
    for (int u = 1; u <= 2 * f.a; ++u) {
      if (f.in_i(u)) continue;
      mp[u - 1] = u == u1 ? tri(n + 2) : tri(n);
    }
    return {mp, inv_sum(spec)};
  }

  if (spec.choices.size() != 3) throw std::invalid_argument("P-10k1s: S_3 required unless S_2^1 = (1,1)");
  const auto& s3 = spec.choices[2];
  expect_shape(s3, 2 * k + f.a - 1, 2 * k + f.a - 2, "S_3");
  const auto nodes3 = f.nodes(with_nodes(step1, s2, nodes2), f.ip);
  const int j3 = single(s3, 0, "S_3");
  const int u3 = u_of(nodes3, j3);
  const bool even3 = block_relative(f, nodes3, j3) % 2 == 0;

  for (int u = 1; u <= 2 * f.a; ++u) {
    Partition& part = mp[u - 1];
    if (f.in_i(u)) {
      if (u != u3 && s20.at(f.local(u))) {
        part = tri(n + 1);
      } else if (u == u3) {
        part = u_sub(even3 ? 1 : 2, n);
      }
      continue;
    }
    if (u != u1 && u == u3) {
      part = tri(n - 2);
    } else if (u == u3) {
      // printed twice: "U^n_1, u > a, u = u(j_3)" and "U^n_2, ..., S_2^1 = (1,0)"
      const bool by_s2 = reading(res, Family::PGen10k1s, "P-10k1s:u(j3)-in-1corner") == "by-S2^1";
      part = u_sub(by_s2 && s21 != ChoiceSequence{0, 0} ? 2 : 1, n);
    } else if (u == u1 && s21 == ChoiceSequence{1, 0}) {
      // printed "U^{n+1}" without a subscript
      part = u_sub(reading(res, Family::PGen10k1s, "P-10k1s:U^{n+1}") == "U1" ? 1 : 2, n + 1);
    } else if (u == u1 && s21 == ChoiceSequence{0, 1}) {
      part = u_sub(2, n + 1);
    }
  }
  return {mp, inv_sum(spec)};
}

FamilyTerm pin_010k1s(const Frame& f, const FamilySpec& spec, const AmbiguityResolution& res) {
  expect_choices(spec, 3, 4);
  const auto& s1 = spec.choices[0];
  const auto& s2 = spec.choices[1];
  const auto& s3 = spec.choices[2];
  const int n = spec.n;
  const int k = spec.k;
  expect_shape(s1, f.a, 1, "S_1");
  expect_shape(s2, f.a + 2, 1, "S_2");
  const Multipartition step1 = tau(f.a, f.i, 0, s1);
  const int u1 = f.component(f.i, single(s1, 1, "S_1"));
  const auto nodes2 = f.nodes(step1, f.ip);
  const int u2 = u_of(nodes2, single(s2, 1, "S_2"));
  const Multipartition step2 = with_nodes(step1, s2, nodes2);
  const auto nodes3 = f.nodes(step2, f.i);
  const int c3 = u2 == u1 ? f.a : f.a + 1;
  expect_shape(s3, c3, k - 1, "S_3");
  const Multipartition step3 = with_nodes(step2, s3, nodes3);
  auto s3_at = [&](int u) { return bit_at(s3, nodes3, u); };

  Multipartition mp = tau_from(f, n, s1);
  int j4 = 0;
  int u4 = 0;
  std::vector<NodeRef> nodes4;
  auto need_s4 = [&]() {
    if (spec.choices.size() != 4) throw std::invalid_argument("P-010k1s: this case needs S_4");
    const auto& s4 = spec.choices[3];
    expect_shape(s4, 2 * k + f.a - 1, 2 * k + f.a - 2, "S_4");
    nodes4 = f.nodes(step3, f.ip);
    j4 = single(s4, 0, "S_4");
    u4 = u_of(nodes4, j4);
  };
  auto no_s4 = [&]() {
    if (spec.choices.size() != 3) throw std::invalid_argument("P-010k1s: this case takes no S_4");
  };

  if (u2 == u1) {
    const ChoiceSequence s20 = bits_in(s2, nodes2, u1);
    const bool side = s20 == ChoiceSequence{1, 0};
    if (s3_at(u1) == 1) {
      no_s4();
      for (int u = 1; u <= 2 * f.a; ++u) {
        if (!f.in_i(u)) continue;
        if (u != u1 && s3_at(u)) mp[u - 1] = tri(n + 1);
        if (u == u1) mp[u - 1] = u_sub(side ? 1 : 2, n + 1);
      }
      return {mp, inv_sum(spec)};
    }
    need_s4();
    const bool literal_floor = reading(res, Family::PGen010k1s, "P-010k1s:floor(u/u(j1))") == "floor";
    for (int u = 1; u <= 2 * f.a; ++u) {
      Partition& part = mp[u - 1];
      if (f.in_i(u)) {
        if (u != u1 && s3_at(u) && u != u4) {
          part = tri(n + 1);
        } else if (u != u1 && s3_at(u) && u == u4) {
          const int shift = literal_floor ? f.local(u) / f.local(u1) : (f.local(u) > f.local(u1) ? 1 : 0);
          part = u_sub(((j4 - shift) % 2 + 2) % 2 == 0 ? 1 : 2, n);
        } else if (u == u1 && u4 != u1) {
          part = tri(n + 1);
        } else if (u == u1 && side) {
          part = u_sub(1, n);
        } else if (u == u1) {
          // printed "u(j_4) - j_1" in place of a relation
          const bool eq = reading(res, Family::PGen010k1s, "P-010k1s:u(j4)-j1") == "=";
          if (eq == (u4 == u1)) part = u_sub(2, n);
        }
      } else if (u == u4) {
        part = tri(n - 2);
      }
    }
    return {mp, inv_sum(spec)};
  }

  const ChoiceSequence s31 = bits_in(s3, nodes3, u2);
  auto marked = [&](int u) { return u == u1 || s3_at(u) == 1; };
  if (s31 == ChoiceSequence{1, 1}) {
    no_s4();
    for (int u = 1; u <= 2 * f.a; ++u) {
      if (f.in_i(u)) {
        mp[u - 1] = marked(u) ? tri(n + 1) : tri(n - 1);
      } else {
        mp[u - 1] = u == u2 ? tri(n + 2) : tri(n);
      }
    }
    return {mp, inv_sum(spec)};
  }
  need_s4();
  const bool even4 = block_relative(f, nodes4, j4) % 2 == 0;
  if (s31 == ChoiceSequence{0, 0}) {
    const bool via_j2 = reading(res, Family::PGen010k1s, "P-010k1s:u(j2)>a") == "j2";
    for (int u = 1; u <= 2 * f.a; ++u) {
      Partition& part = mp[u - 1];
      if (f.in_i(u)) {
        if (marked(u) && u != u4) {
          part = tri(n + 1);
        } else if (u == u4) {
          part = u_sub(even4 ? 1 : 2, n);
        }
      } else if (u == (via_j2 ? u2 : u4)) {
        part = tri(n);
      } else if (u != u4) {
        part = tri(n);
      } else {
        part = tri(n - 2);
      }
    }
    return {mp, inv_sum(spec)};
  }
  const bool side = s31 == ChoiceSequence{1, 0};
  for (int u = 1; u <= 2 * f.a; ++u) {
    Partition& part = mp[u - 1];
    if (f.in_i(u) && marked(u) && u != u4) {
      part = tri(n + 1);
    } else if (f.in_i(u) && !marked(u)) {
      part = tri(n - 1);
    } else if (u == u4) {
      // parities printed opposite to the other sub-cases
      part = u_sub(even4 ? 2 : 1, n);
    } else if (u == u2) {
      part = u_sub(side ? 1 : 2, n + 1);
    } else if (!f.in_i(u)) {
      part = tri(n);
    }
  }
  return {mp, inv_sum(spec)};
}

}  // namespace

std::map<std::string, std::vector<std::string>> flagged_rows(Family f) {
  switch (f) {
    case Family::PGen10k1s:
      return {{"P-10k1s:U^{n+1}", {"U1", "U2"}}, {"P-10k1s:u(j3)-in-1corner", {"first-row", "by-S2^1"}}};
    case Family::PGen010k1s:
      return {{"P-010k1s:u(j4)-j1", {"=", "!="}},
              {"P-010k1s:u(j2)>a", {"j2", "j4"}},
              {"P-010k1s:floor(u/u(j1))", {"floor", "indicator"}}};
    default:
      return {};
  }
}

FamilyTerm pi0(const FamilySpec& spec) {
  const Frame f(spec);
  if (spec.k < 1 || spec.k > spec.a) throw std::invalid_argument("pi0: need 1 <= k <= a");
  switch (spec.family) {
    case Family::P0k1: return pi0_0k1(f, spec);
    case Family::P10k: return pi0_10k(f, spec);
    case Family::P010k: return pi0_010k(f, spec);
    default: throw std::invalid_argument("pi0: " + family_name(spec.family) + " is not a Lemma n=0 family");
  }
}

FamilyTerm pin(const FamilySpec& spec, const AmbiguityResolution& res) {
  const Frame f(spec);
  if (spec.k < 1 || spec.k > spec.a) throw std::invalid_argument("pin: need 1 <= k <= a");
  if (spec.n < 1) throw std::invalid_argument("pin: need n >= 1");
  switch (spec.family) {
    case Family::PGen0k1s: return pin_0k1s(f, spec);
    case Family::PGen10k1s: return pin_10k1s(f, spec, res);
    case Family::PGen010k1s: return pin_010k1s(f, spec, res);
    default: throw std::invalid_argument("pin: " + family_name(spec.family) + " is not a Prop. general family");
  }
}

}  // namespace kcb

namespace kcb {

namespace {

using Tuple = std::vector<ChoiceSequence>;

void extend(std::vector<Tuple>& out, const Tuple& prefix, int c, int k) {
  for (auto& s : choice_sequences(c, k)) {
    Tuple t = prefix;
    t.push_back(std::move(s));
    out.push_back(std::move(t));
  }
}

}  // namespace

std::vector<std::vector<ChoiceSequence>> admissible_choices(const FamilySpec& spec) {
  const Frame f(spec);
  const int a = spec.a;
  const int k = spec.k;
  std::vector<Tuple> out;
  switch (spec.family) {
    case Family::TopRow:
    case Family::WeylN:
      extend(out, {}, a, k);
      return out;
    case Family::P0k1:
      for (const auto& s1 : choice_sequences(a, k)) extend(out, {s1}, a + 2 * k, 1);
      return out;
    case Family::P10k:
      for (const auto& s1 : choice_sequences(a, 1)) extend(out, {s1}, a + 2, k);
      return out;
    case Family::PGen0k1s:
      for (const auto& s1 : choice_sequences(a, k)) extend(out, {s1}, 2 * k + a, 2 * k + a - 1);
      return out;
    case Family::PGen10k1s:
      for (const auto& s1 : choice_sequences(a, 1)) {
        const Multipartition step1 = tau(a, f.ip, 0, s1);
        const int u1 = f.component(f.ip, s1.positions(1).front());
        const auto nodes2 = f.nodes(step1, f.i);
        for (const auto& s2 : choice_sequences(a + 2, k)) {
          if (bits_in(s2, nodes2, u1) == ChoiceSequence{1, 1}) {
            out.push_back({s1, s2});
          } else {
            extend(out, {s1, s2}, 2 * k + a - 1, 2 * k + a - 2);
          }
        }
      }
      return out;
    case Family::P010k:
    case Family::PGen010k1s: {
      const bool general = spec.family == Family::PGen010k1s;
      for (const auto& s1 : choice_sequences(a, 1)) {
        const Multipartition step1 = tau(a, f.i, 0, s1);
        const int u1 = f.component(f.i, s1.positions(1).front());
        const auto nodes2 = f.nodes(step1, f.ip);
        for (const auto& s2 : choice_sequences(a + 2, 1)) {
          const int u2 = u_of(nodes2, s2.positions(1).front());
          const Multipartition step2 = with_nodes(step1, s2, nodes2);
          const auto nodes3 = f.nodes(step2, f.i);
          const int c3 = u2 == u1 ? a : a + 1;
          for (const auto& s3 : choice_sequences(c3, k - 1)) {
            const bool done = u2 == u1 ? bit_at(s3, nodes3, u1) == 1 : bits_in(s3, nodes3, u2) == ChoiceSequence{1, 1};
            if (!general || done) {
              out.push_back({s1, s2, s3});
            } else {
              extend(out, {s1, s2, s3}, 2 * k + a - 1, 2 * k + a - 2);
            }
          }
        }
      }
      return out;
    }
  }
  return out;
}

std::vector<PathStep> family_path(const FamilySpec& spec) {
  const Frame f(spec);
  const int a = spec.a;
  const int k = spec.k;
  const int i = f.i;
  const int ip = f.ip;
  std::vector<PathStep> raw;
  int extra = 0;
  switch (spec.family) {
    case Family::TopRow: raw = {{i, k}}; break;
    case Family::WeylN: raw = {{i, k}}; extra = spec.n; break;
    case Family::P0k1: raw = {{i, k}, {ip, 1}}; break;
    case Family::P10k: raw = {{ip, 1}, {i, k}}; break;
    case Family::P010k: raw = {{i, 1}, {ip, 1}, {i, k - 1}}; break;
    case Family::PGen0k1s: raw = {{i, k}, {ip, 2 * k + a - 1}}; extra = spec.n - 1; break;
    case Family::PGen10k1s: raw = {{ip, 1}, {i, k}, {ip, 2 * k + a - 2}}; extra = spec.n - 1; break;
    case Family::PGen010k1s: raw = {{i, 1}, {ip, 1}, {i, k - 1}, {ip, 2 * k + a - 2}}; extra = spec.n - 1; break;
  }
  std::vector<PathStep> path;
  for (const auto& step : raw) {
    if (step.multiplicity <= 0) continue;
    if (!path.empty() && path.back().residue == step.residue) {
      path.back().multiplicity += step.multiplicity;
    } else {
      path.push_back(step);
    }
  }
  Multipartition cur = follow_path(f.ctx, path);
  // alternation continues from the last printed residue, even an empty (k = 0) string
  int last = raw.back().residue;
  for (int s = 0; s < extra; ++s) {
    const int r = last == ip ? i : ip;
    last = r;
    int len = 0;
    while (auto next = f_tilde(f.ctx, cur, r)) {
      cur = std::move(*next);
      ++len;
    }
    if (len > 0) path.push_back({r, len});
  }
  return path;
}

Multipartition family_label(const FamilySpec& spec) {
  return follow_path(FockContext::symmetric(spec.a), family_path(spec));
}

int family_defect(const FamilySpec& spec) {
  const int a = spec.a;
  const int k = spec.k;
  switch (spec.family) {
    case Family::TopRow:
    case Family::WeylN:
      return k * (a - k);
    case Family::PGen0k1s:
    case Family::PGen10k1s:
    case Family::PGen010k1s:
      return (k - 1) * (a - k + 1) + 2 * a;
    default: {
      const FockContext ctx = FockContext::symmetric(a);
      Content c(2, 0);
      c[spec.dual ? 1 : 0] = k;
      c[spec.dual ? 0 : 1] = 1;
      return weight_info(ctx, c).defect;
    }
  }
}

CanonicalElement closed_canonical_family(const FamilySpec& spec, const AmbiguityResolution& res) {
  if (spec.k < 0 || spec.k > spec.a) throw std::invalid_argument("closed_canonical_family: need 0 <= k <= a");
  const int i = spec.dual ? 1 : 0;
  switch (spec.family) {
    case Family::TopRow: return closed_canonical_top(spec.a, i, spec.k);
    case Family::WeylN: return closed_canonical_weyl(spec.a, i, spec.k, spec.n);
    default: break;
  }
  const bool lemma0 = spec.family == Family::P0k1 || spec.family == Family::P10k || spec.family == Family::P010k;
  FamilySpec one = spec;
  FockVector vec;
  Multipartition label;
  bool first = true;
  for (auto& tuple : admissible_choices(spec)) {
    one.choices = std::move(tuple);
    const FamilyTerm t = lemma0 ? pi0(one) : pin(one, res);
    vec.add(t.mp, LaurentPoly::monomial(t.exponent));
    if (first) label = t.mp;
    first = false;
  }
  CanonicalElement g;
  g.label = label;
  g.vector = std::move(vec);
  g.defect = weight_info(FockContext::symmetric(spec.a), content(FockContext::symmetric(spec.a), label)).defect;
  g.shape = shape_of(g.vector);
  return g;
}

std::vector<std::pair<Multipartition, std::string>> small_defect_families(int a, int n) {
  if (n < 1) throw std::invalid_argument("small_defect_families: need n >= 1");
  const auto T = [](int m) { return triangular(m); };
  if (a == 1) {
    const Partition u1 = u_family(1, n);
    return {{Multipartition{T(n + 1), T(n - 2)}, "1:mu"},
            {Multipartition{T(n), u1}, "1:dual"},
            {Multipartition{u1, T(n - 2)}, "2:mu"},
            {Multipartition{u1, T(n)}, "2:dual"}};
  }
  if (a == 3) {
    return {{Multipartition{T(n + 1), T(n - 1), T(n - 1), T(n), T(n), T(n)}, "1:mu"},
            {Multipartition{T(n), T(n), T(n), T(n + 1), T(n - 1), T(n - 1)}, "1:dual"},
            {Multipartition{T(n + 1), T(n + 1), T(n - 1), T(n), T(n), T(n)}, "2:mu"},
            {Multipartition{T(n), T(n), T(n), T(n + 1), T(n + 1), T(n - 1)}, "2:dual"}};
  }
  throw std::invalid_argument("small_defect_families: defect-2 lists exist for a = 1 and a = 3 only");
}

}  // namespace kcb
