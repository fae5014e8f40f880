#include "kcb/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kcb {

namespace {

void check_rows(const std::vector<int>& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] <= 0) throw std::invalid_argument("partition rows must be positive");
    if (i > 0 && rows[i] > rows[i - 1]) {
      throw std::invalid_argument("partition rows must be weakly decreasing");
    }
  }
}

}  // namespace

Partition::Partition(std::initializer_list<int> rows) : rows_(rows) { check_rows(rows_); }

Partition::Partition(std::vector<int> rows) : rows_(std::move(rows)) { check_rows(rows_); }

int Partition::size() const { return std::accumulate(rows_.begin(), rows_.end(), 0); }

Partition Partition::transpose() const {
  Partition t;
  if (rows_.empty()) return t;
  t.rows_.resize(static_cast<std::size_t>(rows_.front()), 0);
  for (int r : rows_) {
    for (int c = 0; c < r; ++c) ++t.rows_[static_cast<std::size_t>(c)];
  }
  return t;
}

Partition Partition::with_box_added(int row) const {
  Partition p = *this;
  if (row == length() + 1) {
    p.rows_.push_back(1);
  } else {
    ++p.rows_[static_cast<std::size_t>(row - 1)];
  }
  return p;
}

Partition Partition::with_box_removed(int row) const {
  Partition p = *this;
  auto& r = p.rows_[static_cast<std::size_t>(row - 1)];
  if (--r == 0) p.rows_.pop_back();
  return p;
}

bool Partition::is_e_regular(int e) const {
  int run = 1;
  for (std::size_t i = 1; i < rows_.size(); ++i) {
    run = rows_[i] == rows_[i - 1] ? run + 1 : 1;
    if (run >= e) return false;
  }
  return e > 1 || rows_.empty();
}

std::string Partition::to_string() const {
  if (rows_.empty()) return "∅";
  std::ostringstream os;
  os << "(";
  std::size_t ones = 0;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] == 1) {
      ++ones;
      continue;
    }
    if (i > 0) os << ",";
    os << rows_[i];
  }
  if (ones > 0) {
    if (ones < rows_.size()) os << ",";
    os << "1";
    if (ones > 1) os << "^" << ones;
  }
  os << ")";
  return os.str();
}

Multipartition Multipartition::empty(int level) {
  return Multipartition(std::vector<Partition>(static_cast<std::size_t>(level)));
}

int Multipartition::size() const {
  int s = 0;
  for (const auto& p : components) s += p.size();
  return s;
}

std::string Multipartition::to_string() const {
  std::string s = "[";
  for (std::size_t u = 0; u < components.size(); ++u) {
    if (u > 0) s += ",";
    s += components[u].to_string();
  }
  return s + "]";
}

Partition triangular(int n) {
  std::vector<int> rows;
  for (int r = n; r >= 1; --r) rows.push_back(r);
  return Partition(std::move(rows));
}

Partition row_partition(int n) {
  if (n <= 0) return {};
  return Partition({n});
}

Partition vee(const Partition& p, const Partition& q) {
  std::vector<int> rows = p.rows();
  rows.insert(rows.end(), q.rows().begin(), q.rows().end());
  return Partition(std::move(rows));
}

Partition u_family(int variant, int n) {
  if (n < 1) throw std::invalid_argument("u_family: n must be >= 1");
  switch (variant) {
    case 1:
      return vee(row_partition(n + 1), triangular(n - 2));
    case 2:
      return vee(triangular(n - 1), Partition({1, 1}));
    default:
      throw std::invalid_argument("u_family: variant must be 1 or 2");
  }
}

Multipartition conjugate(const Multipartition& mp) {
  Multipartition out;
  out.components.reserve(mp.components.size());
  for (auto it = mp.components.rbegin(); it != mp.components.rend(); ++it) {
    out.components.push_back(it->transpose());
  }
  return out;
}

Multipartition transpose_each(const Multipartition& mp) {
  Multipartition out;
  out.components.reserve(mp.components.size());
  for (const auto& p : mp.components) out.components.push_back(p.transpose());
  return out;
}

namespace {

bool dominates_unchecked(const Multipartition& mu, const Multipartition& lam) {
  long smu = 0;
  long slam = 0;
  for (int k = 0; k < mu.level(); ++k) {
    const int rows = std::max(mu[k].length(), lam[k].length());
    for (int j = 1; j <= rows; ++j) {
      smu += mu[k].row(j);
      slam += lam[k].row(j);
      if (smu < slam) return false;
    }
  }
  return true;
}

}  // namespace

bool dominates(const Multipartition& mu, const Multipartition& lam) {
  if (mu.level() != lam.level()) throw std::invalid_argument("dominates: level mismatch");
  if (mu.size() != lam.size()) throw std::invalid_argument("dominates: size mismatch");
  return dominates_unchecked(mu, lam);
}

bool strictly_dominates(const Multipartition& mu, const Multipartition& lam) {
  if (mu.level() != lam.level() || mu.size() != lam.size() || mu == lam) return false;
  return dominates_unchecked(mu, lam);
}

bool is_e_regular(const Multipartition& mp, int e) {
  return std::all_of(mp.components.begin(), mp.components.end(),
                     [e](const Partition& p) { return p.is_e_regular(e); });
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<Multipartition> multipartitions_of(int n, int level) {
  std::vector<Multipartition> out;
  if (level <= 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  for (int first = n; first >= 0; --first) {
    for (const auto& rest : multipartitions_of(n - first, level - 1)) {
      for (const auto& p : partitions_of(first)) {
        Multipartition mp;
        mp.components.reserve(static_cast<std::size_t>(level));
        mp.components.push_back(p);
        mp.components.insert(mp.components.end(), rest.components.begin(), rest.components.end());
        out.push_back(std::move(mp));
      }
    }
  }
  return out;
}

}  // namespace kcb
