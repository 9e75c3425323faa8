#include "nestfock/partition.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "nestfock/errors.hpp"

namespace nestfock {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (parts_[j] <= 0) throw DomainError("partition parts must be positive");
    if (j > 0 && parts_[j] > parts_[j - 1]) throw DomainError("partition parts must be weakly decreasing");
    size_ += parts_[j];
  }
}

Partition Partition::from_multiset(std::vector<int> parts) {
  if (std::any_of(parts.begin(), parts.end(), [](int x) { return x < 0; })) {
    throw DomainError("negative part");
  }
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::multiplicity(int value) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  int cols = empty() ? 0 : parts_[0];
  for (int c = 0; c < cols; ++c) {
    int n = 0;
    while (n < length() && parts_[static_cast<std::size_t>(n)] > c) ++n;
    out.push_back(n);
  }
  return Partition(std::move(out));
}

Partition Partition::with_part(int value) const {
  auto v = parts_;
  v.push_back(value);
  return from_multiset(std::move(v));
}

Partition Partition::without_part(int value) const {
  auto v = parts_;
  auto it = std::find(v.begin(), v.end(), value);
  if (it == v.end()) throw DomainError("part " + std::to_string(value) + " not in " + to_string());
  v.erase(it);
  return Partition(std::move(v));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < parts_.size(); ++j) os << (j ? "," : "") << parts_[j];
  os << ')';
  return os.str();
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  // Reverse lexicographic: larger leading parts come first.
  return b.parts_ <=> a.parts_;
}

namespace {

void gen(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int a = std::min(n, max_part); a >= 1; --a) {
    cur.push_back(a);
    gen(n - a, a, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw DomainError("negative size");
  std::vector<Partition> out;
  std::vector<int> cur;
  gen(n, n, cur, out);
  return out;
}

std::int64_t partition_count(int n) {
  if (n < 0) return 0;
  std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= n; ++k) {
    for (int j = k; j <= n; ++j) p[static_cast<std::size_t>(j)] += p[static_cast<std::size_t>(j - k)];
  }
  return p[static_cast<std::size_t>(n)];
}

int arm_length(const Partition& lambda, Cell c) {
  if (!lambda.contains(c)) throw DomainError("cell outside diagram of " + lambda.to_string());
  return lambda.part(c.row) - c.col - 1;
}

int leg_length(const Partition& lambda, Cell c) {
  if (!lambda.contains(c)) throw DomainError("cell outside diagram of " + lambda.to_string());
  int r = c.row;
  while (lambda.part(r + 1) > c.col) ++r;
  return r - c.row;
}

int hook_length(const Partition& lambda, Cell c) { return arm_length(lambda, c) + leg_length(lambda, c) + 1; }

Integer hook_product(const Partition& lambda) {
  Integer h = 1;
  for (int r = 0; r < lambda.length(); ++r) {
    for (int c = 0; c < lambda.part(r); ++c) h *= hook_length(lambda, {r, c});
  }
  return h;
}

int step_length(const Partition& lambda) {
  int s = 0;
  for (int r = 0; r < lambda.length(); ++r) {
    if (r == 0 || lambda.part(r) != lambda.part(r - 1)) ++s;
  }
  return s;
}

Integer z_factor(const Partition& nu) {
  Integer z = 1;
  int r = 0;
  while (r < nu.length()) {
    int v = nu.part(r);
    int m = 0;
    while (nu.part(r) == v) {
      ++m;
      ++r;
      z *= v;
      z *= m;
    }
  }
  return z;
}

bool dominance_le(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return false;
  int sa = 0, sb = 0;
  for (int j = 0; j < std::max(a.length(), b.length()); ++j) {
    sa += a.part(j);
    sb += b.part(j);
    if (sa > sb) return false;
  }
  return true;
}

std::vector<Corner> canonical_generators(const Partition& lambda) {
  std::vector<Corner> out;
  int row = 0;
  while (row < lambda.length()) {
    int v = lambda.part(row);
    out.push_back(Corner{static_cast<int>(out.size()), Cell{row, v}});
    while (lambda.part(row) == v) ++row;
  }
  out.push_back(Corner{static_cast<int>(out.size()), Cell{lambda.length(), 0}});
  for (std::size_t j = 0; j + 1 < out.size(); ++j) {
    out[j].has_p = true;
    out[j].p = out[j + 1].cell.row - out[j].cell.row;
    out[j + 1].has_q = true;
    out[j + 1].q = out[j].cell.col - out[j + 1].cell.col;
  }
  return out;
}

Partition add_cell(const Partition& lambda, Cell c) {
  bool addable = c.col == lambda.part(c.row) && (c.row == 0 || lambda.part(c.row - 1) > c.col) &&
                 c.row <= lambda.length();
  if (!addable) throw DomainError("cell is not an addable corner of " + lambda.to_string());
  auto v = lambda.parts();
  if (c.row == lambda.length()) {
    v.push_back(1);
  } else {
    ++v[static_cast<std::size_t>(c.row)];
  }
  return Partition(std::move(v));
}

}  // namespace nestfock
