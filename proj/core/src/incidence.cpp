#include "nestfock/incidence.hpp"

#include <algorithm>
#include <limits>

#include "nestfock/errors.hpp"

namespace nestfock {

int IncidencePair::distinguished() const {
  for (int r = 0; r < mu.length(); ++r) {
    if (mu.part(r) != lambda.part(r)) return lambda.part(r);
  }
  throw DomainError("not an incidence pair: " + lambda.to_string() + " " + mu.to_string());
}

IncidencePair make_incidence_pair(Partition lambda, Partition mu) {
  bool ok = mu.size() == lambda.size() + 1 && mu.length() >= lambda.length() &&
            mu.length() <= lambda.length() + 1;
  int diffs = 0;
  for (int r = 0; ok && r < mu.length(); ++r) {
    int d = mu.part(r) - lambda.part(r);
    if (d < 0 || d > 1) ok = false;
    diffs += d;
  }
  if (!ok || diffs != 1) {
    throw DomainError("not an incidence pair: " + lambda.to_string() + " " + mu.to_string());
  }
  return IncidencePair{std::move(lambda), std::move(mu)};
}

Partition derive_lambda(const Partition& mu, int i) {
  if (i < 1 || mu.multiplicity(i) == 0) {
    throw DomainError("no part " + std::to_string(i) + " in " + mu.to_string());
  }
  auto v = mu.without_part(i).parts();
  v.push_back(i - 1);
  return Partition::from_multiset(std::move(v));
}

std::vector<IncidencePair> enumerate_incidence_pairs(int n) {
  std::vector<IncidencePair> out;
  for (const auto& lambda : enumerate_partitions(n)) {
    for (const auto& c : canonical_generators(lambda)) {
      out.push_back(IncidencePair{lambda, add_cell(lambda, c.cell)});
    }
  }
  return out;
}

int k_index(const IncidencePair& p) {
  for (const auto& c : canonical_generators(p.lambda)) {
    if (p.mu.part(c.cell.row) == c.cell.col + 1 && p.lambda.part(c.cell.row) == c.cell.col) return c.index;
  }
  throw DomainError("not an incidence pair: " + p.lambda.to_string() + " " + p.mu.to_string());
}

MarkedCells marked_cells(const IncidencePair& p) {
  auto gens = canonical_generators(p.lambda);
  MarkedCells mc;
  mc.k = k_index(p);
  mc.m = static_cast<int>(gens.size()) - 1;
  mc.sq.resize(gens.size());
  mc.sqp.resize(gens.size());
  const Cell ak = gens[static_cast<std::size_t>(mc.k)].cell;
  for (const auto& g : gens) {
    auto j = static_cast<std::size_t>(g.index);
    if (g.index < mc.k) {
      mc.sq[j] = Cell{g.cell.row, ak.col};
      mc.sqp[j] = Cell{g.cell.row + g.p - 1, ak.col};
    } else if (g.index > mc.k) {
      mc.sq[j] = Cell{ak.row, g.cell.col};
      mc.sqp[j] = Cell{ak.row, g.cell.col + g.q - 1};
    }
  }
  return mc;
}

namespace {

Integer hook_ratio_product(const IncidencePair& p, bool right_only, Integer start) {
  MarkedCells mc = marked_cells(p);
  Scalar v(start);
  for (int j = 0; j <= mc.m; ++j) {
    if (j == mc.k || (right_only && j < mc.k)) continue;
    auto idx = static_cast<std::size_t>(j);
    v *= Scalar(1 + hook_length(p.lambda, mc.sq[idx]), hook_length(p.lambda, mc.sqp[idx]));
  }
  v.canonicalize();
  if (!is_integral(v) || v <= 0) {
    throw ConsistencyError("hook product of " + p.lambda.to_string() + " " + p.mu.to_string() +
                           " is " + to_fraction_string(v));
  }
  return v.get_num();
}

}  // namespace

Integer h_pair(const IncidencePair& p) {
  Integer h = hook_product(p.lambda);
  return hook_ratio_product(p, false, h * h);
}

Integer h_plus(const IncidencePair& p) { return hook_ratio_product(p, true, hook_product(p.lambda)); }

EulerClass euler_class(const IncidencePair& p) {
  int n = p.degree();
  return EulerClass{n % 2 == 0 ? -1 : 1, h_pair(p), 2 * (n + 1)};
}

WeightMultiset tangent_weights_hilbert(const Partition& lambda) {
  WeightMultiset w;
  for (int r = 0; r < lambda.length(); ++r) {
    for (int c = 0; c < lambda.part(r); ++c) {
      int h = hook_length(lambda, {r, c});
      w.push_back(h);
      w.push_back(-h);
    }
  }
  std::sort(w.begin(), w.end());
  return w;
}

namespace {

constexpr int kInfinite = std::numeric_limits<int>::max();

struct Gaps {
  int pk;
  int qk;
};

Gaps gaps_at(const IncidencePair& p, int k) {
  auto gens = canonical_generators(p.lambda);
  const auto& g = gens[static_cast<std::size_t>(k)];
  return Gaps{g.has_p ? g.p : kInfinite, g.has_q ? g.q : kInfinite};
}

}  // namespace

TangentCase tangent_case(const IncidencePair& p) {
  auto [pk, qk] = gaps_at(p, k_index(p));
  if (qk == 1 && pk != 1) return TangentCase::case1a;
  if (pk == 1 && qk != 1) return TangentCase::case1b;
  if (pk > 1 && qk > 1) return TangentCase::case2;
  return TangentCase::case3;
}

WeightMultiset tangent_weights_incidence(const IncidencePair& p) {
  const Partition& lambda = p.lambda;
  MarkedCells mc = marked_cells(p);
  const int k = mc.k;
  const int m = mc.m;
  auto h = [&](const Cell& c) { return static_cast<std::int64_t>(hook_length(lambda, c)); };
  auto sq = [&](int j) { return mc.sq[static_cast<std::size_t>(j)]; };
  auto sqp = [&](int j) { return mc.sqp[static_cast<std::size_t>(j)]; };

  WeightMultiset w = tangent_weights_hilbert(lambda);
  for (int j = 0; j < k; ++j) w.push_back(-1 - h(sq(j)));
  for (int j = k + 1; j <= m; ++j) w.push_back(1 + h(sq(j)));

  // Removed weights: -h(□'_j) for j < left_end, +h(□'_j) for j >= right_start.
  int left_end = 0;
  int right_start = 0;
  switch (tangent_case(p)) {
    case TangentCase::case1a:
      w.push_back(1);
      left_end = k - 1;
      right_start = k + 1;
      break;
    case TangentCase::case1b:
      w.push_back(-1);
      left_end = k;
      right_start = k + 2;
      break;
    case TangentCase::case2:
      w.push_back(-1);
      w.push_back(1);
      left_end = k;
      right_start = k + 1;
      break;
    case TangentCase::case3:
      left_end = k - 1;
      right_start = k + 2;
      break;
  }
  std::vector<std::int64_t> removed;
  for (int j = 0; j < left_end; ++j) removed.push_back(-h(sqp(j)));
  for (int j = right_start; j <= m; ++j) removed.push_back(h(sqp(j)));
  for (auto x : removed) {
    auto it = std::find(w.begin(), w.end(), x);
    if (it == w.end()) {
      throw ConsistencyError("weight " + std::to_string(x) + " to cancel is missing at " +
                             lambda.to_string() + " " + p.mu.to_string());
    }
    w.erase(it);
  }
  std::sort(w.begin(), w.end());
  return w;
}

std::vector<std::vector<std::int64_t>> betti_series(int max_n) {
  if (max_n < 0) throw DomainError("negative degree");
  const auto N = static_cast<std::size_t>(max_n);
  // c[n][k]: coefficient of q^n z^{2k}.
  std::vector<std::vector<std::int64_t>> c(N + 1, std::vector<std::int64_t>(N + 1, 0));
  c[0][0] = 1;
  // Multiply by 1/(1 - z^{2a} q^b) in place.
  auto geometric = [&](std::size_t a, std::size_t b) {
    for (std::size_t n = b; n <= N; ++n) {
      for (std::size_t k = a; k <= N; ++k) c[n][k] += c[n - b][k - a];
    }
  };
  geometric(1, 1);
  for (std::size_t m = 1; m <= N; ++m) geometric(m - 1, m);
  for (std::size_t n = 0; n <= N; ++n) c[n].resize(n + 1);
  return c;
}

std::vector<std::int64_t> betti_from_fixed_points(int n) {
  if (n < 0) throw DomainError("negative degree");
  std::vector<std::int64_t> b(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& mu : enumerate_partitions(n + 1)) {
    // Each distinct part of μ' is one admissible i; there are s(μ) of them.
    int k = n + 1 - mu.length();
    b[static_cast<std::size_t>(k)] += step_length(mu.conjugate());
  }
  return b;
}

}  // namespace nestfock
