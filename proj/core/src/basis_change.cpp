#include "nestfock/basis_change.hpp"

#include <algorithm>
#include <memory>
#include <set>
#include <tuple>

#include "memo.hpp"
#include "nestfock/errors.hpp"

namespace nestfock {

std::string_view basis_name(Basis b) {
  switch (b) {
    case Basis::b1:
      return "b1";
    case Basis::b2:
      return "b2";
    case Basis::b3:
      return "b3";
  }
  return "?";
}

std::optional<Basis> parse_basis(std::string_view name) {
  if (name == "b1") return Basis::b1;
  if (name == "b2") return Basis::b2;
  if (name == "b3") return Basis::b3;
  return std::nullopt;
}

std::vector<BasisKey> basis_keys(Basis b, int n) {
  std::vector<BasisKey> out;
  if (b == Basis::b2) {
    for (auto& k : b2_keys(n)) out.emplace_back(std::move(k));
  } else {
    for (auto& p : enumerate_incidence_pairs(n)) out.emplace_back(std::move(p));
  }
  return out;
}

namespace {

using MatrixPtr = std::shared_ptr<const RatMatrix>;

detail::WriteOnceMap<std::pair<int, IncidencePair>, B2Vector>& b3_memo() {
  static detail::WriteOnceMap<std::pair<int, IncidencePair>, B2Vector> memo;
  return memo;
}

detail::WriteOnceMap<std::tuple<int, int, int>, MatrixPtr>& matrix_memo() {
  static detail::WriteOnceMap<std::tuple<int, int, int>, MatrixPtr> memo;
  return memo;
}

// Tags for matrix_memo beyond the basis pairs.
constexpr int kGram = 100;
constexpr int kHilbFixed = 101;
constexpr int kHilbFixedInv = 102;

MatrixPtr memo_matrix(int a, int b, int n, const auto& compute) {
  return matrix_memo().get_or_compute({a, b, n}, [&] { return std::make_shared<const RatMatrix>(compute()); });
}

B2Vector compute_b3_in_b2(const IncidencePair& p, CommonPartRule rule) {
  const Partition& lambda = p.lambda;
  const Partition& mu = p.mu;
  if (lambda.empty()) return vacuum();

  std::set<int> common;
  for (int v : lambda.parts()) {
    if (mu.multiplicity(v) > 0) common.insert(v);
  }
  if (common.empty()) {
    // Only λ = (n), μ = (n+1) has no common part.
    if (lambda.length() != 1 || mu != Partition{lambda.part(0) + 1}) {
      throw ConsistencyError("unexpected pair without common part: " + lambda.to_string() + " " + mu.to_string());
    }
    return B2Vector(B2Key{lambda.part(0), Partition{}});
  }

  const int m = rule == CommonPartRule::largest ? *common.rbegin() : *common.begin();
  IncidencePair small{lambda.without_part(m), mu.without_part(m)};
  const B2Vector small_b2 = b3_in_b2(small, rule);
  B3Vector expansion = create_b3(m, B3Vector(B3Key{small}));

  const B3Key target{p};
  const Scalar target_coeff = expansion.coeff(target);
  if (target_coeff == 0) throw ConsistencyError("target term missing at " + lambda.to_string() + " " + mu.to_string());
  expansion.add(target, -target_coeff);

  const int i = small.distinguished();
  const B3Key absorbed{IncidencePair{add_part(small.lambda, i, m), add_part(small.mu, i + 1, m)}};
  if (expansion.coeff(absorbed) != 1) throw ConsistencyError("absorption term has coefficient != 1");
  expansion.add(absorbed, Scalar(-1));

  B2Vector r = creation(m, small_b2);
  r -= translate(small_b2, m);
  for (const auto& [key, c] : expansion) r.add(b3_in_b2(key.pair, rule), -c);
  r *= 1 / target_coeff;
  return r;
}

std::vector<IncidencePair> pairs_of(int n) { return enumerate_incidence_pairs(n); }

// Index lookup for keys in a fixed order.
template <class K>
std::map<K, std::size_t> index_of(const std::vector<K>& keys) {
  std::map<K, std::size_t> idx;
  for (std::size_t j = 0; j < keys.size(); ++j) idx.emplace(keys[j], j);
  return idx;
}

RatMatrix compute_b3_in_b2_matrix(int n) {
  auto pairs = pairs_of(n);
  auto keys = b2_keys(n);
  auto idx = index_of(keys);
  RatMatrix c(pairs.size(), keys.size());
  for (std::size_t r = 0; r < pairs.size(); ++r) {
    for (const auto& [k, x] : b3_in_b2(pairs[r])) c(r, idx.at(k)) = x;
  }
  return c;
}

MatrixPtr b3_b2(int n) {
  return memo_matrix(static_cast<int>(Basis::b3), static_cast<int>(Basis::b2), n,
                     [&] { return compute_b3_in_b2_matrix(n); });
}

MatrixPtr gram(int n) {
  return memo_matrix(kGram, 0, n, [&] {
    auto pairs = pairs_of(n);
    std::vector<B2Vector> b(pairs.size());
    for (std::size_t j = 0; j < pairs.size(); ++j) b[j] = b3_in_b2(pairs[j]);
    RatMatrix g(pairs.size(), pairs.size());
    for (std::size_t r = 0; r < pairs.size(); ++r) {
      for (std::size_t c = r; c < pairs.size(); ++c) {
        g(r, c) = pair_b2(b[r], b[c]);
        g(c, r) = g(r, c);
      }
    }
    return g;
  });
}

// Solves G = M diag(weight) M^T for M supported on {q <= p}, processing
// indices in `order` (a linear extension of <=) and starting from the known
// diagonal. Returns M in the original index positions.
template <class Le>
RatMatrix triangular_gram_solve(const RatMatrix& g, const std::vector<Scalar>& diag, const std::vector<Scalar>& weight,
                                const std::vector<std::size_t>& order, Le le, const std::string& what) {
  const std::size_t n = order.size();
  RatMatrix m(n, n);
  for (std::size_t pi = 0; pi < n; ++pi) {
    const std::size_t p = order[pi];
    m(p, p) = diag[p];
    for (std::size_t qi = 0; qi < pi; ++qi) {
      const std::size_t q = order[qi];
      Scalar r = g(p, q);
      for (std::size_t ti = 0; ti < qi; ++ti) {
        const std::size_t t = order[ti];
        if (m(p, t) != 0 && m(q, t) != 0) r -= m(p, t) * m(q, t) * weight[t];
      }
      if (le(q, p)) {
        m(p, q) = r / (m(q, q) * weight[q]);
      } else if (r != 0) {
        throw ConsistencyError(what + ": nonzero entry outside the dominance support");
      }
    }
    Scalar d = 0;
    for (std::size_t t = 0; t < n; ++t) {
      if (m(p, t) != 0) d += m(p, t) * m(p, t) * weight[t];
    }
    if (d != g(p, p)) throw ConsistencyError(what + ": diagonal of the Gram matrix not reproduced");
  }
  return m;
}

RatMatrix compute_b3_in_b1(int n) {
  auto pairs = pairs_of(n);
  const std::size_t N = pairs.size();
  std::vector<Scalar> diag(N), weight(N);
  for (std::size_t j = 0; j < N; ++j) {
    diag[j] = Scalar(1) / Scalar(h_plus(pairs[j]));
    weight[j] = Scalar(h_pair(pairs[j]));
  }
  // Lexicographically increasing (λ, μ) is the enumeration order reversed.
  std::vector<std::size_t> order(N);
  for (std::size_t j = 0; j < N; ++j) order[j] = N - 1 - j;
  auto le = [&](std::size_t q, std::size_t p) {
    return dominance_le(pairs[q].lambda, pairs[p].lambda) && dominance_le(pairs[q].mu, pairs[p].mu);
  };
  return triangular_gram_solve(*gram(n), diag, weight, order, le, "b3_in_b1(" + std::to_string(n) + ")");
}

MatrixPtr b3_b1(int n) {
  return memo_matrix(static_cast<int>(Basis::b3), static_cast<int>(Basis::b1), n, [&] { return compute_b3_in_b1(n); });
}

MatrixPtr raw_transition(Basis from, Basis to, int n);

MatrixPtr compute_transition(Basis from, Basis to, int n) {
  auto memo = [&](auto compute) { return memo_matrix(static_cast<int>(from), static_cast<int>(to), n, compute); };
  if (from == to) {
    return memo([&] { return RatMatrix::identity(pairs_of(n).size()); });
  }
  if (from == Basis::b3 && to == Basis::b2) return b3_b2(n);
  if (from == Basis::b3 && to == Basis::b1) return b3_b1(n);
  if (from == Basis::b2 && to == Basis::b3) return memo([&] { return inverse(*b3_b2(n)); });
  if (from == Basis::b1 && to == Basis::b3) return memo([&] { return inverse(*b3_b1(n)); });
  // b2 -> b3 -> b1 and b1 -> b3 -> b2.
  return memo([&] { return *raw_transition(from, Basis::b3, n) * *raw_transition(Basis::b3, to, n); });
}

MatrixPtr raw_transition(Basis from, Basis to, int n) {
  if (n < 0) throw DomainError("negative degree");
  return compute_transition(from, to, n);
}

// Row vector x (over `from` keys of degree n) times the transition matrix.
template <class KIn, class KOut>
FockVector<KOut> convert(const FockVector<KIn>& v, Basis from, Basis to, auto in_keys, auto out_keys, auto degree_of) {
  std::map<int, FockVector<KIn>> by_degree;
  for (const auto& [k, c] : v) by_degree[degree_of(k)].add(k, c);
  FockVector<KOut> out;
  for (const auto& [n, part] : by_degree) {
    const auto ins = in_keys(n);
    const auto outs = out_keys(n);
    const auto idx = index_of(ins);
    MatrixPtr t = raw_transition(from, to, n);
    std::vector<Scalar> acc(outs.size());
    for (const auto& [k, c] : part) {
      std::size_t r = idx.at(k);
      for (std::size_t col = 0; col < outs.size(); ++col) {
        if ((*t)(r, col) != 0) acc[col] += c * (*t)(r, col);
      }
    }
    for (std::size_t col = 0; col < outs.size(); ++col) out.add(outs[col], acc[col]);
  }
  return out;
}

std::vector<B3Key> b3_keys(int n) {
  std::vector<B3Key> out;
  for (auto& p : pairs_of(n)) out.push_back(B3Key{std::move(p)});
  return out;
}

auto pair_degree = [](const IncidencePair& p) { return p.degree(); };
auto b2_degree = [](const B2Key& k) { return k.degree(); };
auto b3_degree = [](const B3Key& k) { return k.pair.degree(); };

}  // namespace

B2Vector b3_in_b2(const IncidencePair& p, CommonPartRule rule) {
  const std::pair<int, IncidencePair> key{static_cast<int>(rule), p};
  if (auto hit = b3_memo().find(key)) return *hit;
  return b3_memo().insert(key, compute_b3_in_b2(p, rule));
}

RatMatrix gram_b3(int n) {
  if (n < 0) throw DomainError("negative degree");
  return *gram(n);
}

TransitionMatrix transition(Basis from, Basis to, int n) {
  TransitionMatrix t;
  t.degree = n;
  t.source = from;
  t.target = to;
  t.entries = *raw_transition(from, to, n);
  if (from == Basis::b3 && to == Basis::b1) t.triangularity = "dominance-product";
  return t;
}

TransitionMatrix b3_in_b1(int n) { return transition(Basis::b3, Basis::b1, n); }
TransitionMatrix b2_in_b1(int n) { return transition(Basis::b2, Basis::b1, n); }
TransitionMatrix b1_in_b2(int n) { return transition(Basis::b1, Basis::b2, n); }

B1Vector b2_to_b1(const B2Vector& v) {
  return convert<B2Key, IncidencePair>(v, Basis::b2, Basis::b1, b2_keys, pairs_of, b2_degree);
}

B2Vector b1_to_b2(const B1Vector& v) {
  return convert<IncidencePair, B2Key>(v, Basis::b1, Basis::b2, pairs_of, b2_keys, pair_degree);
}

B1Vector b3_to_b1(const B3Vector& v) {
  return convert<B3Key, IncidencePair>(v, Basis::b3, Basis::b1, b3_keys, pairs_of, b3_degree);
}

B2Vector b3_to_b2(const B3Vector& v) {
  return convert<B3Key, B2Key>(v, Basis::b3, Basis::b2, b3_keys, b2_keys, b3_degree);
}

B3Vector b1_to_b3(const B1Vector& v) {
  return convert<IncidencePair, B3Key>(v, Basis::b1, Basis::b3, pairs_of, b3_keys, pair_degree);
}

namespace {

detail::WriteOnceMap<Partition, HilbPVector>& hilb_L_memo() {
  static detail::WriteOnceMap<Partition, HilbPVector> memo;
  return memo;
}

HilbPVector compute_hilb_L_in_p(const Partition& lambda) {
  if (lambda.empty()) return HilbPVector(HilbPKey{Partition{}});
  const int m = lambda.part(0);
  const Partition rest = lambda.without_part(m);
  HilbPVector r = hilb_creation(m, hilb_L_in_p(rest));
  // a_{-m}[L^rest] = Σ_values mult · [L^{rest(value, m)}]; isolate λ = rest(0, m).
  Scalar c = 0;
  std::set<int> values(rest.parts().begin(), rest.parts().end());
  values.insert(0);
  for (int value : values) {
    Partition next = add_part(rest, value, m);
    int mult = next.multiplicity(value + m);
    if (next == lambda) {
      c = mult;
    } else {
      r.add(hilb_L_in_p(next), Scalar(-mult));
    }
  }
  if (c == 0) throw ConsistencyError("L-basis recursion lost its leading term at " + lambda.to_string());
  r *= 1 / c;
  return r;
}

std::vector<HilbPKey> p_keys(int n) {
  std::vector<HilbPKey> out;
  for (auto& nu : enumerate_partitions(n)) out.push_back(HilbPKey{std::move(nu)});
  return out;
}

MatrixPtr hilb_fixed(int n) {
  return memo_matrix(kHilbFixed, 0, n, [&] {
    auto parts = enumerate_partitions(n);
    auto keys = p_keys(n);
    auto idx = index_of(keys);
    const std::size_t N = parts.size();
    RatMatrix l(N, N);
    std::vector<HilbPVector> lv(N);
    for (std::size_t r = 0; r < N; ++r) {
      lv[r] = hilb_L_in_p(parts[r]);
      for (const auto& [k, x] : lv[r]) l(r, idx.at(k)) = x;
    }
    RatMatrix g(N, N);
    for (std::size_t r = 0; r < N; ++r) {
      for (std::size_t c = 0; c < N; ++c) g(r, c) = pair_hilb_p(lv[r], lv[c]);
    }
    std::vector<Scalar> diag(N), weight(N);
    for (std::size_t j = 0; j < N; ++j) {
      Integer h = hook_product(parts[j]);
      diag[j] = Scalar(1) / Scalar(h);
      weight[j] = Scalar(h * h);
    }
    std::vector<std::size_t> order(N);
    for (std::size_t j = 0; j < N; ++j) order[j] = N - 1 - j;
    auto le = [&](std::size_t q, std::size_t p) { return dominance_le(parts[q], parts[p]); };
    RatMatrix m = triangular_gram_solve(g, diag, weight, order, le, "hilb_fixed_in_p(" + std::to_string(n) + ")");
    // [L^λ] = Σ M[λ][ρ] [ρ], so the fixed classes are M^{-1} L.
    return inverse(m) * l;
  });
}

}  // namespace

HilbPVector hilb_L_in_p(const Partition& lambda) {
  if (auto hit = hilb_L_memo().find(lambda)) return *hit;
  return hilb_L_memo().insert(lambda, compute_hilb_L_in_p(lambda));
}

RatMatrix hilb_fixed_in_p(int n) {
  if (n < 0) throw DomainError("negative degree");
  return *hilb_fixed(n);
}

HilbPVector hilb_fixed_to_p(const HilbFixedVector& v) {
  HilbPVector out;
  std::map<int, HilbFixedVector> by_degree;
  for (const auto& [k, c] : v) by_degree[k.lambda.size()].add(k, c);
  for (const auto& [n, part] : by_degree) {
    auto parts = enumerate_partitions(n);
    auto idx = index_of(parts);
    auto keys = p_keys(n);
    MatrixPtr t = hilb_fixed(n);
    for (const auto& [k, c] : part) {
      std::size_t r = idx.at(k.lambda);
      for (std::size_t col = 0; col < keys.size(); ++col) out.add(keys[col], c * (*t)(r, col));
    }
  }
  return out;
}

HilbFixedVector hilb_p_to_fixed(const HilbPVector& v) {
  HilbFixedVector out;
  std::map<int, HilbPVector> by_degree;
  for (const auto& [k, c] : v) by_degree[k.nu.size()].add(k, c);
  for (const auto& [n, part] : by_degree) {
    auto parts = enumerate_partitions(n);
    auto idx = index_of(p_keys(n));
    MatrixPtr t = memo_matrix(kHilbFixedInv, 0, n, [&] { return inverse(*hilb_fixed(n)); });
    for (const auto& [k, c] : part) {
      std::size_t r = idx.at(k);
      for (std::size_t col = 0; col < parts.size(); ++col) out.add(HilbFixedKey{parts[col]}, c * (*t)(r, col));
    }
  }
  return out;
}

void prime_transition(const TransitionMatrix& m) {
  const std::size_t rows = basis_keys(m.source, m.degree).size();
  if (m.entries.rows() != rows || m.entries.cols() != rows) throw DomainError("prime_transition: wrong shape");
  matrix_memo().insert({static_cast<int>(m.source), static_cast<int>(m.target), m.degree},
                       std::make_shared<const RatMatrix>(m.entries));
}

void clear_basis_memo() {
  b3_memo().clear();
  matrix_memo().clear();
  hilb_L_memo().clear();
}

}  // namespace nestfock
