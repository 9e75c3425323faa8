#include <map>

#include "nestfock/basis_change.hpp"
#include "nestfock/errors.hpp"

namespace nestfock {

namespace {

std::size_t dim(int d) { return d < 0 ? 0 : enumerate_incidence_pairs(d).size(); }

// Matrix of a B3 operator between degrees d and e, transported to B1:
// x_1 -> x_1 M_d^{-1} K M_e.
template <class Op>
RatMatrix transport(int d, int e, Op op) {
  auto src = enumerate_incidence_pairs(d);
  auto dst = enumerate_incidence_pairs(e);
  std::map<IncidencePair, std::size_t> idx;
  for (std::size_t j = 0; j < dst.size(); ++j) idx.emplace(dst[j], j);
  RatMatrix k(src.size(), dst.size());
  for (std::size_t r = 0; r < src.size(); ++r) {
    for (const auto& [key, c] : op(B3Vector(B3Key{src[r]}))) k(r, idx.at(key.pair)) = c;
  }
  return transition(Basis::b1, Basis::b3, d).entries * k * transition(Basis::b3, Basis::b1, e).entries;
}

// A maps degree src -> dst; its adjoint for pair_b1 is D_dst A^T D_src^{-1}.
RatMatrix adjoint(const RatMatrix& a, int src, int dst) {
  auto src_keys = enumerate_incidence_pairs(src);
  auto dst_keys = enumerate_incidence_pairs(dst);
  RatMatrix t = a.transpose();
  for (std::size_t r = 0; r < t.rows(); ++r) {
    Scalar hr(h_pair(dst_keys[r]));
    for (std::size_t c = 0; c < t.cols(); ++c) {
      if (t(r, c) != 0) t(r, c) = t(r, c) * hr / Scalar(h_pair(src_keys[c]));
    }
  }
  return t;
}

}  // namespace

RatMatrix b1_creation(int m, int d) {
  if (m <= 0 || d < 0) throw DomainError("b1_creation needs m > 0 and d >= 0");
  return transport(d, d + m, [m](const B3Vector& v) { return create_b3(m, v); });
}

RatMatrix b1_annihilation(int m, int d) {
  if (m <= 0) throw DomainError("b1_annihilation needs m > 0");
  if (d < m) return RatMatrix(dim(d), 0);
  return adjoint(b1_creation(m, d - m), d - m, d);
}

RatMatrix b1_translation(int d) {
  if (d < 0) throw DomainError("negative degree");
  return transport(d, d + 1, [](const B3Vector& v) { return translate_b3(v); });
}

RatMatrix b1_cotranslation(int d) {
  if (d < 1) return RatMatrix(dim(d), 0);
  return adjoint(b1_translation(d - 1), d - 1, d);
}

RatMatrix b1_heisenberg(int p, int d) {
  if (p < 0) return b1_creation(-p, d);
  if (p > 0) return b1_annihilation(p, d);
  return RatMatrix(dim(d), dim(d));
}

}  // namespace nestfock
