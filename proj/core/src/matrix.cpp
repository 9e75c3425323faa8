#include "nestfock/matrix.hpp"

#include <utility>

#include "nestfock/errors.hpp"

namespace nestfock {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) m(j, j) = 1;
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool RatMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
    }
  }
  return true;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (x != 0) return false;
  }
  return true;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix shape mismatch in product");
  RatMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& x = a(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        if (b(k, c) != 0) out(r, c) += x * b(k, c);
      }
    }
  }
  return out;
}

namespace {

RatMatrix combine(const RatMatrix& a, const RatMatrix& b, int sign) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("matrix shape mismatch");
  RatMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (sign > 0) {
        out(r, c) += b(r, c);
      } else {
        out(r, c) -= b(r, c);
      }
    }
  }
  return out;
}

}  // namespace

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) { return combine(a, b, 1); }
RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) { return combine(a, b, -1); }

RatMatrix operator*(const Scalar& s, const RatMatrix& a) {
  RatMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) *= s;
  }
  return out;
}

namespace {

bool is_upper_triangular(const RatMatrix& a) {
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < r; ++c) {
      if (a(r, c) != 0) return false;
    }
  }
  return true;
}

// Back substitution, row by row from the bottom.
RatMatrix upper_triangular_inverse(const RatMatrix& a) {
  const std::size_t n = a.rows();
  RatMatrix x(n, n);
  for (std::size_t i = n; i-- > 0;) {
    if (a(i, i) == 0) throw ConsistencyError("singular matrix");
    const Scalar inv = 1 / a(i, i);
    x(i, i) = inv;
    for (std::size_t k = i + 1; k < n; ++k) {
      if (a(i, k) == 0) continue;
      const Scalar f = a(i, k) * inv;
      for (std::size_t j = k; j < n; ++j) {
        if (x(k, j) != 0) x(i, j) -= f * x(k, j);
      }
    }
  }
  return x;
}

}  // namespace

RatMatrix inverse(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw DomainError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  if (is_upper_triangular(a)) return upper_triangular_inverse(a);
  if (is_upper_triangular(a.transpose())) return upper_triangular_inverse(a.transpose()).transpose();
  const std::size_t w = 2 * n;

  // A' = D A with D = diag(row denominator lcm); A^{-1} = A'^{-1} D.
  std::vector<Integer> scale(n, 1);
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(w, 0));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) mpz_lcm(scale[r].get_mpz_t(), scale[r].get_mpz_t(), a(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < n; ++c) m[r][c] = a(r, c).get_num() * (scale[r] / a(r, c).get_den());
    m[r][n + r] = 1;
  }

  // Fraction-free Gauss-Jordan: on exit the left block is det·I.
  Integer prev = 1;
  Integer t;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) throw ConsistencyError("singular matrix");
    if (piv != k) std::swap(m[piv], m[k]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      for (std::size_t j = 0; j < w; ++j) {
        if (j == k) continue;
        t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }

  RatMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      Scalar x(m[r][n + c] * scale[c], m[r][r]);
      x.canonicalize();
      inv(r, c) = x;
    }
  }
  return inv;
}

}  // namespace nestfock
