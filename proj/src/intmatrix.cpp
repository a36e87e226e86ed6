#include "ordstat/intmatrix.hpp"

#include <sstream>
#include <utility>

#include "ordstat/error.hpp"

namespace ordstat {

IntMatrix::IntMatrix(size_t rows, size_t cols, std::vector<BigInt> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows * cols) throw DomainError("matrix entry count mismatch");
}

IntMatrix IntMatrix::identity(size_t n) {
  IntMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw DomainError("matrix product shape mismatch");
  IntMatrix r(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const BigInt& v = at(i, k);
      if (v == 0) continue;
      for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
    }
  return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix sum shape mismatch");
  IntMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix difference shape mismatch");
  IntMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

std::strong_ordering IntMatrix::operator<=>(const IntMatrix& o) const {
  if (auto c = rows_ <=> o.rows_; c != 0) return c;
  if (auto c = cols_ <=> o.cols_; c != 0) return c;
  for (size_t i = 0; i < a_.size(); ++i) {
    int c = cmp(a_[i], o.a_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

bool IntMatrix::is_zero() const {
  for (const auto& v : a_)
    if (v != 0) return false;
  return true;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

IntMatrix IntMatrix::pow(uint64_t k) const {
  if (!is_square()) throw DomainError("pow of non-square matrix");
  IntMatrix result = identity(rows_);
  IntMatrix sq = *this;
  while (k) {
    if (k & 1) result = result * sq;
    k >>= 1;
    if (k) sq = sq * sq;
  }
  return result;
}

BigInt IntMatrix::determinant() const {
  if (!is_square()) throw DomainError("determinant of non-square matrix");
  size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  BigInt prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      size_t piv = k + 1;
      while (piv < n && m.at(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      for (size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        BigInt v = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m.at(i, j) = std::move(v);
      }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

IntMatrix IntMatrix::adjugate() const {
  if (!is_square()) throw DomainError("adjugate of non-square matrix");
  size_t n = rows_;
  IntMatrix adj(n, n);
  if (n == 0) return adj;
  if (n == 1) {
    adj.at(0, 0) = 1;
    return adj;
  }
  IntMatrix minor(n - 1, n - 1);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      size_t mi = 0;
      for (size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        size_t mj = 0;
        for (size_t c = 0; c < n; ++c) {
          if (c == j) continue;
          minor.at(mi, mj) = at(r, c);
          ++mj;
        }
        ++mi;
      }
      BigInt cof = minor.determinant();
      adj.at(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
    }
  return adj;
}

std::vector<BigInt> IntMatrix::row(size_t i) const {
  return {a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_};
}

std::vector<BigInt> IntMatrix::apply(std::span<const BigInt> v) const {
  if (v.size() != cols_) throw DomainError("matrix apply shape mismatch");
  std::vector<BigInt> out(rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < rows_; ++i) {
    if (i) os << ";";
    for (size_t j = 0; j < cols_; ++j) {
      if (j) os << ",";
      os << at(i, j).get_str();
    }
  }
  os << "]";
  return os.str();
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
  size_t rows = m.rows(), cols = m.cols();
  IntMatrix h = m;
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    // Euclid on the column entries at/below `rank` until one survives.
    for (;;) {
      size_t piv = rows;
      for (size_t i = rank; i < rows; ++i) {
        if (h.at(i, col) == 0) continue;
        if (piv == rows || cmp(abs(h.at(i, col)), abs(h.at(piv, col))) < 0) piv = i;
      }
      if (piv == rows) break;  // column clear below rank
      if (piv != rank)
        for (size_t j = 0; j < cols; ++j) std::swap(h.at(rank, j), h.at(piv, j));
      bool reduced_all = true;
      for (size_t i = rank + 1; i < rows; ++i) {
        if (h.at(i, col) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), h.at(rank, col).get_mpz_t());
        for (size_t j = 0; j < cols; ++j) h.at(i, j) -= q * h.at(rank, j);
        if (h.at(i, col) != 0) reduced_all = false;
      }
      if (reduced_all) break;
    }
    if (rank < rows && h.at(rank, col) != 0) {
      if (h.at(rank, col) < 0)
        for (size_t j = 0; j < cols; ++j) h.at(rank, j) = -h.at(rank, j);
      // Reduce the entries above the pivot into [0, pivot).
      for (size_t i = 0; i < rank; ++i) {
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), h.at(rank, col).get_mpz_t());
        if (q != 0)
          for (size_t j = 0; j < cols; ++j) h.at(i, j) -= q * h.at(rank, j);
      }
      ++rank;
    }
  }
  IntMatrix basis(rank, cols);
  for (size_t i = 0; i < rank; ++i)
    for (size_t j = 0; j < cols; ++j) basis.at(i, j) = h.at(i, j);
  return basis;
}

std::optional<std::vector<BigInt>> hnf_coordinates(const IntMatrix& basis,
                                                   std::vector<BigInt> v) {
  if (v.size() != basis.cols()) throw DomainError("hnf_coordinates shape mismatch");
  std::vector<BigInt> coords(basis.rows());
  for (size_t i = 0; i < basis.rows(); ++i) {
    size_t pc = 0;
    while (pc < basis.cols() && basis.at(i, pc) == 0) ++pc;
    if (pc == basis.cols()) throw DomainError("hnf_coordinates: zero basis row");
    if (!mpz_divisible_p(v[pc].get_mpz_t(), basis.at(i, pc).get_mpz_t()))
      return std::nullopt;
    BigInt x = v[pc] / basis.at(i, pc);
    if (x != 0)
      for (size_t j = 0; j < basis.cols(); ++j) v[j] -= x * basis.at(i, j);
    coords[i] = std::move(x);
  }
  for (const auto& r : v)
    if (r != 0) return std::nullopt;
  return coords;
}

}  // namespace ordstat
