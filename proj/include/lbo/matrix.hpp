#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lbo/error.hpp"

namespace lbo {

using BigInt = boost::multiprecision::cpp_int;

/// Thrown by checked 64-bit arithmetic; callers either promote to BigInt or
/// surface it.
class Overflow : public std::overflow_error {
 public:
  Overflow() : std::overflow_error("64-bit integer overflow") {}
};

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow();
  return r;
}
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow();
  return r;
}
inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow();
  return r;
}
/// a - q*b
inline std::int64_t mul_sub(std::int64_t a, std::int64_t q, std::int64_t b) {
  return checked_sub(a, checked_mul(q, b));
}
inline BigInt mul_sub(const BigInt& a, const BigInt& q, const BigInt& b) { return a - q * b; }

inline std::int64_t abs_value(std::int64_t a) {
  if (a == INT64_MIN) throw Overflow();
  return a < 0 ? -a : a;
}
inline BigInt abs_value(const BigInt& a) { return abs(a); }

}  // namespace detail

/// Dense row-major matrix.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<T>& data() const noexcept { return data_; }

  bool is_zero() const {
    for (const auto& v : data_)
      if (v != 0) return false;
    return true;
  }

  std::size_t nonzeros() const {
    std::size_t k = 0;
    for (const auto& v : data_) k += v != 0;
    return k;
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Exact integer matrix with overflow-checked operations.
using IntMatrix = DenseMatrix<std::int64_t>;

inline IntMatrix identity_matrix(std::size_t k) {
  IntMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) m(i, i) = 1;
  return m;
}

/// Product with zero skipping; throws Overflow rather than wrapping.
inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DegreeMismatch("cannot multiply " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " by " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::int64_t aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const std::int64_t bkj = b(k, j);
        if (bkj != 0) c(i, j) = detail::checked_add(c(i, j), detail::checked_mul(aik, bkj));
      }
    }
  return c;
}

/// Plain-text triplet stream: header `% dims R C`, then one `row col value`
/// line per nonzero entry (0-based, row-major order).
inline void write_triplets(std::ostream& os, const IntMatrix& m) {
  os << "% dims " << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0) os << r << ' ' << c << ' ' << m(r, c) << '\n';
}

inline IntMatrix read_triplets(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw ParseError("empty triplet stream");
  std::istringstream header(line);
  std::string pct, dims;
  std::size_t rows = 0, cols = 0;
  if (!(header >> pct >> dims >> rows >> cols) || pct != "%" || dims != "dims") {
    throw ParseError("triplet stream must start with '% dims R C'");
  }
  IntMatrix m(rows, cols);
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '%') continue;
    std::istringstream ls(line);
    std::size_t r, c;
    std::int64_t v;
    if (!(ls >> r >> c >> v)) throw ParseError("bad triplet line: " + line);
    if (r >= rows || c >= cols) throw RangeError("triplet outside matrix: " + line);
    m(r, c) = v;
  }
  return m;
}

}  // namespace lbo
