#pragma once

// Exact integer matrices and Smith normal form with unimodular witnesses.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "reveng/error.hpp"

namespace reveng {

using BigInt = boost::multiprecision::cpp_int;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (auto const& r : rows) {
      if (r.size() != cols_) throw InvalidArgument("IntMatrix: ragged initializer");
      for (auto v : r) entries_.emplace_back(v);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return entries_[index(r, c)]; }
  BigInt const& operator()(std::size_t r, std::size_t c) const { return entries_[index(r, c)]; }

  BigInt& at(std::size_t r, std::size_t c) {
    check(r, c);
    return entries_[index(r, c)];
  }
  BigInt const& at(std::size_t r, std::size_t c) const {
    check(r, c);
    return entries_[index(r, c)];
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }
  // row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, BigInt const& k) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
  }
  void add_col_multiple(std::size_t dst, std::size_t src, BigInt const& k) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
  }

  friend IntMatrix operator*(IntMatrix const& a, IntMatrix const& b) {
    if (a.cols_ != b.rows_) throw InvalidArgument("IntMatrix: dimension mismatch in product");
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  friend bool operator==(IntMatrix const&, IntMatrix const&) = default;

 private:
  std::size_t index(std::size_t r, std::size_t c) const noexcept { return r * cols_ + c; }
  void check(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw InvalidArgument("IntMatrix: index out of range");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

// Fraction-free (Bareiss) determinant.
inline BigInt determinant(IntMatrix m) {
  if (m.rows() != m.cols()) throw InvalidArgument("determinant of a non-square matrix");
  std::size_t const n = m.rows();
  if (n == 0) return 1;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

struct SmithForm {
  std::vector<BigInt> diag;  // d_1 | d_2 | ... | d_r, all >= 1
  IntMatrix left;            // rows x rows, unimodular
  IntMatrix right;           // cols x cols, unimodular
  std::size_t rank = 0;

  // The diagonal matrix left * a * right, with the dimensions of a.
  IntMatrix diagonal_matrix() const {
    IntMatrix d(left.rows(), right.rows());
    for (std::size_t i = 0; i < diag.size(); ++i) d(i, i) = diag[i];
    return d;
  }
};

namespace detail {

inline std::optional<std::pair<std::size_t, std::size_t>> smallest_nonzero(IntMatrix const& d, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  BigInt best_abs;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      BigInt a = abs(d(i, j));
      if (!best || a < best_abs) {
        best = {i, j};
        best_abs = std::move(a);
      }
    }
  return best;
}

}  // namespace detail

// Pivot rule: smallest nonzero absolute value in the remaining block, ties
// resolved by row-major position.
inline SmithForm smith_normal_form(IntMatrix const& a) {
  IntMatrix d = a;
  IntMatrix left = IntMatrix::identity(a.rows());
  IntMatrix right = IntMatrix::identity(a.cols());
  std::size_t const limit = std::min(a.rows(), a.cols());
  std::size_t t = 0;

  for (; t < limit; ++t) {
    bool finished = false;
    while (true) {
      auto pivot = detail::smallest_nonzero(d, t);
      if (!pivot) {
        finished = true;
        break;
      }
      d.swap_rows(t, pivot->first);
      left.swap_rows(t, pivot->first);
      d.swap_cols(t, pivot->second);
      right.swap_cols(t, pivot->second);

      bool dirty = false;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        BigInt q = d(i, t) / d(t, t);
        if (q != 0) {
          d.add_row_multiple(i, t, -q);
          left.add_row_multiple(i, t, -q);
        }
        if (d(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        BigInt q = d(t, j) / d(t, t);
        if (q != 0) {
          d.add_col_multiple(j, t, -q);
          right.add_col_multiple(j, t, -q);
        }
        if (d(t, j) != 0) dirty = true;
      }
      if (dirty) continue;

      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < d.rows() && !offender; ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (d(i, j) % d(t, t) != 0) {
            offender = i;
            break;
          }
      if (offender) {
        d.add_row_multiple(t, *offender, 1);
        left.add_row_multiple(t, *offender, 1);
        continue;
      }
      if (d(t, t) < 0) {
        d.negate_row(t);
        left.negate_row(t);
      }
      break;
    }
    if (finished) break;
  }

  SmithForm out{{}, std::move(left), std::move(right), t};
  out.diag.reserve(t);
  for (std::size_t i = 0; i < t; ++i) out.diag.push_back(d(i, i));
  return out;
}

// True iff v is an integer combination of the rows of a.
inline bool in_row_lattice(IntMatrix const& a, std::vector<BigInt> const& v) {
  if (v.size() != a.cols()) throw InvalidArgument("in_row_lattice: vector length does not match columns");
  SmithForm s = smith_normal_form(a);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    BigInt vr = 0;
    for (std::size_t k = 0; k < a.cols(); ++k) vr += v[k] * s.right(k, j);
    if (j < s.rank) {
      if (vr % s.diag[j] != 0) return false;
    } else if (vr != 0) {
      return false;
    }
  }
  return true;
}

// Text format: first line "rows cols", then rows of whitespace-separated
// integers.
inline IntMatrix read_matrix(std::istream& in) {
  std::string tok;
  auto next = [&](char const* what) {
    if (!(in >> tok)) throw InvalidArgument(std::string("matrix file: missing ") + what);
    return tok;
  };
  auto to_count = [](std::string const& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw InvalidArgument("matrix file: bad dimension '" + s + "'");
    return static_cast<std::size_t>(std::stoull(s));
  };
  std::size_t rows = to_count(next("row count"));
  std::size_t cols = to_count(next("column count"));
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      std::string s = next("entry");
      try {
        m(r, c) = BigInt(s);
      } catch (std::exception const&) {
        throw InvalidArgument("matrix file: bad entry '" + s + "'");
      }
    }
  if (in >> tok) throw InvalidArgument("matrix file: trailing data '" + tok + "'");
  return m;
}

inline void write_matrix(std::ostream& os, IntMatrix const& m) {
  os << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
    os << '\n';
  }
}

}  // namespace reveng
