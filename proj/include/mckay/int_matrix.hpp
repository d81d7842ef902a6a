#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace mckay {

using Int = boost::multiprecision::cpp_int;

// Dense matrix over Z with arbitrary-precision entries.  All the lattice
// arithmetic in this project runs through this type, so intermediate
// growth during eliminations can never overflow.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);
  static IntMatrix from_row_vectors(const std::vector<std::vector<Int>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& other) const;
  IntMatrix operator-(const IntMatrix& other) const;
  bool operator==(const IntMatrix& other) const = default;

  IntMatrix transpose() const;

  // Exact determinant (fraction-free Bareiss elimination); square only.
  Int determinant() const;

  // Concatenate columns: [*this | other], row counts must match.
  IntMatrix augment_columns(const IntMatrix& other) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row a += k * row b
  void add_row_multiple(std::size_t a, std::size_t b, const Int& k);
  // col a += k * col b
  void add_col_multiple(std::size_t a, std::size_t b, const Int& k);
  void negate_row(std::size_t a);
  void negate_col(std::size_t a);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

}  // namespace mckay
