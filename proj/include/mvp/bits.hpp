#pragma once

// Boolean matrix/vector value types, the definitional product oracle and the
// line-oriented text format ("0"/"1" characters, one row per line).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mvp/errors.hpp"

namespace mvp {

/// n-dimensional Boolean vector, n >= 1.
class BitVector {
 public:
  /// All-zero vector of dimension n.
  explicit BitVector(std::size_t n);
  explicit BitVector(const std::vector<bool>& bits);

  /// "1010" -> (1,0,1,0). No trailing newline.
  static BitVector from_string(std::string_view bits);

  std::size_t size() const noexcept { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  bool at(std::size_t i) const;
  void set(std::size_t i, bool value);

  std::size_t count() const noexcept;
  std::string to_string() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Square n x n Boolean matrix, n >= 1, row-major.
class BitMatrix {
 public:
  /// All-zero matrix.
  explicit BitMatrix(std::size_t n);

  static BitMatrix identity(std::size_t n);
  static BitMatrix ones(std::size_t n);
  static BitMatrix from_fn(std::size_t n,
                           const std::function<bool(std::size_t, std::size_t)>& cell);
  /// Each string is one row of '0'/'1'; all rows must have length rows.size().
  static BitMatrix from_rows(const std::vector<std::string>& rows);

  std::size_t size() const noexcept { return n_; }
  bool operator()(std::size_t i, std::size_t j) const { return cells_[i * n_ + j] != 0; }
  bool at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, bool value);

  BitVector row(std::size_t i) const;
  BitVector column(std::size_t j) const;
  void set_column(std::size_t j, const BitVector& column);

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<std::uint8_t> cells_;
};

/// result[i] = OR_j (A[i][j] AND V[j]); the naive definitional scan.
BitVector oracle_matvec(const BitMatrix& a, const BitVector& v);

/// Column j of the result is oracle_matvec(A, B[*, j]).
BitMatrix oracle_matmul(const BitMatrix& a, const BitMatrix& b);

BitMatrix parse_matrix(std::string_view text);
BitMatrix parse_matrix(std::istream& in);
std::string serialize_matrix(const BitMatrix& a);

BitVector parse_vector(std::string_view text);
std::string serialize_vector(const BitVector& v);

}  // namespace mvp
