#include "mvp/bits.hpp"

#include <algorithm>
#include <istream>
#include <iterator>
#include <sstream>

namespace mvp {

namespace {

void require_dimension(std::size_t n, const char* what) {
  if (n == 0) {
    throw InputError(std::string(what) + ": dimension must be at least 1");
  }
}

void require_index(std::size_t index, std::size_t n, const char* what) {
  if (index >= n) {
    throw InputError(std::string(what) + ": index " + std::to_string(index + 1) +
                     " out of range 1.." + std::to_string(n));
  }
}

std::uint8_t bit_from_char(char c, std::size_t line, std::size_t column) {
  if (c == '0') return 0;
  if (c == '1') return 1;
  std::string shown = (c == '\r') ? "\\r" : std::string(1, c);
  throw ParseError(line, column, "illegal character '" + shown + "', expected '0' or '1'");
}

// Splits newline-terminated text into lines. The final line must end in '\n'.
std::vector<std::string_view> split_lines(std::string_view text) {
  if (text.empty()) {
    throw ParseError(1, 1, "empty input");
  }
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      std::string_view tail = text.substr(start);
      throw ParseError(lines.size() + 1, tail.size() + 1, "missing newline at end of line");
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

}  // namespace

// ---------------------------------------------------------------- BitVector

BitVector::BitVector(std::size_t n) : bits_(n, 0) { require_dimension(n, "BitVector"); }

BitVector::BitVector(const std::vector<bool>& bits) : bits_(bits.begin(), bits.end()) {
  require_dimension(bits.size(), "BitVector");
}

BitVector BitVector::from_string(std::string_view bits) {
  require_dimension(bits.size(), "BitVector");
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    v.bits_[i] = bit_from_char(bits[i], 1, i + 1);
  }
  return v;
}

bool BitVector::at(std::size_t i) const {
  require_index(i, size(), "BitVector");
  return bits_[i] != 0;
}

void BitVector::set(std::size_t i, bool value) {
  require_index(i, size(), "BitVector");
  bits_[i] = value ? 1 : 0;
}

std::size_t BitVector::count() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::string BitVector::to_string() const {
  std::string s(size(), '0');
  for (std::size_t i = 0; i < size(); ++i) {
    if (bits_[i]) s[i] = '1';
  }
  return s;
}

// ---------------------------------------------------------------- BitMatrix

BitMatrix::BitMatrix(std::size_t n) : n_(n), cells_(n * n, 0) {
  require_dimension(n, "BitMatrix");
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.cells_[i * n + i] = 1;
  return m;
}

BitMatrix BitMatrix::ones(std::size_t n) {
  BitMatrix m(n);
  std::fill(m.cells_.begin(), m.cells_.end(), std::uint8_t{1});
  return m;
}

BitMatrix BitMatrix::from_fn(std::size_t n,
                             const std::function<bool(std::size_t, std::size_t)>& cell) {
  BitMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m.cells_[i * n + j] = cell(i, j) ? 1 : 0;
    }
  }
  return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::string>& rows) {
  std::string text;
  for (const auto& r : rows) {
    text += r;
    text += '\n';
  }
  return parse_matrix(text);
}

bool BitMatrix::at(std::size_t i, std::size_t j) const {
  require_index(i, n_, "BitMatrix row");
  require_index(j, n_, "BitMatrix column");
  return (*this)(i, j);
}

void BitMatrix::set(std::size_t i, std::size_t j, bool value) {
  require_index(i, n_, "BitMatrix row");
  require_index(j, n_, "BitMatrix column");
  cells_[i * n_ + j] = value ? 1 : 0;
}

BitVector BitMatrix::row(std::size_t i) const {
  require_index(i, n_, "BitMatrix row");
  BitVector r(n_);
  for (std::size_t j = 0; j < n_; ++j) r.set(j, (*this)(i, j));
  return r;
}

BitVector BitMatrix::column(std::size_t j) const {
  require_index(j, n_, "BitMatrix column");
  BitVector c(n_);
  for (std::size_t i = 0; i < n_; ++i) c.set(i, (*this)(i, j));
  return c;
}

void BitMatrix::set_column(std::size_t j, const BitVector& column) {
  require_index(j, n_, "BitMatrix column");
  if (column.size() != n_) {
    throw InputError("set_column: vector dimension " + std::to_string(column.size()) +
                     " does not match matrix dimension " + std::to_string(n_));
  }
  for (std::size_t i = 0; i < n_; ++i) cells_[i * n_ + j] = column[i] ? 1 : 0;
}

// ------------------------------------------------------------------ oracles

BitVector oracle_matvec(const BitMatrix& a, const BitVector& v) {
  const std::size_t n = a.size();
  if (v.size() != n) {
    throw InputError("oracle_matvec: matrix is " + std::to_string(n) + "x" +
                     std::to_string(n) + " but vector has dimension " +
                     std::to_string(v.size()));
  }
  BitVector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    bool acc = false;
    for (std::size_t j = 0; j < n; ++j) {
      acc = acc || (a(i, j) && v[j]);
    }
    out.set(i, acc);
  }
  return out;
}

BitMatrix oracle_matmul(const BitMatrix& a, const BitMatrix& b) {
  const std::size_t n = a.size();
  if (b.size() != n) {
    throw InputError("oracle_matmul: dimension mismatch " + std::to_string(n) + " vs " +
                     std::to_string(b.size()));
  }
  BitMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      bool acc = false;
      for (std::size_t k = 0; k < n; ++k) {
        acc = acc || (a(i, k) && b(k, j));
      }
      c.set(i, j, acc);
    }
  }
  return c;
}

// -------------------------------------------------------------- text format

BitMatrix parse_matrix(std::string_view text) {
  const auto lines = split_lines(text);
  const std::size_t n = lines.front().size();
  if (n == 0) {
    throw ParseError(1, 1, "empty line");
  }
  BitMatrix m(n);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const std::size_t line_no = li + 1;
    if (li >= n) {
      throw ParseError(line_no, 1,
                       "unexpected extra line, expected " + std::to_string(n) + " rows");
    }
    const auto line = lines[li];
    for (std::size_t c = 0; c < line.size() && c < n; ++c) {
      m.set(li, c, bit_from_char(line[c], line_no, c + 1) != 0);
    }
    if (line.size() != n) {
      throw ParseError(line_no, std::min(line.size(), n) + 1,
                       "line has length " + std::to_string(line.size()) + ", expected " +
                           std::to_string(n));
    }
  }
  if (lines.size() < n) {
    throw ParseError(lines.size() + 1, 1,
                     "expected " + std::to_string(n) + " rows, found " +
                         std::to_string(lines.size()));
  }
  return m;
}

BitMatrix parse_matrix(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_matrix(text);
}

std::string serialize_matrix(const BitMatrix& a) {
  const std::size_t n = a.size();
  std::string out;
  out.reserve(n * (n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.push_back(a(i, j) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

BitVector parse_vector(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.size() > 1) {
    throw ParseError(2, 1, "vector must be a single line");
  }
  const auto line = lines.front();
  if (line.empty()) {
    throw ParseError(1, 1, "empty line");
  }
  return BitVector::from_string(line);
}

std::string serialize_vector(const BitVector& v) { return v.to_string() + "\n"; }

}  // namespace mvp
