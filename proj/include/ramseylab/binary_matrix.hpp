#pragma once

/**
 * 0/1 matrices with column-major bit storage. The k-configuration check is a
 * per-column-tuple property, so columns are the natural unit: the set of rows
 * realizing a bit pattern on a column tuple is an AND of (possibly
 * complemented) column bitsets.
 */

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "ramseylab/error.hpp"

namespace ramseylab::matrices {

// A k-bit pattern on a strictly increasing tuple of column indices.
struct Pattern {
  std::vector<std::size_t> columns;  // strictly increasing, 0-based
  std::vector<int> values;           // one bit per column

  bool operator==(const Pattern&) const = default;
};

struct ConfigReport {
  bool holds = false;
  std::optional<Pattern> missing;  // a pattern realized by no row
};

class BinaryMatrix {
 public:
  BinaryMatrix(std::size_t n_rows, std::size_t n_cols)
      : n_rows_(n_rows), n_cols_(n_cols),
        words_per_col_((n_rows + 63) / 64),
        bits_(n_cols * words_per_col_, 0) {
    require(n_rows >= 1 && n_cols >= 1, ErrorCode::DomainError,
            "matrix dimensions must be positive");
  }

  static BinaryMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    require(!rows.empty() && !rows[0].empty(), ErrorCode::DomainError,
            "matrix dimensions must be positive");
    BinaryMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      require(rows[i].size() == m.n_cols_, ErrorCode::DomainError,
              "ragged rows");
      for (std::size_t j = 0; j < m.n_cols_; ++j) {
        require(rows[i][j] == 0 || rows[i][j] == 1, ErrorCode::DomainError,
                "entries must be 0 or 1");
        if (rows[i][j]) m.set(i, j);
      }
    }
    return m;
  }

  std::size_t n_rows() const { return n_rows_; }
  std::size_t n_cols() const { return n_cols_; }

  void set(std::size_t row, std::size_t col) {
    bits_[col * words_per_col_ + row / 64] |= (std::uint64_t{1} << (row % 64));
  }

  void flip(std::size_t row, std::size_t col) {
    bits_[col * words_per_col_ + row / 64] ^= (std::uint64_t{1} << (row % 64));
  }

  int get(std::size_t row, std::size_t col) const {
    return (bits_[col * words_per_col_ + row / 64] >> (row % 64)) & 1;
  }

  // Column col as packed words, low bit of word 0 = row 0.
  const std::uint64_t* column(std::size_t col) const {
    return bits_.data() + col * words_per_col_;
  }

  std::size_t words_per_col() const { return words_per_col_; }

  std::vector<int> row(std::size_t i) const {
    std::vector<int> r(n_cols_);
    for (std::size_t j = 0; j < n_cols_; ++j) r[j] = get(i, j);
    return r;
  }

  bool operator==(const BinaryMatrix& o) const {
    return n_rows_ == o.n_rows_ && n_cols_ == o.n_cols_ && bits_ == o.bits_;
  }

 private:
  std::size_t n_rows_, n_cols_, words_per_col_;
  std::vector<std::uint64_t> bits_;
};

namespace detail {

// True iff some row realizes `pattern` (bit i of pattern = wanted value on
// cols[i]); word-wise AND with early exit.
inline bool pattern_realized(const BinaryMatrix& m,
                             const std::vector<std::size_t>& cols,
                             unsigned pattern) {
  const std::size_t words = m.words_per_col();
  const std::size_t k = cols.size();
  const std::uint64_t tail_mask =
      (m.n_rows() % 64) ? ((std::uint64_t{1} << (m.n_rows() % 64)) - 1)
                        : ~std::uint64_t{0};
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t acc = (w + 1 == words) ? tail_mask : ~std::uint64_t{0};
    for (std::size_t i = 0; i < k && acc; ++i) {
      std::uint64_t cw = m.column(cols[i])[w];
      acc &= ((pattern >> i) & 1) ? cw : ~cw;
    }
    if (acc) return true;
  }
  return false;
}

template <typename Visit>
inline void for_each_column_tuple(std::size_t n_cols, std::size_t k, Visit visit) {
  std::vector<std::size_t> cols(k);
  for (std::size_t i = 0; i < k; ++i) cols[i] = i;
  for (;;) {
    if (!visit(cols)) return;
    std::size_t i = k;
    while (i > 0 && cols[i - 1] == n_cols - k + i - 1) --i;
    if (i == 0) return;
    ++cols[i - 1];
    for (std::size_t j = i; j < k; ++j) cols[j] = cols[j - 1] + 1;
  }
}

}  // namespace detail

// Does every k-column choice realize all 2^k bit patterns among the rows?
// The witness search scans patterns from the all-ones pattern downward and
// column tuples in ascending order within each pattern; the first miss found
// in that order is reported, which keeps the output deterministic.
inline ConfigReport k_config_check(const BinaryMatrix& m, std::size_t k) {
  require(k >= 1 && k <= m.n_cols(), ErrorCode::KOutOfRange,
          "k must satisfy 1 <= k <= n_cols");
  for (unsigned pattern = (1u << k); pattern-- > 0;) {
    std::optional<Pattern> miss;
    detail::for_each_column_tuple(m.n_cols(), k, [&](const auto& cols) {
      if (!detail::pattern_realized(m, cols, pattern)) {
        Pattern p;
        p.columns = cols;
        p.values.resize(k);
        for (std::size_t i = 0; i < k; ++i) p.values[i] = (pattern >> i) & 1;
        miss = std::move(p);
        return false;
      }
      return true;
    });
    if (miss) return ConfigReport{false, std::move(*miss)};
  }
  return ConfigReport{true, std::nullopt};
}

// Removes duplicate rows, keeping first-occurrence order; multiplicities sum
// to the original row count.
inline std::pair<BinaryMatrix, std::vector<std::size_t>> dedupe_rows(
    const BinaryMatrix& m) {
  std::unordered_map<std::string, std::size_t> seen;  // row bits -> index
  std::vector<std::vector<int>> rows;
  std::vector<std::size_t> mult;
  for (std::size_t i = 0; i < m.n_rows(); ++i) {
    std::vector<int> r = m.row(i);
    std::string key(r.begin(), r.end());
    auto [it, inserted] = seen.emplace(key, rows.size());
    if (inserted) {
      rows.push_back(std::move(r));
      mult.push_back(1);
    } else {
      ++mult[it->second];
    }
  }
  return {BinaryMatrix::from_rows(rows), std::move(mult)};
}

// Text format: "<n_rows> <n_cols>" on the first line, then n_rows lines of
// exactly n_cols characters from {0,1}.
inline BinaryMatrix parse_matrix(std::istream& in) {
  std::size_t n_rows = 0, n_cols = 0;
  std::string header;
  if (!std::getline(in, header)) fail(ErrorCode::ParseError, "empty input");
  {
    std::istringstream hs(header);
    std::string extra;
    if (!(hs >> n_rows >> n_cols) || (hs >> extra))
      fail(ErrorCode::ParseError, "header must be '<n_rows> <n_cols>'");
  }
  require(n_rows >= 1 && n_cols >= 1, ErrorCode::ParseError,
          "dimensions must be positive");
  BinaryMatrix m(n_rows, n_cols);
  for (std::size_t i = 0; i < n_rows; ++i) {
    std::string line;
    if (!std::getline(in, line))
      fail(ErrorCode::ParseError, "missing row " + std::to_string(i + 1));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.size() != n_cols)
      fail(ErrorCode::ParseError, "row " + std::to_string(i + 1) +
                                      " has length " + std::to_string(line.size()) +
                                      ", expected " + std::to_string(n_cols));
    for (std::size_t j = 0; j < n_cols; ++j) {
      if (line[j] == '1')
        m.set(i, j);
      else if (line[j] != '0')
        fail(ErrorCode::ParseError,
             std::string("invalid character '") + line[j] + "' in row " +
                 std::to_string(i + 1));
    }
  }
  return m;
}

inline BinaryMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix(in);
}

inline void write_matrix(std::ostream& out, const BinaryMatrix& m) {
  out << m.n_rows() << ' ' << m.n_cols() << '\n';
  for (std::size_t i = 0; i < m.n_rows(); ++i) {
    for (std::size_t j = 0; j < m.n_cols(); ++j) out << (m.get(i, j) ? '1' : '0');
    out << '\n';
  }
}

inline std::string matrix_to_string(const BinaryMatrix& m) {
  std::ostringstream os;
  write_matrix(os, m);
  return os.str();
}

}  // namespace ramseylab::matrices
