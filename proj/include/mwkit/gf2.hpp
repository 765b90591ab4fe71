#pragma once

#include "types.hpp"

#include <string>
#include <vector>

namespace mwkit {

/// Dense matrix over GF(2), one bitset per row.
class GF2Matrix {
public:
  GF2Matrix() = default;
  GF2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, Bitset(cols)) {}

  /// Rows written as '0'/'1' strings of equal length.
  static GF2Matrix from_strings(const std::vector<std::string> &rows) {
    GF2Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_)
        throw ParameterError("ragged GF(2) matrix");
      for (std::size_t j = 0; j < m.cols_; ++j) {
        if (rows[i][j] != '0' && rows[i][j] != '1')
          throw ParameterError("GF(2) entries must be 0 or 1");
        m.rows_[i][j] = rows[i][j] == '1';
      }
    }
    return m;
  }

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return rows_.at(r).test(c); }
  void set(std::size_t r, std::size_t c, bool value = true) { rows_.at(r).set(c, value); }

  const Bitset &row(std::size_t r) const { return rows_.at(r); }

private:
  std::size_t cols_ = 0;
  std::vector<Bitset> rows_;
};

/// Rank over GF(2) by Gaussian elimination on a copy.
inline std::size_t gf2_rank(const GF2Matrix &m) {
  std::vector<Bitset> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    rows.push_back(m.row(r));
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot].test(col))
      ++pivot;
    if (pivot == rows.size())
      continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r].test(col))
        rows[r] ^= rows[rank];
    ++rank;
  }
  return rank;
}

} // namespace mwkit
