#include "shadowidx/f2_linalg.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <stdexcept>

namespace f2 {

namespace {

// index of the lowest set bit, or npos when the row is zero
constexpr std::size_t npos = static_cast<std::size_t>(-1);

std::size_t leading_bit(const word* row, std::size_t stride) {
  for (std::size_t w = 0; w < stride; ++w)
    if (row[w]) return w * word_bits + std::countr_zero(row[w]);
  return npos;
}

void xor_row(word* dst, const word* src, std::size_t stride) {
  for (std::size_t w = 0; w < stride; ++w) dst[w] ^= src[w];
}

}  // namespace

void bit_matrix::append_row(const bit_vector& v) {
  if (v.size != cols) throw std::invalid_argument("append_row: length mismatch");
  data.resize((rows + 1) * stride, 0);
  std::memcpy(data.data() + rows * stride, v.data.data(),
              v.data.size() * sizeof(word));
  ++rows;
}

reduced row_reduce(const bit_matrix& m) {
  const std::size_t stride = m.stride;
  // basis[c] = owned row with leading column c
  std::vector<std::vector<word>> basis(m.cols);
  std::vector<bool> have(m.cols, false);

  std::vector<word> cur(stride);
  for (std::size_t r = 0; r < m.rows; ++r) {
    std::memcpy(cur.data(), m.row(r), stride * sizeof(word));
    for (;;) {
      std::size_t lead = leading_bit(cur.data(), stride);
      if (lead == npos) break;
      if (!have[lead]) {
        basis[lead] = cur;
        have[lead] = true;
        break;
      }
      xor_row(cur.data(), basis[lead].data(), stride);
    }
  }

  // back-eliminate so every pivot column is zero in the other rows
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < m.cols; ++c)
    if (have[c]) pivots.push_back(c);
  for (std::size_t i = pivots.size(); i-- > 0;) {
    std::size_t c = pivots[i];
    for (std::size_t j = 0; j < i; ++j) {
      std::size_t cj = pivots[j];
      if ((basis[cj][c / word_bits] >> (c % word_bits)) & word(1))
        xor_row(basis[cj].data(), basis[c].data(), stride);
    }
  }

  reduced out;
  out.mat = bit_matrix(pivots.size(), m.cols);
  out.pivots = pivots;
  out.pivot_row.assign(m.cols, -1);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    std::memcpy(out.mat.row(i), basis[pivots[i]].data(), stride * sizeof(word));
    out.pivot_row[pivots[i]] = static_cast<std::int32_t>(i);
  }
  return out;
}

bit_vector reduce_vector(const reduced& rr, bit_vector v) {
  if (v.size != rr.mat.cols)
    throw std::invalid_argument("reduce_vector: length mismatch");
  const std::size_t stride = rr.mat.stride;
  // rows are in reduced echelon form: one ascending pass clears every pivot
  // column, and no later row can reintroduce an earlier pivot bit
  for (std::size_t i = 0; i < rr.pivots.size(); ++i)
    if (v.get(rr.pivots[i])) xor_row(v.data.data(), rr.mat.row(i), stride);
  return v;
}

bool in_rowspace(const bit_vector& v, const reduced& rr) {
  bit_vector res = v;
  const std::size_t stride = rr.mat.stride;
  for (;;) {
    std::size_t lead = leading_bit(res.data.data(), res.data.size());
    if (lead == npos) return true;
    if (lead >= rr.pivot_row.size()) return false;
    std::int32_t r = rr.pivot_row[lead];
    if (r < 0) return false;  // leading bit not matched by any pivot
    xor_row(res.data.data(), rr.mat.row(r), stride);
  }
}

bool in_rowspace(const bit_vector& v, const bit_matrix& m) {
  if (v.size != m.cols) throw std::invalid_argument("in_rowspace: length mismatch");
  return in_rowspace(v, row_reduce(m));
}

}  // namespace f2
