#pragma once

// Bit-packed linear algebra over F_2. Rows live in 64-bit words; columns past
// `cols` are kept zero so whole-word XOR is always safe.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace f2 {

using word = std::uint64_t;
inline constexpr std::size_t word_bits = 64;

inline std::size_t words_for(std::size_t bits) {
  return (bits + word_bits - 1) / word_bits;
}

struct bit_vector {
  std::size_t size = 0;
  std::vector<word> data;

  bit_vector() = default;
  explicit bit_vector(std::size_t n) : size(n), data(words_for(n), 0) {}

  bool get(std::size_t i) const {
    return (data[i / word_bits] >> (i % word_bits)) & word(1);
  }
  void set(std::size_t i) { data[i / word_bits] |= word(1) << (i % word_bits); }
  void flip(std::size_t i) { data[i / word_bits] ^= word(1) << (i % word_bits); }
  bool any() const {
    for (word w : data)
      if (w) return true;
    return false;
  }
  bool operator==(const bit_vector&) const = default;
};

struct bit_matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t stride = 0;  // words per row
  std::vector<word> data;

  bit_matrix() = default;
  bit_matrix(std::size_t r, std::size_t c)
      : rows(r), cols(c), stride(words_for(c)), data(r * stride, 0) {}

  word* row(std::size_t r) { return data.data() + r * stride; }
  const word* row(std::size_t r) const { return data.data() + r * stride; }

  bool get(std::size_t r, std::size_t c) const {
    return (row(r)[c / word_bits] >> (c % word_bits)) & word(1);
  }
  void set(std::size_t r, std::size_t c) {
    row(r)[c / word_bits] |= word(1) << (c % word_bits);
  }

  // append a row; v.size must equal cols
  void append_row(const bit_vector& v);
};

struct reduced {
  // reduced row-echelon form with zero rows dropped; rows sorted by pivot
  bit_matrix mat;
  std::vector<std::size_t> pivots;           // pivot column of each row
  std::vector<std::int32_t> pivot_row;       // column -> row index or -1
  std::size_t rank() const { return pivots.size(); }
};

reduced row_reduce(const bit_matrix& m);

// residual of v after eliminating pivot positions; zero iff v is in the span
bit_vector reduce_vector(const reduced& rr, bit_vector v);

bool in_rowspace(const bit_vector& v, const reduced& rr);
// convenience form; reduces m internally, throws std::invalid_argument on a
// length mismatch
bool in_rowspace(const bit_vector& v, const bit_matrix& m);

}  // namespace f2
