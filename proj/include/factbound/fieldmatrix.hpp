#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "factbound/exactmath.hpp"

namespace factbound {

// Two word-sized primes. Every rank the oracle certifies is computed modulo
// both: a rank drop modulo a single prime is the sole failure mode of the
// modular approach, and agreement across two primes > 10^6 is the guard.
inline constexpr std::uint32_t kPrimaryPrime = 2147483647u;    // 2^31 - 1
inline constexpr std::uint32_t kAlternatePrime = 2147483629u;  // 2^31 - 19

constexpr std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b,
                                std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

constexpr std::uint32_t add_mod(std::uint32_t a, std::uint32_t b,
                                std::uint32_t p) {
  std::uint64_t s = static_cast<std::uint64_t>(a) + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}

constexpr std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b,
                                std::uint32_t p) {
  return a >= b ? a - b : static_cast<std::uint32_t>(a + static_cast<std::uint64_t>(p) - b);
}

std::uint32_t pow_mod(std::uint32_t base, std::uint64_t exp, std::uint32_t p);

/// Inverse of a nonzero residue modulo a prime p (Fermat).
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

/// One residue of a fixed prime field.
struct FieldElement {
  std::uint32_t residue = 0;
  std::uint32_t modulus = kPrimaryPrime;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

FieldElement operator+(FieldElement a, FieldElement b);
FieldElement operator-(FieldElement a, FieldElement b);
FieldElement operator*(FieldElement a, FieldElement b);
FieldElement inverse(FieldElement a);  // a.residue != 0

/// Dense row-major matrix over Z/p, p prime. All entries share the matrix
/// modulus.
class FieldMatrix {
 public:
  FieldMatrix(std::size_t rows, std::size_t cols, std::uint32_t modulus)
      : rows_(rows), cols_(cols), modulus_(modulus), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t modulus() const { return modulus_; }

  std::uint32_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  FieldElement entry(std::size_t r, std::size_t c) const {
    return {at(r, c), modulus_};
  }

  void swap_rows(std::size_t a, std::size_t b);

  /// Appends a row (entries already reduced mod modulus).
  void append_row(const std::vector<std::uint32_t>& row);

 private:
  std::size_t rows_, cols_;
  std::uint32_t modulus_;
  std::vector<std::uint32_t> data_;
};

/// Rank over Z/p by plain Gaussian elimination, pivoting on the first
/// nonzero entry of each column.
std::size_t field_rank(FieldMatrix m);

}  // namespace factbound
