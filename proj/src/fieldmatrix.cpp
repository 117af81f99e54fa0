#include "factbound/fieldmatrix.hpp"

#include <algorithm>

namespace factbound {

std::uint32_t pow_mod(std::uint32_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint32_t result = 1 % p;
  std::uint32_t b = base % p;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, b, p);
    b = mul_mod(b, b, p);
    exp >>= 1;
  }
  return result;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw domain_error("inv_mod: zero has no inverse");
  return pow_mod(a, p - 2, p);
}

FieldElement operator+(FieldElement a, FieldElement b) {
  return {add_mod(a.residue, b.residue, a.modulus), a.modulus};
}

FieldElement operator-(FieldElement a, FieldElement b) {
  return {sub_mod(a.residue, b.residue, a.modulus), a.modulus};
}

FieldElement operator*(FieldElement a, FieldElement b) {
  return {mul_mod(a.residue, b.residue, a.modulus), a.modulus};
}

FieldElement inverse(FieldElement a) {
  return {inv_mod(a.residue, a.modulus), a.modulus};
}

void FieldMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>(b * cols_));
}

void FieldMatrix::append_row(const std::vector<std::uint32_t>& row) {
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

std::size_t field_rank(FieldMatrix m) {
  const std::uint32_t p = m.modulus();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(rank, pivot);
    const std::uint32_t inv = inv_mod(m.at(rank, col), p);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      const std::uint32_t lead = m.at(r, col);
      if (lead == 0) continue;
      const std::uint32_t scale = mul_mod(lead, inv, p);
      for (std::size_t c = col; c < m.cols(); ++c) {
        m.at(r, c) = sub_mod(m.at(r, c), mul_mod(scale, m.at(rank, c), p), p);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace factbound
