#pragma once

#include <cstdint>
#include <vector>

namespace motivic::gf {

/// Dense arithmetic tables of a small finite field F_q, q in {2,3,4,5,7,8,9}.
/// Elements are encoded as 0..q-1 with 0 and 1 the neutral elements; for the
/// prime powers the encoding is the base-p digit vector of the coefficients,
/// so the prime subfield occupies the codes 0..p-1.
class Field {
 public:
  explicit Field(int q);

  static bool supported(int q);

  int q() const { return q_; }
  std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[a * q_ + b]; }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[a * q_ + b]; }
  std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }
  /// a^e for e >= 0 (0^0 = 1).
  std::uint8_t pow(std::uint8_t a, long e) const;
  /// a^-1 for a != 0.
  std::uint8_t inverse(std::uint8_t a) const;
  /// The image of an integer under Z -> F_q (through the prime subfield).
  std::uint8_t embed(long c) const;

  const std::uint8_t* add_table() const { return add_.data(); }
  const std::uint8_t* mul_table() const { return mul_.data(); }

 private:
  int q_;
  int p_;
  std::vector<std::uint8_t> add_, mul_, neg_;
};

}  // namespace motivic::gf
