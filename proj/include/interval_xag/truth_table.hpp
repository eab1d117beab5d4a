#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace interval_xag
{

class formula;

/// Hard limit on the number of inputs of a materialized truth table.
inline constexpr std::uint32_t max_table_width = 24u;

/*! \brief Packed 2^n-entry truth table.
 *
 * Entry `x` holds f(x1, ..., xn) where x = (x1 ... xn)_2, so x_k is bit
 * (n - k) of the index and x1 is the most significant bit.  Bits are packed
 * into 64-bit words, entry x at bit (x % 64) of word (x / 64).  For n < 6
 * only the low 2^n bits of the single word are used and kept zero above.
 */
class truth_table
{
public:
  explicit truth_table( std::uint32_t width );

  static truth_table constant( std::uint32_t width, bool value );

  /// Projection onto x_k, 1 <= k <= width.
  static truth_table projection( std::uint32_t width, std::uint32_t k );

  std::uint32_t width() const noexcept { return width_; }
  std::uint64_t num_bits() const noexcept { return std::uint64_t{ 1 } << width_; }

  bool get( std::uint64_t index ) const;
  void set( std::uint64_t index, bool value );

  std::span<std::uint64_t const> words() const noexcept { return words_; }
  std::span<std::uint64_t> words() noexcept { return words_; }

  std::uint64_t count_ones() const noexcept;

  /// Smallest index where the tables differ.
  std::optional<std::uint64_t> first_difference( truth_table const& other ) const;

  truth_table operator~() const;
  truth_table& operator&=( truth_table const& other );
  truth_table& operator|=( truth_table const& other );
  truth_table& operator^=( truth_table const& other );

  friend truth_table operator&( truth_table a, truth_table const& b ) { return a &= b; }
  friend truth_table operator|( truth_table a, truth_table const& b ) { return a |= b; }
  friend truth_table operator^( truth_table a, truth_table const& b ) { return a ^= b; }

  bool operator==( truth_table const& ) const = default;

private:
  void mask_unused() noexcept;
  void check_same_width( truth_table const& other ) const;

  std::uint32_t width_;
  std::vector<std::uint64_t> words_;
};

/// Word-parallel simulation of `f` over all 2^n assignments.
truth_table to_truth_table( formula const& f, std::uint32_t n );

} // namespace interval_xag
