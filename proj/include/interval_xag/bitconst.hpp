#pragma once

#include <cstdint>

namespace interval_xag
{

/// Largest supported bit width; keeps 2^width representable in 64 bits.
inline constexpr std::uint32_t max_constant_width = 62u;

/*! \brief Constant integer bound with MSB-first bit access.
 *
 * `bit( 1 )` is the most significant bit, `bit( width() )` the least
 * significant one.  The value `2^width` is admitted as a degenerate upper
 * bound; all of its in-range bits are zero.
 */
class bit_constant
{
public:
  bit_constant( std::uint64_t value, std::uint32_t width );

  std::uint64_t value() const noexcept { return value_; }
  std::uint32_t width() const noexcept { return width_; }

  /// Coefficient of 2^(width - k); throws `usage_error` unless 1 <= k <= width.
  bool bit( std::uint32_t k ) const;

  /// Largest j <= width such that value / 2^j is an integer (width for 0).
  std::uint32_t trailing_zeros() const noexcept;

  /// True for the degenerate bound 2^width.
  bool is_full_range() const noexcept { return value_ == ( std::uint64_t{ 1 } << width_ ); }

  bool operator==( bit_constant const& ) const = default;

private:
  std::uint64_t value_;
  std::uint32_t width_;
};

} // namespace interval_xag
