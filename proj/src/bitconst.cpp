#include <interval_xag/bitconst.hpp>
#include <interval_xag/errors.hpp>

#include <bit>
#include <string>

namespace interval_xag
{

bit_constant::bit_constant( std::uint64_t value, std::uint32_t width )
    : value_( value ), width_( width )
{
  if ( width == 0u || width > max_constant_width )
  {
    throw usage_error( "constant width must lie in [1, 62], got " + std::to_string( width ) );
  }
  if ( value > ( std::uint64_t{ 1 } << width ) )
  {
    throw usage_error( "constant " + std::to_string( value ) + " does not fit in " + std::to_string( width ) + " bits" );
  }
}

bool bit_constant::bit( std::uint32_t k ) const
{
  if ( k == 0u || k > width_ )
  {
    throw usage_error( "bit index " + std::to_string( k ) + " outside [1, " + std::to_string( width_ ) + "]" );
  }
  return ( ( value_ >> ( width_ - k ) ) & 1u ) != 0u;
}

std::uint32_t bit_constant::trailing_zeros() const noexcept
{
  if ( value_ == 0u )
  {
    return width_;
  }
  auto const j = static_cast<std::uint32_t>( std::countr_zero( value_ ) );
  return j < width_ ? j : width_;
}

} // namespace interval_xag
