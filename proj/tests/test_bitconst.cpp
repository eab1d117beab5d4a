#include <interval_xag/bitconst.hpp>
#include <interval_xag/errors.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace interval_xag;

TEST( BitConstant, MsbFirstBits )
{
  bit_constant const five( 5u, 3u );
  EXPECT_TRUE( five.bit( 1 ) );
  EXPECT_FALSE( five.bit( 2 ) );
  EXPECT_TRUE( five.bit( 3 ) );

  EXPECT_TRUE( bit_constant( 1u, 4u ).bit( 4 ) );
  EXPECT_FALSE( bit_constant( 1u, 4u ).bit( 1 ) );
}

TEST( BitConstant, BitIndexOutOfRange )
{
  bit_constant const c( 5u, 3u );
  EXPECT_THROW( c.bit( 0 ), usage_error );
  EXPECT_THROW( c.bit( 4 ), usage_error );
}

TEST( BitConstant, TrailingZeros )
{
  EXPECT_EQ( bit_constant( 12u, 4u ).trailing_zeros(), 2u );
  EXPECT_EQ( bit_constant( 0u, 4u ).trailing_zeros(), 4u );
  EXPECT_EQ( bit_constant( 7u, 3u ).trailing_zeros(), 0u );
  EXPECT_EQ( bit_constant( 16u, 4u ).trailing_zeros(), 4u ); // 2^n bound
}

TEST( BitConstant, RejectsBadWidthsAndValues )
{
  EXPECT_THROW( bit_constant( 0u, 0u ), usage_error );
  EXPECT_THROW( bit_constant( 0u, 63u ), usage_error );
  EXPECT_THROW( bit_constant( 17u, 4u ), usage_error );
  EXPECT_NO_THROW( bit_constant( 16u, 4u ) );
  EXPECT_TRUE( bit_constant( 16u, 4u ).is_full_range() );
  EXPECT_FALSE( bit_constant( 15u, 4u ).is_full_range() );
  EXPECT_NO_THROW( bit_constant( std::uint64_t{ 1 } << 62, 62u ) );
}

TEST( BitConstant, PropertyOddQuotientAndReconstruction )
{
  std::mt19937_64 rng( 7u );
  for ( int trial = 0; trial < 2000; ++trial )
  {
    auto const width = static_cast<std::uint32_t>( 1u + rng() % max_constant_width );
    auto const value = rng() & ( ( std::uint64_t{ 1 } << width ) - 1u );
    bit_constant const c( value, width );

    std::uint64_t rebuilt = 0u;
    for ( std::uint32_t k = 1; k <= width; ++k )
    {
      rebuilt = ( rebuilt << 1 ) | ( c.bit( k ) ? 1u : 0u );
    }
    EXPECT_EQ( rebuilt, value );

    if ( value > 0u )
    {
      auto const q = value >> c.trailing_zeros();
      EXPECT_EQ( q & 1u, 1u );
      EXPECT_EQ( q << c.trailing_zeros(), value );
    }
  }
}
