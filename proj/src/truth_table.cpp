#include <interval_xag/errors.hpp>
#include <interval_xag/formula.hpp>
#include <interval_xag/truth_table.hpp>

#include <bit>
#include <string>
#include <unordered_map>

namespace interval_xag
{

namespace
{

/* bits of a word where the variable at bit position p (p < 6) of the index is 1 */
constexpr std::uint64_t var_mask_pos[] = {
    0xaaaaaaaaaaaaaaaa,
    0xcccccccccccccccc,
    0xf0f0f0f0f0f0f0f0,
    0xff00ff00ff00ff00,
    0xffff0000ffff0000,
    0xffffffff00000000 };

std::size_t num_words( std::uint32_t width )
{
  return width <= 6u ? 1u : std::size_t{ 1 } << ( width - 6u );
}

} // namespace

truth_table::truth_table( std::uint32_t width ) : width_( width )
{
  if ( width > max_table_width )
  {
    throw resource_error( "truth table width " + std::to_string( width ) + " exceeds the guard of " + std::to_string( max_table_width ) );
  }
  words_.assign( num_words( width ), 0u );
}

truth_table truth_table::constant( std::uint32_t width, bool value )
{
  truth_table tt( width );
  if ( value )
  {
    tt = ~tt;
  }
  return tt;
}

truth_table truth_table::projection( std::uint32_t width, std::uint32_t k )
{
  if ( k == 0u || k > width )
  {
    throw usage_error( "projection x" + std::to_string( k ) + " outside width " + std::to_string( width ) );
  }
  truth_table tt( width );
  auto const p = width - k;
  if ( p < 6u )
  {
    for ( auto& w : tt.words_ )
    {
      w = var_mask_pos[p];
    }
  }
  else
  {
    for ( std::size_t i = 0; i < tt.words_.size(); ++i )
    {
      tt.words_[i] = ( ( i >> ( p - 6u ) ) & 1u ) ? ~std::uint64_t{ 0 } : 0u;
    }
  }
  tt.mask_unused();
  return tt;
}

bool truth_table::get( std::uint64_t index ) const
{
  if ( index >= num_bits() )
  {
    throw usage_error( "truth table index out of range" );
  }
  return ( ( words_[index >> 6] >> ( index & 63u ) ) & 1u ) != 0u;
}

void truth_table::set( std::uint64_t index, bool value )
{
  if ( index >= num_bits() )
  {
    throw usage_error( "truth table index out of range" );
  }
  auto const bit = std::uint64_t{ 1 } << ( index & 63u );
  if ( value )
  {
    words_[index >> 6] |= bit;
  }
  else
  {
    words_[index >> 6] &= ~bit;
  }
}

std::uint64_t truth_table::count_ones() const noexcept
{
  std::uint64_t total = 0u;
  for ( auto w : words_ )
  {
    total += static_cast<std::uint64_t>( std::popcount( w ) );
  }
  return total;
}

std::optional<std::uint64_t> truth_table::first_difference( truth_table const& other ) const
{
  check_same_width( other );
  for ( std::size_t i = 0; i < words_.size(); ++i )
  {
    if ( auto const diff = words_[i] ^ other.words_[i]; diff != 0u )
    {
      return ( std::uint64_t{ i } << 6 ) + static_cast<std::uint64_t>( std::countr_zero( diff ) );
    }
  }
  return std::nullopt;
}

truth_table truth_table::operator~() const
{
  auto result = *this;
  for ( auto& w : result.words_ )
  {
    w = ~w;
  }
  result.mask_unused();
  return result;
}

truth_table& truth_table::operator&=( truth_table const& other )
{
  check_same_width( other );
  for ( std::size_t i = 0; i < words_.size(); ++i )
  {
    words_[i] &= other.words_[i];
  }
  return *this;
}

truth_table& truth_table::operator|=( truth_table const& other )
{
  check_same_width( other );
  for ( std::size_t i = 0; i < words_.size(); ++i )
  {
    words_[i] |= other.words_[i];
  }
  return *this;
}

truth_table& truth_table::operator^=( truth_table const& other )
{
  check_same_width( other );
  for ( std::size_t i = 0; i < words_.size(); ++i )
  {
    words_[i] ^= other.words_[i];
  }
  return *this;
}

void truth_table::mask_unused() noexcept
{
  if ( width_ < 6u )
  {
    words_[0] &= ( std::uint64_t{ 1 } << ( std::uint64_t{ 1 } << width_ ) ) - 1u;
  }
}

void truth_table::check_same_width( truth_table const& other ) const
{
  if ( width_ != other.width_ )
  {
    throw usage_error( "truth tables of different widths" );
  }
}

truth_table to_truth_table( formula const& f, std::uint32_t n )
{
  if ( n > max_table_width )
  {
    throw resource_error( "truth table width " + std::to_string( n ) + " exceeds the guard of " + std::to_string( max_table_width ) );
  }
  if ( auto const m = f.max_var(); m > n )
  {
    throw usage_error( "formula references x" + std::to_string( m ) + " but the width is " + std::to_string( n ) );
  }

  std::unordered_map<void const*, truth_table> memo;
  auto rec = [&]( auto&& self, formula const& g ) -> truth_table const& {
    if ( auto it = memo.find( g.id() ); it != memo.end() )
    {
      return it->second;
    }
    truth_table tt( n );
    switch ( g.kind() )
    {
    case node_kind::var:
      tt = truth_table::projection( n, g.var_index() );
      break;
    case node_kind::constant:
      tt = truth_table::constant( n, g.constant_value() );
      break;
    case node_kind::op_not:
      tt = ~self( self, g.child( 0 ) );
      break;
    case node_kind::op_and:
      tt = self( self, g.child( 0 ) );
      tt &= self( self, g.child( 1 ) );
      break;
    case node_kind::op_or:
      tt = self( self, g.child( 0 ) );
      tt |= self( self, g.child( 1 ) );
      break;
    case node_kind::op_xor:
      tt = self( self, g.child( 0 ) );
      tt ^= self( self, g.child( 1 ) );
      break;
    }
    return memo.emplace( g.id(), std::move( tt ) ).first->second;
  };
  return rec( rec, f );
}

} // namespace interval_xag
