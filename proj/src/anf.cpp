#include <interval_xag/anf.hpp>
#include <interval_xag/errors.hpp>

#include <algorithm>
#include <bit>
#include <string>

namespace interval_xag
{

namespace
{

constexpr std::uint64_t var_mask_pos[] = {
    0xaaaaaaaaaaaaaaaa,
    0xcccccccccccccccc,
    0xf0f0f0f0f0f0f0f0,
    0xff00ff00ff00ff00,
    0xffff0000ffff0000,
    0xffffffff00000000 };

} // namespace

truth_table moebius_transform( truth_table tt )
{
  auto const n = tt.width();
  auto words = tt.words();

  /* butterflies inside a word */
  for ( std::uint32_t p = 0; p < std::min( n, 6u ); ++p )
  {
    auto const shift = 1u << p;
    for ( auto& w : words )
    {
      w ^= ( w << shift ) & var_mask_pos[p];
    }
  }

  /* butterflies across words */
  for ( std::uint32_t p = 6; p < n; ++p )
  {
    auto const step = std::size_t{ 1 } << ( p - 6u );
    for ( std::size_t block = 0; block < words.size(); block += 2u * step )
    {
      for ( std::size_t i = block; i < block + step; ++i )
      {
        words[i + step] ^= words[i];
      }
    }
  }
  return tt;
}

anf anf_of( truth_table const& tt )
{
  return anf( moebius_transform( tt ) );
}

std::uint64_t monomial_index( monomial const& m, std::uint32_t width )
{
  std::uint64_t index = 0u;
  for ( auto k : m )
  {
    if ( k == 0u || k > width )
    {
      throw usage_error( "monomial variable x" + std::to_string( k ) + " outside width " + std::to_string( width ) );
    }
    index |= std::uint64_t{ 1 } << ( width - k );
  }
  return index;
}

bool anf::contains( monomial const& m ) const
{
  return coefficients_.get( monomial_index( m, width() ) );
}

std::vector<monomial> anf::monomials() const
{
  std::vector<monomial> result;
  auto const n = width();
  for ( std::uint64_t index = 0; index < coefficients_.num_bits(); ++index )
  {
    if ( !coefficients_.get( index ) )
    {
      continue;
    }
    monomial m;
    for ( std::uint32_t k = 1; k <= n; ++k )
    {
      if ( ( index >> ( n - k ) ) & 1u )
      {
        m.push_back( k );
      }
    }
    result.push_back( std::move( m ) );
  }
  return result;
}

std::uint32_t degree( anf const& a )
{
  auto const words = a.coefficients().words();
  auto const n = a.width();
  std::uint32_t best = 0u;
  for ( std::size_t i = 0; i < words.size(); ++i )
  {
    auto w = words[i];
    /* high index bits come from the word index, low six from the bit offset */
    auto const high = n > 6u ? static_cast<std::uint32_t>( std::popcount( static_cast<std::uint64_t>( i ) ) ) : 0u;
    while ( w != 0u )
    {
      auto const offset = static_cast<std::uint64_t>( std::countr_zero( w ) );
      best = std::max( best, high + static_cast<std::uint32_t>( std::popcount( offset ) ) );
      w &= w - 1u;
    }
  }
  return best;
}

std::uint32_t degree_lower_bound( anf const& a )
{
  auto const d = degree( a );
  return d > 0u ? d - 1u : 0u;
}

} // namespace interval_xag
