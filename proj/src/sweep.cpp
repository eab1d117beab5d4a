#include <interval_xag/errors.hpp>
#include <interval_xag/sweep.hpp>

#include <random>
#include <set>
#include <string>

namespace interval_xag
{

namespace
{

std::pair<std::uint64_t, std::uint64_t> value_range( std::uint32_t n, pair_domain domain )
{
  if ( n == 0u || n > max_constant_width )
  {
    throw usage_error( "sweep width must lie in [1, 62], got " + std::to_string( n ) );
  }
  auto const full = std::uint64_t{ 1 } << n;
  return domain == pair_domain::theorem ? std::pair{ std::uint64_t{ 1 }, full - 1u } : std::pair{ std::uint64_t{ 0 }, full };
}

} // namespace

std::vector<bound_pair> all_pairs( std::uint32_t n, pair_domain domain )
{
  if ( n > max_table_width )
  {
    throw resource_error( "exhaustive pair enumeration is limited to n <= 24" );
  }
  auto const [lo, hi] = value_range( n, domain );
  std::vector<bound_pair> pairs;
  for ( auto a = lo; a <= hi; ++a )
  {
    for ( auto b = a + 1u; b <= hi; ++b )
    {
      pairs.emplace_back( a, b );
    }
  }
  return pairs;
}

std::vector<bound_pair> sample_pairs( std::uint32_t n, std::size_t count, std::uint64_t seed, pair_domain domain )
{
  auto const [lo, hi] = value_range( n, domain );
  auto const values = hi - lo + 1u; // >= 1, no overflow for n <= 62
  if ( values <= ( std::uint64_t{ 1 } << 32 ) )
  {
    auto const total = values * ( values - 1u ) / 2u;
    if ( total <= count )
    {
      return all_pairs( n, domain );
    }
  }

  std::mt19937_64 rng( seed );
  std::set<bound_pair> chosen;
  while ( chosen.size() < count )
  {
    auto const u = lo + rng() % values;
    auto const v = lo + rng() % values;
    if ( u != v )
    {
      chosen.emplace( std::min( u, v ), std::max( u, v ) );
    }
  }
  return { chosen.begin(), chosen.end() };
}

std::vector<bound_pair> sweep_pairs( std::uint32_t n, std::optional<std::size_t> sample, std::uint64_t seed, pair_domain domain )
{
  if ( n <= exhaustive_sweep_width )
  {
    return all_pairs( n, domain );
  }
  return sample_pairs( n, sample.value_or( default_sweep_sample ), seed, domain );
}

std::vector<oracle_report> run_sweep( std::uint32_t n, std::vector<bound_pair> const& pairs, std::uint32_t max_width )
{
  std::vector<oracle_report> rows;
  rows.reserve( pairs.size() );
  for ( auto const& [a, b] : pairs )
  {
    rows.push_back( check( interval_spec( n, a, b ), max_width ) );
  }
  return rows;
}

} // namespace interval_xag
