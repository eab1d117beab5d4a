#include <interval_xag/anf.hpp>
#include <interval_xag/errors.hpp>
#include <interval_xag/synth.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace interval_xag;

namespace
{

formula x( std::uint32_t i )
{
  return formula::var( i );
}

and_or_chain chain( std::vector<std::uint32_t> vars, std::vector<chain_op> ops )
{
  return and_or_chain( std::move( vars ), std::move( ops ) );
}

constexpr auto AND = chain_op::op_and;
constexpr auto OR = chain_op::op_or;

std::uint32_t expected_ite_cost( std::uint32_t l1, std::uint32_t l2 )
{
  return l1 == l2 ? l1 : std::max( l1, l2 ) + 1u;
}

std::uint32_t expected_xor_cost( std::uint32_t l1, std::uint32_t l2 )
{
  return l1 == l2 ? l1 - 1u : std::max( l1, l2 );
}

} // namespace

/* comparison */

TEST( ComparisonChain, Examples )
{
  auto const c5 = comparison_chain( bit_constant( 5u, 3u ), 1u, 3u );
  EXPECT_TRUE( structurally_equal( chain_to_formula( c5 ), x( 1 ) & ( x( 2 ) | x( 3 ) ) ) );
  EXPECT_EQ( oracles::chain_table( c5, 3u ), oracles::interval_table( 3u, 5u, 8u ) );

  auto const c1 = comparison_chain( bit_constant( 1u, 1u ), 1u, 1u );
  EXPECT_TRUE( structurally_equal( chain_to_formula( c1 ), x( 1 ) ) );
  EXPECT_EQ( oracles::chain_table( c1, 1u ), oracles::interval_table( 1u, 1u, 2u ) );

  auto const c3 = comparison_chain( bit_constant( 3u, 3u ), 1u, 3u );
  EXPECT_TRUE( structurally_equal( chain_to_formula( c3 ), x( 1 ) | ( x( 2 ) & x( 3 ) ) ) );
  EXPECT_EQ( oracles::chain_table( c3, 3u ), oracles::interval_table( 3u, 3u, 8u ) );
}

TEST( ComparisonChain, EmptyRange )
{
  bit_constant const a( 5u, 3u );
  EXPECT_THROW( comparison_chain( a, 3u, 2u ), usage_error );
  EXPECT_THROW( comparison_chain( a, 0u, 2u ), usage_error );
  EXPECT_THROW( comparison_chain( a, 1u, 4u ), usage_error );
}

TEST( CompareSynth, Examples )
{
  auto const f12 = compare_synth( bit_constant( 12u, 4u ) );
  EXPECT_TRUE( structurally_equal( f12, x( 1 ) & x( 2 ) ) );
  EXPECT_EQ( f12.mult_cost(), 1u );

  auto const f0 = compare_synth( bit_constant( 0u, 4u ) );
  ASSERT_EQ( f0.kind(), node_kind::constant );
  EXPECT_TRUE( f0.constant_value() );

  auto const f5 = compare_synth( bit_constant( 5u, 3u ) );
  EXPECT_TRUE( structurally_equal( f5, x( 1 ) & ( x( 2 ) | x( 3 ) ) ) );
  EXPECT_EQ( f5.mult_cost(), 2u );

  EXPECT_THROW( compare_synth( bit_constant( 16u, 4u ) ), usage_error );
}

TEST( CompareSynth, ExhaustiveUpTo8Bits )
{
  for ( std::uint32_t n = 1; n <= 8u; ++n )
  {
    for ( std::uint64_t a = 0; a < ( std::uint64_t{ 1 } << n ); ++a )
    {
      bit_constant const c( a, n );
      auto const f = compare_synth( c );
      ASSERT_EQ( to_truth_table( f, n ), oracles::interval_table( n, a, std::uint64_t{ 1 } << n ) ) << "n=" << n << " a=" << a;
      if ( a > 0u )
      {
        EXPECT_EQ( f.mult_cost(), n - c.trailing_zeros() - 1u );
      }
    }
  }
}

/* rewrite rules */

TEST( Rules, XorMergeIdentitiesHold )
{
  // x = x1, chains over x2 ..
  for ( std::uint32_t l1 = 0; l1 <= 5u; ++l1 )
  {
    for ( auto const& f1 : oracles::all_chains( 2u, l1 ) )
    {
      auto const n = 2u + std::max( l1, 5u );
      auto const xt = oracles::var_table( n, 1u );
      auto const t1 = oracles::chain_table( f1, n );
      auto const g1 = chain_to_formula( f1 );

      EXPECT_EQ( to_truth_table( rules::xor_end_and( x( 1 ), g1 ), n ), xt ^ ( xt & t1 ) );
      EXPECT_EQ( to_truth_table( rules::xor_end_or( x( 1 ), g1 ), n ), xt ^ ( xt | t1 ) );

      for ( std::uint32_t l2 = 0; l2 <= 5u; ++l2 )
      {
        for ( auto const& f2 : oracles::all_chains( 2u, l2 ) )
        {
          auto const t2 = oracles::chain_table( f2, n );
          auto const rest = chain_to_formula( f1 ) ^ chain_to_formula( f2 );
          EXPECT_EQ( to_truth_table( rules::xor_same_and( x( 1 ), rest ), n ), ( xt & t1 ) ^ ( xt & t2 ) );
          EXPECT_EQ( to_truth_table( rules::xor_same_or( x( 1 ), rest ), n ), ( xt | t1 ) ^ ( xt | t2 ) );
          // mixed operators become an ite
          EXPECT_EQ( ( xt | t1 ) ^ ( xt & t2 ), oracles::ite_table( xt, ~t2, t1 ) );
        }
      }
    }
  }
}

TEST( Rules, IteTerminalIdentitiesHold )
{
  // xi = x1, xj = x2, f over x3 ..
  auto const n = 9u;
  auto const xi = oracles::var_table( n, 1u );
  auto const xj = oracles::var_table( n, 2u );
  EXPECT_EQ( to_truth_table( rules::ite_equal( x( 1 ), x( 2 ) ), n ), oracles::ite_table( xi, ~xj, xj ) );

  for ( std::uint32_t len = 0; len <= 5u; ++len )
  {
    for ( auto const& c : oracles::all_chains( 3u, len ) )
    {
      auto const f = chain_to_formula( c );
      auto const tf = oracles::chain_table( c, n );
      EXPECT_EQ( to_truth_table( rules::ite_else_longer_and( x( 1 ), x( 2 ), f ), n ), oracles::ite_table( xi, ~xj, xj & tf ) );
      EXPECT_EQ( to_truth_table( rules::ite_else_longer_or( x( 1 ), x( 2 ), f ), n ), oracles::ite_table( xi, ~xj, xj | tf ) );
      for ( auto form : { terminal_form::folded, terminal_form::split } )
      {
        EXPECT_EQ( to_truth_table( rules::ite_then_longer_and( x( 1 ), x( 2 ), f, form ), n ), oracles::ite_table( xi, ~( xj & tf ), xj ) );
        EXPECT_EQ( to_truth_table( rules::ite_then_longer_or( x( 1 ), x( 2 ), f, form ), n ), oracles::ite_table( xi, ~( xj | tf ), xj ) );
      }
    }
  }
}

TEST( Rules, IteNonTerminalIdentitiesHold )
{
  auto const n = 8u;
  auto const xi = oracles::var_table( n, 1u );
  auto const xj = oracles::var_table( n, 2u );
  for ( std::uint32_t l1 = 0; l1 <= 5u; ++l1 )
  {
    for ( auto const& c1 : oracles::all_chains( 3u, l1 ) )
    {
      auto const t1 = oracles::chain_table( c1, n );
      for ( std::uint32_t l2 = 0; l2 <= 5u; ++l2 )
      {
        for ( auto const& c2 : oracles::all_chains( 3u, l2 ) )
        {
          auto const t2 = oracles::chain_table( c2, n );
          auto const rest = ( x( 1 ) & !chain_to_formula( c2 ) ) ^ ( !x( 1 ) & chain_to_formula( c1 ) );
          EXPECT_EQ( to_truth_table( rules::ite_and_or( x( 1 ), x( 2 ), rest ), n ), oracles::ite_table( xi, ~( xj | t2 ), xj & t1 ) );
          EXPECT_EQ( to_truth_table( rules::ite_or_and( x( 1 ), x( 2 ), rest ), n ), oracles::ite_table( xi, ~( xj & t2 ), xj | t1 ) );
          EXPECT_EQ( to_truth_table( rules::ite_and_and( x( 1 ), x( 2 ), rest ), n ), oracles::ite_table( xi, ~( xj & t2 ), xj & t1 ) );
          EXPECT_EQ( to_truth_table( rules::ite_or_or( x( 1 ), x( 2 ), rest ), n ), oracles::ite_table( xi, ~( xj | t2 ), xj | t1 ) );
        }
      }
    }
  }
}

/* ite merge */

TEST( IteChainMerge, WorkedExamples )
{
  // different operators everywhere
  auto const e1 = ite_chain_merge( 1u, chain( { 2u, 3u, 4u }, { AND, OR } ), chain( { 2u, 3u, 4u }, { OR, AND } ) );
  EXPECT_TRUE( structurally_equal( e1, ( x( 1 ) ^ x( 2 ) ) | ( ( x( 1 ) ^ x( 3 ) ) & ( x( 1 ) ^ x( 4 ) ) ) ) ) << e1.to_string();

  // leading operator shared
  auto const e2 = ite_chain_merge( 1u, chain( { 2u, 3u, 4u }, { OR, OR } ), chain( { 2u, 3u, 4u }, { OR, AND } ) );
  EXPECT_TRUE( structurally_equal( e2, x( 1 ) ^ ( x( 2 ) | ( x( 1 ) ^ ( ( x( 1 ) ^ x( 3 ) ) & ( x( 1 ) ^ x( 4 ) ) ) ) ) ) ) << e2.to_string();

  // negated chain is longer
  auto const e3 = ite_chain_merge( 1u, chain( { 2u, 3u, 4u, 5u }, { OR, AND, OR } ), chain( { 2u, 3u, 4u }, { AND, OR } ) );
  EXPECT_TRUE( structurally_equal( e3, ( x( 1 ) ^ x( 2 ) ) & ( ( x( 1 ) ^ x( 3 ) ) | ( x( 1 ) ^ ( x( 4 ) | ( x( 1 ) & x( 5 ) ) ) ) ) ) ) << e3.to_string();
}

TEST( IteChainMerge, RejectsSelectorInChain )
{
  EXPECT_THROW( ite_chain_merge( 3u, chain( { 2u, 3u }, { AND } ), chain( { 2u, 3u }, { OR } ) ), usage_error );
  EXPECT_THROW( ite_chain_merge( 1u, chain( { 2u, 3u }, { AND } ), chain( { 3u, 4u }, { OR } ) ), usage_error );
  EXPECT_THROW( ite_chain_merge( 1u, and_or_chain::constant( true ), chain( { 2u }, {} ) ), usage_error );
}

TEST( IteChainMerge, GateCountAndSemanticsExhaustive )
{
  for ( auto form : { terminal_form::folded, terminal_form::split } )
  {
    for ( std::uint32_t l1 = 0; l1 <= 6u; ++l1 )
    {
      for ( std::uint32_t l2 = 0; l2 <= 6u; ++l2 )
      {
        auto const n = 2u + std::max( l1, l2 );
        auto const xi = oracles::var_table( n, 1u );
        for ( auto const& f1 : oracles::all_chains( 2u, l1 ) )
        {
          auto const t1 = oracles::chain_table( f1, n );
          for ( auto const& f2 : oracles::all_chains( 2u, l2 ) )
          {
            auto const f = ite_chain_merge( 1u, f2, f1, form );
            ASSERT_EQ( f.mult_cost(), expected_ite_cost( l1, l2 ) );
            ASSERT_EQ( to_truth_table( f, n ), oracles::ite_table( xi, ~oracles::chain_table( f2, n ), t1 ) );
          }
        }
      }
    }
  }
}

/* xor merge */

TEST( XorChainMerge, Examples )
{
  auto const m1 = xor_chain_merge( chain( { 1u, 2u }, { OR } ), chain( { 1u }, {} ) );
  EXPECT_TRUE( structurally_equal( m1, !x( 1 ) & x( 2 ) ) ) << m1.to_string();
  EXPECT_EQ( m1.mult_cost(), 1u );
  // [2 <= x < 4] on 3 bits depends on the top two bits only
  auto const t1 = to_truth_table( m1, 2u );
  for ( std::uint64_t v = 0; v < 8u; ++v )
  {
    EXPECT_EQ( t1.get( v >> 1 ), 2u <= v && v < 4u );
  }

  auto const m2 = xor_chain_merge( chain( { 1u, 2u }, { OR } ), chain( { 1u, 2u }, { AND } ) );
  EXPECT_TRUE( structurally_equal( m2, x( 1 ) ^ x( 2 ) ) ) << m2.to_string();
  EXPECT_EQ( m2.mult_cost(), 0u );

  auto const m3 = xor_chain_merge( chain( { 1u, 2u, 3u }, { OR, AND } ), chain( { 1u, 2u, 3u }, { AND, OR } ) );
  EXPECT_EQ( m3.mult_cost(), 1u );
  EXPECT_EQ( to_truth_table( m3, 3u ), oracles::interval_table( 3u, 3u, 5u ) );
}

TEST( XorChainMerge, RejectsIdenticalOrMisalignedChains )
{
  EXPECT_THROW( xor_chain_merge( chain( { 1u, 2u }, { OR } ), chain( { 1u, 2u }, { OR } ) ), usage_error );
  EXPECT_THROW( xor_chain_merge( chain( { 1u, 2u }, { OR } ), chain( { 2u, 3u }, { AND } ) ), usage_error );
  EXPECT_THROW( xor_chain_merge( and_or_chain::constant( true ), chain( { 1u }, {} ) ), usage_error );
}

TEST( XorChainMerge, GateCountAndSemanticsExhaustive )
{
  for ( auto form : { terminal_form::folded, terminal_form::split } )
  {
    for ( std::uint32_t l1 = 0; l1 <= 6u; ++l1 )
    {
      for ( std::uint32_t l2 = 0; l2 <= 6u; ++l2 )
      {
        auto const n = 1u + std::max( l1, l2 );
        for ( auto const& f1 : oracles::all_chains( 1u, l1 ) )
        {
          auto const t1 = oracles::chain_table( f1, n );
          for ( auto const& f2 : oracles::all_chains( 1u, l2 ) )
          {
            if ( f1 == f2 )
            {
              continue;
            }
            auto const f = xor_chain_merge( f1, f2, form );
            ASSERT_EQ( f.mult_cost(), expected_xor_cost( l1, l2 ) );
            ASSERT_EQ( to_truth_table( f, n ), t1 ^ oracles::chain_table( f2, n ) );
          }
        }
      }
    }
  }
}

/* interval */

TEST( IntervalSpec, Validation )
{
  EXPECT_THROW( interval_spec( 3u, 4u, 4u ), usage_error );
  EXPECT_THROW( interval_spec( 3u, 5u, 2u ), usage_error );
  EXPECT_THROW( interval_spec( 3u, 0u, 9u ), usage_error );
  EXPECT_THROW( interval_spec( 0u, 0u, 1u ), usage_error );
  EXPECT_TRUE( interval_spec( 3u, 1u, 7u ).in_theorem_domain() );
  EXPECT_FALSE( interval_spec( 3u, 0u, 7u ).in_theorem_domain() );
  EXPECT_FALSE( interval_spec( 3u, 1u, 8u ).in_theorem_domain() );
}

TEST( IntervalFormula, Examples )
{
  auto const f24 = interval_formula( interval_spec( 3u, 2u, 4u ) );
  EXPECT_EQ( to_truth_table( f24, 3u ), oracles::interval_table( 3u, 2u, 4u ) );
  EXPECT_EQ( f24.mult_cost(), 1u );

  auto const f26 = interval_formula( interval_spec( 3u, 2u, 6u ) );
  EXPECT_TRUE( structurally_equal( f26, x( 1 ) ^ x( 2 ) ) ) << f26.to_string();
  EXPECT_EQ( f26.mult_cost(), 0u );

  auto const f01 = interval_formula( interval_spec( 1u, 0u, 1u ) );
  EXPECT_TRUE( structurally_equal( f01, !x( 1 ) ) ) << f01.to_string();

  auto const full = interval_formula( interval_spec( 3u, 0u, 8u ) );
  ASSERT_EQ( full.kind(), node_kind::constant );
  EXPECT_TRUE( full.constant_value() );
}

TEST( IntervalFormula, ExhaustiveExtendedDomainUpTo6Bits )
{
  for ( std::uint32_t n = 1; n <= 6u; ++n )
  {
    auto const full = std::uint64_t{ 1 } << n;
    for ( std::uint64_t a = 0; a < full; ++a )
    {
      for ( std::uint64_t b = a + 1u; b <= full; ++b )
      {
        interval_spec const spec( n, a, b );
        auto const f = interval_formula( spec );
        ASSERT_EQ( to_truth_table( f, n ), oracles::interval_table( n, a, b ) ) << "n=" << n << " a=" << a << " b=" << b;
        ASSERT_EQ( f.mult_cost(), predicted_mc( spec ) ) << "n=" << n << " a=" << a << " b=" << b;
        if ( spec.in_theorem_domain() )
        {
          auto const ca = n - spec.a().trailing_zeros() - 1u;
          auto const cb = n - spec.b().trailing_zeros() - 1u;
          EXPECT_LE( f.mult_cost(), std::max( ca, cb ) );
        }
      }
    }
  }
}

TEST( IntervalFormula, MatchesReferenceConstruction )
{
  for ( std::uint32_t n = 1; n <= 6u; ++n )
  {
    auto const full = std::uint64_t{ 1 } << n;
    for ( std::uint64_t a = 1; a < full; ++a )
    {
      for ( std::uint64_t b = a + 1u; b < full; ++b )
      {
        interval_spec const spec( n, a, b );
        auto const reference = oracles::reference_interval( n, a, b );
        auto const split = interval_formula( spec, terminal_form::split );
        auto const folded = interval_formula( spec, terminal_form::folded );
        ASSERT_TRUE( structurally_equal( split, reference ) ) << "n=" << n << " a=" << a << " b=" << b << ": " << split.to_string() << " vs " << reference.to_string();
        ASSERT_EQ( to_truth_table( folded, n ), to_truth_table( reference, n ) );
        ASSERT_EQ( folded.mult_cost(), reference.mult_cost() );
      }
    }
  }
}

TEST( NaiveInterval, Examples )
{
  auto const n26 = naive_interval( interval_spec( 3u, 2u, 6u ) );
  EXPECT_TRUE( structurally_equal( n26, ( x( 1 ) | x( 2 ) ) ^ ( x( 1 ) & x( 2 ) ) ) ) << n26.to_string();
  EXPECT_EQ( n26.mult_cost(), 2u );

  EXPECT_EQ( naive_interval( interval_spec( 4u, 3u, 9u ) ).mult_cost(), 6u );

  auto const n04 = naive_interval( interval_spec( 3u, 0u, 4u ) );
  EXPECT_TRUE( structurally_equal( n04, !x( 1 ) ) ) << n04.to_string();
  EXPECT_EQ( n04.mult_cost(), 0u );
}

TEST( NaiveInterval, DominatedByFusedConstruction )
{
  for ( std::uint32_t n = 1; n <= 6u; ++n )
  {
    auto const full = std::uint64_t{ 1 } << n;
    for ( std::uint64_t a = 0; a < full; ++a )
    {
      for ( std::uint64_t b = a + 1u; b <= full; ++b )
      {
        interval_spec const spec( n, a, b );
        auto const naive = naive_interval( spec );
        auto const fused = interval_formula( spec ).mult_cost();
        ASSERT_EQ( to_truth_table( naive, n ), oracles::interval_table( n, a, b ) );
        ASSERT_LE( fused, naive.mult_cost() );
        auto const ca = a > 0u ? n - spec.a().trailing_zeros() - 1u : 0u;
        auto const cb = b < full ? n - spec.b().trailing_zeros() - 1u : 0u;
        if ( ca > 0u && cb > 0u )
        {
          ASSERT_LT( fused, naive.mult_cost() ) << "n=" << n << " a=" << a << " b=" << b;
        }
      }
    }
  }
}

TEST( PredictedMc, Examples )
{
  EXPECT_EQ( predicted_mc( interval_spec( 3u, 2u, 4u ) ), 1u );
  EXPECT_EQ( predicted_mc( interval_spec( 3u, 2u, 6u ) ), 0u );
  EXPECT_EQ( predicted_mc( interval_spec( 8u, 1u, 255u ) ), 6u );
  EXPECT_EQ( predicted_mc( interval_spec( 4u, 3u, 9u ) ), 2u );
  // extended domain
  EXPECT_EQ( predicted_mc( interval_spec( 4u, 0u, 9u ) ), 3u );
  EXPECT_EQ( predicted_mc( interval_spec( 4u, 12u, 16u ) ), 1u );
  EXPECT_EQ( predicted_mc( interval_spec( 4u, 0u, 16u ) ), 0u );
}

TEST( PredictedMc, DegreeWitnessUpTo6Bits )
{
  for ( std::uint32_t n = 1; n <= 6u; ++n )
  {
    auto const full = std::uint64_t{ 1 } << n;
    for ( std::uint64_t a = 1; a < full; ++a )
    {
      for ( std::uint64_t b = a + 1u; b < full; ++b )
      {
        interval_spec const spec( n, a, b );
        auto const d = degree( anf_of( oracles::interval_table( n, a, b ) ) );
        ASSERT_EQ( d - 1u, predicted_mc( spec ) ) << "n=" << n << " a=" << a << " b=" << b;
      }
    }
  }
}
