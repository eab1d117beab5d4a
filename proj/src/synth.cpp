#include <interval_xag/errors.hpp>
#include <interval_xag/synth.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace interval_xag
{

interval_spec::interval_spec( std::uint32_t n, std::uint64_t a, std::uint64_t b )
    : n_( n ), a_( a, n ), b_( b, n )
{
  if ( a >= b )
  {
    throw usage_error( "interval requires a < b, got a = " + std::to_string( a ) + ", b = " + std::to_string( b ) );
  }
}

bool interval_spec::in_theorem_domain() const noexcept
{
  return a_.value() > 0u && !b_.is_full_range();
}

namespace rules
{

formula xor_end_and( formula const& x, formula const& f )
{
  return x & !f;
}

formula xor_end_or( formula const& x, formula const& f )
{
  return ( !x ) & f;
}

formula xor_same_and( formula const& x, formula const& rest )
{
  return x & rest;
}

formula xor_same_or( formula const& x, formula const& rest )
{
  return ( !x ) & rest;
}

formula ite_equal( formula const& xi, formula const& xj )
{
  return xi ^ xj;
}

formula ite_else_longer_and( formula const& xi, formula const& xj, formula const& f )
{
  return ( xi ^ xj ) & ( xi | f );
}

formula ite_else_longer_or( formula const& xi, formula const& xj, formula const& f )
{
  return ( xi ^ xj ) | ( ( !xi ) & f );
}

formula ite_then_longer_and( formula const& xi, formula const& xj, formula const& f, terminal_form form )
{
  if ( form == terminal_form::folded )
  {
    return xi ^ ( xj & ( ( !xi ) | f ) );
  }
  return ( xi ^ xj ) | ( xi & !f );
}

formula ite_then_longer_or( formula const& xi, formula const& xj, formula const& f, terminal_form form )
{
  if ( form == terminal_form::folded )
  {
    return xi ^ ( xj | ( xi & f ) );
  }
  return ( xi ^ xj ) & ( ( !xi ) | ( !f ) );
}

formula ite_and_or( formula const& xi, formula const& xj, formula const& rest )
{
  return ( xi ^ xj ) & rest;
}

formula ite_or_and( formula const& xi, formula const& xj, formula const& rest )
{
  return ( xi ^ xj ) | rest;
}

formula ite_and_and( formula const& xi, formula const& xj, formula const& rest )
{
  return xi ^ ( xj & ( xi ^ rest ) );
}

formula ite_or_or( formula const& xi, formula const& xj, formula const& rest )
{
  return xi ^ ( xj | ( xi ^ rest ) );
}

} // namespace rules

and_or_chain comparison_chain( bit_constant const& a, std::uint32_t lo, std::uint32_t hi )
{
  if ( lo == 0u || lo > hi || hi > a.width() )
  {
    throw usage_error( "comparison range [" + std::to_string( lo ) + ", " + std::to_string( hi ) + "] is empty or outside [1, " + std::to_string( a.width() ) + "]" );
  }
  std::vector<std::uint32_t> vars;
  std::vector<chain_op> ops;
  for ( auto k = lo; k < hi; ++k )
  {
    vars.push_back( k );
    ops.push_back( a.bit( k ) ? chain_op::op_and : chain_op::op_or );
  }
  vars.push_back( hi );
  return and_or_chain( std::move( vars ), std::move( ops ) );
}

and_or_chain compare_chain( bit_constant const& a )
{
  if ( a.value() == 0u )
  {
    return and_or_chain::constant( true );
  }
  if ( a.is_full_range() )
  {
    return and_or_chain::constant( false );
  }
  return comparison_chain( a, 1u, a.width() - a.trailing_zeros() );
}

formula compare_synth( bit_constant const& a )
{
  if ( a.is_full_range() )
  {
    throw usage_error( "comparison constant must be below 2^n" );
  }
  return chain_to_formula( compare_chain( a ) );
}

namespace
{

formula ite_merge_rec( formula const& xi, and_or_chain const& f2, and_or_chain const& f1, terminal_form form )
{
  auto const xj = formula::var( f1.head() );

  if ( f1.length() == 0u && f2.length() == 0u )
  {
    return rules::ite_equal( xi, xj );
  }
  if ( f2.length() == 0u )
  {
    auto const g = chain_to_formula( f1.tail() );
    return f1.head_op() == chain_op::op_and ? rules::ite_else_longer_and( xi, xj, g )
                                            : rules::ite_else_longer_or( xi, xj, g );
  }
  if ( f1.length() == 0u )
  {
    auto const g = chain_to_formula( f2.tail() );
    return f2.head_op() == chain_op::op_and ? rules::ite_then_longer_and( xi, xj, g, form )
                                            : rules::ite_then_longer_or( xi, xj, g, form );
  }

  auto const rest = ite_merge_rec( xi, f2.tail(), f1.tail(), form );
  auto const op1 = f1.head_op();
  auto const op2 = f2.head_op();
  if ( op1 == chain_op::op_and )
  {
    return op2 == chain_op::op_or ? rules::ite_and_or( xi, xj, rest ) : rules::ite_and_and( xi, xj, rest );
  }
  return op2 == chain_op::op_and ? rules::ite_or_and( xi, xj, rest ) : rules::ite_or_or( xi, xj, rest );
}

void require_chain( and_or_chain const& c, char const* name )
{
  if ( c.is_constant() )
  {
    throw usage_error( std::string( name ) + " must not be a constant chain" );
  }
}

} // namespace

formula ite_chain_merge( std::uint32_t x, and_or_chain const& f2, and_or_chain const& f1, terminal_form form )
{
  require_chain( f1, "f1" );
  require_chain( f2, "f2" );
  if ( f1.head() != f2.head() )
  {
    throw usage_error( "ite_chain_merge: chains must start at the same variable" );
  }
  if ( f1.contains( x ) || f2.contains( x ) )
  {
    throw usage_error( "ite_chain_merge: selector x" + std::to_string( x ) + " occurs in a chain" );
  }
  return ite_merge_rec( formula::var( x ), f2, f1, form );
}

formula xor_chain_merge( and_or_chain const& f1, and_or_chain const& f2, terminal_form form )
{
  require_chain( f1, "f1" );
  require_chain( f2, "f2" );
  if ( f1 == f2 )
  {
    throw usage_error( "xor_chain_merge: identical chains" );
  }
  {
    auto const v1 = f1.variables();
    auto const v2 = f2.variables();
    auto const m = std::min( v1.size(), v2.size() );
    if ( !std::equal( v1.begin(), v1.begin() + m, v2.begin() ) )
    {
      throw usage_error( "xor_chain_merge: variable lists must share a prefix" );
    }
  }

  /* identical leading operators factor out of the XOR */
  std::vector<std::pair<std::uint32_t, chain_op>> prefix;
  auto c1 = f1;
  auto c2 = f2;
  while ( c1.length() > 0u && c2.length() > 0u && c1.head_op() == c2.head_op() )
  {
    prefix.emplace_back( c1.head(), c1.head_op() );
    c1 = c1.tail();
    c2 = c2.tail();
  }

  auto const x = formula::var( c1.head() );
  auto core = formula::constant( false );
  if ( c1.length() == 0u || c2.length() == 0u )
  {
    auto const& longer = c1.length() == 0u ? c2 : c1;
    if ( longer.length() == 0u )
    {
      throw std::logic_error( "xor_chain_merge: distinct chains collapsed to the same variable" );
    }
    auto const g = chain_to_formula( longer.tail() );
    core = longer.head_op() == chain_op::op_and ? rules::xor_end_and( x, g ) : rules::xor_end_or( x, g );
  }
  else
  {
    /* (x | g1) ^ (x & g2) = ite( x, !g2, g1 ) */
    auto const& or_side = c1.head_op() == chain_op::op_or ? c1 : c2;
    auto const& and_side = c1.head_op() == chain_op::op_or ? c2 : c1;
    core = ite_chain_merge( c1.head(), and_side.tail(), or_side.tail(), form );
  }

  for ( auto it = prefix.rbegin(); it != prefix.rend(); ++it )
  {
    auto const xv = formula::var( it->first );
    core = it->second == chain_op::op_and ? rules::xor_same_and( xv, core ) : rules::xor_same_or( xv, core );
  }
  return core;
}

formula interval_formula( interval_spec const& spec, terminal_form form )
{
  auto const a_zero = spec.a().value() == 0u;
  auto const b_full = spec.b().is_full_range();
  if ( a_zero && b_full )
  {
    return formula::constant( true );
  }
  if ( a_zero )
  {
    return !compare_synth( spec.b() );
  }
  if ( b_full )
  {
    return compare_synth( spec.a() );
  }

  auto const fa = compare_chain( spec.a() );
  auto const fb = compare_chain( spec.b() );
  if ( fa == fb )
  {
    throw std::logic_error( "reduced comparison chains of distinct bounds coincide" );
  }
  return xor_chain_merge( fa, fb, form );
}

formula naive_interval( interval_spec const& spec )
{
  auto const fa = chain_to_formula( compare_chain( spec.a() ) );
  auto const fb = chain_to_formula( compare_chain( spec.b() ) );
  if ( fb.kind() == node_kind::constant )
  {
    return fa;
  }
  if ( fa.kind() == node_kind::constant )
  {
    return !fb;
  }
  return fa ^ fb;
}

std::uint32_t predicted_mc( interval_spec const& spec )
{
  auto const n = static_cast<std::int64_t>( spec.n() );
  auto const ja = static_cast<std::int64_t>( spec.a().trailing_zeros() );
  auto const jb = static_cast<std::int64_t>( spec.b().trailing_zeros() );
  auto const cost = ja != jb ? n - std::min( ja, jb ) - 1 : n - ja - 2;
  return static_cast<std::uint32_t>( std::max<std::int64_t>( cost, 0 ) );
}

} // namespace interval_xag
