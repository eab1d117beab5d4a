#include <interval_xag.h>

#include <interval_xag/anf.hpp>
#include <interval_xag/errors.hpp>
#include <interval_xag/export.hpp>
#include <interval_xag/oracle.hpp>
#include <interval_xag/sweep.hpp>
#include <interval_xag/synth.hpp>

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>
#include <vector>

using namespace interval_xag;

struct ixag_circuit
{
  std::uint32_t width;
  std::optional<formula> source;
  netlist net;
};

struct ixag_sweep
{
  std::vector<oracle_report> rows;
};

namespace
{

thread_local std::string last_error;

template<typename Fn>
ixag_status guarded( Fn&& fn ) noexcept
{
  try
  {
    fn();
    last_error.clear();
    return IXAG_OK;
  }
  catch ( usage_error const& e )
  {
    last_error = e.what();
    return IXAG_ERR_USAGE;
  }
  catch ( resource_error const& e )
  {
    last_error = e.what();
    return IXAG_ERR_RESOURCE;
  }
  catch ( parse_error const& e )
  {
    last_error = e.what();
    return IXAG_ERR_PARSE;
  }
  catch ( validation_error const& e )
  {
    last_error = e.what();
    return IXAG_ERR_VALIDATION;
  }
  catch ( std::exception const& e )
  {
    last_error = e.what();
    return IXAG_ERR_INTERNAL;
  }
  catch ( ... )
  {
    last_error = "unknown error";
    return IXAG_ERR_INTERNAL;
  }
}

void require( void const* p, char const* name )
{
  if ( p == nullptr )
  {
    throw usage_error( std::string( name ) + " must not be null" );
  }
}

char* dup_string( std::string const& s )
{
  auto* out = static_cast<char*>( std::malloc( s.size() + 1u ) );
  if ( out == nullptr )
  {
    throw std::bad_alloc();
  }
  std::memcpy( out, s.c_str(), s.size() + 1u );
  return out;
}

ixag_circuit* make_circuit( std::uint32_t n, formula f )
{
  auto net = lower_to_netlist( f, n );
  return new ixag_circuit{ n, std::move( f ), std::move( net ) };
}

ixag_report to_c( oracle_report const& r )
{
  ixag_report out{};
  out.n = r.n;
  out.a = r.a;
  out.b = r.b;
  out.ja = r.ja;
  out.jb = r.jb;
  out.equivalent = r.equivalent ? 1 : 0;
  out.has_counterexample = r.counterexample ? 1 : 0;
  out.counterexample = r.counterexample.value_or( 0u );
  out.actual = r.actual;
  out.predicted = r.predicted;
  out.naive = r.naive;
  out.degree = r.degree;
  out.in_theorem_domain = r.in_theorem_domain ? 1 : 0;
  return out;
}

} // namespace

extern "C" {

char const* ixag_last_error( void )
{
  return last_error.c_str();
}

char const* ixag_version( void )
{
  return "0.1.0";
}

void ixag_string_free( char* s )
{
  std::free( s );
}

ixag_status ixag_compare_synth( uint32_t n, uint64_t a, ixag_circuit** out )
{
  return guarded( [&] {
    require( out, "out" );
    *out = make_circuit( n, compare_synth( bit_constant( a, n ) ) );
  } );
}

ixag_status ixag_interval_synth( uint32_t n, uint64_t a, uint64_t b, ixag_circuit** out )
{
  return guarded( [&] {
    require( out, "out" );
    *out = make_circuit( n, interval_formula( interval_spec( n, a, b ) ) );
  } );
}

ixag_status ixag_naive_interval( uint32_t n, uint64_t a, uint64_t b, ixag_circuit** out )
{
  return guarded( [&] {
    require( out, "out" );
    *out = make_circuit( n, naive_interval( interval_spec( n, a, b ) ) );
  } );
}

ixag_status ixag_circuit_parse( char const* text, ixag_format format, ixag_circuit** out )
{
  return guarded( [&] {
    require( text, "text" );
    require( out, "out" );
    netlist net;
    switch ( format )
    {
    case IXAG_FORMAT_BRISTOL:
      net = from_bristol( text );
      break;
    case IXAG_FORMAT_JSON:
      net = from_json( text );
      break;
    default:
      throw usage_error( "only Bristol and JSON netlists can be parsed" );
    }
    auto const width = net.num_inputs;
    *out = new ixag_circuit{ width, std::nullopt, std::move( net ) };
  } );
}

void ixag_circuit_free( ixag_circuit* c )
{
  delete c;
}

ixag_status ixag_circuit_width( ixag_circuit const* c, uint32_t* out )
{
  return guarded( [&] {
    require( c, "circuit" );
    require( out, "out" );
    *out = c->width;
  } );
}

ixag_status ixag_circuit_and_count( ixag_circuit const* c, uint32_t* out )
{
  return guarded( [&] {
    require( c, "circuit" );
    require( out, "out" );
    *out = c->source ? c->source->mult_cost() : c->net.and_count();
  } );
}

ixag_status ixag_circuit_eval( ixag_circuit const* c, uint64_t x, int* out )
{
  return guarded( [&] {
    require( c, "circuit" );
    require( out, "out" );
    if ( c->width < 64u && x >= ( std::uint64_t{ 1 } << c->width ) )
    {
      throw usage_error( "input " + std::to_string( x ) + " does not fit in " + std::to_string( c->width ) + " bits" );
    }
    *out = ( c->source ? c->source->eval( x, c->width ) : evaluate( c->net, x ) ) ? 1 : 0;
  } );
}

ixag_status ixag_circuit_degree( ixag_circuit const* c, uint32_t* out )
{
  return guarded( [&] {
    require( c, "circuit" );
    require( out, "out" );
    auto const tt = c->source ? to_truth_table( *c->source, c->width ) : simulate( c->net );
    *out = degree( anf_of( tt ) );
  } );
}

ixag_status ixag_circuit_render( ixag_circuit const* c, ixag_format format, char** out )
{
  return guarded( [&] {
    require( c, "circuit" );
    require( out, "out" );
    switch ( format )
    {
    case IXAG_FORMAT_EXPR:
      if ( !c->source )
      {
        throw usage_error( "parsed netlists have no expression form" );
      }
      *out = dup_string( c->source->to_string() );
      break;
    case IXAG_FORMAT_BRISTOL:
      *out = dup_string( to_bristol( c->net ) );
      break;
    case IXAG_FORMAT_JSON:
      *out = dup_string( to_json( c->net ) );
      break;
    default:
      throw usage_error( "unknown output format" );
    }
  } );
}

ixag_status ixag_predicted_mc( uint32_t n, uint64_t a, uint64_t b, uint32_t* out )
{
  return guarded( [&] {
    require( out, "out" );
    *out = predicted_mc( interval_spec( n, a, b ) );
  } );
}

ixag_status ixag_check( uint32_t n, uint64_t a, uint64_t b, uint32_t max_width, ixag_report* out )
{
  return guarded( [&] {
    require( out, "out" );
    *out = to_c( check( interval_spec( n, a, b ), max_width ) );
  } );
}

ixag_status ixag_sweep_run( uint32_t n, size_t sample, uint64_t seed, int theorem_domain_only, uint32_t max_width, ixag_sweep** out )
{
  return guarded( [&] {
    require( out, "out" );
    auto const domain = theorem_domain_only ? pair_domain::theorem : pair_domain::extended;
    auto const count = sample == 0u ? std::nullopt : std::optional<std::size_t>( sample );
    auto pairs = sweep_pairs( n, count, seed, domain );
    *out = new ixag_sweep{ run_sweep( n, pairs, max_width ) };
  } );
}

size_t ixag_sweep_size( ixag_sweep const* s )
{
  return s ? s->rows.size() : 0u;
}

ixag_status ixag_sweep_row( ixag_sweep const* s, size_t index, ixag_report* out )
{
  return guarded( [&] {
    require( s, "sweep" );
    require( out, "out" );
    if ( index >= s->rows.size() )
    {
      throw usage_error( "sweep row index out of range" );
    }
    *out = to_c( s->rows[index] );
  } );
}

void ixag_sweep_free( ixag_sweep* s )
{
  delete s;
}

} // extern "C"
