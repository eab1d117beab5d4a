#include <interval_xag.h>

#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

namespace
{

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_io = 3;

struct usage_failure
{
  std::string message;
};

struct circuit_deleter
{
  void operator()( ixag_circuit* c ) const { ixag_circuit_free( c ); }
};
struct sweep_deleter
{
  void operator()( ixag_sweep* s ) const { ixag_sweep_free( s ); }
};
struct string_deleter
{
  void operator()( char* s ) const { ixag_string_free( s ); }
};

using circuit_ptr = std::unique_ptr<ixag_circuit, circuit_deleter>;
using sweep_ptr = std::unique_ptr<ixag_sweep, sweep_deleter>;
using string_ptr = std::unique_ptr<char, string_deleter>;

/* decimal, 0x hex or 0b binary */
std::uint64_t parse_constant( std::string const& text, char const* flag )
{
  std::string_view digits = text;
  int base = 10;
  if ( digits.size() > 2u && digits[0] == '0' && ( digits[1] == 'x' || digits[1] == 'X' ) )
  {
    base = 16;
    digits.remove_prefix( 2 );
  }
  else if ( digits.size() > 2u && digits[0] == '0' && ( digits[1] == 'b' || digits[1] == 'B' ) )
  {
    base = 2;
    digits.remove_prefix( 2 );
  }
  std::uint64_t value = 0u;
  auto const [ptr, ec] = std::from_chars( digits.data(), digits.data() + digits.size(), value, base );
  if ( digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size() )
  {
    throw usage_failure{ std::string( flag ) + ": cannot parse '" + text + "' as a constant" };
  }
  return value;
}

void expect_ok( ixag_status status )
{
  if ( status == IXAG_OK )
  {
    return;
  }
  if ( status == IXAG_ERR_USAGE || status == IXAG_ERR_RESOURCE )
  {
    throw usage_failure{ ixag_last_error() };
  }
  throw std::runtime_error( ixag_last_error() );
}

std::uint32_t verify_width_guard()
{
  if ( char const* env = std::getenv( "INTERVAL_XAG_MAX_N" ); env != nullptr && *env != '\0' )
  {
    std::uint32_t value = 0u;
    std::string_view text = env;
    auto const [ptr, ec] = std::from_chars( text.data(), text.data() + text.size(), value );
    if ( ec != std::errc{} || ptr != text.data() + text.size() )
    {
      throw usage_failure{ "INTERVAL_XAG_MAX_N must be a non-negative integer" };
    }
    return value;
  }
  return 16u;
}

std::uint32_t comparator_cost( std::uint32_t n, std::uint64_t c )
{
  if ( n < 64u && c == ( std::uint64_t{ 1 } << n ) )
  {
    return 0u; /* [2^n <= x] is constant false */
  }
  ixag_circuit* raw = nullptr;
  expect_ok( ixag_compare_synth( n, c, &raw ) );
  circuit_ptr circuit( raw );
  std::uint32_t cost = 0u;
  expect_ok( ixag_circuit_and_count( circuit.get(), &cost ) );
  return cost;
}

struct bounds_options
{
  std::uint32_t n = 0u;
  std::string a;
  std::string b;

  std::uint64_t a_value() const { return parse_constant( a, "--a" ); }
  std::optional<std::uint64_t> b_value() const
  {
    return b.empty() ? std::nullopt : std::optional( parse_constant( b, "--b" ) );
  }
  /* a missing --b means the comparison [a <= x], i.e. b = 2^n */
  std::uint64_t b_or_full() const
  {
    if ( auto v = b_value() )
    {
      return *v;
    }
    if ( n >= 63u )
    {
      throw usage_failure{ "--n too large" };
    }
    return std::uint64_t{ 1 } << n;
  }
};

void add_bounds( CLI::App* cmd, bounds_options& opts, bool b_required )
{
  cmd->add_option( "--n", opts.n, "bit width of x" )->required();
  cmd->add_option( "--a", opts.a, "lower bound (decimal, 0x..., 0b...)" )->required();
  auto* b = cmd->add_option( "--b", opts.b, "exclusive upper bound" );
  if ( b_required )
  {
    b->required();
  }
}

void print_report( ixag_report const& r )
{
  std::printf( "n=%u a=%llu b=%llu ja=%u jb=%u\n", r.n, static_cast<unsigned long long>( r.a ), static_cast<unsigned long long>( r.b ), r.ja, r.jb );
  if ( r.equivalent )
  {
    std::printf( "equivalent: yes\n" );
  }
  else
  {
    std::printf( "equivalent: no (first counterexample x=%llu)\n", static_cast<unsigned long long>( r.counterexample ) );
  }
  std::printf( "and gates: actual %u, predicted %u, naive %u\n", r.actual, r.predicted, r.naive );
  std::printf( "degree: %u (lower bound %u)\n", r.degree, r.degree > 0u ? r.degree - 1u : 0u );
  if ( !r.in_theorem_domain )
  {
    std::printf( "note: bounds outside 0 < a < b < 2^n, prediction uses the extended formula\n" );
  }
}

int run_synth( bounds_options const& opts, std::string const& format, std::string const& out_path )
{
  auto const a = opts.a_value();
  auto const b = opts.b_value();

  ixag_circuit* raw = nullptr;
  expect_ok( b ? ixag_interval_synth( opts.n, a, *b, &raw ) : ixag_compare_synth( opts.n, a, &raw ) );
  circuit_ptr circuit( raw );

  auto const fmt = format == "bristol" ? IXAG_FORMAT_BRISTOL : format == "json" ? IXAG_FORMAT_JSON : IXAG_FORMAT_EXPR;
  char* text_raw = nullptr;
  expect_ok( ixag_circuit_render( circuit.get(), fmt, &text_raw ) );
  string_ptr text( text_raw );

  if ( out_path.empty() )
  {
    std::cout << text.get();
    if ( fmt == IXAG_FORMAT_EXPR )
    {
      std::cout << '\n';
    }
    std::cout.flush();
  }
  else
  {
    std::ofstream os( out_path, std::ios::binary );
    os << text.get();
    if ( fmt == IXAG_FORMAT_EXPR )
    {
      os << '\n';
    }
    if ( !os )
    {
      std::cerr << "error: cannot write " << out_path << '\n';
      return exit_io;
    }
  }

  std::uint32_t cost = 0u;
  expect_ok( ixag_circuit_and_count( circuit.get(), &cost ) );
  if ( b )
  {
    std::uint32_t predicted = 0u;
    expect_ok( ixag_predicted_mc( opts.n, a, *b, &predicted ) );
    std::cerr << "and gates: " << cost << " (predicted " << predicted << ", two comparators "
              << comparator_cost( opts.n, a ) + comparator_cost( opts.n, *b ) << ")\n";
  }
  else
  {
    std::cerr << "and gates: " << cost << '\n';
  }
  return exit_ok;
}

int run_verify( bounds_options const& opts )
{
  auto const guard = verify_width_guard();
  if ( opts.n > guard )
  {
    throw usage_failure{ "--n " + std::to_string( opts.n ) + " exceeds the verification guard " + std::to_string( guard ) + " (INTERVAL_XAG_MAX_N)" };
  }
  ixag_report report{};
  expect_ok( ixag_check( opts.n, opts.a_value(), opts.b_or_full(), guard, &report ) );
  print_report( report );
  return report.equivalent && report.actual == report.predicted ? exit_ok : exit_failed;
}

int run_cost( bounds_options const& opts )
{
  auto const a = opts.a_value();
  auto const b = opts.b_or_full();

  ixag_circuit* raw = nullptr;
  expect_ok( ixag_interval_synth( opts.n, a, b, &raw ) );
  circuit_ptr circuit( raw );
  std::uint32_t actual = 0u;
  expect_ok( ixag_circuit_and_count( circuit.get(), &actual ) );

  std::uint32_t predicted = 0u;
  expect_ok( ixag_predicted_mc( opts.n, a, b, &predicted ) );

  ixag_circuit* naive_raw = nullptr;
  expect_ok( ixag_naive_interval( opts.n, a, b, &naive_raw ) );
  circuit_ptr naive( naive_raw );
  std::uint32_t naive_cost = 0u;
  expect_ok( ixag_circuit_and_count( naive.get(), &naive_cost ) );

  std::printf( "predicted=%u actual=%u naive=%u compare_a=%u compare_b=%u\n", predicted, actual, naive_cost,
               comparator_cost( opts.n, a ), comparator_cost( opts.n, b ) );
  return exit_ok;
}

int run_degree( bounds_options const& opts )
{
  auto const a = opts.a_value();
  auto const b = opts.b_value();
  ixag_circuit* raw = nullptr;
  expect_ok( b ? ixag_interval_synth( opts.n, a, *b, &raw ) : ixag_compare_synth( opts.n, a, &raw ) );
  circuit_ptr circuit( raw );
  std::uint32_t deg = 0u;
  expect_ok( ixag_circuit_degree( circuit.get(), &deg ) );
  std::printf( "degree=%u lower_bound=%u\n", deg, deg > 0u ? deg - 1u : 0u );
  return exit_ok;
}

int run_sweep( std::uint32_t n, std::string const& format, std::size_t sample, std::uint64_t seed, bool theorem_only )
{
  auto const guard = verify_width_guard();
  if ( n > guard )
  {
    throw usage_failure{ "--n " + std::to_string( n ) + " exceeds the verification guard " + std::to_string( guard ) + " (INTERVAL_XAG_MAX_N)" };
  }
  ixag_sweep* raw = nullptr;
  expect_ok( ixag_sweep_run( n, sample, seed, theorem_only ? 1 : 0, guard, &raw ) );
  sweep_ptr sweep( raw );

  char const sep = format == "tsv" ? '\t' : ',';
  std::printf( "n%ca%cb%cja%cjb%cpredicted%cactual%cnaive%cdegree%cequivalent\n", sep, sep, sep, sep, sep, sep, sep, sep, sep );

  std::size_t violations = 0u;
  double best_ratio = 0.0;
  ixag_report best{};
  for ( std::size_t i = 0; i < ixag_sweep_size( sweep.get() ); ++i )
  {
    ixag_report r{};
    expect_ok( ixag_sweep_row( sweep.get(), i, &r ) );
    std::printf( "%u%c%llu%c%llu%c%u%c%u%c%u%c%u%c%u%c%u%c%d\n", r.n, sep, static_cast<unsigned long long>( r.a ), sep,
                 static_cast<unsigned long long>( r.b ), sep, r.ja, sep, r.jb, sep, r.predicted, sep, r.actual, sep, r.naive, sep,
                 r.degree, sep, r.equivalent );
    if ( !r.equivalent || r.actual != r.predicted )
    {
      ++violations;
    }
    if ( r.actual > 0u )
    {
      auto const ratio = static_cast<double>( r.naive ) / static_cast<double>( r.actual );
      if ( ratio > best_ratio )
      {
        best_ratio = ratio;
        best = r;
      }
    }
  }
  std::fflush( stdout );

  if ( best_ratio > 0.0 )
  {
    std::fprintf( stderr, "n=%u max naive/actual ratio %.3f (a=%llu b=%llu, naive %u, actual %u)\n", n, best_ratio,
                  static_cast<unsigned long long>( best.a ), static_cast<unsigned long long>( best.b ), best.naive, best.actual );
  }
  else
  {
    std::fprintf( stderr, "n=%u no row with a positive AND count\n", n );
  }
  if ( violations > 0u )
  {
    std::fprintf( stderr, "error: %zu rows violate equivalence or the predicted cost\n", violations );
    return exit_failed;
  }
  return exit_ok;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "Synthesize and verify AND-minimal interval checks [a <= x < b]" };
  app.require_subcommand( 1 );
  app.set_version_flag( "--version", std::string( ixag_version() ) );

  bounds_options synth_opts;
  std::string format = "expr";
  std::string out_path;
  auto* synth = app.add_subcommand( "synth", "build the circuit for [a <= x < b] (or [a <= x] without --b)" );
  add_bounds( synth, synth_opts, false );
  synth->add_option( "--format", format, "expr, bristol or json" )->check( CLI::IsMember( { "expr", "bristol", "json" } ) );
  synth->add_option( "--out", out_path, "write to a file instead of stdout" );

  bounds_options verify_opts;
  auto* verify = app.add_subcommand( "verify", "check the circuit against a brute-force oracle" );
  add_bounds( verify, verify_opts, false );

  bounds_options cost_opts;
  auto* cost = app.add_subcommand( "cost", "print predicted, actual, naive and comparator AND counts" );
  add_bounds( cost, cost_opts, true );

  bounds_options degree_opts;
  auto* deg = app.add_subcommand( "degree", "algebraic degree of the synthesized function" );
  add_bounds( deg, degree_opts, false );

  std::uint32_t sweep_n = 0u;
  std::string sweep_format = "csv";
  std::size_t sample = 0u;
  std::uint64_t seed = 1u;
  bool theorem_only = false;
  auto* sweep = app.add_subcommand( "sweep", "verify every (a, b) for n <= 8, or a seeded sample above" );
  sweep->add_option( "--n", sweep_n, "bit width of x" )->required();
  sweep->add_option( "--format", sweep_format, "csv or tsv" )->check( CLI::IsMember( { "csv", "tsv" } ) );
  sweep->add_option( "--sample", sample, "number of sampled pairs for n > 8 (default 1000)" );
  sweep->add_option( "--seed", seed, "sampling seed" );
  sweep->add_flag( "--theorem-only", theorem_only, "restrict to 0 < a < b < 2^n" );

  try
  {
    app.parse( argc, argv );
  }
  catch ( CLI::Success const& e )
  {
    return app.exit( e );
  }
  catch ( CLI::ParseError const& e )
  {
    app.exit( e );
    return exit_usage;
  }

  try
  {
    if ( *synth )
    {
      return run_synth( synth_opts, format, out_path );
    }
    if ( *verify )
    {
      return run_verify( verify_opts );
    }
    if ( *cost )
    {
      return run_cost( cost_opts );
    }
    if ( *deg )
    {
      return run_degree( degree_opts );
    }
    return run_sweep( sweep_n, sweep_format, sample, seed, theorem_only );
  }
  catch ( usage_failure const& e )
  {
    std::cerr << "error: " << e.message << '\n';
    return exit_usage;
  }
  catch ( std::exception const& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_failed;
  }
}
