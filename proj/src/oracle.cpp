#include <interval_xag/anf.hpp>
#include <interval_xag/errors.hpp>
#include <interval_xag/oracle.hpp>

#include <string>

namespace interval_xag
{

truth_table interval_oracle_table( interval_spec const& spec )
{
  truth_table tt( spec.n() );
  auto const a = spec.a().value();
  auto const b = spec.b().value();

  /* fill [a, b) word by word */
  auto words = tt.words();
  for ( std::size_t i = 0; i < words.size(); ++i )
  {
    auto const lo = std::uint64_t{ i } << 6;
    auto const hi = lo + 64u;
    if ( b <= lo || a >= hi )
    {
      continue;
    }
    auto const from = a > lo ? a - lo : 0u;
    auto const to = b < hi ? b - lo : 64u;
    auto const upper = to == 64u ? ~std::uint64_t{ 0 } : ( std::uint64_t{ 1 } << to ) - 1u;
    auto const lower = ( std::uint64_t{ 1 } << from ) - 1u;
    words[i] = upper & ~lower;
  }
  return tt;
}

oracle_report check( interval_spec const& spec, std::uint32_t max_width )
{
  if ( spec.n() > max_width )
  {
    throw resource_error( "verification width " + std::to_string( spec.n() ) + " exceeds the guard of " + std::to_string( max_width ) );
  }

  oracle_report report;
  report.n = spec.n();
  report.a = spec.a().value();
  report.b = spec.b().value();
  report.ja = spec.a().trailing_zeros();
  report.jb = spec.b().trailing_zeros();
  report.in_theorem_domain = spec.in_theorem_domain();

  auto const f = interval_formula( spec );
  auto const actual_tt = to_truth_table( f, spec.n() );
  auto const expected_tt = interval_oracle_table( spec );

  report.counterexample = actual_tt.first_difference( expected_tt );
  report.equivalent = !report.counterexample.has_value();
  report.actual = f.mult_cost();
  report.predicted = predicted_mc( spec );
  report.naive = naive_interval( spec ).mult_cost();
  report.degree = degree( anf_of( actual_tt ) );
  return report;
}

} // namespace interval_xag
