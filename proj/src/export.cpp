#include <interval_xag/errors.hpp>
#include <interval_xag/export.hpp>

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>
#include <unordered_map>

namespace interval_xag
{

std::uint32_t netlist::num_wires() const noexcept
{
  std::uint32_t wires = num_inputs;
  for ( auto const& g : gates )
  {
    wires = std::max( wires, g.output + 1u );
  }
  return wires;
}

std::uint32_t netlist::and_count() const noexcept
{
  return static_cast<std::uint32_t>( std::count_if( gates.begin(), gates.end(), []( gate const& g ) { return g.op == gate_op::op_and; } ) );
}

void validate( netlist const& nl )
{
  if ( nl.num_inputs == 0u )
  {
    throw validation_error( "netlist has no inputs" );
  }
  std::vector<bool> defined( nl.num_wires(), false );
  std::fill_n( defined.begin(), nl.num_inputs, true );
  for ( std::size_t i = 0; i < nl.gates.size(); ++i )
  {
    auto const& g = nl.gates[i];
    for ( std::size_t k = 0; k < g.arity(); ++k )
    {
      auto const in = g.inputs[k];
      if ( in >= defined.size() || !defined[in] )
      {
        throw validation_error( "gate " + std::to_string( i ) + " reads dangling wire " + std::to_string( in ) );
      }
      if ( in >= g.output )
      {
        throw validation_error( "gate " + std::to_string( i ) + " reads wire " + std::to_string( in ) + " which does not precede its output " + std::to_string( g.output ) );
      }
    }
    if ( defined[g.output] )
    {
      throw validation_error( "wire " + std::to_string( g.output ) + " is driven twice" );
    }
    defined[g.output] = true;
  }
  if ( nl.output >= defined.size() || !defined[nl.output] )
  {
    throw validation_error( "output wire " + std::to_string( nl.output ) + " is not driven" );
  }
}

netlist lower_to_netlist( formula const& f, std::uint32_t n )
{
  if ( n == 0u )
  {
    throw usage_error( "netlist needs at least one input" );
  }
  if ( auto const m = f.max_var(); m > n )
  {
    throw usage_error( "formula references x" + std::to_string( m ) + " but the width is " + std::to_string( n ) );
  }

  netlist nl;
  nl.num_inputs = n;
  auto next = n;
  auto emit = [&]( gate_op op, std::uint32_t in0, std::uint32_t in1 = 0u ) {
    nl.gates.push_back( gate{ op, { in0, in1 }, next } );
    return next++;
  };

  std::optional<std::uint32_t> zero;
  std::unordered_map<void const*, std::uint32_t> wire_of;
  auto rec = [&]( auto&& self, formula const& g ) -> std::uint32_t {
    if ( auto it = wire_of.find( g.id() ); it != wire_of.end() )
    {
      return it->second;
    }
    std::uint32_t w = 0u;
    switch ( g.kind() )
    {
    case node_kind::var:
      w = g.var_index() - 1u;
      break;
    case node_kind::constant:
      if ( !zero )
      {
        zero = emit( gate_op::op_xor, 0u, 0u );
      }
      w = g.constant_value() ? emit( gate_op::op_inv, *zero ) : *zero;
      break;
    case node_kind::op_not:
      w = emit( gate_op::op_inv, self( self, g.child( 0 ) ) );
      break;
    case node_kind::op_and:
    {
      auto const l = self( self, g.child( 0 ) );
      auto const r = self( self, g.child( 1 ) );
      w = emit( gate_op::op_and, l, r );
      break;
    }
    case node_kind::op_xor:
    {
      auto const l = self( self, g.child( 0 ) );
      auto const r = self( self, g.child( 1 ) );
      w = emit( gate_op::op_xor, l, r );
      break;
    }
    case node_kind::op_or:
    {
      auto const l = emit( gate_op::op_inv, self( self, g.child( 0 ) ) );
      auto const r = emit( gate_op::op_inv, self( self, g.child( 1 ) ) );
      w = emit( gate_op::op_inv, emit( gate_op::op_and, l, r ) );
      break;
    }
    }
    wire_of.emplace( g.id(), w );
    return w;
  };

  auto out = rec( rec, f );
  if ( out + 1u != next )
  {
    /* outputs must be the last wires; a bare input is buffered by two inverters */
    out = emit( gate_op::op_inv, emit( gate_op::op_inv, out ) );
  }
  nl.output = out;
  return nl;
}

bool evaluate( netlist const& nl, std::uint64_t x )
{
  validate( nl );
  std::vector<bool> value( nl.num_wires(), false );
  for ( std::uint32_t k = 0; k < nl.num_inputs; ++k )
  {
    value[k] = ( ( x >> ( nl.num_inputs - 1u - k ) ) & 1u ) != 0u;
  }
  for ( auto const& g : nl.gates )
  {
    switch ( g.op )
    {
    case gate_op::op_and:
      value[g.output] = value[g.inputs[0]] && value[g.inputs[1]];
      break;
    case gate_op::op_xor:
      value[g.output] = value[g.inputs[0]] != value[g.inputs[1]];
      break;
    case gate_op::op_inv:
      value[g.output] = !value[g.inputs[0]];
      break;
    }
  }
  return value[nl.output];
}

truth_table simulate( netlist const& nl )
{
  validate( nl );
  std::vector<truth_table> value( nl.num_wires(), truth_table( nl.num_inputs ) );
  for ( std::uint32_t k = 0; k < nl.num_inputs; ++k )
  {
    value[k] = truth_table::projection( nl.num_inputs, k + 1u );
  }
  for ( auto const& g : nl.gates )
  {
    switch ( g.op )
    {
    case gate_op::op_and:
      value[g.output] = value[g.inputs[0]] & value[g.inputs[1]];
      break;
    case gate_op::op_xor:
      value[g.output] = value[g.inputs[0]] ^ value[g.inputs[1]];
      break;
    case gate_op::op_inv:
      value[g.output] = ~value[g.inputs[0]];
      break;
    }
  }
  return value[nl.output];
}

/* Bristol Fashion */

std::string to_bristol( netlist const& nl )
{
  validate( nl );
  std::ostringstream os;
  os << "# interval_xag circuit: wire k-1 carries x_k, x1 is the most significant bit of x\n";
  os << nl.gates.size() << ' ' << nl.num_wires() << '\n';
  os << "1 " << nl.num_inputs << '\n';
  os << "1 1\n";
  os << '\n';
  for ( auto const& g : nl.gates )
  {
    switch ( g.op )
    {
    case gate_op::op_and:
      os << "2 1 " << g.inputs[0] << ' ' << g.inputs[1] << ' ' << g.output << " AND\n";
      break;
    case gate_op::op_xor:
      os << "2 1 " << g.inputs[0] << ' ' << g.inputs[1] << ' ' << g.output << " XOR\n";
      break;
    case gate_op::op_inv:
      os << "1 1 " << g.inputs[0] << ' ' << g.output << " INV\n";
      break;
    }
  }
  return os.str();
}

namespace
{

std::vector<std::string_view> split_tokens( std::string_view line )
{
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while ( pos < line.size() )
  {
    while ( pos < line.size() && ( line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r' ) )
    {
      ++pos;
    }
    auto const start = pos;
    while ( pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r' )
    {
      ++pos;
    }
    if ( pos > start )
    {
      tokens.push_back( line.substr( start, pos - start ) );
    }
  }
  return tokens;
}

std::uint32_t parse_number( std::string_view token, std::size_t line )
{
  std::uint32_t value = 0u;
  auto const [ptr, ec] = std::from_chars( token.data(), token.data() + token.size(), value );
  if ( ec != std::errc{} || ptr != token.data() + token.size() )
  {
    throw parse_error( line, "expected a non-negative integer, got '" + std::string( token ) + "'" );
  }
  return value;
}

} // namespace

netlist from_bristol( std::string_view text )
{
  /* significant lines with their 1-based numbers */
  std::vector<std::pair<std::size_t, std::vector<std::string_view>>> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while ( pos <= text.size() )
  {
    auto const end = std::min( text.find( '\n', pos ), text.size() );
    auto const line = text.substr( pos, end - pos );
    ++number;
    auto tokens = split_tokens( line );
    if ( !tokens.empty() && tokens.front().front() != '#' )
    {
      lines.emplace_back( number, std::move( tokens ) );
    }
    pos = end + 1u;
  }

  if ( lines.size() < 3u )
  {
    throw parse_error( number, "truncated header" );
  }

  auto const& [header_line, header] = lines[0];
  if ( header.size() != 2u )
  {
    throw parse_error( header_line, "header must be '<num_gates> <num_wires>'" );
  }
  auto const num_gates = parse_number( header[0], header_line );
  auto const num_wires = parse_number( header[1], header_line );

  auto bundle_total = [&]( std::size_t index, char const* what ) {
    auto const& [line, tokens] = lines[index];
    auto const count = parse_number( tokens[0], line );
    if ( tokens.size() != count + 1u || count == 0u )
    {
      throw parse_error( line, std::string( what ) + " line must list its bundle sizes" );
    }
    std::uint32_t total = 0u;
    for ( std::size_t k = 1; k < tokens.size(); ++k )
    {
      total += parse_number( tokens[k], line );
    }
    return total;
  };

  netlist nl;
  nl.num_inputs = bundle_total( 1, "input" );
  if ( bundle_total( 2, "output" ) != 1u )
  {
    throw parse_error( lines[2].first, "exactly one output wire is supported" );
  }
  if ( num_wires == 0u )
  {
    throw parse_error( header_line, "circuit has no wires" );
  }
  nl.output = num_wires - 1u;

  if ( lines.size() - 3u != num_gates )
  {
    throw parse_error( lines.back().first, "header announces " + std::to_string( num_gates ) + " gates, found " + std::to_string( lines.size() - 3u ) );
  }

  for ( std::size_t i = 3; i < lines.size(); ++i )
  {
    auto const& [line, tokens] = lines[i];
    if ( tokens.size() < 2u )
    {
      throw parse_error( line, "malformed gate line" );
    }
    auto const nin = parse_number( tokens[0], line );
    auto const nout = parse_number( tokens[1], line );
    if ( tokens.size() != 3u + nin + nout )
    {
      throw parse_error( line, "gate line has the wrong number of fields" );
    }
    auto const op = tokens.back();
    gate g{ gate_op::op_and };
    if ( op == "AND" || op == "XOR" )
    {
      g.op = op == "AND" ? gate_op::op_and : gate_op::op_xor;
      if ( nin != 2u || nout != 1u )
      {
        throw parse_error( line, std::string( op ) + " takes 2 inputs and 1 output" );
      }
    }
    else if ( op == "INV" )
    {
      g.op = gate_op::op_inv;
      if ( nin != 1u || nout != 1u )
      {
        throw parse_error( line, "INV takes 1 input and 1 output" );
      }
    }
    else
    {
      throw parse_error( line, "unsupported gate '" + std::string( op ) + "'" );
    }
    for ( std::uint32_t k = 0; k < nin; ++k )
    {
      g.inputs[k] = parse_number( tokens[2u + k], line );
    }
    g.output = parse_number( tokens[2u + nin], line );
    if ( g.output >= num_wires )
    {
      throw parse_error( line, "wire " + std::to_string( g.output ) + " exceeds the announced wire count" );
    }
    nl.gates.push_back( g );
  }

  validate( nl );
  return nl;
}

/* JSON */

namespace
{

char const* op_name( gate_op op )
{
  switch ( op )
  {
  case gate_op::op_and:
    return "AND";
  case gate_op::op_xor:
    return "XOR";
  case gate_op::op_inv:
    return "INV";
  }
  return "";
}

std::size_t line_of_offset( std::string_view text, std::size_t offset )
{
  offset = std::min( offset, text.size() );
  return 1u + static_cast<std::size_t>( std::count( text.begin(), text.begin() + static_cast<std::ptrdiff_t>( offset ), '\n' ) );
}

} // namespace

std::string to_json( netlist const& nl )
{
  validate( nl );
  auto gates = nl.gates;
  std::stable_sort( gates.begin(), gates.end(), []( gate const& l, gate const& r ) { return l.output < r.output; } );

  nlohmann::ordered_json j;
  j["n"] = nl.num_inputs;
  j["gates"] = nlohmann::ordered_json::array();
  for ( auto const& g : gates )
  {
    nlohmann::ordered_json entry;
    entry["op"] = op_name( g.op );
    entry["in"] = g.arity() == 1u ? nlohmann::ordered_json::array( { g.inputs[0] } )
                                  : nlohmann::ordered_json::array( { g.inputs[0], g.inputs[1] } );
    entry["out"] = g.output;
    j["gates"].push_back( std::move( entry ) );
  }
  j["output"] = nl.output;
  return j.dump( 2 ) + "\n";
}

netlist from_json( std::string_view text )
{
  nlohmann::json j;
  try
  {
    j = nlohmann::json::parse( text );
  }
  catch ( nlohmann::json::parse_error const& e )
  {
    throw parse_error( line_of_offset( text, e.byte ), e.what() );
  }

  try
  {
    netlist nl;
    nl.num_inputs = j.at( "n" ).get<std::uint32_t>();
    for ( auto const& entry : j.at( "gates" ) )
    {
      auto const op = entry.at( "op" ).get<std::string>();
      auto const& in = entry.at( "in" );
      gate g{ gate_op::op_and };
      if ( op == "AND" )
      {
        g.op = gate_op::op_and;
      }
      else if ( op == "XOR" )
      {
        g.op = gate_op::op_xor;
      }
      else if ( op == "INV" )
      {
        g.op = gate_op::op_inv;
      }
      else
      {
        throw validation_error( "unsupported gate op '" + op + "'" );
      }
      if ( in.size() != g.arity() )
      {
        throw validation_error( op + " gate with " + std::to_string( in.size() ) + " inputs" );
      }
      for ( std::size_t k = 0; k < g.arity(); ++k )
      {
        g.inputs[k] = in.at( k ).get<std::uint32_t>();
      }
      g.output = entry.at( "out" ).get<std::uint32_t>();
      nl.gates.push_back( g );
    }
    nl.output = j.at( "output" ).get<std::uint32_t>();
    validate( nl );
    return nl;
  }
  catch ( nlohmann::json::exception const& e )
  {
    throw validation_error( std::string( "JSON netlist schema: " ) + e.what() );
  }
}

} // namespace interval_xag
