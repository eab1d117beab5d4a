#include <interval_xag/errors.hpp>
#include <interval_xag/formula.hpp>

#include <algorithm>
#include <array>
#include <functional>
#include <unordered_set>

namespace interval_xag
{

struct formula::node
{
  node_kind kind;
  std::uint32_t value; // variable index or constant bit
  std::array<std::shared_ptr<node const>, 2> children;
};

formula formula::var( std::uint32_t index )
{
  if ( index == 0u )
  {
    throw usage_error( "variable indices are 1-based" );
  }
  return formula( std::make_shared<node const>( node{ node_kind::var, index, {} } ) );
}

formula formula::constant( bool value )
{
  return formula( std::make_shared<node const>( node{ node_kind::constant, value ? 1u : 0u, {} } ) );
}

formula operator!( formula const& f )
{
  return formula( std::make_shared<formula::node const>( formula::node{ node_kind::op_not, 0u, { f.node_, nullptr } } ) );
}

formula operator&( formula const& a, formula const& b )
{
  return formula( std::make_shared<formula::node const>( formula::node{ node_kind::op_and, 0u, { a.node_, b.node_ } } ) );
}

formula operator|( formula const& a, formula const& b )
{
  return formula( std::make_shared<formula::node const>( formula::node{ node_kind::op_or, 0u, { a.node_, b.node_ } } ) );
}

formula operator^( formula const& a, formula const& b )
{
  return formula( std::make_shared<formula::node const>( formula::node{ node_kind::op_xor, 0u, { a.node_, b.node_ } } ) );
}

node_kind formula::kind() const noexcept
{
  return node_->kind;
}

std::uint32_t formula::var_index() const
{
  if ( node_->kind != node_kind::var )
  {
    throw usage_error( "var_index() on a non-variable node" );
  }
  return node_->value;
}

bool formula::constant_value() const
{
  if ( node_->kind != node_kind::constant )
  {
    throw usage_error( "constant_value() on a non-constant node" );
  }
  return node_->value != 0u;
}

std::size_t formula::num_children() const noexcept
{
  switch ( node_->kind )
  {
  case node_kind::var:
  case node_kind::constant:
    return 0u;
  case node_kind::op_not:
    return 1u;
  default:
    return 2u;
  }
}

formula formula::child( std::size_t i ) const
{
  if ( i >= num_children() )
  {
    throw usage_error( "child index out of range" );
  }
  return formula( node_->children[i] );
}

namespace
{

template<typename Node, typename Fn>
void visit_once( Node const* root, Fn&& fn )
{
  std::unordered_set<Node const*> seen;
  std::vector<Node const*> stack{ root };
  while ( !stack.empty() )
  {
    auto const* n = stack.back();
    stack.pop_back();
    if ( !seen.insert( n ).second )
    {
      continue;
    }
    fn( *n );
    for ( auto const& c : n->children )
    {
      if ( c )
      {
        stack.push_back( c.get() );
      }
    }
  }
}

} // namespace

std::uint32_t formula::max_var() const
{
  std::uint32_t result = 0u;
  visit_once( node_.get(), [&]( node const& n ) {
    if ( n.kind == node_kind::var )
    {
      result = std::max( result, n.value );
    }
  } );
  return result;
}

bool formula::eval( std::uint64_t x, std::uint32_t n ) const
{
  std::function<bool( node const& )> rec = [&]( node const& nd ) -> bool {
    switch ( nd.kind )
    {
    case node_kind::var:
      if ( nd.value > n )
      {
        throw usage_error( "variable x" + std::to_string( nd.value ) + " is unbound for width " + std::to_string( n ) );
      }
      return ( ( x >> ( n - nd.value ) ) & 1u ) != 0u;
    case node_kind::constant:
      return nd.value != 0u;
    case node_kind::op_not:
      return !rec( *nd.children[0] );
    case node_kind::op_and:
      return rec( *nd.children[0] ) & rec( *nd.children[1] );
    case node_kind::op_or:
      return rec( *nd.children[0] ) | rec( *nd.children[1] );
    case node_kind::op_xor:
      return rec( *nd.children[0] ) ^ rec( *nd.children[1] );
    }
    return false;
  };
  return rec( *node_ );
}

std::uint32_t formula::mult_cost() const
{
  std::uint32_t cost = 0u;
  visit_once( node_.get(), [&]( node const& n ) {
    if ( n.kind == node_kind::op_and || n.kind == node_kind::op_or )
    {
      ++cost;
    }
  } );
  return cost;
}

std::string formula::to_string() const
{
  switch ( node_->kind )
  {
  case node_kind::var:
    return "x" + std::to_string( node_->value );
  case node_kind::constant:
    return node_->value ? "1" : "0";
  case node_kind::op_not:
    return "!" + child( 0 ).to_string();
  case node_kind::op_and:
    return "(" + child( 0 ).to_string() + " & " + child( 1 ).to_string() + ")";
  case node_kind::op_or:
    return "(" + child( 0 ).to_string() + " | " + child( 1 ).to_string() + ")";
  case node_kind::op_xor:
    return "(" + child( 0 ).to_string() + " ^ " + child( 1 ).to_string() + ")";
  }
  return {};
}

bool structurally_equal( formula const& a, formula const& b )
{
  if ( a.id() == b.id() )
  {
    return true;
  }
  if ( a.kind() != b.kind() )
  {
    return false;
  }
  switch ( a.kind() )
  {
  case node_kind::var:
    return a.var_index() == b.var_index();
  case node_kind::constant:
    return a.constant_value() == b.constant_value();
  default:
    for ( std::size_t i = 0; i < a.num_children(); ++i )
    {
      if ( !structurally_equal( a.child( i ), b.child( i ) ) )
      {
        return false;
      }
    }
    return true;
  }
}

/* and_or_chain */

and_or_chain::and_or_chain( std::vector<std::uint32_t> variables, std::vector<chain_op> operators )
    : variables_( std::move( variables ) ), operators_( std::move( operators ) )
{
  if ( variables_.empty() || variables_.size() != operators_.size() + 1u )
  {
    throw usage_error( "an AND/OR chain needs exactly one more variable than operators" );
  }
  auto sorted = variables_;
  std::sort( sorted.begin(), sorted.end() );
  if ( sorted.front() == 0u || std::adjacent_find( sorted.begin(), sorted.end() ) != sorted.end() )
  {
    throw usage_error( "chain variables must be distinct 1-based indices" );
  }
}

and_or_chain and_or_chain::constant( bool value )
{
  and_or_chain c;
  c.constant_ = value;
  return c;
}

bool and_or_chain::constant_value() const
{
  if ( !constant_ )
  {
    throw usage_error( "constant_value() on a non-constant chain" );
  }
  return *constant_;
}

std::uint32_t and_or_chain::head() const
{
  if ( is_constant() )
  {
    throw usage_error( "constant chain has no variables" );
  }
  return variables_.front();
}

chain_op and_or_chain::head_op() const
{
  if ( operators_.empty() )
  {
    throw usage_error( "chain of length 0 has no operator" );
  }
  return operators_.front();
}

and_or_chain and_or_chain::tail() const
{
  if ( operators_.empty() )
  {
    throw usage_error( "tail() of a chain of length 0" );
  }
  return and_or_chain( { variables_.begin() + 1, variables_.end() }, { operators_.begin() + 1, operators_.end() } );
}

bool and_or_chain::contains( std::uint32_t variable ) const noexcept
{
  return std::find( variables_.begin(), variables_.end(), variable ) != variables_.end();
}

formula chain_to_formula( and_or_chain const& c )
{
  if ( c.is_constant() )
  {
    return formula::constant( c.constant_value() );
  }
  auto const vars = c.variables();
  auto const ops = c.operators();
  auto f = formula::var( vars.back() );
  for ( auto k = ops.size(); k-- > 0; )
  {
    auto const x = formula::var( vars[k] );
    f = ops[k] == chain_op::op_and ? ( x & f ) : ( x | f );
  }
  return f;
}

} // namespace interval_xag
