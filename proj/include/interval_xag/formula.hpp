#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace interval_xag
{

enum class node_kind : std::uint8_t
{
  var,
  constant,
  op_not,
  op_and,
  op_or,
  op_xor
};

/*! \brief Immutable expression DAG over {AND, OR, XOR, NOT}.
 *
 * A `formula` is a handle to a node; children are shared by reference, so
 * combining two formulas never copies either of them.  Variables are
 * 1-based: `var( 1 )` is x1, the most significant bit of the integer x.
 */
class formula
{
  struct node;

public:
  static formula var( std::uint32_t index );
  static formula constant( bool value );

  friend formula operator!( formula const& f );
  friend formula operator&( formula const& a, formula const& b );
  friend formula operator|( formula const& a, formula const& b );
  friend formula operator^( formula const& a, formula const& b );

  node_kind kind() const noexcept;
  std::uint32_t var_index() const;
  bool constant_value() const;
  std::size_t num_children() const noexcept;
  formula child( std::size_t i ) const;

  /// Identity of the underlying node; equal ids mean a shared subterm.
  void const* id() const noexcept { return node_.get(); }

  /// Largest variable index referenced (0 if there is none).
  std::uint32_t max_var() const;

  /// Evaluates with x_k = bit (n - k) of `x`, i.e. x = (x1 ... xn)_2.
  bool eval( std::uint64_t x, std::uint32_t n ) const;

  /// Number of distinct AND and OR nodes; XOR and NOT are free.
  std::uint32_t mult_cost() const;

  /// Fully parenthesized ASCII rendering, e.g. `(x1 ^ (x2 | x3))`.
  std::string to_string() const;

private:
  explicit formula( std::shared_ptr<node const> n ) : node_( std::move( n ) ) {}

  std::shared_ptr<node const> node_;
};

/// Same operator tree (variable indices and constants included).
bool structurally_equal( formula const& a, formula const& b );

enum class chain_op : std::uint8_t
{
  op_and,
  op_or
};

/*! \brief Right-nested chain x_1 o_1 (x_2 o_2 ( ... (x_{m-1} o_{m-1} x_m) ... )).
 *
 * The degenerate constant chain has no variables and stands for the
 * comparisons [0 <= x] (true) and [2^n <= x] (false).
 */
class and_or_chain
{
public:
  and_or_chain( std::vector<std::uint32_t> variables, std::vector<chain_op> operators );

  static and_or_chain constant( bool value );

  bool is_constant() const noexcept { return constant_.has_value(); }
  bool constant_value() const;

  /// Number of operators; 0 for single-variable and constant chains.
  std::uint32_t length() const noexcept { return static_cast<std::uint32_t>( operators_.size() ); }

  std::span<std::uint32_t const> variables() const noexcept { return variables_; }
  std::span<chain_op const> operators() const noexcept { return operators_; }

  std::uint32_t head() const;
  chain_op head_op() const;

  /// The chain without its first variable and operator; requires length() > 0.
  and_or_chain tail() const;

  bool contains( std::uint32_t variable ) const noexcept;

  bool operator==( and_or_chain const& ) const = default;

private:
  and_or_chain() = default;

  std::vector<std::uint32_t> variables_;
  std::vector<chain_op> operators_;
  std::optional<bool> constant_;
};

formula chain_to_formula( and_or_chain const& c );

inline std::uint32_t chain_length( and_or_chain const& c ) noexcept
{
  return c.length();
}

} // namespace interval_xag
