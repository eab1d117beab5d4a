#pragma once

#include <interval_xag/formula.hpp>
#include <interval_xag/truth_table.hpp>

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace interval_xag
{

enum class gate_op : std::uint8_t
{
  op_and,
  op_xor,
  op_inv
};

struct gate
{
  gate_op op;
  std::array<std::uint32_t, 2> inputs{}; // inputs[1] unused for INV
  std::uint32_t output = 0u;

  std::size_t arity() const noexcept { return op == gate_op::op_inv ? 1u : 2u; }
  bool operator==( gate const& ) const = default;
};

/*! \brief Single-output AND/XOR/INV netlist.
 *
 * Wires 0 .. num_inputs - 1 carry x1 .. xn.  Gates are stored in
 * topological order.
 */
struct netlist
{
  std::uint32_t num_inputs = 0u;
  std::vector<gate> gates;
  std::uint32_t output = 0u;

  std::uint32_t num_wires() const noexcept;
  std::uint32_t and_count() const noexcept;

  bool operator==( netlist const& ) const = default;
};

/// Throws `validation_error` on dangling, out-of-order, or redefined wires.
void validate( netlist const& nl );

/*! \brief Lowers OR(a, b) to INV(AND(INV a, INV b)) and NOT to INV.
 *
 * The result has exactly `f.mult_cost()` AND gates and its output is the
 * highest-numbered wire.  Constants are derived from x1 ^ x1.
 */
netlist lower_to_netlist( formula const& f, std::uint32_t n );

bool evaluate( netlist const& nl, std::uint64_t x );
truth_table simulate( netlist const& nl );

/// Bristol Fashion text with a leading `#` comment describing the wire map.
std::string to_bristol( netlist const& nl );
netlist from_bristol( std::string_view text );

/// {"n": int, "gates": [{"op", "in", "out"}], "output": id}
std::string to_json( netlist const& nl );
netlist from_json( std::string_view text );

} // namespace interval_xag
