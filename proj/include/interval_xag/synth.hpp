#pragma once

#include <interval_xag/bitconst.hpp>
#include <interval_xag/formula.hpp>

#include <cstdint>

namespace interval_xag
{

/*! \brief The check [a <= x < b] for an n-bit unsigned x.
 *
 * Requires a < b <= 2^n.  The bounds a = 0 and b = 2^n are accepted; the
 * closed-form cost is only a theorem inside `in_theorem_domain()`.
 */
class interval_spec
{
public:
  interval_spec( std::uint32_t n, std::uint64_t a, std::uint64_t b );

  std::uint32_t n() const noexcept { return n_; }
  bit_constant const& a() const noexcept { return a_; }
  bit_constant const& b() const noexcept { return b_; }

  /// 0 < a < b < 2^n
  bool in_theorem_domain() const noexcept;

private:
  std::uint32_t n_;
  bit_constant a_;
  bit_constant b_;
};

/// Shape used for the ite terminal cases where the negated chain is longer.
enum class terminal_form : std::uint8_t
{
  /// xi ^ (xj o (xi' o' f)), the shape of the worked longer-chain example
  folded,
  /// (xi ^ xj) o (xi' o' !f), the shape of the terminal identities
  split
};

/*! \brief Right-nested identities used by the chain merges.
 *
 * `ite( x, t, e )` below means (x & t) ^ (!x & e).  In the ite rules the
 * chains are f1 = xj o1 g1 (else branch) and f2 = xj o2 g2 (negated then
 * branch), and `rest` stands for ite( xi, !g2, g1 ).
 */
namespace rules
{

/* xor merge, one side exhausted */
formula xor_end_and( formula const& x, formula const& f ); // x ^ (x & f) = x & !f
formula xor_end_or( formula const& x, formula const& f );  // x ^ (x | f) = !x & f

/* xor merge, equal leading operators; rest = f1 ^ f2 */
formula xor_same_and( formula const& x, formula const& rest ); // x & rest
formula xor_same_or( formula const& x, formula const& rest );  // !x & rest

/* ite terminal cases */
formula ite_equal( formula const& xi, formula const& xj );
formula ite_else_longer_and( formula const& xi, formula const& xj, formula const& f );
formula ite_else_longer_or( formula const& xi, formula const& xj, formula const& f );
formula ite_then_longer_and( formula const& xi, formula const& xj, formula const& f, terminal_form form );
formula ite_then_longer_or( formula const& xi, formula const& xj, formula const& f, terminal_form form );

/* ite non-terminal cases, named <op of f1>_<op of f2> */
formula ite_and_or( formula const& xi, formula const& xj, formula const& rest );
formula ite_or_and( formula const& xi, formula const& xj, formula const& rest );
formula ite_and_and( formula const& xi, formula const& xj, formula const& rest );
formula ite_or_or( formula const& xi, formula const& xj, formula const& rest );

} // namespace rules

/*! \brief Chain over x_lo..x_hi whose k-th operator is AND iff bit k of `a` is 1.
 *
 * For odd `a` and the full range [1, n] this computes [a <= x].
 */
and_or_chain comparison_chain( bit_constant const& a, std::uint32_t lo, std::uint32_t hi );

/*! \brief Reduced chain for [a <= x]: trailing zeros of `a` are dropped.
 *
 * a = 0 yields the constant-true chain, a = 2^n the constant-false chain.
 */
and_or_chain compare_chain( bit_constant const& a );

/// Formula for [a <= x]; requires a < 2^n.  Costs n - j - 1 ANDs for a > 0.
formula compare_synth( bit_constant const& a );

/*! \brief Formula equivalent to f1 ^ f2 for two distinct chains.
 *
 * The chains must follow the same variable order with one variable list a
 * prefix of the other.  Uses l - 1 AND/OR gates for equal lengths l and
 * max(l1, l2) otherwise.
 */
formula xor_chain_merge( and_or_chain const& f1, and_or_chain const& f2, terminal_form form = terminal_form::folded );

/*! \brief Formula equivalent to ite( x, !f2, f1 ) for chains with the same head.
 *
 * `x` must not occur in either chain.  Uses l gates for equal lengths l and
 * max(l1, l2) + 1 otherwise.
 */
formula ite_chain_merge( std::uint32_t x, and_or_chain const& f2, and_or_chain const& f1, terminal_form form = terminal_form::folded );

/// Fused interval check built from both reduced comparison chains.
formula interval_formula( interval_spec const& spec, terminal_form form = terminal_form::folded );

/// XOR of two independent comparators; the baseline.
formula naive_interval( interval_spec const& spec );

/*! \brief Closed-form AND count of `interval_formula`.
 *
 * n - min(ja, jb) - 1 if ja != jb, n - ja - 2 otherwise.  Outside the
 * theorem domain the same expression is used with trailing_zeros(0) =
 * trailing_zeros(2^n) = n, clamped at 0 for a = 0, b = 2^n.
 */
std::uint32_t predicted_mc( interval_spec const& spec );

} // namespace interval_xag
