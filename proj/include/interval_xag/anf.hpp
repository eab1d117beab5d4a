#pragma once

#include <interval_xag/truth_table.hpp>

#include <cstdint>
#include <vector>

namespace interval_xag
{

/// Sorted 1-based variable indices; the empty monomial is the constant term.
using monomial = std::vector<std::uint32_t>;

/*! \brief Algebraic normal form as a coefficient table.
 *
 * Coefficient a_I is stored at the table index whose set bits are exactly the
 * variables of I under the usual convention (x_k is bit n - k).
 */
class anf
{
public:
  explicit anf( truth_table coefficients ) : coefficients_( std::move( coefficients ) ) {}

  std::uint32_t width() const noexcept { return coefficients_.width(); }
  truth_table const& coefficients() const noexcept { return coefficients_; }

  bool contains( monomial const& m ) const;
  std::uint64_t num_monomials() const noexcept { return coefficients_.count_ones(); }

  /// All monomials, ordered by their coefficient index.
  std::vector<monomial> monomials() const;

  bool operator==( anf const& ) const = default;

private:
  truth_table coefficients_;
};

/// Binary Moebius transform over GF(2); its own inverse.
truth_table moebius_transform( truth_table tt );

anf anf_of( truth_table const& tt );

/// Size of the largest monomial; 0 for both constant functions.
std::uint32_t degree( anf const& a );

/// max(degree - 1, 0), a lower bound on the number of AND gates.
std::uint32_t degree_lower_bound( anf const& a );

/// Table index of a monomial for the given width.
std::uint64_t monomial_index( monomial const& m, std::uint32_t width );

} // namespace interval_xag
