#pragma once

#include <interval_xag/oracle.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace interval_xag
{

enum class pair_domain : std::uint8_t
{
  theorem,  // 0 < a < b < 2^n
  extended  // 0 <= a < b <= 2^n
};

using bound_pair = std::pair<std::uint64_t, std::uint64_t>;

/// Every (a, b) of the domain in lexicographic order.
std::vector<bound_pair> all_pairs( std::uint32_t n, pair_domain domain );

/*! \brief `count` distinct pairs drawn uniformly, sorted lexicographically.
 *
 * Draws come from std::mt19937_64 reduced by modulo, so a seed reproduces
 * the same pairs on every platform.  Returns all pairs when the domain has
 * at most `count` of them.
 */
std::vector<bound_pair> sample_pairs( std::uint32_t n, std::size_t count, std::uint64_t seed, pair_domain domain );

/// Exhaustive for n <= 8, otherwise `sample` (default 1000) seeded pairs.
std::vector<bound_pair> sweep_pairs( std::uint32_t n, std::optional<std::size_t> sample, std::uint64_t seed, pair_domain domain );

inline constexpr std::uint32_t exhaustive_sweep_width = 8u;
inline constexpr std::size_t default_sweep_sample = 1000u;

/// Runs `check` over `pairs`; rows come back in the order of `pairs`.
std::vector<oracle_report> run_sweep( std::uint32_t n, std::vector<bound_pair> const& pairs, std::uint32_t max_width = default_max_verify_width );

} // namespace interval_xag
