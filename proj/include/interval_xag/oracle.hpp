#pragma once

#include <interval_xag/synth.hpp>
#include <interval_xag/truth_table.hpp>

#include <cstdint>
#include <optional>

namespace interval_xag
{

/// Default verification width guard.
inline constexpr std::uint32_t default_max_verify_width = 16u;

struct oracle_report
{
  std::uint32_t n = 0u;
  std::uint64_t a = 0u;
  std::uint64_t b = 0u;
  std::uint32_t ja = 0u;
  std::uint32_t jb = 0u;

  bool equivalent = false;
  std::optional<std::uint64_t> counterexample; // smallest failing x

  std::uint32_t actual = 0u;
  std::uint32_t predicted = 0u;
  std::uint32_t naive = 0u;
  std::uint32_t degree = 0u;

  bool in_theorem_domain = false;

  /// Equivalent and the construction costs exactly the predicted count.
  bool passed() const noexcept { return equivalent && actual == predicted; }
};

/// [a <= x < b] straight from the arithmetic predicate.
truth_table interval_oracle_table( interval_spec const& spec );

/// Synthesizes, simulates, and compares against the oracle table.
oracle_report check( interval_spec const& spec, std::uint32_t max_width = default_max_verify_width );

} // namespace interval_xag
