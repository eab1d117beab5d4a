#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace interval_xag
{

/*! \brief Precondition violated by the caller (bad bounds, bad index, ...). */
class usage_error : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/*! \brief A width guard was exceeded. */
class resource_error : public std::length_error
{
public:
  using std::length_error::length_error;
};

/*! \brief Malformed circuit text; carries the 1-based line number. */
class parse_error : public std::runtime_error
{
public:
  parse_error( std::size_t line, std::string const& what )
      : std::runtime_error( "line " + std::to_string( line ) + ": " + what ), line_( line )
  {
  }

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/*! \brief Structurally invalid netlist (dangling or redefined wires). */
class validation_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

} // namespace interval_xag
