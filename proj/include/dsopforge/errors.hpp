/*!
  \file errors.hpp
  \brief Exception types shared by all dsopforge modules
*/

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dsopforge
{

/*! \brief Two cubes or covers over different variable counts were combined */
class dimension_mismatch : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/*! \brief A documented precondition of an operation does not hold */
class contract_violation : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

/*! \brief An exhaustive procedure was asked to work above its size cap */
class capacity_error : public std::length_error
{
public:
  using std::length_error::length_error;
};

/*! \brief The external minimizer could not be run or produced unusable output */
class backend_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/*! \brief The synthesis loop exceeded its outer iteration budget */
class progress_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/*! \brief Malformed PLA text; carries the 1-based line number */
class pla_parse_error : public std::runtime_error
{
public:
  pla_parse_error( std::size_t line, const std::string& what )
      : std::runtime_error( "line " + std::to_string( line ) + ": " + what ), _line( line )
  {
  }

  std::size_t line() const noexcept { return _line; }

private:
  std::size_t _line;
};

/*! \brief Semantically invalid input (e.g. overlapping sopD and sopS) */
class input_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

} // namespace dsopforge
