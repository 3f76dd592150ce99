/*!
  \file pla.hpp
  \brief Reading and writing Berkeley (espresso) PLA files

  Supported directives: .i .o .p .type (f or fd) .ilb .ob .e.  Comments
  start with '#'.  Input planes accept 0 1 - with 2 and ~ as aliases of '-';
  output planes accept 1 0 - with 2 as an alias of '-' and ~ as '0'.
*/

#pragma once

#include "cover.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dsopforge
{

enum class pla_type
{
  f,
  fd
};

struct pla_row
{
  std::string inputs;
  std::string outputs;

  bool operator==( const pla_row& ) const = default;
};

struct pla_labels
{
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;

  bool operator==( const pla_labels& ) const = default;
};

struct pla_file
{
  std::uint32_t num_inputs{ 0 };
  std::uint32_t num_outputs{ 0 };
  pla_type type{ pla_type::fd };
  std::vector<pla_row> rows;
  pla_labels labels;
  std::optional<std::uint64_t> declared_products;

  bool operator==( const pla_file& ) const = default;
};

/*! \brief Parses PLA text; errors carry 1-based line numbers (pla_parse_error) */
pla_file parse_pla( std::string_view text );

pla_file read_pla( const std::filesystem::path& path );

/*! \brief One function_spec per output column

  '1' rows go to the on-set, '-' rows to the dc-set (type fd only; type f
  reads them as '0').
*/
std::vector<function_spec> split_outputs( const pla_file& pla );

/*! \brief Number of distinct cubes across all output covers */
std::uint64_t merged_product_count( std::span<const cover> per_output );

/*! \brief Merges per-output covers into one multi-output PLA

  Rows appear in first-seen order (outputs in index order, cubes in cover
  order); each row's output pattern has '1' for every cover that contains
  the cube and '0' elsewhere.
*/
pla_file make_pla( std::span<const cover> per_output, const pla_labels& labels = {}, pla_type type = pla_type::f );

std::string write_pla( const pla_file& pla );

inline std::string write_pla( std::span<const cover> per_output, const pla_labels& labels = {}, pla_type type = pla_type::f )
{
  return write_pla( make_pla( per_output, labels, type ) );
}

/*! \brief Single-output fd PLA listing on rows ('1') then dc rows ('-') */
std::string write_function_pla( const function_spec& f );

} // namespace dsopforge
