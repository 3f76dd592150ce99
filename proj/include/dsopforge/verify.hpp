/*!
  \file verify.hpp
  \brief Ground-truth checks for DSOP and partial DSOP covers, plus an exact solver for tiny functions
*/

#pragma once

#include "cover.hpp"
#include "partial_dsop.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dsopforge
{

struct violation
{
  std::string minterm;    /*!< point (or representative point) as a trit string */
  std::string constraint; /*!< e.g. "on: count == 1" or "pairwise disjoint" */
  std::uint32_t observed{ 0 };
};

enum class verify_mode
{
  dsop,
  partial
};

struct verify_options
{
  std::uint32_t max_enum{ default_enumeration_limit };
  std::uint64_t samples{ 1000000u };
  std::uint64_t seed{ 0x5eedu };
  std::size_t max_reported{ 64u };
};

struct verification_report
{
  bool ok{ true };
  verify_mode mode{ verify_mode::dsop };
  std::vector<violation> violations; /*!< at most verify_options::max_reported entries */
  std::uint64_t total_violations{ 0 };
  bool sampled{ false };
  std::uint64_t points_checked{ 0 };
  std::uint64_t seed{ 0 };

  std::string summary() const;
};

/*! \brief Checks pairwise disjointness, on-points covered once, off-points not covered

  Functions above verify_options::max_enum variables are checked on random
  samples instead of exhaustively; `sampled` is set in that case.
*/
verification_report verify_dsop( const function_spec& f, const cover& solution, const verify_options& opts = {} );

/*! \brief Per-point checks: sopD.on == 1, sopD.dc <= 1, sopS.on >= 1, off == 0

  Overlaps between solution cubes must lie entirely inside sopS; this part
  is checked symbolically for every pair.
*/
verification_report verify_partial_dsop( const partial_spec& spec, const cover& solution, const verify_options& opts = {} );

inline constexpr std::uint32_t exact_solver_hard_limit = 6u;

/*! \brief Minimum-size DSOP by exhaustive search

  Candidates are all 3^n implicants of on ∪ dc that meet the on-set;
  iterative deepening on the solution size returns the first disjoint
  selection that covers every on-point.  Throws capacity_error above
  `max_n` (which itself may not exceed 6).
*/
cover exact_min_dsop( const function_spec& f, std::uint32_t max_n = 5u );

/*! \brief x1x2 + x3x4 + ... + x_{2m-1}x_{2m}: m cubes whose smallest DSOP has 2^m - 1 */
function_spec chain_family( std::uint32_t m );

} // namespace dsopforge
