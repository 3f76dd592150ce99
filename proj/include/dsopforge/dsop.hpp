/*!
  \file dsop.hpp
  \brief Disjoint SOP synthesis driven by cube weights

  The engine repeatedly minimizes the part of the function that is still
  uncovered, moves isolated cubes straight into the solution, and then
  selects the remaining cubes in weight order.  Every selected cube breaks
  the cubes that overlap it into disjoint fragments; the variant decides
  what happens to those fragments.

  The weight of a cube p relative to an overlapping peer q is
  literal_count(p) - common_literal_count(p, q) - 1, the minimum number of
  extra cubes needed to cover q \ p disjointly.  The weight of p is the sum
  over all peers it overlaps, or -1 if it overlaps none.
*/

#pragma once

#include "cover.hpp"
#include "sop_min.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace dsopforge
{

struct weighted_cube
{
  cube c;
  int weight{ -1 };

  bool operator==( const weighted_cube& ) const = default;
};

enum class sort_policy
{
  dimension_weight, /*!< decreasing dimension, then increasing weight */
  weight_dimension  /*!< increasing weight, then decreasing dimension */
};

std::string to_string( sort_policy policy );
sort_policy parse_sort_policy( const std::string& s ); /* "dw" or "wd" */

struct dsop_config
{
  /*! fragment handling, 1..5 */
  int variant{ 3 };
  sort_policy sort{ sort_policy::dimension_weight };
  /*! skip cubes that contain no point of the original on-set */
  bool drop_dc_only{ false };
  minimizer_backend backend{};
  std::uint64_t max_outer_iterations{ 10000u };

  void validate() const;
};

/*! \brief Observation points for tests and tracing; every member is optional */
struct dsop_hooks
{
  struct pass
  {
    std::uint64_t index;
    cover pending;  /*!< on-cover handed to the minimizer at the start of the pass */
    cover solution; /*!< solution after the pass */
  };

  std::function<void( const pass& )> on_pass;
  /*! partial synthesis only: cubes fed back as don't cares, with the solution at that moment */
  std::function<void( const cover& feedback, const cover& solution )> on_feedback;
};

/*! \brief Weight of p relative to q; throws contract_violation if they are disjoint */
int relative_weight( const cube& p, const cube& q );

std::vector<weighted_cube> weight_all( const cover& sop );

/*! \brief Stable sort by the policy's key pair, then by trit_order */
std::vector<weighted_cube> sort_cubes( std::vector<weighted_cube> cubes, sort_policy policy );

/*! \brief True iff `p` contains no point of `original_on` */
bool covers_only_dc( const cube& p, const cover& original_on );

/*! \brief Pairwise-disjoint cover D with on ⊆ D ⊆ on ∪ dc

  Throws progress_error if cfg.max_outer_iterations passes do not finish.
*/
cover dsop( const function_spec& f, const dsop_config& cfg = {}, const dsop_hooks& hooks = {} );

} // namespace dsopforge
