/*!
  \file sop_min.hpp
  \brief Two-level SOP minimization used to (re)build the working cover

  Three backends are available.  `builtin` runs expand / irredundant rounds
  against the care set.  When the off-set is small enough to list, each cube
  is first merged with the peer cube whose supercube stays clear of it and
  swallows the most other cubes, repeatedly, before the literal-by-literal
  expansion; `identity` returns the normalized on-set unchanged;
  `external` round-trips through an espresso-compatible executable.
*/

#pragma once

#include "cover.hpp"

#include <cstddef>
#include <string>

namespace dsopforge
{

struct minimizer_backend
{
  enum class kind
  {
    builtin,
    external,
    identity
  };

  kind type{ kind::builtin };
  std::string path{};

  static minimizer_backend builtin() { return {}; }
  static minimizer_backend identity() { return { kind::identity, {} }; }
  static minimizer_backend external( std::string path ) { return { kind::external, std::move( path ) }; }

  /*! \brief External backend if DSOPFORGE_MINIMIZER is set, builtin otherwise */
  static minimizer_backend from_environment();

  /*! \brief Parses "builtin", "identity" or "external:PATH" */
  static minimizer_backend parse( const std::string& spec );

  std::string name() const;
};

/*! \brief Maximum number of expand / irredundant rounds of the builtin backend */
inline constexpr int max_minimization_rounds = 10;

/*! \brief Off-set size (in disjoint cubes) up to which the builtin backend
  grows cubes toward each other before the literal-by-literal expansion */
inline constexpr std::size_t max_offset_cubes = 4096;

/*! \brief Computes a SOP P for `f`

  Every cube of P lies in on ∪ dc, intersects on, and P covers every
  on-point.  The builtin backend is deterministic and never returns more
  cubes than normalize( f.on ).  External backend failures raise
  backend_error; there is no silent fallback.
*/
cover build_sop( const function_spec& f, const minimizer_backend& backend = {} );

/*! \brief Greedily enlarges `p` inside `valid`

  Literals are tried from the highest variable index down to x_1; a literal
  stays removed iff the enlarged cube is still contained in `valid`.
  Throws contract_violation if `p` itself is not contained in `valid`.
*/
cube expand_cube( const cube& p, const cover& valid );

/*! \brief Drops cubes not needed to cover `must_cover`

  Candidates are visited smallest dimension first.  Survivors keep their
  relative order.
*/
cover irredundant( const cover& sop, const cover& must_cover );

} // namespace dsopforge
