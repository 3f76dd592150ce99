/*!
  \file cover.hpp
  \brief Sets of cubes and the cover-level algebra built on them
*/

#pragma once

#include "cube.hpp"

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace dsopforge
{

/*! \brief Ordered list of cubes over a common variable count */
class cover
{
public:
  using value_type = cube;
  using const_iterator = std::vector<cube>::const_iterator;

  cover() = default;
  explicit cover( std::uint32_t num_vars ) : _num_vars( num_vars ) {}
  cover( std::uint32_t num_vars, std::vector<cube> cubes );

  /*! \brief Builds a cover from trit strings; all strings must have length `num_vars` */
  static cover from_strings( std::uint32_t num_vars, std::initializer_list<std::string_view> rows );
  static cover from_strings( std::uint32_t num_vars, const std::vector<std::string>& rows );

  std::uint32_t num_vars() const noexcept { return _num_vars; }
  std::size_t size() const noexcept { return _cubes.size(); }
  bool empty() const noexcept { return _cubes.empty(); }

  const cube& operator[]( std::size_t i ) const { return _cubes[i]; }
  const_iterator begin() const noexcept { return _cubes.begin(); }
  const_iterator end() const noexcept { return _cubes.end(); }
  const std::vector<cube>& cubes() const noexcept { return _cubes; }

  void push_back( cube c );
  void append( const cover& other );
  void reserve( std::size_t n ) { _cubes.reserve( n ); }

  std::vector<std::string> to_strings() const;

  bool operator==( const cover& other ) const = default;

private:
  std::uint32_t _num_vars{ 0 };
  std::vector<cube> _cubes;
};

/*! \brief An incompletely specified single-output function

  Points covered by `on` must be covered, points covered only by `dc` may
  be.  Where the two covers overlap the point is treated as an on-point.
*/
struct function_spec
{
  cover on;
  cover dc;

  function_spec() = default;
  explicit function_spec( std::uint32_t num_vars ) : on( num_vars ), dc( num_vars ) {}
  function_spec( cover on_, cover dc_ );

  std::uint32_t num_vars() const noexcept { return on.num_vars(); }

  /*! \brief on ∪ dc as one cover */
  cover care_set() const;
};

/*! \brief Removes duplicates and cubes contained in other cubes; survivors keep their order */
cover normalize( const cover& f );

/*! \brief Restriction of `f` to the subspace of `p`, expressed over the free variables of `p` */
cover cofactor( const cover& f, const cube& p );

/*! \brief True iff the union of the cubes of `f` is the full Boolean space

  Recursive Shannon expansion on the most binate variable (bound in the most
  cubes, ties to the lowest index).  A cover that is unate in every variable
  is a tautology only if it contains the universe cube, which ends most
  branches early.
*/
bool is_tautology( const cover& f );

/*! \brief True iff every minterm of `p` is covered by `f` */
bool cover_contains_cube( const cover& f, const cube& p );

/*! \brief True iff some cube of `f` intersects `p` */
bool cover_intersects_cube( const cover& f, const cube& p );

/*! \brief Cover multiplicity of every minterm of a small space

  Minterm index bit i holds the value of x_{i+1}.
*/
class minterm_counts
{
public:
  minterm_counts( std::uint32_t num_vars, std::vector<std::uint32_t> counts )
      : _num_vars( num_vars ), _counts( std::move( counts ) )
  {
  }

  std::uint32_t num_vars() const noexcept { return _num_vars; }
  std::uint64_t num_points() const noexcept { return _counts.size(); }
  std::uint32_t operator[]( std::uint64_t minterm ) const { return _counts[minterm]; }
  std::uint64_t num_covered() const;

private:
  std::uint32_t _num_vars;
  std::vector<std::uint32_t> _counts;
};

inline constexpr std::uint32_t default_enumeration_limit = 24u;

/*! \brief Counts, for each minterm, how many cubes of `f` cover it

  Throws capacity_error if f.num_vars() exceeds `limit_n`; callers above the
  cap should switch to sampling (see verify.hpp).
*/
minterm_counts enumerate_minterm_counts( const cover& f, std::uint32_t limit_n = default_enumeration_limit );

/*! \brief Calls `fn( point )` for every minterm of `c` (n <= 64) */
template<typename Fn>
void for_each_minterm( const cube& c, Fn&& fn )
{
  const std::uint64_t all = c.num_vars() >= 64u ? ~std::uint64_t{ 0 } : ( ( std::uint64_t{ 1 } << c.num_vars() ) - 1u );
  const std::uint64_t free = ~c.bound_word( 0 ) & all;
  const std::uint64_t base = c.value_word( 0 );
  std::uint64_t sub = 0u;
  do
  {
    fn( base | sub );
    sub = ( sub - free ) & free;
  } while ( sub != 0u );
}

} // namespace dsopforge
