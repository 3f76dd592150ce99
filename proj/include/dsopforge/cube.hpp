/*!
  \file cube.hpp
  \brief Product terms in positional (trit) notation

  A cube over n variables stores one trit per variable: a negative literal
  (zero), a positive literal (one), or no literal (free).  Position i of the
  string form encodes variable x_{i+1}.  Internally every 64 variables share
  a pair of words, a `bound` mask and a `value` mask, so intersection and
  containment are word-parallel.
*/

#pragma once

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dsopforge
{

enum class trit : std::uint8_t
{
  zero,
  one,
  free
};

class cover;

class cube
{
public:
  /*! \brief Empty cube over zero variables */
  cube() = default;

  /*! \brief Universe cube (no literals) over `num_vars` variables */
  explicit cube( std::uint32_t num_vars );

  /*! \brief Parses a string over {0,1,-}

    '2' and '~' are accepted as aliases of '-'.  Throws std::invalid_argument
    on any other character.
  */
  static cube from_string( std::string_view str );

  /*! \brief Builds a cube from raw masks, one word per 64 variables

    Bits of `value` outside `bound` and bits beyond `num_vars` are cleared.
  */
  static cube from_masks( std::uint32_t num_vars, std::span<const std::uint64_t> bound, std::span<const std::uint64_t> value );

  /*! \brief Minterm with bit i of `point` giving the value of x_{i+1} (n <= 64) */
  static cube from_minterm( std::uint32_t num_vars, std::uint64_t point );

  std::uint32_t num_vars() const noexcept { return _num_vars; }
  std::size_t num_words() const noexcept { return _words.size() / 2; }

  std::uint64_t bound_word( std::size_t w ) const noexcept { return _words[2 * w]; }
  std::uint64_t value_word( std::size_t w ) const noexcept { return _words[2 * w + 1]; }

  trit at( std::uint32_t var ) const;

  /*! \brief Copy of this cube with position `var` replaced */
  cube with( std::uint32_t var, trit t ) const;

  std::uint32_t literal_count() const noexcept;
  std::uint32_t dimension() const noexcept { return _num_vars - literal_count(); }
  bool is_minterm() const noexcept { return literal_count() == _num_vars; }
  bool is_universe() const noexcept { return literal_count() == 0u; }

  /*! \brief Point test for n <= 64 (bit i of `point` is x_{i+1}) */
  bool contains_minterm( std::uint64_t point ) const noexcept
  {
    return ( ( point ^ value_word( 0 ) ) & bound_word( 0 ) ) == 0u;
  }

  std::string to_string() const;

  bool operator==( const cube& other ) const = default;

  std::size_t hash() const noexcept;

private:
  friend std::optional<cube> intersect( const cube& p, const cube& q );
  friend cover disjoint_sharp( const cube& q, const cube& p );

  void set( std::uint32_t var, trit t );

  std::uint32_t _num_vars{ 0 };
  /* interleaved (bound, value) pairs; inline storage covers n <= 64 */
  boost::container::small_vector<std::uint64_t, 2> _words;
};

/*! \brief Cube intersection; absent iff some variable is bound to opposite values */
std::optional<cube> intersect( const cube& p, const cube& q );

/*! \brief Allocation-free emptiness test for the intersection */
bool intersects( const cube& p, const cube& q );

/*! \brief True iff every minterm of `q` is a minterm of `p` */
bool contains( const cube& p, const cube& q );

/*! \brief Number of variables bound to the same value in both cubes */
std::uint32_t common_literal_count( const cube& p, const cube& q );

/*! \brief Decomposes q \ p into pairwise-disjoint cubes

  With r = q ∩ p, every variable that is free in `q` but bound in `r` yields
  one fragment, scanning variables in ascending index order.  Fragment j
  agrees with `r` on the variables emitted before it and takes the
  complement of `r` on its own variable.  The result has exactly
  literal_count(r) - literal_count(q) cubes and is empty iff p contains q.

  Throws contract_violation if the cubes are disjoint.
*/
cover disjoint_sharp( const cube& q, const cube& p );

/*! \brief Three-way comparison on the string form with '-' < '0' < '1'

  This is plain ASCII order of to_string(); it is the deterministic final
  tie-break wherever the algorithms allow an arbitrary choice.
*/
std::strong_ordering trit_order( const cube& a, const cube& b );

struct trit_less
{
  bool operator()( const cube& a, const cube& b ) const { return trit_order( a, b ) < 0; }
};

void check_same_vars( const cube& p, const cube& q );

} // namespace dsopforge

template<>
struct std::hash<dsopforge::cube>
{
  std::size_t operator()( const dsopforge::cube& c ) const noexcept { return c.hash(); }
};
