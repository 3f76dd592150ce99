#pragma once

/* Reference semantics for the tests.  Everything here works on trit strings
   and plain truth tables so that it shares no code with the library. */

#include <dsopforge/cover.hpp>
#include <dsopforge/partial_dsop.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace oracle
{

using truth_table = std::vector<std::uint8_t>;

/* character i of the string is x_{i+1}, which is bit i of the point */
inline bool point_in( const std::string& c, std::uint64_t point )
{
  for ( std::size_t i = 0; i < c.size(); ++i )
  {
    const auto bit = ( point >> i ) & 1u;
    if ( ( c[i] == '0' && bit ) || ( c[i] == '1' && !bit ) )
    {
      return false;
    }
  }
  return true;
}

inline truth_table points( const std::string& c )
{
  truth_table tt( std::size_t{ 1 } << c.size() );
  for ( std::uint64_t m = 0; m < tt.size(); ++m )
  {
    tt[m] = point_in( c, m );
  }
  return tt;
}

/* coverage multiplicity of every point */
inline std::vector<std::uint32_t> counts( std::uint32_t n, const std::vector<std::string>& f )
{
  std::vector<std::uint32_t> out( std::size_t{ 1 } << n );
  for ( const auto& c : f )
  {
    for ( std::uint64_t m = 0; m < out.size(); ++m )
    {
      out[m] += point_in( c, m );
    }
  }
  return out;
}

inline truth_table points( std::uint32_t n, const std::vector<std::string>& f )
{
  auto cnt = counts( n, f );
  truth_table tt( cnt.size() );
  for ( std::size_t m = 0; m < cnt.size(); ++m )
  {
    tt[m] = cnt[m] > 0u;
  }
  return tt;
}

inline truth_table points( const dsopforge::cover& f )
{
  return points( f.num_vars(), f.to_strings() );
}

inline std::uint64_t popcount( const truth_table& tt )
{
  std::uint64_t k = 0;
  for ( auto b : tt )
  {
    k += b;
  }
  return k;
}

inline std::string minterm_string( std::uint32_t n, std::uint64_t m )
{
  std::string s( n, '0' );
  for ( std::uint32_t i = 0; i < n; ++i )
  {
    s[i] = ( ( m >> i ) & 1u ) ? '1' : '0';
  }
  return s;
}

/* Seeded generators */

inline std::string random_cube( std::mt19937_64& rng, std::uint32_t n, double free_prob = 0.5 )
{
  std::uniform_real_distribution<double> u( 0.0, 1.0 );
  std::string s( n, '-' );
  for ( auto& ch : s )
  {
    if ( u( rng ) >= free_prob )
    {
      ch = ( rng() & 1u ) ? '1' : '0';
    }
  }
  return s;
}

inline dsopforge::cover random_cover( std::mt19937_64& rng, std::uint32_t n, std::uint32_t max_cubes, double free_prob = 0.5 )
{
  const auto k = static_cast<std::uint32_t>( rng() % ( max_cubes + 1u ) );
  dsopforge::cover f( n );
  for ( std::uint32_t i = 0; i < k; ++i )
  {
    f.push_back( dsopforge::cube::from_string( random_cube( rng, n, free_prob ) ) );
  }
  return f;
}

inline dsopforge::function_spec random_function( std::mt19937_64& rng, std::uint32_t n )
{
  std::uniform_real_distribution<double> u( 0.3, 0.75 );
  const double density = u( rng );
  return dsopforge::function_spec( random_cover( rng, n, 2u + n, density ), random_cover( rng, n, n / 2u + 1u, density ) );
}

/* Point classes painted with random cubes, then written as minterm covers:
   0 off, 1 sopD.on, 2 sopD.dc, 3 sopS.on, 4 sopS.dc. */
inline dsopforge::partial_spec random_partial( std::mt19937_64& rng, std::uint32_t n )
{
  std::vector<std::uint8_t> cls( std::size_t{ 1 } << n, 0u );
  const auto strokes = 1u + rng() % ( n + 3u );
  for ( std::uint32_t s = 0; s < strokes; ++s )
  {
    const auto c = random_cube( rng, n, 0.55 );
    const auto paint = static_cast<std::uint8_t>( rng() % 5u );
    for ( std::uint64_t m = 0; m < cls.size(); ++m )
    {
      if ( point_in( c, m ) )
      {
        cls[m] = paint;
      }
    }
  }
  dsopforge::function_spec d( n ), sh( n );
  dsopforge::cover* target[5] = { nullptr, &d.on, &d.dc, &sh.on, &sh.dc };
  for ( std::uint64_t m = 0; m < cls.size(); ++m )
  {
    if ( cls[m] != 0u )
    {
      target[cls[m]]->push_back( dsopforge::cube::from_minterm( n, m ) );
    }
  }
  return dsopforge::partial_spec( d, sh );
}

/* exact-once check: count 1 on on-points, <= 1 on dc, 0 elsewhere */
inline bool is_dsop_of( const dsopforge::function_spec& f, const dsopforge::cover& d )
{
  const auto n = f.num_vars();
  const auto on = points( f.on ), dc = points( f.dc );
  const auto cnt = counts( n, d.to_strings() );
  for ( std::size_t m = 0; m < cnt.size(); ++m )
  {
    const bool ok = on[m] ? cnt[m] == 1u : ( dc[m] ? cnt[m] <= 1u : cnt[m] == 0u );
    if ( !ok )
    {
      return false;
    }
  }
  return true;
}

inline bool is_partial_dsop_of( const dsopforge::partial_spec& spec, const dsopforge::cover& d )
{
  const auto n = spec.num_vars();
  const auto d_on = points( spec.sop_d.on ), d_dc = points( spec.sop_d.dc );
  const auto s_on = points( spec.sop_s.on ), s_dc = points( spec.sop_s.dc );
  const auto cnt = counts( n, d.to_strings() );
  for ( std::size_t m = 0; m < cnt.size(); ++m )
  {
    bool ok;
    if ( d_on[m] )
      ok = cnt[m] == 1u;
    else if ( s_on[m] )
      ok = cnt[m] >= 1u;
    else if ( d_dc[m] )
      ok = cnt[m] <= 1u;
    else if ( s_dc[m] )
      ok = true;
    else
      ok = cnt[m] == 0u;
    if ( !ok )
    {
      return false;
    }
  }
  return true;
}

} // namespace oracle
