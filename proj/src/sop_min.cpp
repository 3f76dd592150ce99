#include <dsopforge/errors.hpp>
#include <dsopforge/pla.hpp>
#include <dsopforge/sop_min.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <numeric>
#include <optional>

#include <unistd.h>
#include <sys/wait.h>

namespace dsopforge
{

minimizer_backend minimizer_backend::from_environment()
{
  if ( const char* path = std::getenv( "DSOPFORGE_MINIMIZER" ); path != nullptr && *path != '\0' )
  {
    return external( path );
  }
  return builtin();
}

minimizer_backend minimizer_backend::parse( const std::string& spec )
{
  if ( spec == "builtin" )
  {
    return builtin();
  }
  if ( spec == "identity" )
  {
    return identity();
  }
  if ( spec.rfind( "external:", 0 ) == 0 && spec.size() > 9u )
  {
    return external( spec.substr( 9 ) );
  }
  throw std::invalid_argument( "unknown minimizer '" + spec + "' (expected builtin, identity or external:PATH)" );
}

std::string minimizer_backend::name() const
{
  switch ( type )
  {
  case kind::builtin:
    return "builtin";
  case kind::identity:
    return "identity";
  case kind::external:
    return "external:" + path;
  }
  return "unknown";
}

cube expand_cube( const cube& p, const cover& valid )
{
  if ( !cover_contains_cube( valid, p ) )
  {
    throw contract_violation( "expand_cube: " + p.to_string() + " is not an implicant of the valid cover" );
  }
  cube current = p;
  for ( auto var = p.num_vars(); var-- > 0u; )
  {
    if ( current.at( var ) == trit::free )
    {
      continue;
    }
    auto bigger = current.with( var, trit::free );
    if ( cover_contains_cube( valid, bigger ) )
    {
      current = std::move( bigger );
    }
  }
  return current;
}

cover irredundant( const cover& sop, const cover& must_cover )
{
  std::vector<std::size_t> order( sop.size() );
  std::iota( order.begin(), order.end(), 0u );
  std::stable_sort( order.begin(), order.end(), [&]( auto a, auto b ) { return sop[a].dimension() < sop[b].dimension(); } );

  std::vector<bool> alive( sop.size(), true );
  for ( auto idx : order )
  {
    cover rest( sop.num_vars() );
    for ( std::size_t j = 0; j < sop.size(); ++j )
    {
      if ( alive[j] && j != idx )
      {
        rest.push_back( sop[j] );
      }
    }
    const bool redundant = std::all_of( must_cover.begin(), must_cover.end(), [&]( const cube& m ) {
      const auto part = intersect( m, sop[idx] );
      return !part || cover_contains_cube( rest, *part );
    } );
    if ( redundant )
    {
      alive[idx] = false;
    }
  }

  cover out( sop.num_vars() );
  for ( std::size_t j = 0; j < sop.size(); ++j )
  {
    if ( alive[j] )
    {
      out.push_back( sop[j] );
    }
  }
  return out;
}

namespace
{

/* smallest cube containing both */
cube supercube( const cube& a, const cube& b )
{
  std::vector<std::uint64_t> bound( a.num_words() ), value( a.num_words() );
  for ( std::size_t w = 0; w < a.num_words(); ++w )
  {
    bound[w] = a.bound_word( w ) & b.bound_word( w ) & ~( a.value_word( w ) ^ b.value_word( w ) );
    value[w] = a.value_word( w ) & bound[w];
  }
  return cube::from_masks( a.num_vars(), bound, value );
}

/* Complement of `valid` as disjoint cubes, or nothing once it grows past
   `limit` cubes. */
std::optional<cover> bounded_complement( const cover& valid, std::size_t limit )
{
  cover off( valid.num_vars() );
  off.push_back( cube( valid.num_vars() ) );
  for ( const auto& c : valid )
  {
    cover next( valid.num_vars() );
    for ( const auto& o : off )
    {
      if ( !intersects( o, c ) )
      {
        next.push_back( o );
        continue;
      }
      for ( auto& piece : disjoint_sharp( o, c ) )
      {
        next.push_back( std::move( piece ) );
      }
      if ( next.size() > limit )
      {
        return std::nullopt;
      }
    }
    off = std::move( next );
  }
  return off;
}

/* Grows `p` toward other cubes of `sop` while the supercube avoids `off`,
   each step taking the peer whose supercube swallows the most cubes of
   `sop` (earliest peer on ties). */
cube absorb_peers( cube p, const cover& sop, const cover& off )
{
  const auto swallowed = [&]( const cube& c ) {
    return std::count_if( sop.begin(), sop.end(), [&]( const cube& e ) { return contains( c, e ); } );
  };
  for ( ;; )
  {
    std::optional<cube> best;
    std::ptrdiff_t best_count = 0;
    for ( const auto& other : sop )
    {
      if ( contains( p, other ) )
      {
        continue;
      }
      auto grown = supercube( p, other );
      if ( cover_intersects_cube( off, grown ) )
      {
        continue;
      }
      const auto k = swallowed( grown );
      if ( !best || k > best_count )
      {
        best = std::move( grown );
        best_count = k;
      }
    }
    if ( !best )
    {
      return p;
    }
    p = std::move( *best );
  }
}

cover expand_all( const cover& sop, const cover& valid, const std::optional<cover>& off )
{
  cover out( sop.num_vars() );
  for ( const auto& c : sop )
  {
    if ( std::any_of( out.begin(), out.end(), [&]( const cube& e ) { return contains( e, c ); } ) )
    {
      continue;
    }
    out.push_back( expand_cube( off ? absorb_peers( c, sop, *off ) : c, valid ) );
  }
  return out;
}

cover builtin_sop( const function_spec& f )
{
  const auto valid = f.care_set();
  const auto off = bounded_complement( valid, max_offset_cubes );
  cover sop = normalize( f.on );
  for ( int round = 0; round < max_minimization_rounds; ++round )
  {
    auto next = irredundant( normalize( expand_all( sop, valid, off ) ), f.on );
    const bool smaller = next.size() < sop.size();
    sop = std::move( next );
    if ( !smaller )
    {
      break;
    }
  }
  return sop;
}

std::mutex external_lock;

std::string shell_quote( const std::string& s )
{
  std::string out = "'";
  for ( auto ch : s )
  {
    if ( ch == '\'' )
    {
      out += "'\\''";
    }
    else
    {
      out += ch;
    }
  }
  return out + "'";
}

cover external_sop( const function_spec& f, const std::string& executable )
{
  std::lock_guard guard( external_lock );

  static std::atomic<unsigned> counter{ 0 };
  const auto input = std::filesystem::temp_directory_path() /
                     ( "dsopforge-" + std::to_string( ::getpid() ) + "-" + std::to_string( counter++ ) + ".pla" );
  {
    std::ofstream out( input );
    out << write_function_pla( f );
    if ( !out )
    {
      throw backend_error( "cannot write temporary PLA " + input.string() );
    }
  }

  const auto command = shell_quote( executable ) + " " + shell_quote( input.string() ) + " 2>&1";
  std::string captured;
  int status = -1;
  if ( FILE* pipe = ::popen( command.c_str(), "r" ); pipe != nullptr )
  {
    char buffer[4096];
    std::size_t got;
    while ( ( got = std::fread( buffer, 1, sizeof( buffer ), pipe ) ) > 0u )
    {
      captured.append( buffer, got );
    }
    status = ::pclose( pipe );
  }
  std::error_code ignored;
  std::filesystem::remove( input, ignored );

  if ( status != 0 )
  {
    const auto code = status == -1 ? -1 : ( WIFEXITED( status ) ? WEXITSTATUS( status ) : -1 );
    throw backend_error( "minimizer '" + executable + "' failed (exit " + std::to_string( code ) + "): " + captured.substr( 0, 2000 ) );
  }

  pla_file result;
  try
  {
    result = parse_pla( captured );
  }
  catch ( const pla_parse_error& e )
  {
    throw backend_error( "minimizer '" + executable + "' produced unreadable PLA (" + e.what() + ")" );
  }
  if ( result.num_inputs != f.num_vars() || result.num_outputs != 1u )
  {
    throw backend_error( "minimizer '" + executable + "' returned a PLA of the wrong shape" );
  }

  cover sop( f.num_vars() );
  for ( const auto& row : result.rows )
  {
    if ( row.outputs[0] == '1' )
    {
      sop.push_back( cube::from_string( row.inputs ) );
    }
  }

  const auto valid = f.care_set();
  for ( const auto& c : sop )
  {
    if ( !cover_contains_cube( valid, c ) )
    {
      throw backend_error( "minimizer '" + executable + "' returned cube " + c.to_string() + " outside the care set" );
    }
  }
  for ( const auto& c : f.on )
  {
    if ( !cover_contains_cube( sop, c ) )
    {
      throw backend_error( "minimizer '" + executable + "' left on-cube " + c.to_string() + " uncovered" );
    }
  }
  /* dc-only cubes are dropped, as a SOP minimizer would */
  cover kept( f.num_vars() );
  for ( const auto& c : sop )
  {
    if ( cover_intersects_cube( f.on, c ) )
    {
      kept.push_back( c );
    }
  }
  return kept;
}

} // namespace

cover build_sop( const function_spec& f, const minimizer_backend& backend )
{
  switch ( backend.type )
  {
  case minimizer_backend::kind::identity:
    return normalize( f.on );
  case minimizer_backend::kind::external:
    return external_sop( f, backend.path );
  case minimizer_backend::kind::builtin:
    break;
  }
  return builtin_sop( f );
}

} // namespace dsopforge
