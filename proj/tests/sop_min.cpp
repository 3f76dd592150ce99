#include <catch2/catch_amalgamated.hpp>

#include <dsopforge/errors.hpp>
#include <dsopforge/sop_min.hpp>

#include "oracle.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

using namespace dsopforge;

using strings = std::vector<std::string>;

TEST_CASE( "build_sop fixpoints and merges", "[sop_min]" )
{
  CHECK( build_sop( function_spec( cover::from_strings( 4, { "000-", "1101" } ), cover( 4 ) ) ).to_strings() == strings{ "000-", "1101" } );
  CHECK( build_sop( function_spec( cover::from_strings( 2, { "0-" } ), cover( 2 ) ) ).to_strings() == strings{ "0-" } );
  CHECK( build_sop( function_spec( cover::from_strings( 2, { "0-", "1-" } ), cover( 2 ) ) ).to_strings() == strings{ "--" } );
  CHECK( build_sop( function_spec( 3 ) ).empty() );
}

TEST_CASE( "build_sop uses don't cares but drops cubes that only cover them", "[sop_min]" )
{
  const function_spec f( cover::from_strings( 3, { "000" } ), cover::from_strings( 3, { "001", "11-" } ) );
  const auto sop = build_sop( f );
  CHECK( sop.to_strings() == strings{ "00-" } );
}

TEST_CASE( "build_sop merges cubes across don't cares", "[sop_min]" )
{
  /* 0000 and 1100 span --00, whose other two points are don't cares */
  const function_spec two( cover::from_strings( 4, { "0000", "1100" } ), cover::from_strings( 4, { "1000", "0100", "0110", "1110", "0001", "1111" } ) );
  CHECK( build_sop( two ).to_strings() == strings{ "--00" } );

  /* literal-by-literal growth of 0000 alone would stop at 0-00 or -000 */
  const function_spec three( cover::from_strings( 4, { "0000", "0110", "1110" } ), cover::from_strings( 4, { "1000", "0100", "1010", "0111" } ) );
  const auto sop = build_sop( three );
  CHECK( sop.size() == 2u );
  const auto got = oracle::points( sop ), on = oracle::points( three.on ), dc = oracle::points( three.dc );
  for ( std::size_t m = 0; m < got.size(); ++m )
  {
    CHECK( ( got[m] ? ( on[m] || dc[m] ) : !on[m] ) );
  }
}

TEST_CASE( "expand_cube", "[sop_min]" )
{
  /* one literal at a time, highest index first */
  CHECK( expand_cube( cube::from_string( "0100" ), cover::from_strings( 4, { "0-0-", "01--" } ) ).to_string() == "01--" );
  CHECK( expand_cube( cube::from_string( "0110" ), cover::from_strings( 4, { "----" } ) ).is_universe() );
  CHECK( expand_cube( cube::from_string( "000-" ), cover::from_strings( 4, { "000-", "1101" } ) ).to_string() == "000-" );
  CHECK_THROWS_AS( expand_cube( cube::from_string( "1---" ), cover::from_strings( 4, { "0---" } ) ), contract_violation );
}

TEST_CASE( "expand_cube result is maximal", "[sop_min][property]" )
{
  std::mt19937_64 rng( 411 );
  for ( int iter = 0; iter < 500; ++iter )
  {
    const auto n = 2u + static_cast<std::uint32_t>( rng() % 7u );
    auto valid = oracle::random_cover( rng, n, 8u, 0.6 );
    if ( valid.empty() )
    {
      continue;
    }
    const auto p = valid[rng() % valid.size()];
    const auto e = expand_cube( p, valid );
    const auto vp = oracle::points( valid );
    const auto inside = [&]( const cube& c ) {
      const auto cp = oracle::points( c.to_string() );
      for ( std::size_t m = 0; m < cp.size(); ++m )
        if ( cp[m] && !vp[m] )
          return false;
      return true;
    };
    REQUIRE( contains( e, p ) );
    REQUIRE( inside( e ) );
    for ( std::uint32_t v = 0; v < n; ++v )
    {
      if ( e.at( v ) != trit::free )
      {
        REQUIRE_FALSE( inside( e.with( v, trit::free ) ) );
      }
    }
  }
}

TEST_CASE( "irredundant", "[sop_min]" )
{
  CHECK( irredundant( cover::from_strings( 2, { "0-", "1-", "--" } ), cover::from_strings( 2, { "--" } ) ).to_strings() == strings{ "--" } );
  const auto p = cover::from_strings( 4, { "01--", "1-1-", "0-0-" } );
  CHECK( irredundant( p, p ) == p );
  /* only the consensus term is redundant */
  CHECK( irredundant( cover::from_strings( 3, { "0-1", "-11", "11-" } ), cover::from_strings( 3, { "0-1", "11-" } ) ).to_strings() ==
         strings{ "0-1", "11-" } );
}

TEST_CASE( "identity backend normalizes the on-set only", "[sop_min]" )
{
  const function_spec f( cover::from_strings( 3, { "000", "001", "00-" } ), cover::from_strings( 3, { "1--" } ) );
  CHECK( build_sop( f, minimizer_backend::identity() ).to_strings() == strings{ "00-" } );
}

TEST_CASE( "backend specs", "[sop_min]" )
{
  CHECK( minimizer_backend::parse( "builtin" ).type == minimizer_backend::kind::builtin );
  CHECK( minimizer_backend::parse( "identity" ).type == minimizer_backend::kind::identity );
  const auto ext = minimizer_backend::parse( "external:/opt/espresso" );
  CHECK( ext.type == minimizer_backend::kind::external );
  CHECK( ext.path == "/opt/espresso" );
  CHECK( ext.name() == "external:/opt/espresso" );
  CHECK_THROWS_AS( minimizer_backend::parse( "magic" ), std::invalid_argument );
  CHECK_THROWS_AS( minimizer_backend::parse( "external:" ), std::invalid_argument );
}

TEST_CASE( "external backend failures are reported, never hidden", "[sop_min]" )
{
  const function_spec f( cover::from_strings( 3, { "000", "001" } ), cover( 3 ) );
  CHECK_THROWS_AS( build_sop( f, minimizer_backend::external( "/nonexistent/espresso" ) ), backend_error );

  const auto dir = std::filesystem::temp_directory_path() / "dsopforge_backend_test";
  std::filesystem::create_directories( dir );
  const auto write_script = [&]( const std::string& name, const std::string& body ) {
    const auto path = dir / name;
    std::ofstream( path ) << "#!/bin/sh\n" << body;
    std::filesystem::permissions( path, std::filesystem::perms::owner_all );
    return path.string();
  };

  /* a cover that misses an on-point is rejected */
  const auto lossy = write_script( "lossy.sh", "printf '.i 3\\n.o 1\\n.p 1\\n000 1\\n.e\\n'\n" );
  CHECK_THROWS_AS( build_sop( f, minimizer_backend::external( lossy ) ), backend_error );

  /* a well-behaved minimizer: echo back the merged cube */
  const auto good = write_script( "good.sh", "printf '.i 3\\n.o 1\\n.p 1\\n00- 1\\n.e\\n'\n" );
  CHECK( build_sop( f, minimizer_backend::external( good ) ).to_strings() == strings{ "00-" } );

  const auto failing = write_script( "fail.sh", "exit 3\n" );
  CHECK_THROWS_AS( build_sop( f, minimizer_backend::external( failing ) ), backend_error );

  std::filesystem::remove_all( dir );
}

TEST_CASE( "build_sop output is a valid SOP of the function", "[sop_min][property]" )
{
  std::mt19937_64 rng( 412 );
  for ( int iter = 0; iter < 600; ++iter )
  {
    const auto n = 1u + static_cast<std::uint32_t>( rng() % 8u );
    const auto f = oracle::random_function( rng, n );
    const auto sop = build_sop( f );
    const auto on = oracle::points( f.on ), dc = oracle::points( f.dc ), got = oracle::points( sop );
    INFO( "iter=" << iter );
    for ( std::size_t m = 0; m < on.size(); ++m )
    {
      REQUIRE( ( !on[m] || got[m] ) );
      REQUIRE( ( !got[m] || on[m] || dc[m] ) );
    }
    for ( const auto& c : sop )
    {
      REQUIRE( cover_intersects_cube( f.on, c ) );
    }
    REQUIRE( sop.size() <= normalize( f.on ).size() );
    REQUIRE( build_sop( f ) == sop );
    REQUIRE( build_sop( f, minimizer_backend::identity() ) == normalize( f.on ) );
  }
}
