// dsopforge: DSOP and partial DSOP synthesis of PLA files.
//
// Exit codes: 0 success, 1 usage or I/O error, 2 invalid input,
// 3 minimizer backend failure, 4 verification failure.

#include <dsopforge/driver.hpp>
#include <dsopforge/errors.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace dsopforge;

namespace
{

struct common_flags
{
  int variant{ 3 };
  std::string sort{ "dw" };
  bool drop_dc_only{ false };
  std::string minimizer;
  unsigned jobs{ 1u };
  bool verify{ false };
  std::uint32_t max_enum{ default_enumeration_limit };
  std::uint64_t seed{ 0x5eedu };
  std::uint64_t samples{ 1000000u };

  void attach( CLI::App& cmd, bool with_variant )
  {
    if ( with_variant )
    {
      cmd.add_option( "--variant", variant, "Fragment handling variant (1-5)" )->check( CLI::Range( 1, 5 ) )->capture_default_str();
      cmd.add_option( "--sort", sort, "Sort policy: dw (dimension/weight) or wd (weight/dimension)" )
          ->check( CLI::IsMember( { "dw", "wd" } ) )
          ->capture_default_str();
      cmd.add_flag( "--verify", verify, "Verify every output exhaustively (or by sampling above --max-enum)" );
    }
    cmd.add_flag( "--drop-dc-only", drop_dc_only, "Skip cubes that cover only don't-care points" );
    cmd.add_option( "--minimizer", minimizer, "builtin, identity or external:PATH (default: $DSOPFORGE_MINIMIZER or builtin)" );
    cmd.add_option( "--jobs", jobs, "Worker threads for per-output work" )->check( CLI::PositiveNumber )->capture_default_str();
    cmd.add_option( "--max-enum", max_enum, "Largest input count verified exhaustively" )->capture_default_str();
    cmd.add_option( "--seed", seed, "Seed for sampled verification" )->capture_default_str();
    cmd.add_option( "--samples", samples, "Samples per output for sampled verification" )->capture_default_str();
  }

  run_options options() const
  {
    run_options opts;
    opts.cfg.variant = variant;
    opts.cfg.sort = parse_sort_policy( sort );
    opts.cfg.drop_dc_only = drop_dc_only;
    opts.cfg.backend = minimizer.empty() ? minimizer_backend::from_environment() : minimizer_backend::parse( minimizer );
    opts.jobs = jobs;
    opts.verify = verify;
    opts.verify_opts.max_enum = max_enum;
    opts.verify_opts.seed = seed;
    opts.verify_opts.samples = samples;
    return opts;
  }
};

void write_text( const std::string& path, const std::string& text )
{
  if ( path.empty() || path == "-" )
  {
    std::cout << text;
    return;
  }
  std::ofstream out( path, std::ios::binary );
  out << text;
  if ( !out )
  {
    throw std::runtime_error( "cannot write " + path );
  }
}

void emit( const run_result& result, const std::string& out_path, const std::string& stats_path )
{
  write_text( out_path, result.pla_text() );
  const auto json = stats_to_json( result.stats );
  if ( stats_path.empty() )
  {
    std::cerr << json;
  }
  else
  {
    write_text( stats_path, json );
  }
}

std::vector<std::string> split_list( const std::string& s )
{
  std::vector<std::string> items;
  std::stringstream in( s );
  std::string item;
  while ( std::getline( in, item, ',' ) )
  {
    if ( !item.empty() )
    {
      items.push_back( item );
    }
  }
  return items;
}

std::string stem_of( const std::string& path )
{
  return std::filesystem::path( path ).stem().string();
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "Disjoint SOP and partial DSOP synthesis for PLA files" };
  app.require_subcommand( 1 );

  common_flags dsop_flags, pdsop_flags, bench_flags;
  std::string input, out_path, stats_path;

  auto* dsop_cmd = app.add_subcommand( "dsop", "Compute a DSOP for every output of a PLA" );
  dsop_cmd->add_option( "input", input, "Input PLA (type f or fd)" )->required()->check( CLI::ExistingFile );
  dsop_cmd->add_option( "-o,--output", out_path, "Output PLA (default: stdout)" );
  dsop_cmd->add_option( "--stats", stats_path, "Stats JSON (default: stderr)" );
  dsop_flags.attach( *dsop_cmd, true );

  std::string sopd_path, sops_path, dc_policy_name{ "many" };
  auto* pdsop_cmd = app.add_subcommand( "pdsop", "Compute a partial DSOP" );
  pdsop_cmd->add_option( "input", input, "Single PLA: on-set covered once, don't cares routed by --dc-policy" )->check( CLI::ExistingFile );
  auto* sopd_opt = pdsop_cmd->add_option( "--sopd", sopd_path, "PLA of points to cover exactly once" )->check( CLI::ExistingFile );
  auto* sops_opt = pdsop_cmd->add_option( "--sops", sops_path, "PLA of points that may be covered repeatedly" )->check( CLI::ExistingFile );
  sopd_opt->needs( sops_opt );
  sops_opt->needs( sopd_opt );
  pdsop_cmd->add_option( "--dc-policy", dc_policy_name, "Single-file mode: once (plain DSOP) or many (don't cares into sopS)" )
      ->check( CLI::IsMember( { "once", "many" } ) )
      ->capture_default_str();
  pdsop_cmd->add_option( "-o,--output", out_path, "Output PLA (default: stdout)" );
  pdsop_cmd->add_option( "--stats", stats_path, "Stats JSON (default: stderr)" );
  pdsop_flags.attach( *pdsop_cmd, true );

  std::string bench_dir, variants_list{ "1,2,3,4,5" }, sorts_list{ "dw,wd" }, format{ "csv" };
  bool no_time = false;
  auto* bench_cmd = app.add_subcommand( "bench", "Run the variant x sort grid over a directory of PLA files" );
  bench_cmd->add_option( "directory", bench_dir, "Directory containing *.pla" )->required()->check( CLI::ExistingDirectory );
  bench_cmd->add_option( "--variants", variants_list, "Comma-separated variants" )->capture_default_str();
  bench_cmd->add_option( "--sorts", sorts_list, "Comma-separated sort policies" )->capture_default_str();
  bench_cmd->add_option( "--format", format, "csv, json or table" )->check( CLI::IsMember( { "csv", "json", "table" } ) )->capture_default_str();
  bench_cmd->add_flag( "--csv", [&]( std::int64_t ) { format = "csv"; }, "Shorthand for --format csv" );
  bench_cmd->add_flag( "--no-time", no_time, "Omit elapsed times (for byte-stable output)" );
  bench_cmd->add_option( "-o,--output", out_path, "Output file (default: stdout)" );
  bench_flags.attach( *bench_cmd, false );

  try
  {
    app.parse( argc, argv );
  }
  catch ( const CLI::ParseError& e )
  {
    return app.exit( e ) == 0 ? 0 : 1;
  }

  try
  {
    if ( *dsop_cmd )
    {
      const auto pla = read_pla( input );
      emit( run_dsop( pla, stem_of( input ), dsop_flags.options() ), out_path, stats_path );
    }
    else if ( *pdsop_cmd )
    {
      const auto opts = pdsop_flags.options();
      if ( !sopd_path.empty() )
      {
        if ( !input.empty() )
        {
          std::cerr << "error: give either an input PLA or --sopd/--sops, not both\n";
          return 1;
        }
        emit( run_pdsop( read_pla( sopd_path ), read_pla( sops_path ), stem_of( sopd_path ), opts ), out_path, stats_path );
      }
      else if ( !input.empty() )
      {
        emit( run_pdsop( read_pla( input ), parse_dc_policy( dc_policy_name ), stem_of( input ), opts ), out_path, stats_path );
      }
      else
      {
        std::cerr << "error: pdsop needs an input PLA or --sopd and --sops\n";
        return 1;
      }
    }
    else if ( *bench_cmd )
    {
      std::vector<int> variants;
      for ( const auto& v : split_list( variants_list ) )
      {
        variants.push_back( std::stoi( v ) );
        if ( variants.back() < 1 || variants.back() > 5 )
        {
          throw std::invalid_argument( "variant " + v + " outside 1..5" );
        }
      }
      std::vector<sort_policy> sorts;
      for ( const auto& s : split_list( sorts_list ) )
      {
        sorts.push_back( parse_sort_policy( s ) );
      }
      const auto rows = run_bench( bench_dir, variants, sorts, bench_flags.options() );
      if ( format == "json" )
      {
        write_text( out_path, bench_to_json( rows, !no_time ) );
      }
      else if ( format == "table" )
      {
        write_text( out_path, render_table( rows ) );
      }
      else
      {
        write_text( out_path, bench_to_csv( rows, !no_time ) );
      }
      const auto failed = std::count_if( rows.begin(), rows.end(), []( const bench_row& r ) { return !r.error.empty(); } );
      if ( failed > 0 )
      {
        std::cerr << failed << " of " << rows.size() << " runs failed\n";
      }
    }
  }
  catch ( const pla_parse_error& e )
  {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  }
  catch ( const input_error& e )
  {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  catch ( const backend_error& e )
  {
    std::cerr << "minimizer error: " << e.what() << "\n";
    return 3;
  }
  catch ( const verification_failed& e )
  {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 4;
  }
  catch ( const std::exception& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
