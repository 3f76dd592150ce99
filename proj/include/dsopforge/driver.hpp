/*!
  \file driver.hpp
  \brief Multi-output runs and the benchmark grid behind the command-line tool

  Each output of a PLA is synthesized on its own; cubes shared between
  outputs are counted once in the reported size.  Minimization is also
  per output (espresso's multi-output mode is not reproduced), which the
  stats record in `sop_minimization`.
*/

#pragma once

#include "dsop.hpp"
#include "partial_dsop.hpp"
#include "pla.hpp"
#include "verify.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace dsopforge
{

/*! \brief --verify found a violation; the message names the output */
class verification_failed : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

struct run_options
{
  dsop_config cfg{};
  unsigned jobs{ 1u };
  bool verify{ false };
  verify_options verify_opts{};
};

struct run_stats
{
  std::string benchmark;
  std::uint32_t inputs{ 0 };
  std::uint32_t outputs{ 0 };
  std::uint64_t sop_size{ 0 };
  std::uint64_t dsop_size{ 0 };
  int variant{ 3 };
  sort_policy sort{ sort_policy::dimension_weight };
  bool drop_dc_only{ false };
  std::string backend{ "builtin" };
  double elapsed_ms{ 0.0 };
  bool verified{ false };
  std::string mode{ "dsop" };
  std::string sop_minimization{ "per-output" };
};

struct run_result
{
  std::vector<cover> covers; /*!< one per output */
  run_stats stats;
  std::vector<verification_report> reports; /*!< empty unless verification ran */
  pla_labels labels;

  std::string pla_text() const { return write_pla( covers, labels, pla_type::f ); }
};

enum class dc_policy
{
  once, /*!< benchmark don't cares stay don't cares of a plain DSOP */
  many  /*!< benchmark don't cares become sopS points that may be covered repeatedly */
};

dc_policy parse_dc_policy( const std::string& s );

/*! \brief DSOP of every output; throws verification_failed if opts.verify and a check fails */
run_result run_dsop( const pla_file& pla, const std::string& name, const run_options& opts );

/*! \brief Partial DSOP from separate sopD and sopS files (same .i/.o)

  Throws input_error if the files' shapes differ or sopD and sopS overlap.
*/
run_result run_pdsop( const pla_file& sop_d, const pla_file& sop_s, const std::string& name, const run_options& opts );

/*! \brief Partial DSOP of one file: on-set as sopD, don't cares routed by `policy` */
run_result run_pdsop( const pla_file& pla, dc_policy policy, const std::string& name, const run_options& opts );

struct bench_row
{
  run_stats stats;
  std::string error; /*!< empty on success */
};

/*! \brief Runs every *.pla in `dir` (sorted by name) for each variant and sort, with verification on */
std::vector<bench_row> run_bench( const std::filesystem::path& dir, const std::vector<int>& variants,
                                  const std::vector<sort_policy>& sorts, const run_options& base );

std::string stats_to_json( const run_stats& stats, bool include_time = true );
std::string bench_to_json( const std::vector<bench_row>& rows, bool include_time = true );
std::string bench_to_csv( const std::vector<bench_row>& rows, bool include_time = true );

/*! \brief Human-readable grid: one block per sort policy, one row per benchmark, size/time per variant */
std::string render_table( const std::vector<bench_row>& rows );

} // namespace dsopforge
