// vbf: analyze, verify, search and apn front end
//
// exit codes: 0 ok, 1 falsification, 2 input error, 3 search found nothing

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <vbf/vbf.hpp>

namespace
{

using namespace vbf;

constexpr int exit_ok = 0;
constexpr int exit_falsified = 1;
constexpr int exit_input = 2;
constexpr int exit_empty = 3;

std::string yes_no( bool b )
{
  return b ? "yes" : "no";
}

std::string join( const std::vector<std::string>& parts, const char* sep )
{
  std::string s;
  for ( std::size_t i = 0; i < parts.size(); ++i )
  {
    s += ( i ? sep : "" ) + parts[i];
  }
  return s;
}

void print_report_text( std::ostream& os, const analysis_report& r )
{
  const auto& s = r.summary;
  std::size_t bent = 0, semi_bent = 0;
  for ( const auto& c : s.components )
  {
    bent += c.bent;
    semi_bent += c.semi_bent;
  }
  os << "n = " << s.n << ", m = " << s.m << ", degree " << s.degree << "\n";
  os << "embedding: " << yes_no( s.is_embedding ) << " (image size " << s.image_size << ")\n";
  os << "image is an affine subspace: " << yes_no( s.image_is_affine ) << "\n";
  os << "sum of squared Fourier coefficients: " << s.sum_sq_fourier << "\n";
  os << "bent components: " << bent << ", semi-bent components: " << semi_bent << "\n";
  os << "balanced components |B(F)| = " << s.balanced_set.size() << "\n";
  os << "  " << render_vector_set( s.balanced_set, s.m ) << "\n";
  os << "constant components |C(F)| = " << s.constant_set.size() << "\n";
  os << "  " << render_vector_set( s.constant_set, s.m ) << "\n";
  os << "components:\n";
  std::vector<vec_t> order;
  for ( const auto& c : s.components )
  {
    order.push_back( c.lambda );
  }
  std::sort( order.begin(), order.end(), [&]( vec_t a, vec_t b ) { return tuple_order_key( a, s.m ) < tuple_order_key( b, s.m ); } );
  for ( auto lambda : order )
  {
    const auto& c = s.components[lambda];
    os << "  " << render_tuple( lambda, s.m ) << "  deg " << c.degree << "  F " << std::setw( 5 ) << c.fourier << "  nl " << c.nonlinearity
       << "  dim V " << c.linear_structure_dim << "  " << join( c.tags(), "," ) << "\n";
  }
  os << "statements:\n";
  for ( const auto& v : r.verdicts )
  {
    os << "  " << std::left << std::setw( 28 ) << statement_name( v.which ) << std::right;
    if ( !v.applicable )
    {
      os << "n/a    " << v.detail << "\n";
    }
    else
    {
      os << ( v.holds ? "holds  " : "FAILS  " ) << "lhs " << v.lhs << ", rhs " << v.rhs << ( v.detail.empty() ? "" : "; " + v.detail ) << "\n";
    }
  }
}

int run_analyze( const std::string& input, const std::string& format, const std::string& witness_dir )
{
  const auto F = load_input( input );
  const auto report = analyze( F );
  if ( format == "json" )
  {
    std::cout << to_json( report ).dump( 2 ) << "\n";
  }
  else
  {
    print_report_text( std::cout, report );
  }
  if ( report.any_falsified() )
  {
    for ( const auto& v : report.verdicts )
    {
      if ( v.falsified() )
      {
        std::cerr << "counterexample written to " << write_witness( witness_dir, v ).string() << "\n";
      }
    }
    return exit_falsified;
  }
  return exit_ok;
}

int run_verify( const verify_options& opt, const std::string& format, const std::string& witness_dir )
{
  const auto results = run_verification( opt );
  bool falsified = false;
  if ( format == "json" )
  {
    json suites = json::array();
    for ( const auto& r : results )
    {
      suites.push_back( json{ { "suite", r.name },
                              { "mode", r.mode },
                              { "passed", r.passed },
                              { "applicable", r.applicable },
                              { "inapplicable", r.inapplicable },
                              { "failures", r.failures.size() } } );
    }
    std::cout << json{ { "seed", opt.seed }, { "max_n", opt.max_n }, { "max_m", opt.max_m }, { "samples", opt.samples }, { "suites", suites } }.dump( 2 )
              << "\n";
  }
  else
  {
    std::cout << "seed " << opt.seed << ", max-n " << opt.max_n << ", max-m " << opt.max_m << ", samples " << opt.samples << "\n";
    for ( const auto& r : results )
    {
      std::cout << std::left << std::setw( 28 ) << r.name << std::right << r.passed << "/" << r.applicable << ( r.failures.empty() ? " pass" : " FAIL" );
      if ( r.inapplicable )
      {
        std::cout << " (" << r.inapplicable << " inapplicable)";
      }
      std::cout << "  [" << r.mode << "]\n";
    }
  }
  for ( const auto& r : results )
  {
    falsified = falsified || !r.failures.empty();
    for ( const auto& f : r.failures )
    {
      std::cerr << r.name << ": " << f.detail << "\n";
    }
  }
  if ( falsified )
  {
    for ( const auto& p : write_falsifications( witness_dir, results ) )
    {
      std::cerr << "counterexample written to " << p.string() << "\n";
    }
    return exit_falsified;
  }
  return exit_ok;
}

json hit_json( const search_hit& h )
{
  json j = to_json( h.report );
  j["function"] = to_json( h.function );
  j["constructive"] = h.constructive;
  j["candidate"] = h.constructive ? json( nullptr ) : json( h.candidate );
  j["lower_bound_equality"] = h.lower_bound_equality;
  j["upper_bound_equality"] = h.upper_bound_equality;
  /* recorded without interpretation: lower bound met while nontrivial constants exist */
  j["lower_bound_with_constants"] = h.lower_bound_equality && h.report.constant_count() > 1;
  return j;
}

int run_search( const search_config& config, const std::string& format, const std::string& out_dir, const std::string& witness_dir )
{
  const auto result = search( config );
  if ( !out_dir.empty() )
  {
    std::filesystem::create_directories( out_dir );
    for ( std::size_t i = 0; i < result.hits.size(); ++i )
    {
      std::ostringstream name;
      name << "hit-" << std::setw( 4 ) << std::setfill( '0' ) << i << ".json";
      std::ofstream( std::filesystem::path( out_dir ) / name.str() ) << hit_json( result.hits[i] ).dump( 2 ) << "\n";
    }
  }
  if ( format == "json" )
  {
    json hits = json::array();
    for ( const auto& h : result.hits )
    {
      hits.push_back( hit_json( h ) );
    }
    std::cout << json{ { "n", config.n },
                       { "m", config.m },
                       { "degree_cap", config.degree_cap },
                       { "target", std::string( target_name( config.target ) ) },
                       { "seed", config.seed },
                       { "budget", config.budget },
                       { "examined", result.examined },
                       { "embeddings", result.embeddings },
                       { "counterexamples", result.counterexamples.size() },
                       { "hits", hits } }
                     .dump( 2 )
              << "\n";
  }
  else
  {
    std::cout << "target " << target_name( config.target ) << ", n = " << config.n << ", m = " << config.m << ", degree cap " << config.degree_cap
              << ", seed " << config.seed << "\n";
    std::cout << "examined " << result.examined << " candidates, " << result.embeddings << " embeddings, " << result.hits.size() << " hits\n";
    for ( const auto& h : result.hits )
    {
      const auto& s = h.report.summary;
      std::cout << ( h.constructive ? "constructive" : "candidate " + std::to_string( h.candidate ) ) << ": degree " << s.degree << ", |B| = " << s.balanced_set.size()
                << ", |C| = " << s.constant_set.size() << ( h.lower_bound_equality ? ", lower bound met" : "" )
                << ( h.upper_bound_equality ? ", upper bound met" : "" ) << "\n";
      std::cout << "  table " << to_json( h.function )["table"].dump() << "\n";
    }
  }
  if ( !result.counterexamples.empty() )
  {
    for ( const auto& v : result.counterexamples )
    {
      std::cerr << "counterexample written to " << write_witness( witness_dir, v ).string() << "\n";
    }
    return exit_falsified;
  }
  return result.hits.empty() ? exit_empty : exit_ok;
}

int run_apn( const std::string& input, const std::string& format )
{
  const auto F = load_input( input );
  if ( F.num_inputs() != F.num_outputs() )
  {
    throw input_error( input + ": APN analysis needs a square function, got n=" + std::to_string( F.num_inputs() ) + ", m=" + std::to_string( F.num_outputs() ) );
  }
  if ( F.num_inputs() < 2 )
  {
    throw input_error( input + ": APN analysis needs n >= 2" );
  }
  const unsigned n = F.num_inputs();
  const auto uniformity = differential_uniformity( F );
  const auto deg = degree( F );
  std::vector<direction_record> records( F.domain_size() - 1 );
  std::vector<bool> affine( records.size() );
  parallel_for( records.size(), [&]( std::size_t i ) {
    const auto a = static_cast<vec_t>( i + 1 );
    records[i] = check_direction( F, a );
    affine[i] = image_is_affine_subspace( make_restricted_derivative( F, a ).map );
  } );
  const auto corollary = check_cubic_apn_corollary( F );

  if ( format == "json" )
  {
    json dirs = json::array();
    for ( std::size_t i = 0; i < records.size(); ++i )
    {
      auto d = to_json( records[i], n );
      d.erase( "holds" );
      d.erase( "bound" );
      d.erase( "equality" );
      d.erase( "structured" );
      d["image_is_affine"] = static_cast<bool>( affine[i] );
      dirs.push_back( std::move( d ) );
    }
    std::cout << json{ { "n", n },
                       { "degree", deg },
                       { "differential_uniformity", uniformity },
                       { "apn", uniformity == 2 },
                       { "restricted_derivatives", dirs },
                       { "corollary", to_json( corollary, n ) } }
                     .dump( 2 )
              << "\n";
  }
  else
  {
    std::cout << "n = " << n << ", degree " << deg << "\n";
    std::cout << "differential uniformity " << uniformity << ", APN: " << yes_no( uniformity == 2 ) << "\n";
    std::cout << "restricted derivatives:\n";
    for ( std::size_t i = 0; i < records.size(); ++i )
    {
      const auto& d = records[i];
      std::cout << "  a = " << render_tuple( d.direction, n ) << "  embedding " << yes_no( d.embedding ) << "  deg " << d.degree << "  |B| "
                << d.balanced_count << "  |C| " << d.constant_count << "  affine image " << yes_no( affine[i] ) << "\n";
    }
    if ( corollary.applicable )
    {
      std::cout << "cubic APN bound " << cubic_apn_bound( n ) << ": " << ( corollary.holds ? "holds" : "FAILS" ) << " in "
                << std::count_if( corollary.directions.begin(), corollary.directions.end(), []( const auto& d ) { return d.holds; } ) << "/"
                << corollary.directions.size() << " directions, min |B| = " << corollary.min_balanced() << "\n";
    }
    else
    {
      std::cout << "cubic APN bound: inapplicable (" << corollary.detail << ")\n";
    }
  }
  return corollary.applicable && !corollary.holds ? exit_falsified : exit_ok;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "Component analysis of vectorial Boolean functions" };
  app.require_subcommand( 1 );

  std::string format = "text";
  std::string witness_dir = "witnesses";
  const auto add_format = [&]( CLI::App* sub ) {
    sub->add_option( "--format", format, "output format" )->check( CLI::IsMember( { "text", "json" } ) );
  };

  std::string input;
  auto* analyze_cmd = app.add_subcommand( "analyze", "report component balancedness, embedding and statement checks" );
  analyze_cmd->add_option( "--input", input, "function file or power:<n>:<e>" )->required();
  analyze_cmd->add_option( "--witness-dir", witness_dir, "directory for counterexample files" );
  add_format( analyze_cmd );

  verify_options vopt;
  auto* verify_cmd = app.add_subcommand( "verify", "run exhaustive and sampled verification suites" );
  verify_cmd->add_option( "--max-n", vopt.max_n, "input dimension" );
  verify_cmd->add_option( "--max-m", vopt.max_m, "output dimension" );
  verify_cmd->add_option( "--suites", vopt.suites, "suite names or all" )->delimiter( ',' );
  verify_cmd->add_option( "--seed", vopt.seed, "seed for sampled suites" );
  verify_cmd->add_option( "--samples", vopt.samples, "sample count for sampled suites" );
  verify_cmd->add_option( "--witness-dir", witness_dir, "directory for counterexample files" );
  verify_cmd->add_flag_callback( "--list", [] {
    for ( const auto& s : all_suite_names() )
    {
      std::cout << s << "\n";
    }
    std::exit( exit_ok );
  }, "list suite names" );
  add_format( verify_cmd );

  search_config sconf;
  std::string target = "any-embedding", out_dir;
  auto* search_cmd = app.add_subcommand( "search", "seeded random search for low-degree embeddings" );
  search_cmd->add_option( "--n", sconf.n, "input dimension" );
  search_cmd->add_option( "--m", sconf.m, "output dimension" );
  search_cmd->add_option( "--target", target, "any-embedding, meets-lower-bound or meets-upper-bound" );
  search_cmd->add_option( "--budget", sconf.budget, "number of random candidates" );
  search_cmd->add_option( "--seed", sconf.seed, "seed" );
  search_cmd->add_option( "--degree-cap", sconf.degree_cap, "maximum monomial degree" );
  search_cmd->add_option( "--max-hits", sconf.max_hits, "stop after this many hits" );
  search_cmd->add_option( "--out", out_dir, "directory for hit files" );
  search_cmd->add_option( "--witness-dir", witness_dir, "directory for counterexample files" );
  add_format( search_cmd );

  auto* apn_cmd = app.add_subcommand( "apn", "differential uniformity and restricted derivatives" );
  apn_cmd->add_option( "--input", input, "function file or power:<n>:<e>" )->required();
  add_format( apn_cmd );

  try
  {
    app.parse( argc, argv );
  }
  catch ( const CLI::Success& e )
  {
    return app.exit( e );
  }
  catch ( const CLI::ParseError& e )
  {
    app.exit( e );
    return exit_input;
  }

  try
  {
    if ( *analyze_cmd )
    {
      return run_analyze( input, format, witness_dir );
    }
    if ( *verify_cmd )
    {
      return run_verify( vopt, format, witness_dir );
    }
    if ( *search_cmd )
    {
      const auto t = target_from_name( target );
      if ( !t )
      {
        throw input_error( "unknown target '" + target + "'" );
      }
      sconf.target = *t;
      return run_search( sconf, format, out_dir, witness_dir );
    }
    return run_apn( input, format );
  }
  catch ( const input_error& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  }
  catch ( const consistency_error& e )
  {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return exit_falsified;
  }
}
