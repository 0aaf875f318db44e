#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include <vbf/io.hpp>
#include <vbf/search.hpp>

using namespace vbf;

namespace
{

std::string message_of( const std::string& text )
{
  try
  {
    parse_vectorial_json( text, "in.json" );
  }
  catch ( const input_error& e )
  {
    return e.what();
  }
  return "";
}

} // namespace

TEST( Json, TableRoundTrip )
{
  splitmix64 rng( 71 );
  for ( int t = 0; t < 50; ++t )
  {
    const auto F = random_quadratic_vbf( 3, 5, rng );
    EXPECT_EQ( parse_vectorial_json( to_json( F ).dump() ), F );
  }
}

TEST( Json, AnfInput )
{
  const auto F = parse_vectorial_json( R"({"n": 2, "m": 2, "anf": ["x1*x2", "x1 + 1"]})" );
  EXPECT_EQ( F.table(), ( std::vector<vec_t>{ 2, 0, 2, 1 } ) );
}

TEST( Json, DiagnosticsNameTheProblemAndPosition )
{
  EXPECT_NE( message_of( "{ \"n\": 2, " ).find( "in.json:1:" ), std::string::npos );
  EXPECT_NE( message_of( R"({"n": 2, "m": 2, "table": [0, 1, 2]})" ).find( "length" ), std::string::npos );
  const auto big = message_of( "{\"n\": 1, \"m\": 2,\n \"table\": [0, 4]}" );
  EXPECT_NE( big.find( "in.json:2:" ), std::string::npos ) << big;
  EXPECT_NE( big.find( "2^m" ), std::string::npos ) << big;
  const auto anf = message_of( "{\"n\": 2, \"m\": 1,\n\"anf\": [\"x1 + x7\"]}" );
  EXPECT_NE( anf.find( "in.json:2:" ), std::string::npos ) << anf;
  EXPECT_NE( anf.find( "x7" ), std::string::npos ) << anf;
  EXPECT_NE( message_of( R"({"n": 2, "m": 2})" ).find( "table" ), std::string::npos );
  EXPECT_NE( message_of( R"({"n": 0, "m": 2, "table": [0]})" ).find( "n" ), std::string::npos );
}

TEST( Json, AnfColumnPointsAtToken )
{
  try
  {
    parse_vectorial_json( "{\"n\": 2, \"m\": 1, \"anf\": [\"x1 + y2\"]}", "f" );
    FAIL();
  }
  catch ( const parse_error& e )
  {
    EXPECT_EQ( e.line(), 1u );
    // the 'y' sits at column 32
    EXPECT_EQ( e.column(), 32u );
  }
}

TEST( Json, PowerSpecs )
{
  EXPECT_EQ( load_input( "power:3:3" ).table(), ( std::vector<vec_t>{ 0, 1, 3, 4, 5, 6, 7, 2 } ) );
  EXPECT_THROW( load_input( "power:3" ), input_error );
  EXPECT_THROW( load_input( "power:x:3" ), input_error );
  EXPECT_THROW( load_input( "/nonexistent/file.json" ), input_error );
}

TEST( Json, ReportIsKeySortedAndDeterministic )
{
  const auto F = load_input( std::string( VBF_FIXTURE_DIR ) + "/example1.json" );
  const auto a = to_json( analyze( F ) ).dump( 2 ), b = to_json( analyze( F ) ).dump( 2 );
  EXPECT_EQ( a, b );
  const auto j = json::parse( a );
  std::string previous;
  for ( const auto& [key, value] : j.items() )
  {
    EXPECT_LT( previous, key );
    previous = key;
  }
  EXPECT_EQ( j["balanced_count"], 11 );
  EXPECT_EQ( j["balanced_set"][0], json::parse( "[0, 0, 0, 1]" ) );
}

TEST( Witness, WrittenWithFunction )
{
  verdict v;
  v.which = statement::sum_sq_fourier_bound;
  v.applicable = true;
  v.holds = false;
  v.witness = vectorial_function( 1, 1, { 0, 1 } );
  const auto dir = std::filesystem::temp_directory_path() / "vbf_witness_test";
  std::filesystem::remove_all( dir );
  const auto path = write_witness( dir, v );
  std::ifstream in( path );
  const auto j = json::parse( in );
  EXPECT_EQ( j["statement"], "sum-sq-fourier" );
  EXPECT_EQ( parse_vectorial_json( j["function"].dump() ), *v.witness );
  std::filesystem::remove_all( dir );
}
