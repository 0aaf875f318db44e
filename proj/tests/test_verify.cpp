#include <gtest/gtest.h>

#include <vbf/verify.hpp>

using namespace vbf;

namespace
{

suite_result run_one( const std::string& suite, unsigned n, unsigned m, std::uint64_t samples = 10000 )
{
  verify_options o;
  o.max_n = n;
  o.max_m = m;
  o.samples = samples;
  o.suites = { suite };
  const auto r = run_verification( o );
  EXPECT_EQ( r.size(), 1u );
  return r.at( 0 );
}

} // namespace

TEST( Verify, SumSqFourierExhaustiveCount )
{
  const auto r = run_one( "sum-sq-fourier", 2, 3 );
  EXPECT_EQ( r.passed, 4096u );
  EXPECT_EQ( r.applicable, 4096u );
  EXPECT_TRUE( r.failures.empty() );
}

TEST( Verify, FourierSquareExhaustiveCount )
{
  const auto r = run_one( "fourier-square", 3, 4 );
  EXPECT_EQ( r.passed, 256u );
  EXPECT_EQ( r.applicable, 256u );
}

TEST( Verify, UnknownSuiteRejected )
{
  verify_options o;
  o.suites = { "no-such-suite" };
  EXPECT_THROW( run_verification( o ), input_error );
  o.suites = {};
  o.max_n = 0;
  EXPECT_THROW( run_verification( o ), input_error );
}

TEST( Verify, AllSuitesPassSmall )
{
  verify_options o;
  o.max_n = 2;
  o.max_m = 3;
  o.samples = 300;
  const auto results = run_verification( o );
  EXPECT_EQ( results.size(), all_suite_names().size() );
  for ( const auto& r : results )
  {
    EXPECT_TRUE( r.failures.empty() ) << r.name;
    EXPECT_EQ( r.passed, r.applicable ) << r.name;
  }
}

TEST( Verify, DeterministicForSeed )
{
  verify_options o;
  o.samples = 200;
  o.seed = 7;
  const auto a = run_verification( o ), b = run_verification( o );
  ASSERT_EQ( a.size(), b.size() );
  for ( std::size_t i = 0; i < a.size(); ++i )
  {
    EXPECT_EQ( a[i].passed, b[i].passed );
    EXPECT_EQ( a[i].inapplicable, b[i].inapplicable );
  }
}

TEST( Verify, SampledTierAboveExhaustiveLimit )
{
  const auto r = run_one( "partially-bent", 5, 4, 500 );
  EXPECT_EQ( r.applicable, 500u );
  EXPECT_NE( r.mode.find( "sampled" ), std::string::npos );
}

TEST( Verify, FalsificationsProduceWitnessFiles )
{
  suite_result r;
  r.name = "demo";
  r.failures.push_back( { "demo", "synthetic", vectorial_function( 1, 1, { 0, 1 } ) } );
  const auto dir = std::filesystem::temp_directory_path() / "vbf_verify_witness";
  std::filesystem::remove_all( dir );
  const auto paths = write_falsifications( dir, { r } );
  ASSERT_EQ( paths.size(), 1u );
  EXPECT_TRUE( std::filesystem::exists( paths[0] ) );
  std::filesystem::remove_all( dir );
}
