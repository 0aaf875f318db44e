#include <gtest/gtest.h>

#include <vbf/boolean_function.hpp>
#include <vbf/random.hpp>

#include "oracles.hpp"

using namespace vbf;

namespace
{

boolean_function random_function( unsigned n, splitmix64& rng )
{
  return boolean_function::from_predicate( n, [&]( vec_t ) { return rng() & 1; } );
}

} // namespace

TEST( BooleanFunction, RejectsBadVariableCounts )
{
  EXPECT_THROW( boolean_function( 0 ), input_error );
  EXPECT_THROW( boolean_function( 25 ), input_error );
  EXPECT_NO_THROW( boolean_function( 24 ) );
  EXPECT_THROW( boolean_function::from_bits( 7, 1 ), input_error );
}

TEST( BooleanFunction, LittleEndianIndexing )
{
  // x1 is the least significant bit of the index
  const auto x1 = boolean_function::from_predicate( 3, []( vec_t x ) { return x & 1; } );
  EXPECT_EQ( x1.words()[0], 0b10101010u );
  const auto p = parse_anf( "x1", 3 );
  EXPECT_EQ( truth_table_from_anf( p ), x1 );
}

TEST( BooleanFunction, ComplementMasksTail )
{
  const boolean_function zero( 3 );
  const auto one = ~zero;
  EXPECT_EQ( weight( one ), 8u );
  EXPECT_TRUE( one.is_constant() );
  EXPECT_EQ( one.words()[0], 0xffu );
}

TEST( Moebius, MatchesNaiveAnfAllN3 )
{
  for ( std::uint64_t bits = 0; bits < 256; ++bits )
  {
    const auto f = boolean_function::from_bits( 3, bits );
    EXPECT_EQ( anf_from_truth_table( f ).monomials, oracle::anf( f ) ) << bits;
  }
}

TEST( Moebius, InvolutionAcrossWordBoundaries )
{
  splitmix64 rng( 11 );
  for ( unsigned n : { 1u, 5u, 6u, 7u, 9u, 12u } )
  {
    const auto f = random_function( n, rng );
    auto g = f;
    moebius_transform( g );
    moebius_transform( g );
    EXPECT_EQ( g, f ) << n;
  }
}

TEST( Moebius, MatchesNaiveAnfAtN8 )
{
  splitmix64 rng( 12 );
  for ( int t = 0; t < 4; ++t )
  {
    const auto f = random_function( 8, rng );
    EXPECT_EQ( anf_from_truth_table( f ).monomials, oracle::anf( f ) );
  }
}

TEST( Degree, FullDegreeIffOddWeight )
{
  splitmix64 rng( 13 );
  for ( unsigned n = 1; n <= 8; ++n )
  {
    for ( int t = 0; t < 50; ++t )
    {
      const auto f = random_function( n, rng );
      EXPECT_EQ( degree( f ) == n, weight( f ) % 2 == 1 );
      EXPECT_EQ( degree( f ), oracle::degree( f ) );
      EXPECT_EQ( weight( f ), oracle::weight( f ) );
      EXPECT_EQ( weight( f ) + weight( ~f ), f.size() );
    }
  }
}

TEST( Anf, EvaluationMatchesNaive )
{
  splitmix64 rng( 14 );
  for ( unsigned n : { 3u, 6u, 7u } )
  {
    anf_polynomial p{ n, {} };
    for ( int k = 0; k < 20; ++k )
    {
      p.toggle( static_cast<vec_t>( rng() % oracle::size( n ) ) );
    }
    const auto f = truth_table_from_anf( p );
    for ( vec_t x = 0; x < f.size(); ++x )
    {
      EXPECT_EQ( f.get( x ), oracle::anf_eval( p.monomials, x ) );
    }
  }
}

TEST( AnfParse, Grammar )
{
  const auto p = parse_anf( "x1*x2 + x1 + x2 + x3", 3 );
  EXPECT_EQ( p.monomials, ( std::set<vec_t>{ 0b011, 0b001, 0b010, 0b100 } ) );
  EXPECT_EQ( parse_anf( " x2 *x1+1 ", 2 ).monomials, ( std::set<vec_t>{ 0b011, 0 } ) );
  EXPECT_TRUE( parse_anf( "x1 + x1", 2 ).monomials.empty() );
  EXPECT_EQ( parse_anf( "x1*x1", 2 ).monomials, ( std::set<vec_t>{ 1 } ) );
  EXPECT_TRUE( parse_anf( "0", 2 ).monomials.empty() );
  EXPECT_EQ( parse_anf( "x10", 10 ).monomials, ( std::set<vec_t>{ 1u << 9 } ) );
}

TEST( AnfParse, ErrorsCarryColumns )
{
  const auto column_of = []( const char* text, unsigned n ) -> std::size_t {
    try
    {
      parse_anf( text, n );
    }
    catch ( const anf_syntax_error& e )
    {
      return e.column();
    }
    return 0;
  };
  EXPECT_EQ( column_of( "x1 + x4", 3 ), 6u );
  EXPECT_EQ( column_of( "x1 + y2", 3 ), 6u );
  EXPECT_EQ( column_of( "x1 +", 3 ), 5u );
  EXPECT_GT( column_of( "", 3 ), 0u );
  EXPECT_GT( column_of( "x0", 3 ), 0u );
  EXPECT_GT( column_of( "x1 ** x2", 3 ), 0u );
}

TEST( AnfRender, CanonicalOrderAndRoundTrip )
{
  EXPECT_EQ( render_anf( parse_anf( "x3 + 1 + x2*x1 + x1", 3 ) ), "x1*x2 + x1 + x3 + 1" );
  EXPECT_EQ( render_anf( anf_polynomial{ 2, {} } ), "0" );
  splitmix64 rng( 15 );
  for ( int t = 0; t < 200; ++t )
  {
    const unsigned n = 1 + rng() % 7;
    anf_polynomial p{ n, {} };
    for ( int k = 0; k < 8; ++k )
    {
      p.toggle( static_cast<vec_t>( rng() % oracle::size( n ) ) );
    }
    const auto text = render_anf( p );
    EXPECT_EQ( parse_anf( text, n ), p ) << text;
    EXPECT_EQ( render_anf( parse_anf( text, n ) ), text );
  }
}
