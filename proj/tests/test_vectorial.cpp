#include <gtest/gtest.h>

#include <vbf/random.hpp>
#include <vbf/search.hpp>
#include <vbf/vectorial.hpp>

#include "oracles.hpp"

using namespace vbf;

namespace
{

vectorial_function random_table( unsigned n, unsigned m, splitmix64& rng )
{
  std::vector<vec_t> t( oracle::size( n ) );
  for ( auto& y : t )
  {
    y = static_cast<vec_t>( rng() % oracle::size( m ) );
  }
  return vectorial_function( n, m, t );
}

vectorial_function from_index( unsigned n, unsigned m, std::uint64_t index )
{
  std::vector<vec_t> t( oracle::size( n ) );
  for ( std::size_t x = 0; x < t.size(); ++x )
  {
    t[x] = static_cast<vec_t>( ( index >> ( x * m ) ) & ( oracle::size( m ) - 1 ) );
  }
  return vectorial_function( n, m, t );
}

} // namespace

TEST( Vectorial, ValidatesTables )
{
  EXPECT_THROW( vectorial_function( 2, 2, { 0, 1, 2 } ), input_error );
  EXPECT_THROW( vectorial_function( 2, 2, { 0, 1, 2, 4 } ), input_error );
  EXPECT_THROW( vectorial_function( 2, 33, { 0, 0, 0, 0 } ), input_error );
  EXPECT_NO_THROW( vectorial_function( 2, 2, { 0, 1, 2, 3 } ) );
}

TEST( Vectorial, CoordinatesAndComponents )
{
  splitmix64 rng( 31 );
  const auto F = random_table( 5, 4, rng );
  for ( unsigned i = 1; i <= 4; ++i )
  {
    EXPECT_EQ( F.coordinate( i ), oracle::component( F, vec_t{ 1 } << ( i - 1 ) ) );
  }
  for ( vec_t l = 0; l < 16; ++l )
  {
    EXPECT_EQ( F.component( l ), oracle::component( F, l ) );
  }
  std::vector<boolean_function> coords;
  for ( unsigned i = 1; i <= 4; ++i )
  {
    coords.push_back( F.coordinate( i ) );
  }
  EXPECT_EQ( vectorial_function::from_coordinates( coords ), F );
  EXPECT_THROW( F.coordinate( 0 ), input_error );
  EXPECT_THROW( F.coordinate( 5 ), input_error );
}

TEST( Vectorial, ImageSizeMatchesBruteForce )
{
  splitmix64 rng( 32 );
  for ( int t = 0; t < 200; ++t )
  {
    const auto F = random_table( 1 + t % 5, 1 + t % 7, rng );
    EXPECT_EQ( image_size( F ), oracle::image_size( F ) );
    EXPECT_EQ( is_embedding( F ), oracle::injective( F ) );
  }
  // wide outputs take the sort path
  const auto W = random_table( 6, 30, rng );
  EXPECT_EQ( image_size( W ), oracle::image_size( W ) );
}

TEST( Vectorial, CollisionCountMatchesTripleLoop )
{
  splitmix64 rng( 33 );
  for ( int t = 0; t < 50; ++t )
  {
    const auto F = random_table( 4, 2, rng );
    for ( vec_t a = 1; a < 16; ++a )
    {
      EXPECT_EQ( collision_count( F, a ), oracle::collisions( F, a ) );
    }
  }
  EXPECT_THROW( collision_count( random_table( 3, 3, rng ), 0 ), input_error );
}

TEST( Vectorial, SumSqFourierExhaustiveN2M3 )
{
  // 4096 functions; equality exactly for the injective ones
  for ( std::uint64_t i = 0; i < 4096; ++i )
  {
    const auto F = from_index( 2, 3, i );
    std::int64_t naive = 0;
    for ( vec_t l = 0; l < 8; ++l )
    {
      const auto c = oracle::fourier( oracle::component( F, l ) );
      naive += c * c;
    }
    ASSERT_EQ( sum_sq_fourier( F ), naive );
    ASSERT_GE( naive, 32 );
    ASSERT_EQ( naive == 32, oracle::injective( F ) ) << i;
  }
}

TEST( Vectorial, PreimageIdentity )
{
  splitmix64 rng( 34 );
  for ( int t = 0; t < 100; ++t )
  {
    const auto F = random_table( 1 + t % 6, 1 + t % 5, rng );
    std::map<vec_t, std::int64_t> hist;
    for ( vec_t x = 0; x < F.domain_size(); ++x )
    {
      ++hist[F( x )];
    }
    std::int64_t sq = 0;
    for ( auto [y, c] : hist )
    {
      sq += c * c;
    }
    EXPECT_EQ( preimage_square_sum( F ), static_cast<std::int64_t>( oracle::size( F.num_outputs() ) ) * sq );
    EXPECT_TRUE( preimage_identity_check( F ) );
  }
}

TEST( Vectorial, DerivativeWeightTotal )
{
  splitmix64 rng( 35 );
  EXPECT_EQ( derivative_weight_bound( 3, 4 ), 448 );
  for ( int t = 0; t < 100; ++t )
  {
    const auto F = random_table( 3, 4, rng );
    std::int64_t naive = 0;
    for ( vec_t l = 1; l < 16; ++l )
    {
      for ( vec_t a = 0; a < 8; ++a )
      {
        naive += static_cast<std::int64_t>( oracle::weight( oracle::derivative( oracle::component( F, l ), a ) ) );
      }
    }
    EXPECT_EQ( derivative_weight_total( F ), naive );
    EXPECT_LE( naive, 448 );
    EXPECT_EQ( naive == 448, oracle::injective( F ) );
  }
  EXPECT_THROW( derivative_weight_total( random_table( 3, 2, rng ) ), input_error );
}

TEST( Vectorial, BalancedAndConstantSets )
{
  splitmix64 rng( 36 );
  for ( int t = 0; t < 100; ++t )
  {
    const auto F = t % 2 ? random_table( 3, 4, rng ) : random_quadratic_vbf( 3, 5, rng );
    EXPECT_EQ( balanced_set( F ), oracle::balanced_lambdas( F ) );
    EXPECT_EQ( constant_set( F ), oracle::constant_lambdas( F ) );
  }
}

TEST( Vectorial, AffineImageDetection )
{
  splitmix64 rng( 37 );
  for ( int t = 0; t < 50; ++t )
  {
    const auto psi = affinity::random( 5, rng );
    EXPECT_TRUE( image_is_affine_subspace( padded_affine_embedding( 3, psi ) ) );
  }
  // image {0, 1, 2, 4} spans a space of size 8
  EXPECT_FALSE( image_is_affine_subspace( vectorial_function( 2, 3, { 0, 1, 2, 4 } ) ) );
  EXPECT_TRUE( image_is_affine_subspace( vectorial_function( 2, 3, { 5, 4, 7, 6 } ) ) );
}

TEST( Affinity, RandomIsInvertibleAndRejectsSingular )
{
  splitmix64 rng( 38 );
  for ( int t = 0; t < 100; ++t )
  {
    const auto A = affinity::random( 6, rng );
    std::set<vec_t> image;
    for ( vec_t x = 0; x < 64; ++x )
    {
      image.insert( A( x ) );
    }
    EXPECT_EQ( image.size(), 64u );
  }
  EXPECT_THROW( affinity( 2, { 1, 1 }, 0 ), input_error );
  const affinity id( 3 );
  for ( vec_t x = 0; x < 8; ++x )
  {
    EXPECT_EQ( id( x ), x );
  }
  // row i is the image of e_i
  const affinity swap( 2, { 0b10, 0b01 }, 0b01 );
  EXPECT_EQ( swap( 0b01 ), 0b11u );
  EXPECT_EQ( swap( 0b10 ), 0b00u );
}

TEST( Affinity, EquivalencePreservesCounts )
{
  splitmix64 rng( 39 );
  for ( int t = 0; t < 200; ++t )
  {
    const auto F = t % 2 ? random_table( 3, 4, rng ) : random_quadratic_vbf( 4, 5, rng );
    const auto G = apply_affinities( F, affinity::random( F.num_outputs(), rng ), affinity::random( F.num_inputs(), rng ) );
    EXPECT_EQ( balanced_set( F ).size(), balanced_set( G ).size() );
    EXPECT_EQ( constant_set( F ).size(), constant_set( G ).size() );
    EXPECT_EQ( image_size( F ), image_size( G ) );
  }
}
