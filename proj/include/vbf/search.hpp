/*!
  \file search.hpp
  \brief Seeded random search for low-degree embeddings GF(2)^n -> GF(2)^m

  Candidate i is drawn from splitmix64::substream(seed, i), so the hit list
  depends only on the configuration and never on the worker count.
*/

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "analysis.hpp"
#include "boolean_function.hpp"
#include "parallel.hpp"
#include "random.hpp"
#include "vectorial.hpp"

namespace vbf
{

enum class search_target
{
  any_embedding,
  meets_lower_bound, /* partially-bent lower bound on |B| attained */
  meets_upper_bound, /* |B| = 2^m - 2^(m-n) */
};

inline std::string_view target_name( search_target t ) noexcept
{
  switch ( t )
  {
  case search_target::any_embedding:
    return "any-embedding";
  case search_target::meets_lower_bound:
    return "meets-lower-bound";
  case search_target::meets_upper_bound:
    return "meets-upper-bound";
  }
  return "unknown";
}

inline std::optional<search_target> target_from_name( std::string_view name ) noexcept
{
  for ( auto t : { search_target::any_embedding, search_target::meets_lower_bound, search_target::meets_upper_bound } )
  {
    if ( target_name( t ) == name )
    {
      return t;
    }
  }
  return std::nullopt;
}

struct search_config
{
  unsigned n = 3;
  unsigned m = 4;
  unsigned degree_cap = 2;
  std::uint64_t budget = 10000;
  std::uint64_t seed = 0;
  search_target target = search_target::any_embedding;
  std::size_t max_hits = 16;

  void validate() const
  {
    if ( n < 1 || n > 10 )
    {
      throw input_error( "search supports 1 <= n <= 10" );
    }
    if ( m <= n || m > 16 )
    {
      throw input_error( "search needs n < m <= 16" );
    }
    if ( degree_cap < 1 || degree_cap > n )
    {
      throw input_error( "degree cap must be in [1, n]" );
    }
    if ( budget < 1 )
    {
      throw input_error( "budget must be at least 1" );
    }
    if ( max_hits < 1 )
    {
      throw input_error( "max hits must be at least 1" );
    }
  }
};

/*! \brief Random F with every coordinate's ANF uniform over monomials of degree 1..degree_cap

  No constant terms, so F(0) = 0.  Coefficients are drawn coordinate by
  coordinate, monomials in increasing mask order, one generator bit each.
*/
template<typename Rng>
vectorial_function random_vbf( unsigned n, unsigned m, unsigned degree_cap, Rng& rng )
{
  std::vector<vec_t> monomials;
  for ( vec_t mask = 1; mask < pow2( n ); ++mask )
  {
    if ( static_cast<unsigned>( std::popcount( mask ) ) <= degree_cap )
    {
      monomials.push_back( mask );
    }
  }
  bit_source bits( rng );
  std::vector<anf_polynomial> coords;
  for ( unsigned i = 0; i < m; ++i )
  {
    anf_polynomial p{ n, {} };
    for ( auto mono : monomials )
    {
      if ( bits.next() )
      {
        p.monomials.insert( mono );
      }
    }
    coords.push_back( std::move( p ) );
  }
  return vectorial_function::from_anf( coords );
}

template<typename Rng>
vectorial_function random_quadratic_vbf( unsigned n, unsigned m, Rng& rng )
{
  return random_vbf( n, m, std::min( 2u, n ), rng );
}

/*! \brief An embedding with affine image: x -> outer(P(x) || 0)

  P is x -> x + x1*x2*e_n, a quadratic permutation, when n >= 3 and
  quadratic terms are allowed; otherwise the identity.
*/
inline vectorial_function affine_image_embedding( unsigned n, unsigned degree_cap, const affinity& outer )
{
  const bool quadratic = n >= 3 && degree_cap >= 2;
  std::vector<vec_t> table( pow2( n ) );
  for ( std::uint64_t x = 0; x < table.size(); ++x )
  {
    auto p = static_cast<vec_t>( x );
    if ( quadratic )
    {
      p ^= ( ( p & 1 ) & ( ( p >> 1 ) & 1 ) ) << ( n - 1 );
    }
    table[x] = outer( p );
  }
  return vectorial_function( n, outer.dim(), std::move( table ) );
}

struct search_hit
{
  std::uint64_t candidate = 0; /* index in the candidate stream; unset for the constructive witness */
  bool constructive = false;
  vectorial_function function;
  analysis_report report;
  bool lower_bound_equality = false;
  bool upper_bound_equality = false;
};

struct search_result
{
  std::vector<search_hit> hits;
  std::vector<verdict> counterexamples;
  std::uint64_t examined = 0;
  std::uint64_t embeddings = 0;
};

namespace detail
{

struct candidate_outcome
{
  bool embedding = false;
  std::optional<search_hit> hit;
  std::vector<verdict> falsified;
};

inline candidate_outcome evaluate_candidate( const search_config& config, vectorial_function F )
{
  candidate_outcome out;
  out.embedding = is_embedding( F );
  if ( !out.embedding )
  {
    return out;
  }
  auto report = analyze( F );
  for ( const auto& v : report.verdicts )
  {
    if ( v.falsified() )
    {
      out.falsified.push_back( v );
    }
  }
  const auto lower = std::find_if( report.verdicts.begin(), report.verdicts.end(), []( const verdict& v ) {
    return v.which == statement::partially_bent_lower_bound;
  } );
  search_hit hit;
  hit.lower_bound_equality = lower != report.verdicts.end() && lower->applicable && lower->lhs == lower->rhs;
  hit.upper_bound_equality = report.balanced_count() == pow2( config.m ) - pow2( config.m - config.n );
  bool wanted = false;
  switch ( config.target )
  {
  case search_target::any_embedding:
    wanted = true;
    break;
  case search_target::meets_lower_bound:
    wanted = hit.lower_bound_equality;
    break;
  case search_target::meets_upper_bound:
    wanted = hit.upper_bound_equality;
    break;
  }
  if ( wanted )
  {
    hit.function = std::move( F );
    hit.report = std::move( report );
    out.hit = std::move( hit );
  }
  return out;
}

} // namespace detail

/*! \brief Runs the configured search

  Candidates are processed in fixed-size batches; the search stops after
  the first batch that brings the hit count to max_hits, and keeps the
  first max_hits hits in candidate order.
*/
inline search_result search( const search_config& config, unsigned threads = thread_count() )
{
  config.validate();
  search_result result;

  if ( config.target == search_target::meets_upper_bound )
  {
    auto rng = splitmix64::substream( config.seed, ~std::uint64_t{ 0 } );
    const auto outer = affinity::random( config.m, rng );
    auto outcome = detail::evaluate_candidate( config, affine_image_embedding( config.n, config.degree_cap, outer ) );
    for ( auto& v : outcome.falsified )
    {
      result.counterexamples.push_back( std::move( v ) );
    }
    if ( outcome.hit )
    {
      outcome.hit->constructive = true;
      result.hits.push_back( std::move( *outcome.hit ) );
    }
  }

  constexpr std::uint64_t batch = 1024;
  std::vector<detail::candidate_outcome> slots;
  for ( std::uint64_t start = 0; start < config.budget && result.hits.size() < config.max_hits; start += batch )
  {
    const auto count = std::min( batch, config.budget - start );
    slots.assign( count, {} );
    parallel_for(
        count,
        [&]( std::size_t i ) {
          auto rng = splitmix64::substream( config.seed, start + i );
          slots[i] = detail::evaluate_candidate( config, random_vbf( config.n, config.m, config.degree_cap, rng ) );
        },
        threads );
    for ( std::size_t i = 0; i < count; ++i )
    {
      auto& s = slots[i];
      result.embeddings += s.embedding;
      for ( auto& v : s.falsified )
      {
        result.counterexamples.push_back( std::move( v ) );
      }
      if ( s.hit && result.hits.size() < config.max_hits )
      {
        s.hit->candidate = start + i;
        result.hits.push_back( std::move( *s.hit ) );
      }
    }
    result.examined = start + count;
  }
  return result;
}

} // namespace vbf
