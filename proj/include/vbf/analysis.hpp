/*!
  \file analysis.hpp
  \brief Per-component classification of a vectorial function and checks
         of the balancedness/embedding statements against it
*/

#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "boolean_function.hpp"
#include "gf2.hpp"
#include "spectral.hpp"
#include "vectorial.hpp"

namespace vbf
{

/*! \brief Classification of one component F_lambda

  Flags are not exclusive: an unbalanced bent component has bent and
  partially_bent set.  partially_bent_other means partially bent but not
  constant, bent or semi-bent; general means not partially bent.
*/
struct component_profile
{
  vec_t lambda = 0;
  unsigned degree = 0;
  std::int64_t fourier = 0;
  std::int64_t nonlinearity = 0;
  unsigned linear_structure_dim = 0;
  bool constant = false;
  bool balanced = false;
  bool bent = false;
  bool semi_bent = false;
  bool partially_bent = false;

  bool partially_bent_other() const noexcept { return partially_bent && !constant && !bent && !semi_bent; }
  bool general() const noexcept { return !partially_bent; }

  std::vector<std::string> tags() const
  {
    std::vector<std::string> t;
    if ( constant )
      t.emplace_back( "constant" );
    if ( balanced )
      t.emplace_back( "balanced" );
    if ( bent )
      t.emplace_back( "bent" );
    if ( semi_bent )
      t.emplace_back( "semi-bent" );
    if ( partially_bent_other() )
      t.emplace_back( "partially-bent-other" );
    if ( general() )
      t.emplace_back( "general" );
    return t;
  }
};

inline component_profile profile_component( const boolean_function& f, vec_t lambda )
{
  component_profile p;
  p.lambda = lambda;
  const auto spectrum = walsh_transform( f );
  const auto autocorr = autocorrelation( f );
  p.degree = degree( f );
  p.fourier = spectrum.values[0];
  p.nonlinearity = nonlinearity( spectrum );
  p.constant = f.is_constant();
  p.balanced = p.fourier == 0;
  p.bent = is_bent( spectrum );
  p.semi_bent = is_semi_bent( spectrum );
  p.partially_bent = is_partially_bent( autocorr );
  const auto full = static_cast<std::int64_t>( f.size() );
  std::uint64_t structures = 0;
  for ( auto v : autocorr )
  {
    structures += ( v == full || v == -full );
  }
  p.linear_structure_dim = static_cast<unsigned>( std::countr_zero( structures ) );
  return p;
}

/*! \brief Aggregates derived once per function and shared by every statement check */
struct component_summary
{
  unsigned n = 1;
  unsigned m = 1;
  unsigned degree = 0;
  std::vector<component_profile> components; /* indexed by lambda */
  std::vector<vec_t> balanced_set;
  std::vector<vec_t> constant_set;
  std::uint64_t image_size = 0;
  bool is_embedding = false;
  bool image_is_affine = false;
  std::int64_t sum_sq_fourier = 0;
};

inline component_summary summarize( const vectorial_function& F )
{
  detail::require_exact_range( 2 * F.num_inputs() + F.num_outputs(), "component summary" );
  if ( F.num_outputs() > 24 )
  {
    throw input_error( "component analysis enumerates 2^m components; m must be <= 24" );
  }
  component_summary s;
  s.n = F.num_inputs();
  s.m = F.num_outputs();
  s.components.reserve( pow2( s.m ) );
  for ( std::uint64_t lambda = 0; lambda < pow2( s.m ); ++lambda )
  {
    auto p = profile_component( F.component( static_cast<vec_t>( lambda ) ), static_cast<vec_t>( lambda ) );
    s.degree = std::max( s.degree, p.degree );
    s.sum_sq_fourier += p.fourier * p.fourier;
    if ( p.constant )
    {
      s.constant_set.push_back( p.lambda );
    }
    else if ( p.balanced )
    {
      s.balanced_set.push_back( p.lambda );
    }
    s.components.push_back( p );
  }
  require_subspace( s.constant_set, "C(F)" );
  s.image_size = image_size( F );
  s.is_embedding = s.image_size == F.domain_size();
  s.image_is_affine = image_is_affine_subspace( F );
  return s;
}

/*! \brief Statements about balanced/constant components that can be checked on a function */
enum class statement
{
  collision_identity,         /* per-direction collision count equals the character sum */
  sum_sq_fourier_bound,       /* sum F^2 >= 2^(n+m), equality iff m >= n and embedding */
  fourier_derivative_bound,   /* sum over lambda, a of F(D_a F_lambda) >= 2^(n+m), same equality */
  preimage_identity,          /* sum F^2 = 2^m sum |F^-1(b)|^2 */
  derivative_weight_bound,    /* m >= n: sum wt(D_a F_lambda) <= 2^(2n-1)(2^m - 2^(m-n)), equality iff embedding */
  balanced_upper_bound,       /* m >= n: |B| <= 2^m - 2^(m-n); equality forces embedding and |C| = 2^(m-n) */
  image_constant_bound,       /* m >= n: |Im F| <= 2^(m - dim C) */
  constant_upper_bound,       /* embeddings: |C| <= 2^(m-n); equality forces the rest balanced */
  partially_bent_lower_bound, /* partially-bent embeddings, m > n: parity-dependent lower bound on |B| */
  one_extra_dimension,        /* embeddings into m = n+1: |C| in {1,2}, and 2 forces the rest balanced */
  affine_image,               /* embeddings with affine image: exactly 2^m - 2^(m-n) balanced, 2^(m-n) constant */
};

inline constexpr std::array all_statements = {
    statement::collision_identity,      statement::sum_sq_fourier_bound,  statement::fourier_derivative_bound,
    statement::preimage_identity,       statement::derivative_weight_bound, statement::balanced_upper_bound,
    statement::image_constant_bound,    statement::constant_upper_bound,  statement::partially_bent_lower_bound,
    statement::one_extra_dimension,     statement::affine_image };

inline std::string_view statement_name( statement s ) noexcept
{
  switch ( s )
  {
  case statement::collision_identity:
    return "collision-identity";
  case statement::sum_sq_fourier_bound:
    return "sum-sq-fourier";
  case statement::fourier_derivative_bound:
    return "fourier-derivative-sum";
  case statement::preimage_identity:
    return "preimage-identity";
  case statement::derivative_weight_bound:
    return "derivative-weight-total";
  case statement::balanced_upper_bound:
    return "balanced-upper-bound";
  case statement::image_constant_bound:
    return "image-size-bound";
  case statement::constant_upper_bound:
    return "constant-upper-bound";
  case statement::partially_bent_lower_bound:
    return "partially-bent-lower-bound";
  case statement::one_extra_dimension:
    return "one-extra-dimension";
  case statement::affine_image:
    return "affine-image";
  }
  return "unknown";
}

inline std::optional<statement> statement_from_name( std::string_view name ) noexcept
{
  for ( auto s : all_statements )
  {
    if ( statement_name( s ) == name )
    {
      return s;
    }
  }
  return std::nullopt;
}

/*! \brief Outcome of checking one statement on one function

  When the statement applies but fails, witness holds the function so the
  caller can persist a counterexample.
*/
struct verdict
{
  statement which = statement::sum_sq_fourier_bound;
  bool applicable = false;
  bool holds = false;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  std::string detail;
  std::optional<vectorial_function> witness;

  bool falsified() const noexcept { return applicable && !holds; }
};

namespace detail
{

inline verdict inapplicable( statement s, std::string why )
{
  verdict v;
  v.which = s;
  v.applicable = false;
  v.holds = true;
  v.detail = std::move( why );
  return v;
}

/* sum over lambda != 0 of sum_a wt(D_a F_lambda) */
inline std::int64_t total_derivative_weight( const vectorial_function& F, const component_summary& s )
{
  /* materialize derivatives while that stays cheap, otherwise use the squared Fourier identity */
  if ( s.m + 2 * s.n <= 30 )
  {
    std::int64_t total = 0;
    for ( std::uint64_t lambda = 1; lambda < pow2( s.m ); ++lambda )
    {
      total += derivative_weight_sum( F.component( static_cast<vec_t>( lambda ) ) );
    }
    return total;
  }
  std::int64_t total = 0;
  for ( std::size_t lambda = 1; lambda < s.components.size(); ++lambda )
  {
    const auto c = s.components[lambda].fourier;
    total += static_cast<std::int64_t>( pow2( 2 * s.n - 1 ) ) - c * c / 2;
  }
  return total;
}

} // namespace detail

inline verdict check_statement( const vectorial_function& F, const component_summary& s, statement which )
{
  const unsigned n = s.n, m = s.m;
  verdict v;
  v.which = which;
  v.applicable = true;

  switch ( which )
  {
  case statement::collision_identity:
  {
    if ( 2 * n + m > 22 )
    {
      return detail::inapplicable( which, "character-sum cross-check limited to 2n+m <= 22" );
    }
    v.holds = true;
    for ( std::uint64_t a = 1; a < F.domain_size() && v.holds; ++a )
    {
      std::int64_t characters = 0;
      for ( std::uint64_t x = 0; x < F.domain_size(); ++x )
      {
        const auto diff = F( static_cast<vec_t>( x ) ) ^ F( static_cast<vec_t>( x ^ a ) );
        for ( std::uint64_t lambda = 0; lambda < pow2( m ); ++lambda )
        {
          characters += dot( lambda, diff ) ? -1 : 1;
        }
      }
      const auto counted = static_cast<std::int64_t>( collision_count( F, static_cast<vec_t>( a ) ) << m );
      v.lhs += counted;
      v.rhs += characters;
      if ( counted != characters )
      {
        v.holds = false;
        v.detail = "direction " + std::to_string( a ) + ": count " + std::to_string( counted ) + " vs sum " + std::to_string( characters );
      }
    }
    break;
  }
  case statement::sum_sq_fourier_bound:
  {
    v.lhs = s.sum_sq_fourier;
    v.rhs = static_cast<std::int64_t>( pow2( n + m ) );
    const bool equal = v.lhs == v.rhs;
    v.holds = v.lhs >= v.rhs && equal == ( m >= n && s.is_embedding );
    v.detail = equal ? "equality" : "strict";
    break;
  }
  case statement::fourier_derivative_bound:
  {
    const auto weights = detail::total_derivative_weight( F, s );
    /* lambda = 0 contributes 2^(2n); others contribute 2^(2n) - 2 sum_a wt */
    v.lhs = static_cast<std::int64_t>( pow2( 2 * n ) * pow2( m ) ) - 2 * weights;
    v.rhs = static_cast<std::int64_t>( pow2( n + m ) );
    const bool equal = v.lhs == v.rhs;
    v.holds = v.lhs >= v.rhs && equal == ( m >= n && s.is_embedding );
    v.detail = equal ? "equality" : "strict";
    break;
  }
  case statement::preimage_identity:
  {
    v.lhs = s.sum_sq_fourier;
    v.rhs = preimage_square_sum( F );
    v.holds = v.lhs == v.rhs;
    break;
  }
  case statement::derivative_weight_bound:
  {
    if ( m < n )
    {
      return detail::inapplicable( which, "requires m >= n" );
    }
    v.lhs = detail::total_derivative_weight( F, s );
    v.rhs = derivative_weight_bound( n, m );
    const bool equal = v.lhs == v.rhs;
    v.holds = v.lhs <= v.rhs && equal == s.is_embedding;
    v.detail = equal ? "equality" : "strict";
    break;
  }
  case statement::balanced_upper_bound:
  {
    if ( m < n )
    {
      return detail::inapplicable( which, "requires m >= n" );
    }
    v.lhs = static_cast<std::int64_t>( s.balanced_set.size() );
    v.rhs = static_cast<std::int64_t>( pow2( m ) - pow2( m - n ) );
    v.holds = v.lhs <= v.rhs;
    if ( v.lhs == v.rhs )
    {
      v.holds = v.holds && s.is_embedding && s.constant_set.size() == pow2( m - n );
      v.detail = "equality";
    }
    break;
  }
  case statement::image_constant_bound:
  {
    if ( m < n )
    {
      return detail::inapplicable( which, "requires m >= n" );
    }
    const auto h = static_cast<unsigned>( std::countr_zero( s.constant_set.size() ) );
    v.lhs = static_cast<std::int64_t>( s.image_size );
    v.rhs = static_cast<std::int64_t>( pow2( m - h ) );
    v.holds = v.lhs <= v.rhs;
    v.detail = "dim C(F) = " + std::to_string( h );
    break;
  }
  case statement::constant_upper_bound:
  {
    if ( m < n || !s.is_embedding )
    {
      return detail::inapplicable( which, "requires an embedding with m >= n" );
    }
    v.lhs = static_cast<std::int64_t>( s.constant_set.size() );
    v.rhs = static_cast<std::int64_t>( pow2( m - n ) );
    v.holds = v.lhs <= v.rhs;
    if ( v.lhs == v.rhs )
    {
      v.holds = v.holds && s.balanced_set.size() == pow2( m ) - pow2( m - n );
      v.detail = "equality";
    }
    break;
  }
  case statement::partially_bent_lower_bound:
  {
    if ( !s.is_embedding || m < n + 1 || s.degree < 2 )
    {
      return detail::inapplicable( which, "requires an embedding of degree >= 2 with m >= n+1" );
    }
    for ( std::size_t lambda = 1; lambda < s.components.size(); ++lambda )
    {
      if ( !s.components[lambda].partially_bent )
      {
        return detail::inapplicable( which, "component " + std::to_string( lambda ) + " is not partially bent" );
      }
    }
    const bool even = n % 2 == 0;
    v.lhs = static_cast<std::int64_t>( s.balanced_set.size() );
    v.rhs = static_cast<std::int64_t>( even ? pow2( n ) - 1 : pow2( m - 1 ) + pow2( n - 1 ) - 1 );
    bool structured = true;
    for ( std::size_t lambda = 1; lambda < s.components.size(); ++lambda )
    {
      const auto& c = s.components[lambda];
      if ( !c.balanced )
      {
        structured = structured && ( even ? c.bent : c.semi_bent );
      }
    }
    const bool equal = v.lhs == v.rhs;
    v.holds = v.lhs >= v.rhs && equal == structured;
    v.detail = std::string( even ? "n even" : "n odd" ) + ( equal ? ", equality" : ", strict" ) +
               ( structured ? ( even ? ", unbalanced all bent" : ", unbalanced all semi-bent" ) : "" );
    break;
  }
  case statement::one_extra_dimension:
  {
    if ( m != n + 1 || !s.is_embedding )
    {
      return detail::inapplicable( which, "requires an embedding with m = n+1" );
    }
    v.lhs = static_cast<std::int64_t>( s.constant_set.size() );
    v.rhs = 2;
    v.holds = v.lhs == 1 || ( v.lhs == 2 && s.balanced_set.size() == pow2( m ) - 2 );
    v.detail = v.lhs == 2 ? "one nontrivial constant component" : "no nontrivial constant component";
    break;
  }
  case statement::affine_image:
  {
    if ( m < n || !s.is_embedding || !s.image_is_affine )
    {
      return detail::inapplicable( which, "requires an embedding with affine image" );
    }
    v.lhs = static_cast<std::int64_t>( s.balanced_set.size() );
    v.rhs = static_cast<std::int64_t>( pow2( m ) - pow2( m - n ) );
    v.holds = v.lhs == v.rhs && s.constant_set.size() == pow2( m - n );
    v.detail = "|C(F)| = " + std::to_string( s.constant_set.size() );
    break;
  }
  }

  if ( v.falsified() )
  {
    v.witness = F;
  }
  return v;
}

inline verdict check_statement( const vectorial_function& F, statement which )
{
  return check_statement( F, summarize( F ), which );
}

/*! \brief Everything the analyzer reports about one function */
struct analysis_report
{
  component_summary summary;
  std::vector<verdict> verdicts;

  std::size_t balanced_count() const noexcept { return summary.balanced_set.size(); }
  std::size_t constant_count() const noexcept { return summary.constant_set.size(); }

  bool any_falsified() const noexcept
  {
    return std::any_of( verdicts.begin(), verdicts.end(), []( const verdict& v ) { return v.falsified(); } );
  }
};

inline analysis_report analyze( const vectorial_function& F )
{
  analysis_report r{ summarize( F ), {} };
  for ( auto s : all_statements )
  {
    r.verdicts.push_back( check_statement( F, r.summary, s ) );
  }
  return r;
}

} // namespace vbf
