/*!
  \file boolean_function.hpp
  \brief Truth tables, algebraic normal form, degree and weight

  A Boolean function on n variables is stored as a packed truth table of
  2^n bits.  The input x = (x1, ..., xn) is the integer sum of xi * 2^(i-1),
  so x1 is the least significant bit of the index.
*/

#pragma once

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gf2.hpp"

namespace vbf
{

inline constexpr unsigned max_variables = 24;

/*! \brief Truth table of a Boolean function on n <= 24 variables */
class boolean_function
{
public:
  boolean_function() : boolean_function( 1 ) {}

  explicit boolean_function( unsigned n ) : n_( n )
  {
    if ( n < 1 || n > max_variables )
    {
      throw input_error( "variable count must be in [1, 24], got " + std::to_string( n ) );
    }
    words_.assign( n <= 6 ? 1 : ( std::size_t{ 1 } << ( n - 6 ) ), 0 );
  }

  /*! \brief Builds a table from a predicate evaluated at every point */
  template<typename Fn>
  static boolean_function from_predicate( unsigned n, Fn&& fn )
  {
    boolean_function f( n );
    for ( std::uint64_t x = 0; x < f.size(); ++x )
    {
      if ( fn( static_cast<vec_t>( x ) ) )
      {
        f.set( static_cast<vec_t>( x ), true );
      }
    }
    return f;
  }

  /*! \brief Table given as the low 2^n bits of an integer (n <= 6) */
  static boolean_function from_bits( unsigned n, std::uint64_t bits )
  {
    if ( n > 6 )
    {
      throw input_error( "from_bits supports n <= 6" );
    }
    boolean_function f( n );
    f.words_[0] = bits & f.tail_mask();
    return f;
  }

  unsigned num_vars() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return pow2( n_ ); }

  bool get( vec_t x ) const noexcept { return ( words_[x >> 6] >> ( x & 63 ) ) & 1; }
  bool operator()( vec_t x ) const noexcept { return get( x ); }

  void set( vec_t x, bool value ) noexcept
  {
    const auto bit = std::uint64_t{ 1 } << ( x & 63 );
    if ( value )
    {
      words_[x >> 6] |= bit;
    }
    else
    {
      words_[x >> 6] &= ~bit;
    }
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> words() noexcept { return words_; }

  boolean_function operator~() const
  {
    auto r = *this;
    for ( auto& w : r.words_ )
    {
      w = ~w;
    }
    r.words_.back() &= tail_mask();
    return r;
  }

  boolean_function& operator^=( const boolean_function& other )
  {
    if ( other.n_ != n_ )
    {
      throw input_error( "variable count mismatch" );
    }
    for ( std::size_t i = 0; i < words_.size(); ++i )
    {
      words_[i] ^= other.words_[i];
    }
    return *this;
  }

  friend boolean_function operator^( boolean_function a, const boolean_function& b )
  {
    a ^= b;
    return a;
  }

  bool operator==( const boolean_function& ) const = default;

  bool is_constant() const noexcept
  {
    const bool first = get( 0 );
    if ( n_ <= 6 )
    {
      return words_[0] == ( first ? tail_mask() : 0 );
    }
    const std::uint64_t expect = first ? ~std::uint64_t{ 0 } : 0;
    return std::all_of( words_.begin(), words_.end(), [expect]( auto w ) { return w == expect; } );
  }

  std::uint64_t tail_mask() const noexcept
  {
    return n_ >= 6 ? ~std::uint64_t{ 0 } : ( ( std::uint64_t{ 1 } << ( 1u << n_ ) ) - 1 );
  }

private:
  unsigned n_;
  std::vector<std::uint64_t> words_;
};

/*! \brief weight: number of inputs mapped to 1 */
inline std::uint64_t weight( const boolean_function& f ) noexcept
{
  std::uint64_t w = 0;
  for ( auto word : f.words() )
  {
    w += static_cast<std::uint64_t>( std::popcount( word ) );
  }
  return w;
}

namespace detail
{

/* positions whose bit i is 0, for i < 6 */
inline constexpr std::uint64_t low_half_masks[] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull };

} // namespace detail

/*! \brief In-place binary Moebius transform of a truth table

  Maps the truth table to the ANF coefficient vector (bit I holds a_I).
  The transform is an involution over GF(2).
*/
inline void moebius_transform( boolean_function& f ) noexcept
{
  const unsigned n = f.num_vars();
  auto words = f.words();
  for ( unsigned i = 0; i < std::min( n, 6u ); ++i )
  {
    const auto mask = detail::low_half_masks[i];
    const unsigned shift = 1u << i;
    for ( auto& w : words )
    {
      w ^= ( w & mask ) << shift;
    }
  }
  for ( unsigned i = 6; i < n; ++i )
  {
    const std::size_t stride = std::size_t{ 1 } << ( i - 6 );
    for ( std::size_t block = 0; block < words.size(); block += 2 * stride )
    {
      for ( std::size_t j = block; j < block + stride; ++j )
      {
        words[j + stride] ^= words[j];
      }
    }
  }
}

/*! \brief Polynomial over GF(2) as a set of monomials

  Each monomial is the bitmask of its variables; the empty mask is the
  constant term 1 and the empty set is the zero polynomial.
*/
struct anf_polynomial
{
  unsigned num_vars = 1;
  std::set<vec_t> monomials;

  unsigned degree() const noexcept
  {
    unsigned d = 0;
    for ( auto m : monomials )
    {
      d = std::max( d, static_cast<unsigned>( std::popcount( m ) ) );
    }
    return d;
  }

  /*! \brief Adds a monomial over GF(2): it cancels if already present */
  void toggle( vec_t monomial )
  {
    if ( !monomials.erase( monomial ) )
    {
      monomials.insert( monomial );
    }
  }

  bool operator==( const anf_polynomial& ) const = default;
};

inline boolean_function truth_table_from_anf( const anf_polynomial& p )
{
  boolean_function f( p.num_vars );
  for ( auto m : p.monomials )
  {
    if ( m >= f.size() )
    {
      throw input_error( "monomial uses a variable beyond x" + std::to_string( p.num_vars ) );
    }
    f.set( m, true );
  }
  moebius_transform( f );
  return f;
}

inline anf_polynomial anf_from_truth_table( const boolean_function& f )
{
  auto coeffs = f;
  moebius_transform( coeffs );
  anf_polynomial p{ f.num_vars(), {} };
  const auto words = coeffs.words();
  for ( std::size_t i = 0; i < words.size(); ++i )
  {
    for ( auto w = words[i]; w; w &= w - 1 )
    {
      p.monomials.insert( static_cast<vec_t>( ( i << 6 ) + std::countr_zero( w ) ) );
    }
  }
  return p;
}

/*! \brief Algebraic degree; 0 for constants */
inline unsigned degree( const boolean_function& f )
{
  auto coeffs = f;
  moebius_transform( coeffs );
  unsigned d = 0;
  const auto words = coeffs.words();
  for ( std::size_t i = 0; i < words.size(); ++i )
  {
    for ( auto w = words[i]; w; w &= w - 1 )
    {
      const auto mono = ( i << 6 ) + std::countr_zero( w );
      d = std::max( d, static_cast<unsigned>( std::popcount( mono ) ) );
    }
  }
  return d;
}

/*! \brief Malformed ANF text; column is 1-based within the parsed string */
class anf_syntax_error : public input_error
{
public:
  anf_syntax_error( const std::string& what, std::size_t column )
      : input_error( "column " + std::to_string( column ) + ": " + what ), column_( column )
  {
  }

  std::size_t column() const noexcept { return column_; }

private:
  std::size_t column_;
};

/*! \brief Parses `x1*x2 + x1 + 1` style text

  Terms are separated by `+`; a term is `1`, `0`, or a `*`-separated product
  of variables `x1`..`xn`.  Whitespace is ignored.  Repeated monomials cancel
  and repeated variables inside a product collapse (xi*xi = xi).
*/
inline anf_polynomial parse_anf( std::string_view text, unsigned n )
{
  if ( n < 1 || n > max_variables )
  {
    throw input_error( "variable count must be in [1, 24], got " + std::to_string( n ) );
  }
  anf_polynomial p{ n, {} };
  std::size_t pos = 0;

  const auto skip_ws = [&] {
    while ( pos < text.size() && ( text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r' ) )
    {
      ++pos;
    }
  };
  const auto token_at = [&]( std::size_t at ) {
    auto end = at;
    while ( end < text.size() && text[end] != '+' && text[end] != '*' && text[end] != ' ' )
    {
      ++end;
    }
    return std::string( text.substr( at, std::max<std::size_t>( end - at, 1 ) ) );
  };

  skip_ws();
  if ( pos == text.size() )
  {
    throw anf_syntax_error( "empty polynomial", 1 );
  }

  while ( true )
  {
    skip_ws();
    if ( pos == text.size() )
    {
      throw anf_syntax_error( "expected a term after '+'", pos + 1 );
    }
    const auto term_start = pos;
    vec_t mono = 0;
    bool zero = false;
    if ( text[pos] == '1' || text[pos] == '0' )
    {
      zero = text[pos] == '0';
      ++pos;
      if ( pos < text.size() && std::isdigit( static_cast<unsigned char>( text[pos] ) ) )
      {
        throw anf_syntax_error( "malformed token '" + token_at( term_start ) + "'", term_start + 1 );
      }
    }
    else
    {
      while ( true )
      {
        skip_ws();
        const auto var_start = pos;
        if ( pos >= text.size() || text[pos] != 'x' )
        {
          throw anf_syntax_error( "malformed token '" + ( pos < text.size() ? token_at( pos ) : std::string( "<end>" ) ) + "'", var_start + 1 );
        }
        ++pos;
        unsigned long index = 0;
        const auto digits_start = pos;
        while ( pos < text.size() && std::isdigit( static_cast<unsigned char>( text[pos] ) ) )
        {
          index = index * 10 + static_cast<unsigned long>( text[pos] - '0' );
          if ( index > 1000 )
          {
            break;
          }
          ++pos;
        }
        if ( pos == digits_start || ( pos < text.size() && std::isalpha( static_cast<unsigned char>( text[pos] ) ) ) )
        {
          throw anf_syntax_error( "malformed token '" + token_at( var_start ) + "'", var_start + 1 );
        }
        if ( index < 1 || index > n )
        {
          throw anf_syntax_error( "variable '" + token_at( var_start ) + "' out of range for n=" + std::to_string( n ), var_start + 1 );
        }
        mono |= vec_t{ 1 } << ( index - 1 );
        skip_ws();
        if ( pos < text.size() && text[pos] == '*' )
        {
          ++pos;
          continue;
        }
        break;
      }
    }
    if ( !zero )
    {
      p.toggle( mono );
    }
    skip_ws();
    if ( pos == text.size() )
    {
      break;
    }
    if ( text[pos] != '+' )
    {
      throw anf_syntax_error( "unexpected '" + token_at( pos ) + "', expected '+'", pos + 1 );
    }
    ++pos;
  }
  return p;
}

/*! \brief Canonical text form: higher degree first, then lexicographic; `1` last, `0` if empty */
inline std::string render_anf( const anf_polynomial& p )
{
  if ( p.monomials.empty() )
  {
    return "0";
  }
  std::vector<vec_t> order( p.monomials.begin(), p.monomials.end() );
  const auto vars_of = []( vec_t m ) {
    std::vector<unsigned> v;
    for ( ; m; m &= m - 1 )
    {
      v.push_back( static_cast<unsigned>( std::countr_zero( m ) ) );
    }
    return v;
  };
  std::sort( order.begin(), order.end(), [&]( vec_t a, vec_t b ) {
    const auto da = std::popcount( a ), db = std::popcount( b );
    if ( da != db )
    {
      return da > db;
    }
    return vars_of( a ) < vars_of( b );
  } );

  std::string s;
  for ( auto m : order )
  {
    if ( !s.empty() )
    {
      s += " + ";
    }
    if ( m == 0 )
    {
      s += '1';
      continue;
    }
    bool first = true;
    for ( auto v : vars_of( m ) )
    {
      s += first ? "x" : "*x";
      s += std::to_string( v + 1 );
      first = false;
    }
  }
  return s;
}

} // namespace vbf
