/*!
  \file parallel.hpp
  \brief Minimal index-parallel loop over std::jthread workers
*/

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace vbf
{

/*! \brief Worker count: VBF_THREADS if set and positive, else hardware concurrency */
inline unsigned thread_count()
{
  if ( const char* env = std::getenv( "VBF_THREADS" ) )
  {
    char* end = nullptr;
    const auto v = std::strtoul( env, &end, 10 );
    if ( end != env && *end == '\0' && v > 0 )
    {
      return static_cast<unsigned>( std::min<unsigned long>( v, 1024 ) );
    }
  }
  return std::max( 1u, std::thread::hardware_concurrency() );
}

/*! \brief Calls fn(i) for every i in [0, count); the first exception thrown is rethrown

  Each index runs exactly once; callers write results into slot i so the
  outcome does not depend on scheduling.
*/
template<typename Fn>
void parallel_for( std::size_t count, Fn&& fn, unsigned threads = thread_count() )
{
  threads = static_cast<unsigned>( std::min<std::size_t>( threads, count ) );
  if ( threads <= 1 )
  {
    for ( std::size_t i = 0; i < count; ++i )
    {
      fn( i );
    }
    return;
  }
  std::atomic<std::size_t> next{ 0 };
  std::atomic<bool> failed{ false };
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> workers;
    for ( unsigned t = 0; t < threads; ++t )
    {
      workers.emplace_back( [&] {
        while ( !failed.load( std::memory_order_relaxed ) )
        {
          const auto i = next.fetch_add( 1, std::memory_order_relaxed );
          if ( i >= count )
          {
            return;
          }
          try
          {
            fn( i );
          }
          catch ( ... )
          {
            std::lock_guard lock( error_mutex );
            if ( !error )
            {
              error = std::current_exception();
            }
            failed = true;
          }
        }
      } );
    }
  }
  if ( error )
  {
    std::rethrow_exception( error );
  }
}

} // namespace vbf
