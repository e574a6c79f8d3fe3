#include <distrev/operators.hpp>
#include <distrev/realize.hpp>
#include <distrev/wheel.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace distrev;

namespace
{

// |_D on random subset pairs of a wheel distance.
void BM_Apply( benchmark::State& state )
{
    const auto p = WheelParams::for_arity( static_cast< int >( state.range( 0 ) ) );
    const auto d = build_wheel_distance( p );
    const auto n = p.points();
    std::mt19937_64 rng( 1 );
    std::vector< PointSet > sets;
    for ( int i = 0; i < 256; ++i )
    {
        PointSet s( n );
        while ( s.empty() )
            for ( std::size_t j = 0; j < n; ++j )
                if ( rng() & 1 )
                    s.insert( j );
        sets.push_back( s );
    }
    std::size_t i = 0;
    for ( auto _ : state )
    {
        benchmark::DoNotOptimize( apply( d, sets[ i % 256 ], sets[ ( i * 7 + 3 ) % 256 ] ) );
        ++i;
    }
}
BENCHMARK( BM_Apply )->Arg( 1 )->Arg( 2 )->Arg( 3 );

// Compile and solve the non-realizability fragment.
void BM_FragmentSolve( benchmark::State& state )
{
    const auto p = WheelParams::for_arity( static_cast< int >( state.range( 0 ) ) );
    const auto g = build_wheel_gadget( p, {} );
    const SetOperator fn = [ &g ]( const PointSet& a, const PointSet& b ) { return g.patched.lookup( a, b ); };
    const auto frag = build_proof_fragment( fn, wheel_universe( p ), p );
    for ( auto _ : state )
        benchmark::DoNotOptimize( realize( frag, false ) );
}
BENCHMARK( BM_FragmentSolve )->Arg( 1 )->Arg( 2 )->Arg( 3 );

// Patched operator against |_D' over every pair of wheel subsets, m=4.
void BM_EqualitySweep( benchmark::State& state )
{
    const auto p = WheelParams::for_arity( 1, 0 );
    const auto g = build_wheel_gadget( p, {} );
    const auto sets = all_nonempty_subsets( p.points() );
    for ( auto _ : state )
    {
        std::size_t mismatches = 0;
        for ( const auto& v : sets )
            for ( const auto& w : sets )
                mismatches += g.patched.lookup( v, w ) == apply( g.patched_d, v, w ) ? 0 : 1;
        benchmark::DoNotOptimize( mismatches );
    }
    state.SetItemsProcessed( static_cast< std::int64_t >( state.iterations() * sets.size() * sets.size() ) );
}
BENCHMARK( BM_EqualitySweep )->Unit( benchmark::kMillisecond );

// Exhaustive pruned loop search, k <= 3, on a symmetric 4-point distance.
void BM_LoopSearch( benchmark::State& state )
{
    std::mt19937_64 rng( 2 );
    std::uniform_int_distribution< int > tenth( 0, 8 );
    const std::size_t n = 4;
    std::vector< Cost > t( n * n );
    for ( std::size_t a = 0; a < n; ++a )
        for ( std::size_t b = a; b < n; ++b )
            t[ a * n + b ] = t[ b * n + a ] = Cost( tenth( rng ), 10 );
    const PseudoDistance d( Universe( std::vector< std::string >{ "a", "b", "c", "e" } ), OrderMode::Real, t );
    const SetOperator fn = [ &d ]( const PointSet& a, const PointSet& b ) { return apply( d, a, b ); };
    const auto sets = all_nonempty_subsets( n );
    LoopOptions lo;
    lo.k_max = 3;
    lo.budget = 10'000'000;
    for ( auto _ : state )
        benchmark::DoNotOptimize( search_loop( fn, sets, lo ) );
}
BENCHMARK( BM_LoopSearch )->Unit( benchmark::kMillisecond );

} // namespace

BENCHMARK_MAIN();
