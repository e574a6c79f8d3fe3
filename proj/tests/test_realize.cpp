#include "support/oracles.hpp"

#include <distrev/error.hpp>
#include <distrev/realize.hpp>
#include <distrev/wheel.hpp>

#include <doctest.h>

#include <algorithm>

using namespace distrev;

namespace
{

PointSet ps( std::size_t n, std::initializer_list< std::size_t > m ) { return PointSet( n, m ); }

// Random explicit table: mostly plausible results (nonempty, within W), some
// arbitrary ones.
OperatorTable random_table( std::size_t n, std::mt19937_64& rng, std::size_t entries )
{
    OperatorTable t( oracle::letters( n ) );
    std::bernoulli_distribution wild( 0.1 );
    std::size_t guard = 0;
    while ( t.entries().size() < entries && guard++ < 200 )
    {
        const auto v = oracle::random_set( n, rng );
        const auto w = oracle::random_set( n, rng );
        if ( t.find( v, w ) )
            continue;
        auto x = wild( rng ) ? oracle::random_set( n, rng, false ) : ( oracle::random_set( n, rng ) & w );
        if ( !wild( rng ) && x.empty() )
            x = w;
        t.add( v, w, x );
    }
    return t;
}

SetOperator fn_of( const OperatorTable& t )
{
    return [ &t ]( const PointSet& a, const PointSet& b ) { return t.lookup( a, b ); };
}

} // namespace

TEST_SUITE( "realize" )
{
    TEST_CASE( "pair index" )
    {
        const PairIndex full( 3, false );
        CHECK( full.size() == 9 );
        CHECK( full.var( 1, 2 ) != full.var( 2, 1 ) );
        const PairIndex sym( 3, true );
        CHECK( sym.size() == 6 );
        std::vector< bool > seen( sym.size() );
        for ( std::size_t a = 0; a < 3; ++a )
            for ( std::size_t b = 0; b < 3; ++b )
            {
                CHECK( sym.var( a, b ) == sym.var( b, a ) );
                seen[ sym.var( a, b ) ] = true;
                const auto [ x, y ] = sym.pair( sym.var( a, b ) );
                CHECK( x == std::min( a, b ) );
                CHECK( y == std::max( a, b ) );
            }
        CHECK( std::all_of( seen.begin(), seen.end(), []( bool s ) { return s; } ) );
        CHECK( sym.label( sym.var( 2, 0 ), oracle::letters( 3 ) ) == "(a,c)" );
    }

    TEST_CASE( "compiling one entry" )
    {
        OperatorTable t( oracle::letters( 3 ) );
        t.add( ps( 3, { 0 } ), ps( 3, { 1, 2 } ), ps( 3, { 1 } ) );
        const auto sys = compile_constraints( t, false );
        const auto ab = sys.vars.var( 0, 1 ), ac = sys.vars.var( 0, 2 );
        REQUIRE( sys.clauses.size() == 2 );
        REQUIRE( sys.clauses[ 0 ].disjuncts.size() == 1 );
        const auto& keep = sys.clauses[ 0 ].disjuncts[ 0 ];
        CHECK( keep == Conjunction{ { ab, ab, false }, { ab, ac, false } } );
        REQUIRE( sys.clauses[ 1 ].disjuncts.size() == 1 );
        CHECK( sys.clauses[ 1 ].disjuncts[ 0 ] == Conjunction{ { ab, ac, true } } );
        CHECK( sys.clauses[ 1 ].provenance == 0 );
    }

    TEST_CASE( "immediately unrealizable entries" )
    {
        OperatorTable empty_result( oracle::letters( 3 ) );
        empty_result.add( ps( 3, { 0 } ), ps( 3, { 1, 2 } ), ps( 3, {} ) );
        CHECK_THROWS_AS( (void)compile_constraints( empty_result, false ), Unrealizable );
        OperatorTable outside( oracle::letters( 3 ) );
        outside.add( ps( 3, { 0 } ), ps( 3, { 1 } ), ps( 3, { 0 } ) );
        CHECK_THROWS_AS( (void)compile_constraints( outside, false ), Unrealizable );
        const auto v = realize( empty_result, false );
        CHECK( v.status == RealizeStatus::Unsat );
        CHECK( v.conflict == std::vector< std::size_t >{ 0 } );
    }

    TEST_CASE( "tiny verdicts" )
    {
        OperatorTable one( oracle::letters( 2 ) );
        one.add( ps( 2, { 0 } ), ps( 2, { 0, 1 } ), ps( 2, { 1 } ) );
        CHECK( realize( one, true ).status == RealizeStatus::Sat );
        CHECK( brute_force_realizable( one, true ).status == RealizeStatus::Sat );

        OperatorTable none( oracle::letters( 2 ) );
        none.add( ps( 2, { 0 } ), ps( 2, { 1 } ), ps( 2, {} ) );
        CHECK( realize( none, true ).status == RealizeStatus::Unsat );
        CHECK( brute_force_realizable( none, true ).status == RealizeStatus::Unsat );

        // a three-cycle of strict preferences: ab < ac, ac < bc, bc < ab
        OperatorTable cycle( oracle::letters( 3 ) );
        cycle.add( ps( 3, { 0 } ), ps( 3, { 1, 2 } ), ps( 3, { 1 } ) );
        cycle.add( ps( 3, { 2 } ), ps( 3, { 0, 1 } ), ps( 3, { 0 } ) );
        cycle.add( ps( 3, { 1 } ), ps( 3, { 0, 2 } ), ps( 3, { 2 } ) );
        const auto v = realize( cycle, true );
        CHECK( v.status == RealizeStatus::Unsat );
        CHECK( v.conflict.size() == 3 );
        CHECK( brute_force_realizable( cycle, true ).status == RealizeStatus::Unsat );
        // in the directed reading the three are unrelated
        CHECK( realize( cycle, false ).status == RealizeStatus::Sat );
    }

    TEST_CASE( "distance-backed tables are realizable" )
    {
        std::mt19937_64 rng( 21 );
        for ( int i = 0; i < 30; ++i )
        {
            const std::size_t n = 2 + i % 3;
            const bool sym = i % 2 == 0;
            const auto d = oracle::random_distance( n, rng, sym, false );
            const OperatorTable t( d );
            const auto v = realize( t, sym );
            REQUIRE( v.status == RealizeStatus::Sat );
            CHECK( verify_witness( v.ranks, t, sym ) );
        }
        CHECK_THROWS_AS( (void)table_entries( OperatorTable( oracle::random_distance( 7, rng, true, true ) ) ),
                         BoundExceeded );
    }

    TEST_CASE( "solver agrees with brute force" )
    {
        std::mt19937_64 rng( 22 );
        int sat = 0, unsat = 0;
        for ( int i = 0; i < 300; ++i )
        {
            const std::size_t n = i % 3 == 0 ? 2 : 3;
            const auto t = random_table( n, rng, 1 + i % 6 );
            const auto s = realize( t, true );
            const auto b = brute_force_realizable( t, true );
            CHECK( s.status == b.status );
            if ( s.status == RealizeStatus::Sat )
            {
                ++sat;
                CHECK( verify_witness( s.ranks, t, true ) );
                CHECK( verify_witness( b.ranks, t, true ) );
            }
            else
                ++unsat;
        }
        // the corpus must exercise both answers
        CHECK( sat > 30 );
        CHECK( unsat > 30 );
    }

    TEST_CASE( "directed mode agrees with brute force on two points" )
    {
        std::mt19937_64 rng( 23 );
        for ( int i = 0; i < 60; ++i )
        {
            const auto t = random_table( 2, rng, 1 + i % 4 );
            CHECK( realize( t, false ).status == brute_force_realizable( t, false ).status );
        }
    }

    TEST_CASE( "adding entries keeps UNSAT" )
    {
        std::mt19937_64 rng( 24 );
        int seen = 0;
        for ( int i = 0; i < 200 && seen < 40; ++i )
        {
            auto t = random_table( 3, rng, 3 );
            if ( realize( t, true ).status != RealizeStatus::Unsat )
                continue;
            ++seen;
            const auto more = random_table( 3, rng, 3 );
            for ( const auto& e : more.entries() )
                if ( !t.find( e.v, e.w ) )
                    t.add( e.v, e.w, e.x );
            CHECK( realize( t, true ).status == RealizeStatus::Unsat );
        }
        CHECK( seen >= 20 );
    }

    TEST_CASE( "the unsat core is minimal" )
    {
        std::mt19937_64 rng( 25 );
        int seen = 0;
        for ( int i = 0; i < 100 && seen < 15; ++i )
        {
            const auto t = random_table( 3, rng, 5 );
            const auto v = realize( t, true );
            if ( v.status != RealizeStatus::Unsat )
                continue;
            ++seen;
            const auto entries = table_entries( t );
            for ( std::size_t drop = 0; drop < v.conflict.size(); ++drop )
            {
                OperatorTable sub( t.universe() );
                for ( std::size_t j = 0; j < v.conflict.size(); ++j )
                    if ( j != drop )
                    {
                        const auto& e = entries[ v.conflict[ j ] ];
                        sub.add( e.v, e.w, e.x );
                    }
                CHECK( realize( sub, true ).status == RealizeStatus::Sat );
            }
        }
    }

    TEST_CASE( "budget gives Unknown" )
    {
        const auto p = WheelParams::for_arity( 2 );
        const auto op = build_modified_operator( build_wheel_distance( p ), p );
        const auto u = wheel_universe( p );
        const auto frag = build_proof_fragment( fn_of( op ), u, p );
        SolveOptions tight;
        tight.budget = 1;
        const auto v = realize( frag, false, tight );
        CHECK( v.status != RealizeStatus::Sat );
        CHECK( realize( frag, false ).status == RealizeStatus::Unsat );
    }

    TEST_CASE( "wheel fragment: UNSAT, relaxation forces equal rungs" )
    {
        for ( int n = 1; n <= 3; ++n )
        {
            const auto p = WheelParams::for_arity( n );
            const auto op = build_modified_operator( build_wheel_distance( p ), p );
            const auto u = wheel_universe( p );
            const auto frag = build_proof_fragment( fn_of( op ), u, p );
            CHECK( frag.entries().size() == static_cast< std::size_t >( 3 * p.m ) );
            for ( bool sym : { false, true } )
            {
                CHECK( realize( frag, sym ).status == RealizeStatus::Unsat );
                const auto relaxed = build_proof_fragment( fn_of( op ), u, p, false );
                const auto v = realize( relaxed, sym );
                REQUIRE( v.status == RealizeStatus::Sat );
                CHECK( verify_witness( v.ranks, relaxed, sym ) );
                const PairIndex vars( u.size(), sym );
                for ( int i = 1; i < p.m; ++i )
                    CHECK( v.ranks[ vars.var( p.v( i ), p.w( i ) ) ] == v.ranks[ vars.var( p.v( i + 1 ), p.w( i + 1 ) ) ] );
            }
        }
    }

    TEST_CASE( "swapped witness ranks are caught" )
    {
        const auto p = WheelParams::for_arity( 1 );
        const auto g = build_wheel_gadget( p, {} );
        const auto u = wheel_universe( p );
        const auto frag = build_proof_fragment( fn_of( g.patched ), u, p );
        const auto v = realize( frag, false );
        REQUIRE( v.status == RealizeStatus::Sat );
        CHECK( verify_witness( v.ranks, frag, false ) );
        auto ranks = v.ranks;
        const PairIndex vars( u.size(), false );
        std::swap( ranks[ vars.var( p.v( 1 ), p.w( 1 ) ) ], ranks[ vars.var( p.v( 1 ), p.w( 2 ) ) ] );
        CHECK( ranks != v.ranks );
        CHECK_FALSE( verify_witness( ranks, frag, false ) );
    }

    TEST_CASE( "empty table" )
    {
        const OperatorTable t( oracle::letters( 3 ) );
        const auto v = realize( t, true );
        CHECK( v.status == RealizeStatus::Sat );
        CHECK( verify_witness( v.ranks, t, true ) );
    }

    TEST_CASE( "witness distance uses ranks as costs" )
    {
        const std::vector< std::size_t > ranks{ 0, 2, 1 };
        const auto d = witness_distance( ranks, oracle::letters( 2 ), true );
        CHECK( d( 0, 1 ) == Cost( 2 ) );
        CHECK( d( 1, 0 ) == Cost( 2 ) );
        CHECK( d( 1, 1 ) == Cost( 1 ) );
    }
}
