#include "support/oracles.hpp"

#include <distrev/error.hpp>
#include <distrev/operators.hpp>
#include <distrev/wheel.hpp>

#include <doctest.h>

using namespace distrev;

namespace
{

SetOperator as_fn( const OperatorTable& t )
{
    return [ &t ]( const PointSet& a, const PointSet& b ) { return t.lookup( a, b ); };
}

} // namespace

TEST_SUITE( "operators" )
{
    TEST_CASE( "apply on empty arguments" )
    {
        std::mt19937_64 rng( 1 );
        const auto d = oracle::random_distance( 4, rng, true, true );
        const PointSet none( 4 );
        CHECK( apply( d, none, PointSet::full( 4 ) ).empty() );
        CHECK( apply( d, PointSet::full( 4 ), none ).empty() );
    }

    TEST_CASE( "apply matches the naive definition" )
    {
        std::mt19937_64 rng( 2 );
        for ( int i = 0; i < 300; ++i )
        {
            const std::size_t n = 2 + i % 5;
            const auto d = oracle::random_distance( n, rng, i % 2 == 0, i % 3 != 0 );
            const auto v = oracle::random_set( n, rng );
            const auto w = oracle::random_set( n, rng );
            const auto x = apply( d, v, w );
            CHECK( x == oracle::apply( d, v, w ) );
            CHECK( !x.empty() );
            CHECK( x.is_subset_of( w ) );
        }
    }

    TEST_CASE( "IR and positive: overlap gives the intersection" )
    {
        std::mt19937_64 rng( 4 );
        for ( int i = 0; i < 200; ++i )
        {
            const auto d = oracle::random_distance( 5, rng, false, true );
            const auto v = oracle::random_set( 5, rng );
            const auto w = oracle::random_set( 5, rng );
            if ( v.intersects( w ) )
                CHECK( apply( d, v, w ) == ( v & w ) );
        }
    }

    TEST_CASE( "every kept point attains the minimum" )
    {
        std::mt19937_64 rng( 6 );
        for ( int i = 0; i < 200; ++i )
        {
            const auto d = oracle::random_distance( 5, rng, false, false );
            const auto v = oracle::random_set( 5, rng );
            const auto w = oracle::random_set( 5, rng );
            for ( auto b : apply( d, v, w ).members() )
            {
                bool some = false;
                for ( auto a : v.members() )
                {
                    bool minimal = true;
                    for ( auto a2 : v.members() )
                        for ( auto b2 : w.members() )
                            minimal = minimal && oracle::le( d, d( a, b ), d( a2, b2 ) );
                    some = some || minimal;
                }
                CHECK( some );
            }
        }
    }

    TEST_CASE( "wheel distance and rung ties" )
    {
        const auto p = WheelParams::for_arity( 1 );
        const auto d = build_wheel_distance( p );
        CHECK( d( p.v( 1 ), p.w( 1 ) ) == Cost::parse( "1.4" ) );
        CHECK( d( p.v( 1 ), p.w( 2 ) ) == Cost( 2 ) );
        CHECK( d( p.v( 1 ), p.w( 4 ) ) == Cost( 2 ) );
        CHECK( d( p.v( 1 ), p.w( 3 ) ) == Cost::parse( "1.2" ) );
        CHECK( d( p.v( 1 ), p.v( 3 ) ) == Cost::parse( "1.1" ) );
        CHECK( d( p.v( 1 ), p.extra( 1 ) ) == Cost( 1 ) );
        CHECK( apply( d, p.v_rung_pair( 1 ), p.w_rung_pair( 1 ) ) == p.w_rung_pair( 1 ) );
    }

    TEST_CASE( "lookup: explicit entries, backing, partial tables" )
    {
        const auto p = WheelParams::for_arity( 1 );
        const auto d = build_wheel_distance( p );
        const auto op = build_modified_operator( d, p );
        const int m = p.m;
        CHECK( op.entries().size() == 2 );
        CHECK( op.lookup( p.v_rung_pair( m ), p.w_rung_pair( m ) ) == p.set( { p.w( m ) } ) );
        CHECK( op.lookup( p.w_rung_pair( m ), p.v_rung_pair( m ) ) == p.set( { p.v( m ) } ) );
        CHECK( op.lookup( p.set( { p.v( 1 ) } ), p.w_rung_pair( m ) ) == p.set( { p.w( 1 ) } ) );
        CHECK( op.lookup( p.set( { p.v( m ) } ), p.w_rung_pair( m ) ) == p.set( { p.w( m ) } ) );
        CHECK( op.lookup( p.v_rung_pair( 1 ), p.w_rung_pair( 1 ) ) == apply( d, p.v_rung_pair( 1 ), p.w_rung_pair( 1 ) ) );

        OperatorTable partial( oracle::letters( 2 ) );
        partial.add( PointSet( 2, { 0 } ), PointSet( 2, { 1 } ), PointSet( 2, { 1 } ) );
        CHECK_THROWS_AS( (void)partial.lookup( PointSet( 2, { 1 } ), PointSet( 2, { 0 } ) ), UndefinedPair );
        CHECK_THROWS_AS( partial.add( PointSet( 2, { 0 } ), PointSet( 2, { 1 } ), PointSet( 2, { 1 } ) ), InputError );
    }

    TEST_CASE( "inclusion" )
    {
        std::mt19937_64 rng( 8 );
        const auto d = oracle::random_distance( 4, rng, false, false );
        const auto fam = SetFamily::all_nonempty( 4 );
        CHECK( check_inclusion( OperatorTable( d ), &fam ).pass() );

        OperatorTable bad( oracle::letters( 3 ) );
        bad.add( PointSet( 3, { 0 } ), PointSet( 3, { 1, 2 } ), PointSet( 3, { 0 } ) );
        const auto r = check_inclusion( bad );
        CHECK_FALSE( r.pass() );
        CHECK( r.witnesses.size() == 1 );

        const auto p = WheelParams::for_arity( 1 );
        CHECK( check_inclusion( build_modified_operator( build_wheel_distance( p ), p ) ).pass() );
    }

    TEST_CASE( "family closure" )
    {
        CHECK_NOTHROW( SetFamily::all_nonempty( 3 ).validate_loop_closure() );
        SetFamily with_empty( 2, { PointSet( 2 ), PointSet( 2, { 0 } ) } );
        CHECK_THROWS_AS( with_empty.validate_loop_closure(), FamilyError );
        SetFamily no_union( 2, { PointSet( 2, { 0 } ), PointSet( 2, { 1 } ) } );
        CHECK_THROWS_AS( no_union.validate_loop_closure(), FamilyError );
        SetFamily no_meet( 3, { PointSet( 3, { 0, 1 } ), PointSet( 3, { 1, 2 } ), PointSet( 3, { 0, 1, 2 } ) } );
        CHECK_THROWS_AS( no_meet.validate_loop_closure(), FamilyError );
        // disjoint members need no intersection
        SetFamily ok( 2, { PointSet( 2, { 0 } ), PointSet( 2, { 1 } ), PointSet( 2, { 0, 1 } ) } );
        CHECK_NOTHROW( ok.validate_loop_closure() );
    }

    TEST_CASE( "symmetric distances never fail the loop" )
    {
        std::mt19937_64 rng( 10 );
        for ( int i = 0; i < 20; ++i )
        {
            const auto d = oracle::random_distance( 3 + i % 2, rng, true, false );
            const OperatorTable op( d );
            LoopOptions lo;
            lo.k_max = 3;
            const auto v = check_loop( op, SetFamily::all_nonempty( d.size() ), lo );
            CHECK( v.pass );
        }
    }

    TEST_CASE( "operator returning W passes" )
    {
        const SetOperator keep = []( const PointSet&, const PointSet& w ) { return w; };
        LoopOptions lo;
        lo.k_max = 3;
        CHECK( search_loop( keep, all_nonempty_subsets( 3 ), lo ).pass );
    }

    TEST_CASE( "asymmetric distance: loop failure found and rechecked" )
    {
        // a b with d(a,b) < d(b,a) and the diagonal above both
        const PseudoDistance d( oracle::letters( 2 ), OrderMode::Real, { Cost( 5 ), Cost( 1 ), Cost( 2 ), Cost( 5 ) } );
        const OperatorTable op( d );
        LoopOptions lo;
        lo.k_max = 3;
        const auto v = check_loop( op, SetFamily::all_nonempty( 2 ), lo );
        REQUIRE_FALSE( v.pass );
        CHECK( is_loop_counterexample( as_fn( op ), v.chain ) );
        CHECK( oracle::loop_fails( as_fn( op ), v.chain ) );
        CHECK( v.exhaustive );
    }

    TEST_CASE( "the walk-around chain breaks the modified wheel" )
    {
        for ( int n = 1; n <= 3; ++n )
        {
            const auto p = WheelParams::for_arity( n );
            const auto d = build_wheel_distance( p );
            const auto op = build_modified_operator( d, p );
            const auto chain = wheel_loop_chain( p );
            CHECK( chain.size() == static_cast< std::size_t >( 2 * p.m ) );
            CHECK( oracle::loop_fails( as_fn( op ), chain ) );
            // the same chain is harmless for the plain distance operator
            CHECK_FALSE( oracle::loop_fails( as_fn( OperatorTable( d ) ), chain ) );
        }
    }

    TEST_CASE( "loop search finds the k=7 wheel chain first" )
    {
        const auto p = WheelParams::for_arity( 1 );
        const auto op = build_modified_operator( build_wheel_distance( p ), p );
        const auto pool = wheel_chain_pool( p );
        LoopOptions lo;
        lo.k_max = 8;
        lo.budget = 60'000'000;
        const auto v = check_loop( op, SetFamily::all_nonempty( p.points() ), lo, &pool );
        REQUIRE_FALSE( v.pass );
        CHECK( v.exhaustive );
        CHECK( v.chain.size() == 8 );
        CHECK( v.chain == wheel_loop_chain( p ) );
        CHECK( v.conclusion == p.set( { p.w( 4 ) } ) );
    }

    TEST_CASE( "budget falls back to sampling, same seed same answer" )
    {
        std::mt19937_64 rng( 12 );
        const auto d = oracle::random_distance( 4, rng, true, true );
        const SetOperator fn = [ &d ]( const PointSet& a, const PointSet& b ) { return apply( d, a, b ); };
        LoopOptions lo;
        lo.k_max = 3;
        lo.budget = 100;
        lo.samples = 500;
        const auto a = search_loop( fn, all_nonempty_subsets( 4 ), lo );
        const auto b = search_loop( fn, all_nonempty_subsets( 4 ), lo );
        CHECK_FALSE( a.exhaustive );
        CHECK( a.pass );
        CHECK( a.evaluations == b.evaluations );
    }

    TEST_CASE( "check_loop rejects pool sets outside the family" )
    {
        std::mt19937_64 rng( 1 );
        const auto d = oracle::random_distance( 2, rng, true, true );
        const std::vector< PointSet > pool{ PointSet( 2, { 0 } ) };
        SetFamily fam( 2, { PointSet( 2, { 1 } ) } );
        LoopOptions lo;
        CHECK_THROWS( (void)check_loop( OperatorTable( d ), fam, lo, &pool ) );
    }
}
