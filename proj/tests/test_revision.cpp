#include "support/oracles.hpp"
#include "support/sphere.hpp"

#include <distrev/error.hpp>
#include <distrev/io.hpp>
#include <distrev/revision.hpp>
#include <distrev/wheel.hpp>

#include <doctest.h>

using namespace distrev;

namespace
{

const Signature& pq()
{
    static const Signature s( { "p", "q" } );
    return s;
}

SpacePtr space_pq() { return ValuationSpace::classical( pq() ); }

Theory theory( std::initializer_list< const char* > texts, const SpacePtr& s )
{
    std::vector< Formula > f;
    for ( const auto* t : texts )
        f.push_back( parse_formula( t, s->signature() ) );
    return Theory::of( f, s );
}

// Random IR+positive distance over the space's valuations.
PseudoDistance random_over( const SpacePtr& s, std::mt19937_64& rng, bool symmetric )
{
    const auto d = oracle::random_distance( s->size(), rng, symmetric, true );
    return PseudoDistance( s->universe(), OrderMode::Real, d.table() );
}

bool all_pass( const std::vector< PropertyReport >& rs )
{
    for ( const auto& r : rs )
        if ( !r.pass() )
            return false;
    return true;
}

const char* kleene_with_true = R"(values: 0 h 1
designated: 1
not: 1 h 0
and: 0 0 0
and: 0 h h
and: 0 h 1
or: 0 h 1
or: h h 1
or: 1 1 1
true: 1
)";

} // namespace

TEST_SUITE( "revision" )
{
    TEST_CASE( "hamming revision of p&q by !p" )
    {
        const auto s = space_pq();
        const auto op = RevisionOperator::from_distance( hamming_pseudo_distance( *s ), s );
        const auto out = revise( op, theory( { "p & q" }, s ), theory( { "!p" }, s ) );
        CHECK( out.models() == ModelSet( s, PointSet( 4, { 1 } ) ) );
        CHECK( theory_entails( out.models(), parse_formula( "!p & q", pq() ) ) );
        CHECK( canonical_dnf( out.models() ).to_string() == "!p & q" );
    }

    TEST_CASE( "singleton input and overlap" )
    {
        std::mt19937_64 rng( 31 );
        const auto s = space_pq();
        for ( int i = 0; i < 20; ++i )
        {
            const auto op = RevisionOperator::from_distance( random_over( s, rng, false ), s );
            for ( const auto& g : all_nonempty_subsets( 4 ) )
                for ( const auto& d : all_nonempty_subsets( 4 ) )
                {
                    const auto r = op( g, d );
                    CHECK( r.is_subset_of( d ) );
                    if ( d.size() == 1 )
                        CHECK( r == d );
                    if ( g.intersects( d ) )
                        CHECK( r == ( g & d ) );
                }
        }
    }

    TEST_CASE( "inconsistent input is an error" )
    {
        const auto s = space_pq();
        const auto op = RevisionOperator::from_distance( hamming_pseudo_distance( *s ), s );
        CHECK_THROWS_AS( (void)revise( op, theory( { "p", "!p" }, s ), theory( { "q" }, s ) ), InconsistentInput );
        CHECK_THROWS_AS( (void)revise( op, theory( { "q" }, s ), theory( { "false" }, s ) ), InconsistentInput );
    }

    TEST_CASE( "presentations do not matter" )
    {
        std::mt19937_64 rng( 32 );
        const auto s = ValuationSpace::classical( Signature( { "p", "q", "r" } ) );
        const auto op = RevisionOperator::from_distance( random_over( s, rng, false ), s );
        int tried = 0;
        for ( int i = 0; i < 400 && tried < 60; ++i )
        {
            const auto f = oracle::random_formula( s->signature(), rng, 3 );
            const auto g = oracle::random_formula( s->signature(), rng, 3 );
            const auto mf = models( f, s );
            if ( mf.empty() || models( g, s ).empty() )
                continue;
            ++tried;
            // the same theory as a formula and as its canonical disjunctive form
            const Theory a = Theory::of( { f }, s );
            const Theory b = Theory::of( { canonical_dnf( mf ) }, s );
            const Theory b2 = Theory::of( canonical_cnf_clauses( mf ), s );
            const Theory delta = Theory::of( { g }, s );
            CHECK( a == b );
            CHECK( revise( op, a, delta ) == revise( op, b, delta ) );
            CHECK( revise( op, a, delta ) == revise( op, b2, delta ) );
        }
    }

    TEST_CASE( "AGM for IR positive distances" )
    {
        std::mt19937_64 rng( 33 );
        const auto s = space_pq();
        for ( int i = 0; i < 5; ++i )
        {
            const auto op = RevisionOperator::from_distance( random_over( s, rng, i % 2 == 0 ), s );
            const auto rs = check_agm( op );
            REQUIRE( rs.size() == 5 );
            CHECK( rs[ 0 ].property == "star0" );
            CHECK( rs[ 4 ].property == "star4" );
            CHECK( rs[ 2 ].checked == 225 );
            CHECK( all_pass( rs ) );
            CHECK( all_pass( check_disjunction_iteration( op ) ) );
        }
    }

    TEST_CASE( "ignoring the new information breaks success" )
    {
        const auto s = space_pq();
        const auto op = RevisionOperator::from_function( s, []( const PointSet& g, const PointSet& ) { return g; } );
        const auto rs = check_agm( op );
        CHECK_FALSE( rs[ 2 ].pass() );
        // (G,D) with G not inside D: 225 pairs minus those with G within D
        std::size_t inside = 0;
        for ( const auto& g : all_nonempty_subsets( 4 ) )
            for ( const auto& d : all_nonempty_subsets( 4 ) )
                inside += g.is_subset_of( d ) ? 1 : 0;
        CHECK( rs[ 2 ].violations == 225 - inside );
    }

    TEST_CASE( "a non-IR distance breaks vacuity" )
    {
        // d(00,00) = 1 and d(00,01) = 1/2: revising {00} by !p skips 00 itself
        const auto s = space_pq();
        std::vector< Cost > t( 16, Cost( 2 ) );
        for ( std::size_t i = 0; i < 4; ++i )
            t[ i * 4 + i ] = Cost( 0 );
        t[ 0 ] = Cost( 1 );
        t[ 1 ] = Cost( 1, 2 );
        const PseudoDistance d( s->universe(), OrderMode::Real, t );
        CHECK_FALSE( check_property( d, DistanceProperty::IR ).pass() );
        const auto op = RevisionOperator::from_distance( d, s );
        const auto out = revise( op, theory( { "!p & !q" }, s ), theory( { "!p" }, s ) );
        CHECK( out.models() == ModelSet( s, PointSet( 4, { 1 } ) ) );
        CHECK( out.models().members() == oracle::apply( d, PointSet( 4, { 0 } ), PointSet( 4, { 0, 1 } ) ) );
        const auto rs = check_agm( op );
        CHECK_FALSE( rs[ 3 ].pass() );
        CHECK( rs[ 2 ].pass() );
    }

    TEST_CASE( "star loop holds for symmetric distances" )
    {
        std::mt19937_64 rng( 34 );
        const auto s = space_pq();
        for ( int i = 0; i < 3; ++i )
        {
            const auto op = RevisionOperator::from_distance( random_over( s, rng, true ), s );
            LoopOptions lo;
            lo.budget = 5'000'000;
            const auto v = check_star_loop( op, 3, lo );
            CHECK( v.pass );
            CHECK( v.exhaustive );
        }
    }

    TEST_CASE( "degenerate one-step chain" )
    {
        const auto s = space_pq();
        const auto op = oracle::sphere_operator( s, 3 );
        const SetOperator fn = [ &op ]( const PointSet& a, const PointSet& b ) { return op( a, b ); };
        for ( const auto& g : all_nonempty_subsets( 4 ) )
        {
            const std::vector< PointSet > chain{ g, g };
            CHECK_FALSE( is_loop_counterexample( fn, chain ) );
        }
    }

    TEST_CASE( "the wheel on three atoms breaks the star loop" )
    {
        auto p = WheelParams::for_arity( 1, 0 );
        const auto table = build_modified_operator( build_wheel_distance( p ), p );
        const auto s = ValuationSpace::classical( Signature( { "a", "b", "c" } ) );
        const auto op = from_operator_table( table, s );
        const auto pool = wheel_chain_pool( p );
        LoopOptions lo;
        lo.budget = 60'000'000;
        const auto v = check_star_loop( op, 2 * p.m, lo, &pool );
        REQUIRE_FALSE( v.pass );
        CHECK( v.chain.size() == 8 );
        const SetOperator fn = [ &op ]( const PointSet& a, const PointSet& b ) { return op( a, b ); };
        CHECK( oracle::loop_fails( fn, v.chain ) );
        // 000 and 011 are v1 and v4
        CHECK( ModelSet( s, v.chain[ 0 ] ).to_string() == "{000 011}" );
    }

    TEST_CASE( "faithful rankings satisfy AGM but not the iterated properties" )
    {
        const auto s = space_pq();
        const auto op = oracle::sphere_operator( s, 6 );
        CHECK( all_pass( check_agm( op ) ) );
        const auto dis = check_disjunction_iteration( op );
        REQUIRE( dis.size() == 2 );
        CHECK_FALSE( dis[ 0 ].pass() );
        CHECK_FALSE( dis[ 1 ].pass() );
        CHECK_FALSE( dis[ 0 ].witnesses.empty() );
    }

    TEST_CASE( "DP and CP" )
    {
        std::mt19937_64 rng( 35 );
        const auto s = space_pq();
        const auto op = RevisionOperator::from_distance( random_over( s, rng, false ), s );
        CHECK( all_pass( check_dp_cp( op ) ) );

        // Kleene with a constant: only the full set reaches h, and no set that
        // is exactly {h} is definable
        const auto k = std::make_shared< const ValuationSpace >( Signature( { "p" } ), parse_matrix( kleene_with_true ) );
        std::vector< Cost > t( 9, Cost( 2 ) );
        for ( std::size_t i = 0; i < 3; ++i )
            t[ i * 3 + i ] = Cost( 1 );
        t[ 2 * 3 + 1 ] = Cost( 1, 2 ); // d(1, h)
        const auto kop = RevisionOperator::from_distance( PseudoDistance( k->universe(), OrderMode::Real, t ), k );
        CHECK( kop( PointSet( 3, { 2 } ), PointSet::full( 3 ) ) == PointSet( 3, { 1 } ) );
        const auto rs = check_dp_cp( kop );
        REQUIRE( rs.size() == 2 );
        CHECK_FALSE( rs[ 0 ].pass() );
        CHECK( rs[ 1 ].pass() );
        REQUIRE_FALSE( rs[ 0 ].witnesses.empty() );
    }
}
