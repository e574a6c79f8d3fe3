#include "support/oracles.hpp"

#include <distrev/error.hpp>
#include <distrev/io.hpp>
#include <distrev/report.hpp>

#include <doctest.h>

using namespace distrev;

TEST_SUITE( "io" )
{
    TEST_CASE( "distance files" )
    {
        const auto f = parse_distance( R"(# two points
points: a b
order: liberal
row: 0 1.4
row: inf 0
)" );
        CHECK( f.distance.mode() == OrderMode::Liberal );
        CHECK( f.distance( 0, 1 ) == Cost( 7, 5 ) );
        CHECK( f.distance( 1, 0 ).is_infinite() );
        const auto again = parse_distance( format_distance( f.distance ) );
        CHECK( again.distance == f.distance );

        CHECK_THROWS_AS( (void)parse_distance( "points: a b\norder: real\nrow: 0 1\n" ), InputError );
        CHECK_THROWS_AS( (void)parse_distance( "points: a b\norder: real\nrow: 0 inf\nrow: 1 0\n" ), ModeMismatch );
        CHECK_THROWS_AS( (void)parse_distance( "points: a b\norder: sideways\nrow: 0 1\nrow: 1 0\n" ), InputError );
    }

    TEST_CASE( "valuations map points onto a space" )
    {
        const auto f = parse_distance( R"(points: x y z w
order: real
signature: p q
valuation: x 11
valuation: y 10
valuation: z 01
valuation: w 00
row: 0 1 1 2
row: 1 0 2 1
row: 1 2 0 1
row: 2 1 1 0
)" );
        REQUIRE( f.valuations.size() == 4 );
        const ValuationSpace s( *f.signature, Matrix::classical() );
        const auto d = distance_over_space( f, s );
        // 00 is w, 11 is x
        CHECK( d( 0, 3 ) == Cost( 2 ) );
        CHECK( d( 0, 1 ) == Cost( 1 ) );
        CHECK( d == hamming_pseudo_distance( s ) );
    }

    TEST_CASE( "operator files" )
    {
        const auto op = parse_operator( R"(points: a b c
entry: {a} {b c} {b}
entry: {a b} {c} {c}
)" );
        CHECK( op.entries().size() == 2 );
        CHECK( op.lookup( PointSet( 3, { 0 } ), PointSet( 3, { 1, 2 } ) ) == PointSet( 3, { 1 } ) );
        const auto back = parse_operator( format_operator( op ) );
        CHECK( back.entries().size() == 2 );
        CHECK_THROWS_AS( (void)parse_operator( "points: a b\nentry: {a} {q} {b}\n" ), InputError );
        CHECK_THROWS_AS( (void)parse_operator( "points: a b\nentry: {a} {b}\n" ), InputError );
    }

    TEST_CASE( "families, theories, sets" )
    {
        const auto u = oracle::letters( 3 );
        const auto fam = parse_family( "{a}\n{a b}\n# note\n{}\n", u );
        CHECK( fam.size() == 3 );
        CHECK_THROWS_AS( fam.validate_loop_closure(), FamilyError );
        CHECK( parse_point_set( "{c a}", u ) == PointSet( 3, { 0, 2 } ) );
        CHECK( parse_theory_lines( "p & q\n\n# c\n!r\n" ) == std::vector< std::string >{ "p & q", "!r" } );
    }

    TEST_CASE( "matrix files" )
    {
        CHECK( parse_matrix( "values: 0 1\ndesignated: 1\nnot: 1 0\nand: 0 0\nand: 0 1\n" ).has( Connective::And ) );
        CHECK_THROWS_AS( (void)parse_matrix( "values: 0 1\ndesignated: 2\n" ), InputError );
        CHECK_THROWS_AS( (void)parse_matrix( "values: 0 1\nand: 0 0\n" ), InputError );
    }

    TEST_CASE( "report rendering" )
    {
        Report r;
        r.put( "command", "check" );
        r.put( "count", std::size_t{ 3 } );
        auto& s = r.section( "claims" );
        s.put( "ok", true );
        s.item( "seen", "first" );
        s.item( "seen", "second" );
        const auto text = r.render();
        CHECK( text.find( "command: check\n" ) != std::string::npos );
        CHECK( text.find( "count: 3\n" ) != std::string::npos );
        CHECK( text.find( "claims:\n  ok: true\n" ) != std::string::npos );
        CHECK( text.find( "  seen:\n    - first\n    - second\n" ) != std::string::npos );
        CHECK( hex64( fnv1a64( "" ) ) == "cbf29ce484222325" );
        CHECK( hex64( fnv1a64( "a" ) ) == "af63dc4c8601ec8c" );
    }
}
