// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include "support/oracles.hpp"

#include <distrev/realize.hpp>
#include <distrev/revision.hpp>
#include <distrev/wheel.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace distrev;

namespace
{

using Clock = std::chrono::steady_clock;

struct Line
{
    bool pass = true;
    std::ostringstream detail;
    void require( bool ok, const std::string& what )
    {
        if ( !ok )
        {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

int failures = 0;

void criterion( const char* id, const char* title, const std::function< void( Line& ) >& body )
{
    Line line;
    const auto start = Clock::now();
    try
    {
        body( line );
    }
    catch ( const std::exception& e )
    {
        line.pass = false;
        line.detail << " [exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration< double >( Clock::now() - start ).count();
    if ( !line.pass )
        ++failures;
    char t[ 32 ];
    std::snprintf( t, sizeof t, "%.1fs", secs );
    std::cout << id << ' ' << ( line.pass ? "PASS" : "FAIL" ) << ' ' << title << ':' << line.detail.str() << " ("
              << t << ")" << std::endl;
}

double since( Clock::time_point t ) { return std::chrono::duration< double >( Clock::now() - t ).count(); }

const Claim& must( const ClaimReport& r, const std::string& name )
{
    const auto* c = r.find( name );
    if ( !c )
        throw std::runtime_error( "missing claim " + name );
    return *c;
}

std::string fact( const Claim& c, const std::string& key )
{
    for ( const auto& [ k, v ] : c.facts )
        if ( k == key )
            return v;
    return "";
}

void distance_claims( Line& line, const ClaimReport& r )
{
    for ( const char* name : { "patched-symmetric", "patched-ir", "patched-positive", "patched-tir" } )
        line.require( must( r, name ).pass, name );
}

} // namespace

int main()
{
    criterion( "AC1", "abstract wheel m=4", []( Line& line ) {
        const auto start = Clock::now();
        const auto p = WheelParams::for_arity( 1 );
        const auto g = build_wheel_gadget( p, random_probes( p, 0 ) );
        const auto r = verify_wheel_claims( g );
        const auto& unsat = must( r, "non-realizable" );
        line.require( unsat.pass && fact( unsat, "status" ) == "UNSAT", "fragment UNSAT" );
        const auto& eq = must( r, "patched-equals-distance" );
        line.require( eq.pass, "patched operator equals patched distance" );
        line.require( std::stoull( fact( eq, "checked" ) ) >= 1024ULL * 1024ULL, "all subset pairs swept" );
        distance_claims( line, r );
        const auto& loop = must( r, "loop-violation" );
        line.require( loop.pass && fact( loop, "source" ) == "search", "loop violation found by search" );
        line.require( !fact( loop, "k" ).empty() && std::stoi( fact( loop, "k" ) ) <= 8, "k <= 8" );
        const double secs = since( start );
        line.require( secs < 60, "under 60 s" );
        line.detail << " fragment " << fact( unsat, "status" ) << ", " << fact( eq, "checked" ) << " pairs with "
                    << fact( eq, "mismatches" ) << " mismatches, D' sym/ir/pos/tir ok, loop k=" << fact( loop, "k" );
    } );

    criterion( "AC2", "abstract wheel m=5,6", []( Line& line ) {
        for ( int n = 2; n <= 3; ++n )
        {
            const auto p = WheelParams::for_arity( n );
            const auto g = build_wheel_gadget( p, random_probes( p, 0 ) );
            WheelCheckOptions o;
            o.perturbations = false;
            const auto r = verify_wheel_claims( g, o );
            line.require( must( r, "non-realizable" ).pass, "fragment UNSAT" );
            const auto& eq = must( r, "patched-equals-distance" );
            line.require( eq.pass, "patched operator equals patched distance" );
            const auto checked = std::stoull( fact( eq, "checked" ) );
            if ( n == 2 )
                line.require( checked >= 1024ULL * 1024ULL, "all 1024^2 wheel pairs at m=5" );
            else
                line.require( checked >= 100'000ULL, "1e5 sampled pairs at m=6" );
            distance_claims( line, r );
            line.detail << " m=" << p.m << ": " << checked << " pairs, " << fact( eq, "mismatches" ) << " mismatches;";
        }
    } );

    criterion( "AC3", "Hamming wheel m=4", []( Line& line ) {
        const auto start = Clock::now();
        const auto g = build_hamming_wheel( 1, Matrix::classical(), random_probes( WheelParams::for_arity( 1, 3 ), 0 ) );
        const auto r = verify_hamming_claims( g );
        for ( const auto& c : r.claims )
            line.require( c.pass, c.name );
        const auto& eq = must( r, "patched-equals-distance" );
        const double secs = since( start );
        line.require( secs < 120, "under 120 s" );
        line.detail << " " << r.claims.size() << " claims, " << fact( eq, "checked" ) << " pairs, reduction checked "
                    << fact( must( r, "reduction" ), "checked" ) << " times";
    } );

    criterion( "AC4", "solver vs brute force", []( Line& line ) {
        std::mt19937_64 rng( 4 );
        std::size_t agree = 0, total = 0, sat = 0;
        for ( int i = 0; i < 400; ++i )
        {
            const std::size_t n = i % 2 ? 3 : 2;
            OperatorTable t( oracle::letters( n ) );
            std::bernoulli_distribution wild( 0.1 );
            const int want = 1 + i % 6;
            for ( int tries = 0; static_cast< int >( t.entries().size() ) < want && tries < 100; ++tries )
            {
                const auto v = oracle::random_set( n, rng );
                const auto w = oracle::random_set( n, rng );
                if ( t.find( v, w ) )
                    continue;
                auto x = wild( rng ) ? oracle::random_set( n, rng, false ) : ( oracle::random_set( n, rng ) & w );
                if ( x.empty() && !wild( rng ) )
                    x = w;
                t.add( v, w, x );
            }
            const auto s = realize( t, true );
            const auto b = brute_force_realizable( t, true );
            ++total;
            agree += s.status == b.status ? 1 : 0;
            if ( s.status == RealizeStatus::Sat )
            {
                ++sat;
                line.require( verify_witness( s.ranks, t, true ), "SAT witness reproduces table" );
            }
        }
        line.require( agree == total, "full agreement" );
        line.detail << " " << agree << "/" << total << " agree (" << sat << " SAT)";
    } );

    criterion( "AC5", "loop necessity on |U|=4", []( Line& line ) {
        std::mt19937_64 rng( 5 );
        const auto sets = all_nonempty_subsets( 4 );
        std::size_t exhaustive = 0, violations = 0;
        for ( int i = 0; i < 200; ++i )
        {
            const auto d = oracle::random_distance( 4, rng, true, false );
            const SetOperator fn = [ &d ]( const PointSet& a, const PointSet& b ) { return apply( d, a, b ); };
            LoopOptions lo;
            lo.k_max = 3;
            lo.budget = 1'000'000;
            lo.samples = 10'000;
            lo.seed = static_cast< std::uint64_t >( i );
            const auto v = search_loop( fn, sets, lo );
            violations += v.pass ? 0 : 1;
            exhaustive += v.exhaustive ? 1 : 0;
        }
        line.require( violations == 0, "no violations" );
        line.detail << " 200 distances, " << violations << " violations, " << exhaustive << " searched exhaustively";
    } );

    criterion( "AC6", "revision postulates on 2 atoms", []( Line& line ) {
        std::mt19937_64 rng( 6 );
        const auto s = ValuationSpace::classical( Signature( { "p", "q" } ) );
        std::size_t checked = 0;
        std::size_t disj = 0;
        for ( int i = 0; i < 20; ++i )
        {
            const auto raw = oracle::random_distance( 4, rng, false, true );
            const auto op = RevisionOperator::from_distance( PseudoDistance( s->universe(), OrderMode::Real, raw.table() ), s );
            for ( const auto& r : check_agm( op ) )
            {
                line.require( r.pass(), r.property );
                checked += r.checked;
            }
            for ( const auto& r : check_disjunction_iteration( op ) )
            {
                line.require( r.pass(), r.property );
                disj += r.checked;
            }
        }
        line.detail << " 20 distances, " << checked << " postulate instances, " << disj
                    << " iterated-disjunction instances, zero violations";
    } );

    criterion( "AC7", "star loop necessity on 2 atoms", []( Line& line ) {
        std::mt19937_64 rng( 7 );
        const auto s = ValuationSpace::classical( Signature( { "p", "q" } ) );
        const auto raw = oracle::random_distance( 4, rng, true, true );
        const PseudoDistance d( s->universe(), OrderMode::Real, raw.table() );
        line.require( check_property( d, DistanceProperty::Symmetric ).pass(), "symmetric" );
        line.require( check_property( d, DistanceProperty::IR ).pass(), "IR" );
        const auto op = RevisionOperator::from_distance( d, s );
        LoopOptions lo;
        lo.budget = 50'000'000;
        const auto v = check_star_loop( op, 3, lo );
        line.require( v.pass, "no violation" );
        line.require( v.exhaustive, "exhaustive" );
        line.detail << " k<=3 over 15 theories, " << v.evaluations << " evaluations, exhaustive";
    } );

    criterion( "AC8", "mutations detected", []( Line& line ) {
        // corrupted D' rung: the sandwich bound catches it, HIR does not
        {
            auto g = build_hamming_wheel( 1, Matrix::classical() );
            const auto& p = g.params;
            const auto i = g.r + 1;
            const auto bad = Cost::parse( "2.6" );
            g.patched_d = g.patched_d.with_cost( p.v( i ), p.w( i ), bad ).with_cost( p.w( i ), p.v( i ), bad );
            line.require( !check_sandwich( g ).pass(), "sandwich flags corrupted rung" );
            line.require( check_hir( g.patched_d, g.points ).pass(), "HIR unaffected" );
        }
        // dropped guard: the equality sweep fails with a witness
        {
            auto g = build_hamming_wheel( 1, Matrix::classical() );
            g.guarded = false;
            HammingCheckOptions o;
            o.samples = 10'000;
            const auto r = verify_hamming_claims( g, o );
            const auto& c = must( r, "patched-equals-distance" );
            line.require( !c.pass && !c.witnesses.empty(), "equality sweep flags dropped guard" );
        }
        // swapped witness ranks on the patched fragment
        {
            const auto p = WheelParams::for_arity( 1 );
            const auto g = build_wheel_gadget( p, {} );
            const SetOperator fn = [ &g ]( const PointSet& a, const PointSet& b ) { return g.patched.lookup( a, b ); };
            const auto frag = build_proof_fragment( fn, wheel_universe( p ), p );
            const auto v = realize( frag, false );
            line.require( v.status == RealizeStatus::Sat && verify_witness( v.ranks, frag, false ), "clean witness" );
            auto ranks = v.ranks;
            const PairIndex vars( p.points(), false );
            std::swap( ranks[ vars.var( p.v( 1 ), p.w( 1 ) ) ], ranks[ vars.var( p.v( 1 ), p.w( 2 ) ) ] );
            line.require( !verify_witness( ranks, frag, false ), "swapped ranks rejected" );
        }
        line.detail << " corrupted rung -> sandwich, dropped guard -> equality sweep, swapped ranks -> witness check";
    } );

    std::cout << ( failures == 0 ? "ALL PASS" : "SOME FAIL" ) << std::endl;
    return failures == 0 ? 0 : 1;
}
