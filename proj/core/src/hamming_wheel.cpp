#include "distrev/error.hpp"
#include "distrev/wheel.hpp"

#include <algorithm>
#include <random>

namespace distrev
{

namespace
{

Valuation unit( std::size_t atoms, TruthValue zero, TruthValue one, std::initializer_list< std::size_t > ones )
{
    Valuation v{ std::vector< TruthValue >( atoms, zero ) };
    for ( auto i : ones )
        v.values.at( i ) = one;
    return v;
}

} // namespace

bool HammingWheelGadget::guard( const PointSet& v, const PointSet& w ) const
{
    return !guarded || literal_guard( v, w );
}

bool HammingWheelGadget::literal_guard( const PointSet& v, const PointSet& w ) const
{
    const auto x = params.wheel();
    bool ok = true;
    v.for_each( [ & ]( std::size_t a ) {
        if ( !ok )
            return;
        w.for_each( [ & ]( std::size_t b ) {
            if ( ok && !( x.contains( a ) && x.contains( b ) ) && h( a, b ) < 3 )
                ok = false;
        } );
    } );
    return ok;
}

PointSet HammingWheelGadget::modified( const PointSet& v, const PointSet& w ) const
{
    const auto& p = params;
    if ( guard( v, w ) )
    {
        const auto x = p.wheel();
        const auto vx = v & x;
        const auto wx = w & x;
        const auto vs = p.v_rung_pair( p.m );
        const auto ws = p.w_rung_pair( p.m );
        if ( vx == vs && wx == ws )
            return p.set( { p.w( p.m ) } );
        if ( vx == ws && wx == vs )
            return p.set( { p.v( p.m ) } );
    }
    return apply( d, v, w );
}

PointSet HammingWheelGadget::patched( const PointSet& v, const PointSet& w ) const
{
    const auto& p = params;
    if ( guard( v, w ) )
    {
        const auto x = p.wheel();
        const auto vx = v & x;
        const auto wx = w & x;
        const auto vs = p.v_rung_pair( r );
        const auto ws = p.w_rung_pair( r );
        if ( vx == vs && wx == ws )
            return p.set( { p.w( r + 1 ) } );
        if ( vx == ws && wx == vs )
            return p.set( { p.v( r + 1 ) } );
    }
    return modified( v, w );
}

SetOperator HammingWheelGadget::modified_op() const
{
    return [ this ]( const PointSet& v, const PointSet& w ) { return modified( v, w ); };
}

SetOperator HammingWheelGadget::patched_op() const
{
    return [ this ]( const PointSet& v, const PointSet& w ) { return patched( v, w ); };
}

HammingWheelGadget build_hamming_wheel( int n, const Matrix& matrix, std::vector< SetPair > probes,
                                        std::optional< std::vector< Valuation > > extras )
{
    HammingWheelGadget g;
    const int extra_count = extras ? static_cast< int >( extras->size() ) : 3;
    g.params = WheelParams::for_arity( n, extra_count );
    auto& p = g.params;
    const auto m = static_cast< std::size_t >( p.m );
    if ( probes.size() > m - 2 )
        throw InputError( "at most m-2 probe pairs" );

    std::vector< std::string > atoms;
    for ( std::size_t i = 1; i <= m; ++i )
        atoms.push_back( "p" + std::to_string( i ) );
    for ( std::size_t i = 1; i <= m; ++i )
        atoms.push_back( "q" + std::to_string( i ) );
    g.signature = Signature( atoms );
    g.matrix = std::make_shared< const Matrix >( matrix );

    // zero: first undesignated value, one: first designated value
    TruthValue zero = 0;
    TruthValue one = 0;
    bool have_zero = false;
    bool have_one = false;
    for ( std::size_t t = 0; t < matrix.size(); ++t )
    {
        const auto tv = static_cast< TruthValue >( t );
        if ( !matrix.is_designated( tv ) && !have_zero )
        {
            zero = tv;
            have_zero = true;
        }
        if ( matrix.is_designated( tv ) && !have_one )
        {
            one = tv;
            have_one = true;
        }
    }
    if ( !have_zero || !have_one )
        throw InputError( "matrix needs a designated and an undesignated value" );
    g.zero = zero;
    g.one = one;

    const std::size_t atoms_n = 2 * m;
    for ( std::size_t i = 0; i < m; ++i )
        g.points.push_back( unit( atoms_n, zero, one, { i } ) );
    for ( std::size_t i = 0; i < m; ++i )
        g.points.push_back( unit( atoms_n, zero, one, { m + i } ) );
    if ( extras )
    {
        for ( const auto& e : *extras )
        {
            if ( e.values.size() != atoms_n )
                throw InputError( "extra valuation over the wrong signature" );
            for ( auto t : e.values )
                if ( t >= matrix.size() )
                    throw InputError( "extra valuation uses an unknown truth value" );
            g.points.push_back( e );
        }
    }
    else
    {
        g.points.push_back( unit( atoms_n, zero, one, {} ) );
        g.points.push_back( unit( atoms_n, zero, one, { 0, 1, m } ) );
        g.points.push_back( unit( atoms_n, zero, one, { 0, 1, 2, 3 } ) );
    }
    for ( std::size_t a = 0; a < g.points.size(); ++a )
        for ( std::size_t b = a + 1; b < g.points.size(); ++b )
            if ( g.points[ a ] == g.points[ b ] )
                throw InputError( "extra valuation coincides with another point" );

    g.universe = wheel_universe( p );
    const std::size_t np = g.points.size();
    g._h.resize( np * np );
    for ( std::size_t a = 0; a < np; ++a )
        for ( std::size_t b = 0; b < np; ++b )
            g._h[ a * np + b ] = hamming_distance( g.points[ a ], g.points[ b ] );

    g.d = PseudoDistance( g.universe, OrderMode::Liberal, [ & ]( std::size_t a, std::size_t b ) {
        const auto hh = static_cast< std::int64_t >( g.h( a, b ) );
        switch ( classify_pair( p, a, b ) )
        {
            case WheelPair::Same: return Cost{};
            case WheelPair::OffWheel: return hh == 1 ? Cost{ 7, 5 } : Cost{ hh };
            case WheelPair::SameSide: return Cost{ 21, 10 };
            case WheelPair::Rung: return Cost{ 12, 5 };
            case WheelPair::Adjacent: return Cost{ 5, 2 };
            case WheelPair::Chord: return Cost{ 11, 5 };
        }
        return Cost{};
    } );

    // freshness only looks at the wheel parts of the probes
    std::vector< SetPair > cut;
    const auto x = p.wheel();
    for ( const auto& [ v, w ] : probes )
        cut.push_back( { v & x, w & x } );
    g.probes = std::move( probes );
    g.r = find_fresh_rung( cut, p );

    g.patched_d = g.d;
    for ( int i = g.r + 1; i <= p.m; ++i )
    {
        g.patched_d = g.patched_d.with_cost( p.v( i ), p.w( i ), Cost{ 23, 10 } );
        g.patched_d = g.patched_d.with_cost( p.w( i ), p.v( i ), Cost{ 23, 10 } );
    }
    return g;
}

OperatorTable hamming_operator_table( const HammingWheelGadget& g, bool patched )
{
    const auto& p = g.params;
    OperatorTable t( g.d );
    PointSet extras( p.points() );
    for ( int k = 1; k <= p.extras; ++k )
        extras.insert( p.extra( k ) );
    const auto members = extras.members();
    std::vector< PointSet > parts;
    for ( std::uint64_t mask = 0; mask < ( std::uint64_t{ 1 } << members.size() ); ++mask )
    {
        PointSet s( p.points() );
        for ( std::size_t k = 0; k < members.size(); ++k )
            if ( ( mask >> k ) & 1U )
                s.insert( members[ k ] );
        parts.push_back( s );
    }
    std::vector< SetPair > cores{ { p.v_rung_pair( p.m ), p.w_rung_pair( p.m ) },
                                  { p.w_rung_pair( p.m ), p.v_rung_pair( p.m ) } };
    if ( patched )
    {
        cores.push_back( { p.v_rung_pair( g.r ), p.w_rung_pair( g.r ) } );
        cores.push_back( { p.w_rung_pair( g.r ), p.v_rung_pair( g.r ) } );
    }
    for ( const auto& [ cv, cw ] : cores )
        for ( const auto& e : parts )
            for ( const auto& f : parts )
            {
                const auto v = cv | e;
                const auto w = cw | f;
                if ( !g.guard( v, w ) )
                    continue;
                t.add( v, w, patched ? g.patched( v, w ) : g.modified( v, w ) );
            }
    return t;
}

PropertyReport check_sandwich( const HammingWheelGadget& g )
{
    PropertyReport report;
    report.property = "sandwich";
    const auto n = g.points.size();
    const auto leq = [ & ]( const Cost& a, const Cost& b ) {
        return compare_costs( a, b, OrderMode::Liberal ) != Ordering::Greater;
    };
    for ( std::size_t a = 0; a < n; ++a )
        for ( std::size_t b = 0; b < n; ++b )
        {
            ++report.checked;
            const auto hh = static_cast< std::int64_t >( g.h( a, b ) );
            const Cost lo{ hh };
            const Cost hi{ 2 * hh + 1, 2 };
            const auto& dp = g.patched_d( a, b );
            const auto& d = g.d( a, b );
            if ( !( leq( lo, dp ) && leq( dp, d ) && leq( d, hi ) ) )
                report.record( { { g.universe.label( a ), g.universe.label( b ), std::to_string( hh ),
                                   dp.to_string(), d.to_string() },
                                 "need |h| <= d' <= d <= |h| + 0.5" } );
        }
    return report;
}

ClaimReport verify_hamming_claims( const HammingWheelGadget& g, const HammingCheckOptions& options )
{
    const auto& p = g.params;
    const auto& u = g.universe;
    ClaimReport report;

    {
        const auto fragment = build_proof_fragment( g.modified_op(), u, p );
        const auto verdict = realize( fragment, false, options.solve );
        Claim c{ "non-realizable", verdict.status == RealizeStatus::Unsat, {}, {} };
        c.fact( "entries", std::to_string( fragment.entries().size() ) );
        c.fact( "status", to_string( verdict.status ) );
        c.fact( "branches", std::to_string( verdict.branches ) );
        report.claims.push_back( std::move( c ) );
    }

    // One pass over every subset pair of the pool for (4) and the reduction.
    Claim eq{ "patched-equals-distance", true, {}, {} };
    Claim red{ "reduction", true, {}, {} };
    std::size_t eq_checked = 0, eq_bad = 0, x_pairs = 0, red_checked = 0, red_bad = 0;
    const auto x = p.wheel();
    const auto visit = [ & ]( const PointSet& v, const PointSet& w ) {
            const auto got = g.patched( v, w );
            const auto want = apply( g.patched_d, v, w );
            ++eq_checked;
            if ( v.is_subset_of( x ) && w.is_subset_of( x ) )
                ++x_pairs;
            if ( got != want )
            {
                ++eq_bad;
                eq.pass = false;
                if ( eq.witnesses.size() < default_witness_cap )
                    eq.witnesses.push_back( { { u.format( v ), u.format( w ), u.format( got ), u.format( want ) },
                                              "|' vs |_D'" } );
            }
            const auto vx = v & x;
            const auto wx = w & x;
            // the reduction is stated for the literal guard, whatever the operator does
            if ( vx.empty() || wx.empty() || !g.literal_guard( v, w ) )
                return;
            for ( const auto* dist : { &g.d, &g.patched_d } )
            {
                ++red_checked;
                const auto full = apply( *dist, v, w );
                const auto cut = apply( *dist, vx, wx );
                if ( full != cut )
                {
                    ++red_bad;
                    red.pass = false;
                    if ( red.witnesses.size() < default_witness_cap )
                        red.witnesses.push_back( { { u.format( v ), u.format( w ), u.format( full ), u.format( cut ) },
                                                   dist == &g.d ? "D" : "D'" } );
                }
            }
    };
    std::string scope;
    if ( p.points() <= options.exhaustive_points )
    {
        std::vector< PointSet > subsets;
        for ( std::uint64_t mask = 0; mask < ( std::uint64_t{ 1 } << p.points() ); ++mask )
            subsets.push_back( PointSet::from_mask( p.points(), mask ) );
        for ( const auto& v : subsets )
            for ( const auto& w : subsets )
                visit( v, w );
        scope = "all subset pairs";
    }
    else
    {
        const auto members = x.members();
        if ( members.size() <= options.exhaustive_points + 1 )
        {
            std::vector< PointSet > subsets;
            for ( std::uint64_t mask = 0; mask < ( std::uint64_t{ 1 } << members.size() ); ++mask )
                subsets.push_back( PointSet::from_mask( p.points(), mask ) );
            for ( const auto& v : subsets )
                for ( const auto& w : subsets )
                    visit( v, w );
            scope = "all wheel subset pairs, ";
        }
        std::mt19937_64 rng( options.seed );
        std::bernoulli_distribution coin( 0.5 );
        for ( std::size_t k = 0; k < options.samples; ++k )
        {
            PointSet v( p.points() );
            PointSet w( p.points() );
            for ( std::size_t i = 0; i < p.points(); ++i )
            {
                if ( coin( rng ) )
                    v.insert( i );
                if ( coin( rng ) )
                    w.insert( i );
            }
            visit( v, w );
        }
        scope += std::to_string( options.samples ) + " sampled pairs";
    }
    eq.fact( "scope", scope );
    eq.fact( "checked", std::to_string( eq_checked ) );
    eq.fact( "wheel-pairs", std::to_string( x_pairs ) );
    eq.fact( "mismatches", std::to_string( eq_bad ) );
    red.fact( "checked", std::to_string( red_checked ) );
    red.fact( "mismatches", std::to_string( red_bad ) );
    report.claims.push_back( std::move( eq ) );
    report.claims.push_back( std::move( red ) );

    report.claims.push_back( to_claim( "patched-hir", check_hir( g.patched_d, g.points ) ) );
    report.claims.push_back( to_claim( "patched-liberal-tir", check_property( g.patched_d, DistanceProperty::LiberalTIR ) ) );
    for ( auto prop : { DistanceProperty::Symmetric, DistanceProperty::LiberalIR, DistanceProperty::LiberalPositive } )
        report.claims.push_back( to_claim( std::string( "patched-" ) + to_string( prop ), check_property( g.patched_d, prop ) ) );
    report.claims.push_back( to_claim( "sandwich", check_sandwich( g ) ) );

    {
        Claim c{ "invisible-on-probes", true, {}, {} };
        c.fact( "r", std::to_string( g.r ) );
        for ( const auto& [ v, w ] : g.probes )
        {
            const auto a = g.patched( v, w );
            const auto b = g.modified( v, w );
            if ( a != b )
            {
                c.pass = false;
                c.witnesses.push_back( { { u.format( v ), u.format( w ), u.format( a ), u.format( b ) }, "" } );
            }
        }
        report.claims.push_back( std::move( c ) );
    }
    return report;
}

} // namespace distrev
