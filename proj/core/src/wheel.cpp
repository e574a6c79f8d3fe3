#include "distrev/wheel.hpp"

#include "distrev/error.hpp"

#include <algorithm>
#include <random>

namespace distrev
{

WheelParams WheelParams::for_arity( int n, int extras )
{
    WheelParams p;
    p.n = n;
    p.m = n + 3;
    p.extras = extras;
    p.validate();
    return p;
}

void WheelParams::validate() const
{
    if ( m < 4 )
        throw InputError( "wheel needs m >= 4, got m = " + std::to_string( m ) );
    if ( extras < 0 )
        throw InputError( "negative number of extra points" );
    if ( points() > PointSet::max_universe )
        throw InputError( "wheel too large: " + std::to_string( points() ) + " points" );
}

PointSet WheelParams::wheel() const
{
    PointSet x( points() );
    for ( int i = 1; i <= m; ++i )
    {
        x.insert( v( i ) );
        x.insert( w( i ) );
    }
    return x;
}

PointSet WheelParams::v_rung_pair( int i ) const { return set( { v( i ), v( i % m + 1 ) } ); }
PointSet WheelParams::w_rung_pair( int i ) const { return set( { w( i ), w( i % m + 1 ) } ); }

Universe wheel_universe( const WheelParams& p )
{
    std::vector< std::string > labels;
    for ( int i = 1; i <= p.m; ++i )
        labels.push_back( "v" + std::to_string( i ) );
    for ( int i = 1; i <= p.m; ++i )
        labels.push_back( "w" + std::to_string( i ) );
    for ( int k = 1; k <= p.extras; ++k )
        labels.push_back( "x" + std::to_string( k ) );
    return Universe( std::move( labels ) );
}

WheelPair classify_pair( const WheelParams& p, std::size_t a, std::size_t b )
{
    if ( a == b )
        return WheelPair::Same;
    const auto side = static_cast< std::size_t >( p.m );
    if ( a >= 2 * side || b >= 2 * side )
        return WheelPair::OffWheel;
    if ( ( a < side ) == ( b < side ) )
        return WheelPair::SameSide;
    const auto i = static_cast< int >( a % side );
    const auto j = static_cast< int >( b % side );
    const int gap = std::abs( i - j );
    if ( gap == 0 )
        return WheelPair::Rung;
    if ( gap == 1 || gap == p.m - 1 )
        return WheelPair::Adjacent;
    return WheelPair::Chord;
}

PseudoDistance build_wheel_distance( const WheelParams& p )
{
    p.validate();
    const auto& c = p.costs;
    return PseudoDistance( wheel_universe( p ), OrderMode::Real, [ & ]( std::size_t a, std::size_t b ) {
        switch ( classify_pair( p, a, b ) )
        {
            case WheelPair::Same: return Cost{};
            case WheelPair::OffWheel: return c.off_wheel;
            case WheelPair::SameSide: return c.same_side;
            case WheelPair::Rung: return c.rung;
            case WheelPair::Adjacent: return c.adjacent;
            case WheelPair::Chord: return c.chord;
        }
        return Cost{};
    } );
}

OperatorTable build_modified_operator( const PseudoDistance& d, const WheelParams& p )
{
    OperatorTable op( d );
    const auto vs = p.set( { p.v( p.m ), p.v( 1 ) } );
    const auto ws = p.set( { p.w( p.m ), p.w( 1 ) } );
    op.add( vs, ws, p.set( { p.w( p.m ) } ) );
    op.add( ws, vs, p.set( { p.v( p.m ) } ) );
    return op;
}

int find_fresh_rung( std::span< const SetPair > pairs, const WheelParams& p )
{
    for ( int r = 1; r <= p.m - 1; ++r )
    {
        const auto vs = p.set( { p.v( r ), p.v( r + 1 ) } );
        const auto ws = p.set( { p.w( r ), p.w( r + 1 ) } );
        const bool used = std::any_of( pairs.begin(), pairs.end(), [ & ]( const SetPair& s ) {
            return ( s.first == vs && s.second == ws ) || ( s.first == ws && s.second == vs );
        } );
        if ( !used )
            return r;
    }
    throw std::invalid_argument( "every rung in [1, m-1] is taken by a probe pair" );
}

PatchedWheel build_patched( const OperatorTable& op, const PseudoDistance& d, const WheelParams& p, int r )
{
    if ( r < 1 || r > p.m - 1 )
        throw std::invalid_argument( "rung index out of range" );
    OperatorTable patched = op;
    const auto vs = p.set( { p.v( r ), p.v( r + 1 ) } );
    const auto ws = p.set( { p.w( r ), p.w( r + 1 ) } );
    patched.add( vs, ws, p.set( { p.w( r + 1 ) } ) );
    patched.add( ws, vs, p.set( { p.v( r + 1 ) } ) );

    auto dp = d;
    for ( int i = r + 1; i <= p.m; ++i )
    {
        dp = dp.with_cost( p.v( i ), p.w( i ), p.costs.patched_rung );
        dp = dp.with_cost( p.w( i ), p.v( i ), p.costs.patched_rung );
    }
    return { std::move( patched ), std::move( dp ) };
}

OperatorTable build_proof_fragment( const SetOperator& op, const Universe& u, const WheelParams& p,
                                    bool with_modified_entry )
{
    OperatorTable t( u );
    const auto put = [ & ]( const PointSet& v, const PointSet& w ) { t.add( v, w, op( v, w ) ); };
    for ( int i = 1; i < p.m; ++i )
    {
        const auto ws = p.w_rung_pair( i );
        put( p.v_rung_pair( i ), ws );
        put( p.set( { p.v( i ) } ), ws );
        put( p.set( { p.v( i + 1 ) } ), ws );
    }
    const auto wrap = p.w_rung_pair( p.m );
    put( p.set( { p.v( p.m ) } ), wrap );
    put( p.set( { p.v( 1 ) } ), wrap );
    if ( with_modified_entry )
        put( p.v_rung_pair( p.m ), wrap );
    return t;
}

std::vector< PointSet > wheel_chain_pool( const WheelParams& p )
{
    std::vector< PointSet > pool;
    for ( int i = 1; i <= p.m; ++i )
        pool.push_back( p.set( { p.v( i ) } ) );
    for ( int i = 1; i <= p.m; ++i )
        pool.push_back( p.set( { p.w( i ) } ) );
    for ( int i = 1; i <= p.m; ++i )
        pool.push_back( p.v_rung_pair( i ) );
    for ( int i = 1; i <= p.m; ++i )
        pool.push_back( p.w_rung_pair( i ) );
    return pool;
}

std::vector< PointSet > wheel_loop_chain( const WheelParams& p )
{
    std::vector< PointSet > chain{ p.v_rung_pair( p.m ) };
    for ( int i = 1; i <= p.m; ++i )
    {
        chain.push_back( p.set( { p.w( i ) } ) );
        if ( i < p.m )
            chain.push_back( p.v_rung_pair( i ) );
    }
    return chain;
}

WheelGadget build_wheel_gadget( const WheelParams& p, std::vector< SetPair > probes )
{
    p.validate();
    if ( probes.size() > static_cast< std::size_t >( p.m - 2 ) )
        throw InputError( "at most m-2 probe pairs" );
    auto d = build_wheel_distance( p );
    auto op = build_modified_operator( d, p );
    const int r = find_fresh_rung( probes, p );
    auto [ patched, pd ] = build_patched( op, d, p, r );
    return { p, std::move( d ), std::move( op ), std::move( probes ), r, std::move( patched ), std::move( pd ) };
}

std::vector< SetPair > random_probes( const WheelParams& p, std::uint64_t seed )
{
    std::mt19937_64 rng( seed );
    std::bernoulli_distribution coin( 0.5 );
    std::uniform_int_distribution< int > rung( 1, p.m - 1 );
    const auto x = p.wheel().members();
    std::vector< SetPair > probes;
    for ( int k = 0; k < p.n; ++k )
    {
        if ( coin( rng ) )
        {
            const int i = rung( rng );
            auto pair = SetPair{ p.set( { p.v( i ), p.v( i + 1 ) } ), p.set( { p.w( i ), p.w( i + 1 ) } ) };
            if ( coin( rng ) )
                std::swap( pair.first, pair.second );
            probes.push_back( pair );
            continue;
        }
        SetPair pair{ PointSet( p.points() ), PointSet( p.points() ) };
        for ( auto i : x )
        {
            if ( coin( rng ) )
                pair.first.insert( i );
            if ( coin( rng ) )
                pair.second.insert( i );
        }
        probes.push_back( pair );
    }
    return probes;
}

namespace
{

// Every subset of `base`, over base's universe.
std::vector< PointSet > subsets_of( const PointSet& base )
{
    const auto members = base.members();
    if ( members.size() > 20 )
        throw BoundExceeded( "too many points for exhaustive subsets" );
    std::vector< PointSet > out;
    out.reserve( std::size_t{ 1 } << members.size() );
    for ( std::uint64_t mask = 0; mask < ( std::uint64_t{ 1 } << members.size() ); ++mask )
    {
        PointSet s( base.universe_size() );
        for ( std::size_t k = 0; k < members.size(); ++k )
            if ( ( mask >> k ) & 1U )
                s.insert( members[ k ] );
        out.push_back( s );
    }
    return out;
}

struct Sweep
{
    Claim& claim;
    const Universe& u;
    std::size_t checked = 0;
    std::size_t mismatches = 0;

    void compare( const PointSet& v, const PointSet& w, const PointSet& got, const PointSet& want )
    {
        ++checked;
        if ( got == want )
            return;
        ++mismatches;
        claim.pass = false;
        if ( claim.witnesses.size() < default_witness_cap )
            claim.witnesses.push_back( { { u.format( v ), u.format( w ), u.format( got ), u.format( want ) },
                                         "operator result vs distance result" } );
    }
};

std::string format_chain( const Universe& u, std::span< const PointSet > chain )
{
    std::string out;
    for ( const auto& s : chain )
        out += ( out.empty() ? "" : " " ) + u.format( s );
    return out;
}

Claim fragment_claim( const OperatorTable& fragment, const SolveOptions& options )
{
    Claim c{ "non-realizable", false, {}, {} };
    const auto verdict = realize( fragment, false, options );
    c.pass = verdict.status == RealizeStatus::Unsat;
    c.fact( "entries", std::to_string( fragment.entries().size() ) );
    c.fact( "status", to_string( verdict.status ) );
    c.fact( "branches", std::to_string( verdict.branches ) );
    const auto& u = fragment.universe();
    for ( auto e : verdict.conflict )
    {
        const auto& en = fragment.entries()[ e ];
        c.witnesses.push_back( { { u.format( en.v ), u.format( en.w ), u.format( en.x ) }, "conflict entry" } );
    }
    return c;
}

// Dropping the modified entry must leave a satisfiable system whose witness
// puts every rung at one rank.
Claim relaxed_claim( const OperatorTable& relaxed, const WheelParams& p, const SolveOptions& options )
{
    Claim c{ "relaxed-fragment", false, {}, {} };
    const auto verdict = realize( relaxed, false, options );
    c.fact( "status", to_string( verdict.status ) );
    if ( verdict.status != RealizeStatus::Sat )
        return c;
    const bool reproduces = verify_witness( verdict.ranks, relaxed, false );
    const PairIndex vars( p.points(), false );
    bool equal = true;
    for ( int i = 1; i < p.m; ++i )
        if ( verdict.ranks[ vars.var( p.v( i ), p.w( i ) ) ] != verdict.ranks[ vars.var( p.v( i + 1 ), p.w( i + 1 ) ) ] )
        {
            equal = false;
            c.witnesses.push_back( { { "v" + std::to_string( i ), "w" + std::to_string( i ) }, "rung rank differs" } );
        }
    c.fact( "witness-reproduces", reproduces ? "true" : "false" );
    c.fact( "rung-ranks-equal", equal ? "true" : "false" );
    c.pass = reproduces && equal;
    return c;
}

// Sweeps |' against |_{D'}: every subset pair when the universe is small,
// otherwise every wheel subset pair when the wheel is small, plus seeded
// random pairs and the structured pool.
Claim equality_claim( const WheelGadget& g, const WheelCheckOptions& options, bool quick )
{
    const auto& p = g.params;
    const auto& u = g.d.universe();
    Claim c{ "patched-equals-distance", true, {}, {} };
    Sweep sweep{ c, u };
    const auto check = [ & ]( const PointSet& v, const PointSet& w ) {
        sweep.compare( v, w, g.patched.lookup( v, w ), apply( g.patched_d, v, w ) );
    };
    const auto sweep_all = [ & ]( const std::vector< PointSet >& sets ) {
        for ( const auto& v : sets )
            for ( const auto& w : sets )
                check( v, w );
    };

    std::string scope;
    if ( !quick && p.points() <= options.exhaustive_points )
    {
        sweep_all( subsets_of( PointSet::full( p.points() ) ) );
        scope = "all subset pairs";
    }
    else
    {
        if ( !quick && static_cast< std::size_t >( 2 * p.m ) <= options.exhaustive_points )
        {
            sweep_all( subsets_of( p.wheel() ) );
            scope = "all wheel subset pairs, ";
        }
        auto pool = wheel_chain_pool( p );
        pool.push_back( PointSet( p.points() ) );
        pool.push_back( p.wheel() );
        pool.push_back( PointSet::full( p.points() ) );
        sweep_all( pool );
        std::mt19937_64 rng( options.seed );
        std::bernoulli_distribution coin( 0.5 );
        const std::size_t samples = quick ? std::min< std::size_t >( options.samples, 2000 ) : options.samples;
        for ( std::size_t s = 0; s < samples; ++s )
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
            check( v, w );
        }
        scope += "pool pairs and " + std::to_string( samples ) + " sampled pairs";
    }
    c.fact( "scope", scope );
    c.fact( "checked", std::to_string( sweep.checked ) );
    c.fact( "mismatches", std::to_string( sweep.mismatches ) );
    return c;
}

void add_order_claims( ClaimReport& report, const WheelGadget& g, const WheelCheckOptions& options, bool quick )
{
    const auto& p = g.params;
    report.claims.push_back( fragment_claim( build_proof_fragment( g.op, g.d.universe(), p ), options.solve ) );
    report.claims.push_back(
            relaxed_claim( build_proof_fragment( g.op, g.d.universe(), p, false ), p, options.solve ) );
    report.claims.push_back( equality_claim( g, options, quick ) );
    for ( auto prop : { DistanceProperty::Symmetric, DistanceProperty::IR, DistanceProperty::Positive,
                        DistanceProperty::TIR } )
        report.claims.push_back( to_claim( std::string( "patched-" ) + to_string( prop ),
                                           check_property( g.patched_d, prop ) ) );
}

} // namespace

ClaimReport verify_wheel_claims( const WheelGadget& g, const WheelCheckOptions& options )
{
    const auto& p = g.params;
    const auto& u = g.d.universe();
    ClaimReport report;

    {
        Claim c = to_claim( "modified-inclusion", check_inclusion( g.op ) );
        report.claims.push_back( std::move( c ) );
    }
    add_order_claims( report, g, options, false );

    {
        Claim c{ "loop-violation", false, {}, {} };
        const SetOperator fn = [ & ]( const PointSet& a, const PointSet& b ) { return g.op.lookup( a, b ); };
        const auto walk = wheel_loop_chain( p );
        const bool walk_ok = is_loop_counterexample( fn, walk );
        c.fact( "walk-around", walk_ok ? "counterexample" : "holds" );
        std::vector< PointSet > chain;
        if ( p.m <= options.loop_search_max_m )
        {
            LoopOptions lo;
            lo.k_max = options.loop_k_max > 0 ? options.loop_k_max : 2 * p.m;
            lo.budget = options.loop_budget;
            lo.seed = options.seed;
            const auto pool = wheel_chain_pool( p );
            const auto family = SetFamily::all_nonempty( p.points() );
            const auto verdict = check_loop( g.op, family, lo, &pool );
            c.fact( "source", "search" );
            c.fact( "k-max", std::to_string( lo.k_max ) );
            c.fact( "pool", std::to_string( pool.size() ) );
            c.fact( "evaluations", std::to_string( verdict.evaluations ) );
            c.fact( "exhaustive", verdict.exhaustive ? "true" : "false" );
            if ( !verdict.pass )
                chain = verdict.chain;
        }
        else
        {
            c.fact( "source", "walk-around" );
            if ( walk_ok )
                chain = walk;
        }
        if ( !chain.empty() )
        {
            const bool rechecked = is_loop_counterexample( fn, chain );
            const int k = static_cast< int >( chain.size() ) - 1;
            c.fact( "k", std::to_string( k ) );
            c.fact( "chain", format_chain( u, chain ) );
            c.fact( "conclusion", u.format( fn( chain[ 0 ], chain.back() | chain[ 1 ] ) ) );
            c.fact( "rechecked", rechecked ? "true" : "false" );
            c.pass = rechecked && k <= 2 * p.m;
        }
        report.claims.push_back( std::move( c ) );
    }

    {
        Claim c{ "invisible-on-probes", true, {}, {} };
        c.fact( "r", std::to_string( g.r ) );
        c.fact( "probes", std::to_string( g.probes.size() ) );
        for ( const auto& [ v, w ] : g.probes )
        {
            const auto a = g.patched.lookup( v, w );
            const auto b = g.op.lookup( v, w );
            if ( a != b )
            {
                c.pass = false;
                c.witnesses.push_back( { { u.format( v ), u.format( w ), u.format( a ), u.format( b ) }, "" } );
            }
        }
        const std::vector< SetPair > rung{ { p.v_rung_pair( g.r ), p.w_rung_pair( g.r ) } };
        const bool fresh = std::none_of( g.probes.begin(), g.probes.end(), [ & ]( const SetPair& s ) {
            return ( s == rung[ 0 ] ) || ( s.first == rung[ 0 ].second && s.second == rung[ 0 ].first );
        } );
        c.fact( "fresh", fresh ? "true" : "false" );
        c.pass = c.pass && fresh;
        report.claims.push_back( std::move( c ) );
    }

    if ( options.perturbations )
    {
        struct Variant
        {
            const char* name;
            WheelCosts costs;
        };
        std::vector< Variant > variants;
        {
            WheelCosts c = p.costs;
            c.chord = c.rung;
            variants.push_back( { "chord-equals-rung", c } );
            c = p.costs;
            c.chord = Cost{ 3, 2 };
            variants.push_back( { "chord-above-rung", c } );
            c = p.costs;
            c.rung = c.adjacent;
            variants.push_back( { "rung-equals-adjacent", c } );
            c = p.costs;
            c.adjacent = Cost{ 6, 5 };
            c.chord = Cost{ 2 };
            variants.push_back( { "adjacent-below-rung", c } );
        }
        for ( const auto& variant : variants )
        {
            auto q = p;
            q.costs = variant.costs;
            const auto h = build_wheel_gadget( q, g.probes );
            ClaimReport sub;
            add_order_claims( sub, h, options, true );
            Claim note{ std::string( "perturbed " ) + variant.name, true, {}, {} };
            std::string still;
            std::string broken;
            for ( const auto& c : sub.claims )
                ( c.pass ? still : broken ) += ( ( c.pass ? still : broken ).empty() ? "" : " " ) + c.name;
            note.fact( "still-pass", still.empty() ? "none" : still );
            note.fact( "fail", broken.empty() ? "none" : broken );
            note.pass = broken.empty();
            report.notes.push_back( std::move( note ) );
        }
    }
    return report;
}

} // namespace distrev
