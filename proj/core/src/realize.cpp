#include "distrev/realize.hpp"

#include <algorithm>
#include <deque>

namespace distrev
{

PairIndex::PairIndex( std::size_t universe_size, bool symmetric )
        : _n{ universe_size }, _symmetric{ symmetric }
{
}

std::size_t PairIndex::var( std::size_t v, std::size_t w ) const
{
    if ( !_symmetric )
        return v * _n + w;
    if ( v > w )
        std::swap( v, w );
    // row v of the upper triangle starts after rows 0..v-1
    return v * _n - v * ( v - 1 ) / 2 + ( w - v );
}

std::pair< std::size_t, std::size_t > PairIndex::pair( std::size_t var ) const
{
    if ( !_symmetric )
        return { var / _n, var % _n };
    std::size_t v = 0;
    while ( var >= _n - v )
    {
        var -= _n - v;
        ++v;
    }
    return { v, v + var };
}

std::string PairIndex::label( std::size_t var, const Universe& u ) const
{
    const auto [ v, w ] = pair( var );
    return "(" + u.label( v ) + "," + u.label( w ) + ")";
}

const char* to_string( RealizeStatus s )
{
    switch ( s )
    {
        case RealizeStatus::Sat: return "SAT";
        case RealizeStatus::Unsat: return "UNSAT";
        case RealizeStatus::Unknown: return "UNKNOWN";
    }
    return "?";
}

std::vector< OperatorTable::Entry > table_entries( const OperatorTable& table )
{
    auto entries = table.entries();
    if ( !table.total() )
        return entries;
    const std::size_t n = table.universe().size();
    if ( n > max_materialized_universe )
        throw BoundExceeded( "distance-backed table over " + std::to_string( n ) +
                             " points is too large to materialize" );
    const auto subsets = all_nonempty_subsets( n );
    for ( const auto& v : subsets )
        for ( const auto& w : subsets )
            if ( !table.find( v, w ) )
                entries.push_back( { v, w, apply( *table.backing(), v, w ) } );
    return entries;
}

ConstraintSystem compile_constraints( const OperatorTable& table, bool symmetric )
{
    ConstraintSystem sys{ table.universe(), PairIndex( table.universe().size(), symmetric ), table_entries( table ), {} };
    const auto& u = sys.universe;
    for ( std::size_t e = 0; e < sys.entries.size(); ++e )
    {
        const auto& [ v, w, x ] = sys.entries[ e ];
        const auto where = [ & ] { return u.format( v ) + " | " + u.format( w ); };
        if ( !x.is_subset_of( w ) )
            throw Unrealizable( "result " + u.format( x ) + " is not within " + u.format( w ) + " for " + where(), e );
        if ( v.empty() || w.empty() )
        {
            if ( !x.empty() )
                throw Unrealizable( "nonempty result for an empty argument in " + where(), e );
            continue;
        }
        if ( x.empty() )
            throw Unrealizable( "empty result for nonempty arguments in " + where(), e );

        const auto vs = v.members();
        const auto ws = w.members();
        for ( auto b : ws )
        {
            if ( x.contains( b ) )
            {
                Clause c{ {}, e };
                for ( auto a : vs )
                {
                    Conjunction conj;
                    const auto lhs = sys.vars.var( a, b );
                    for ( auto a2 : vs )
                        for ( auto b2 : ws )
                            conj.push_back( { lhs, sys.vars.var( a2, b2 ), false } );
                    c.disjuncts.push_back( std::move( conj ) );
                }
                sys.clauses.push_back( std::move( c ) );
                continue;
            }
            for ( auto a : vs )
            {
                Clause c{ {}, e };
                const auto rhs = sys.vars.var( a, b );
                for ( auto a2 : vs )
                    for ( auto b2 : ws )
                    {
                        const auto lhs = sys.vars.var( a2, b2 );
                        if ( lhs != rhs )
                            c.disjuncts.push_back( { { lhs, rhs, true } } );
                    }
                if ( c.disjuncts.empty() )
                    throw Unrealizable( u.label( b ) + " cannot be excluded in " + where(), e );
                sys.clauses.push_back( std::move( c ) );
            }
        }
    }
    return sys;
}

namespace
{

struct BudgetOut
{
};

// Order graph: edge x -> y means d(x) <= d(y), strict edges d(x) < d(y). Kept
// free of cycles through strict edges at all times.
class Solver
{
public:
    Solver( const ConstraintSystem& sys, std::vector< bool > active, std::size_t budget )
            : _sys{ sys }, _active{ std::move( active ) }, _budget{ budget }, _adj( sys.vars.size() ),
              _satisfied( sys.clauses.size(), false ), _seen( sys.vars.size(), 0 )
    {
    }

    RealizeStatus run()
    {
        try
        {
            return search() ? RealizeStatus::Sat : RealizeStatus::Unsat;
        }
        catch ( const BudgetOut& )
        {
            return RealizeStatus::Unknown;
        }
    }

    [[nodiscard]] std::size_t branches() const { return _branches; }
    [[nodiscard]] std::vector< std::size_t > ranks() const;

private:
    // 0: no path x ->* y, 1: a path, 2: a path through a strict edge.
    int reach( std::size_t x, std::size_t y )
    {
        if ( x == y )
            return 1;
        ++_stamp;
        // bit 1: reached, bit 2: reached strictly
        _queue.clear();
        _queue.push_back( { x, false } );
        mark( x, false );
        int best = 0;
        while ( !_queue.empty() )
        {
            const auto [ node, strict ] = _queue.front();
            _queue.pop_front();
            for ( const auto& [ next, s ] : _adj[ node ] )
            {
                const bool ns = strict || s;
                if ( next == y )
                {
                    best = std::max( best, ns ? 2 : 1 );
                    if ( best == 2 )
                        return 2;
                }
                if ( mark( next, ns ) )
                    _queue.push_back( { next, ns } );
            }
        }
        return best;
    }

    // Records a visit; false when nothing new was learned about the node.
    bool mark( std::size_t node, bool strict )
    {
        auto& m = _seen[ node ];
        if ( ( m >> 2 ) != _stamp )
            m = _stamp << 2;
        const unsigned bit = strict ? 2U : 1U;
        if ( ( m & bit ) || ( !strict && ( m & 2U ) ) )
            return false;
        m |= bit;
        return true;
    }

    bool entailed( const OrderAtom& a ) { return reach( a.left, a.right ) >= ( a.strict ? 2 : 1 ); }
    bool conflicts( const OrderAtom& a ) { return reach( a.right, a.left ) >= ( a.strict ? 1 : 2 ); }

    bool entailed( const Conjunction& c )
    {
        return std::all_of( c.begin(), c.end(), [ this ]( const OrderAtom& a ) { return entailed( a ); } );
    }

    void push( const OrderAtom& a )
    {
        _adj[ a.left ].push_back( { a.right, a.strict } );
        _trail.push_back( a.left );
    }

    void undo( std::size_t mark )
    {
        while ( _trail.size() > mark )
        {
            _adj[ _trail.back() ].pop_back();
            _trail.pop_back();
        }
    }

    bool try_add( const Conjunction& c )
    {
        const auto m = _trail.size();
        for ( const auto& a : c )
        {
            if ( entailed( a ) )
                continue;
            if ( conflicts( a ) )
            {
                undo( m );
                return false;
            }
            push( a );
        }
        return true;
    }

    bool viable( const Conjunction& c )
    {
        const auto m = _trail.size();
        const bool ok = try_add( c );
        undo( m );
        return ok;
    }

    void satisfy( std::size_t i )
    {
        _satisfied[ i ] = true;
        _sat_trail.push_back( i );
    }

    void undo_satisfied( std::size_t mark )
    {
        while ( _sat_trail.size() > mark )
        {
            _satisfied[ _sat_trail.back() ] = false;
            _sat_trail.pop_back();
        }
    }

    // Unit propagation to a fixpoint. Returns false on a dead clause; otherwise
    // sets _pick to the open clause with the fewest viable disjuncts.
    bool propagate()
    {
        bool changed = true;
        while ( changed )
        {
            changed = false;
            _pick = npos;
            std::size_t fewest = npos;
            for ( std::size_t i = 0; i < _sys.clauses.size(); ++i )
            {
                const auto& clause = _sys.clauses[ i ];
                if ( _satisfied[ i ] || !_active[ clause.provenance ] )
                    continue;
                std::size_t count = 0;
                const Conjunction* last = nullptr;
                bool done = false;
                for ( const auto& d : clause.disjuncts )
                {
                    if ( entailed( d ) )
                    {
                        done = true;
                        break;
                    }
                    if ( viable( d ) )
                    {
                        ++count;
                        last = &d;
                    }
                }
                if ( done )
                {
                    satisfy( i );
                    continue;
                }
                if ( count == 0 )
                    return false;
                if ( count == 1 )
                {
                    try_add( *last );
                    satisfy( i );
                    changed = true;
                    continue;
                }
                if ( count < fewest )
                {
                    fewest = count;
                    _pick = i;
                }
            }
        }
        return true;
    }

    bool search()
    {
        const auto mark = _trail.size();
        const auto sat_mark = _sat_trail.size();
        if ( !propagate() )
        {
            undo( mark );
            undo_satisfied( sat_mark );
            return false;
        }
        if ( _pick == npos )
            return true;
        const auto pick = _pick;
        const auto inner = _trail.size();
        const auto inner_sat = _sat_trail.size();
        for ( const auto& d : _sys.clauses[ pick ].disjuncts )
        {
            if ( !viable( d ) )
                continue;
            if ( ++_branches > _budget )
                throw BudgetOut{};
            try_add( d );
            satisfy( pick );
            if ( search() )
                return true;
            undo( inner );
            undo_satisfied( inner_sat );
        }
        undo( mark );
        undo_satisfied( sat_mark );
        return false;
    }

    static constexpr std::size_t npos = static_cast< std::size_t >( -1 );

    const ConstraintSystem& _sys;
    std::vector< bool > _active;
    std::size_t _budget;
    std::size_t _branches = 0;
    std::vector< std::vector< std::pair< std::size_t, bool > > > _adj;
    std::vector< std::size_t > _trail;
    std::vector< bool > _satisfied;
    std::vector< std::size_t > _sat_trail;
    std::size_t _pick = npos;
    std::vector< std::size_t > _seen;
    std::size_t _stamp = 0;
    std::deque< std::pair< std::size_t, bool > > _queue;
};

// Ranks from the condensation: every strongly connected component shares a
// rank, and each component sits one above its highest predecessor.
std::vector< std::size_t > Solver::ranks() const
{
    const std::size_t n = _adj.size();
    std::vector< std::vector< std::size_t > > rev( n );
    for ( std::size_t x = 0; x < n; ++x )
        for ( const auto& [ y, s ] : _adj[ x ] )
            rev[ y ].push_back( x );

    // Kosaraju, iteratively.
    std::vector< std::size_t > order;
    std::vector< bool > visited( n, false );
    for ( std::size_t root = 0; root < n; ++root )
    {
        if ( visited[ root ] )
            continue;
        std::vector< std::pair< std::size_t, std::size_t > > stack{ { root, 0 } };
        visited[ root ] = true;
        while ( !stack.empty() )
        {
            auto& [ node, next ] = stack.back();
            if ( next < _adj[ node ].size() )
            {
                const auto y = _adj[ node ][ next++ ].first;
                if ( !visited[ y ] )
                {
                    visited[ y ] = true;
                    stack.push_back( { y, 0 } );
                }
                continue;
            }
            order.push_back( node );
            stack.pop_back();
        }
    }
    constexpr std::size_t none = static_cast< std::size_t >( -1 );
    std::vector< std::size_t > comp( n, none );
    std::size_t comps = 0;
    for ( auto it = order.rbegin(); it != order.rend(); ++it )
    {
        if ( comp[ *it ] != none )
            continue;
        std::vector< std::size_t > stack{ *it };
        comp[ *it ] = comps;
        while ( !stack.empty() )
        {
            const auto node = stack.back();
            stack.pop_back();
            for ( auto p : rev[ node ] )
                if ( comp[ p ] == none )
                {
                    comp[ p ] = comps;
                    stack.push_back( p );
                }
        }
        ++comps;
    }

    // Components come out in topological order.
    std::vector< std::vector< std::size_t > > members( comps );
    for ( std::size_t x = 0; x < n; ++x )
        members[ comp[ x ] ].push_back( x );
    std::vector< std::size_t > crank( comps, 0 );
    for ( std::size_t c = 0; c < comps; ++c )
        for ( auto x : members[ c ] )
            for ( const auto& [ y, s ] : _adj[ x ] )
                if ( comp[ y ] != c )
                    crank[ comp[ y ] ] = std::max( crank[ comp[ y ] ], crank[ c ] + 1 );

    std::vector< std::size_t > out( n );
    for ( std::size_t x = 0; x < n; ++x )
        out[ x ] = crank[ comp[ x ] ];
    return out;
}

} // namespace

RealizabilityVerdict solve( const ConstraintSystem& sys, const SolveOptions& options )
{
    RealizabilityVerdict verdict;
    std::vector< bool > active( sys.entries.size(), true );
    Solver solver( sys, active, options.budget );
    verdict.status = solver.run();
    verdict.branches = solver.branches();
    if ( verdict.status == RealizeStatus::Sat )
    {
        verdict.ranks = solver.ranks();
        return verdict;
    }
    if ( verdict.status == RealizeStatus::Unknown )
        return verdict;

    std::vector< bool > used( sys.entries.size(), false );
    for ( const auto& c : sys.clauses )
        used[ c.provenance ] = true;
    if ( sys.entries.size() <= options.max_core_entries )
    {
        // Deletion-based minimization: drop each entry whose removal keeps the
        // rest unsatisfiable.
        for ( std::size_t e = 0; e < used.size(); ++e )
        {
            if ( !used[ e ] )
                continue;
            used[ e ] = false;
            Solver trial( sys, used, options.budget );
            const auto status = trial.run();
            verdict.branches += trial.branches();
            if ( status != RealizeStatus::Unsat )
                used[ e ] = true;
        }
    }
    for ( std::size_t e = 0; e < used.size(); ++e )
        if ( used[ e ] )
            verdict.conflict.push_back( e );
    return verdict;
}

RealizabilityVerdict realize( const OperatorTable& table, bool symmetric, const SolveOptions& options )
{
    try
    {
        return solve( compile_constraints( table, symmetric ), options );
    }
    catch ( const Unrealizable& u )
    {
        RealizabilityVerdict verdict;
        verdict.status = RealizeStatus::Unsat;
        verdict.conflict = { u.entry() };
        return verdict;
    }
}

PseudoDistance witness_distance( const std::vector< std::size_t >& ranks, const Universe& universe, bool symmetric )
{
    const PairIndex vars( universe.size(), symmetric );
    if ( ranks.size() != vars.size() )
        throw std::invalid_argument( "witness has " + std::to_string( ranks.size() ) + " ranks, expected " +
                                     std::to_string( vars.size() ) );
    return PseudoDistance( universe, OrderMode::Real, [ & ]( std::size_t v, std::size_t w ) {
        return Cost( static_cast< std::int64_t >( ranks[ vars.var( v, w ) ] ) );
    } );
}

namespace
{

bool reproduces( const PseudoDistance& d, const std::vector< OperatorTable::Entry >& entries )
{
    return std::all_of( entries.begin(), entries.end(),
                        [ & ]( const OperatorTable::Entry& e ) { return apply( d, e.v, e.w ) == e.x; } );
}

} // namespace

bool verify_witness( const std::vector< std::size_t >& ranks, const OperatorTable& table, bool symmetric )
{
    if ( ranks.size() != PairIndex( table.universe().size(), symmetric ).size() )
        return false;
    return reproduces( witness_distance( ranks, table.universe(), symmetric ), table_entries( table ) );
}

RealizabilityVerdict brute_force_realizable( const OperatorTable& table, bool symmetric )
{
    const PairIndex vars( table.universe().size(), symmetric );
    const std::size_t n = vars.size();
    if ( n > max_brute_force_vars )
        throw BoundExceeded( std::to_string( n ) + " pair variables exceed the brute-force bound of " +
                             std::to_string( max_brute_force_vars ) );
    const auto entries = table_entries( table );
    RealizabilityVerdict verdict;
    verdict.status = RealizeStatus::Unsat;

    // Rank vectors over [0, n) whose image is an initial segment: exactly the
    // weak orders.
    std::vector< std::size_t > ranks( n, 0 );
    while ( true )
    {
        std::vector< bool > hit( n, false );
        for ( auto r : ranks )
            hit[ r ] = true;
        const auto top = static_cast< std::size_t >( std::find( hit.begin(), hit.end(), false ) - hit.begin() );
        if ( std::none_of( hit.begin() + static_cast< std::ptrdiff_t >( top ), hit.end(), []( bool b ) { return b; } ) )
        {
            ++verdict.branches;
            if ( reproduces( witness_distance( ranks, table.universe(), symmetric ), entries ) )
            {
                verdict.status = RealizeStatus::Sat;
                verdict.ranks = ranks;
                return verdict;
            }
        }
        std::size_t i = 0;
        while ( i < n && ++ranks[ i ] == n )
            ranks[ i++ ] = 0;
        if ( i == n )
            break;
    }
    return verdict;
}

} // namespace distrev
