#include "distrev/report.hpp"

#include <cstdio>

namespace distrev
{

Report& Report::put( std::string key, std::string value )
{
    _fields.push_back( { std::move( key ), std::move( value ), nullptr, {}, false } );
    return *this;
}

Report& Report::section( std::string key )
{
    auto node = std::make_shared< Report >();
    _fields.push_back( { std::move( key ), {}, node, {}, false } );
    return *node;
}

Report::Field& Report::list( const std::string& key )
{
    if ( _fields.empty() || !_fields.back().is_list || _fields.back().key != key )
        _fields.push_back( { key, {}, nullptr, {}, true } );
    return _fields.back();
}

Report& Report::item( std::string key, std::string value )
{
    list( key ).items.push_back( { std::move( value ), nullptr } );
    return *this;
}

Report& Report::item_section( std::string key )
{
    auto node = std::make_shared< Report >();
    list( key ).items.push_back( { {}, node } );
    return *node;
}

void Report::render( std::string& out, std::size_t indent ) const
{
    const std::string pad( indent, ' ' );
    for ( const auto& f : _fields )
    {
        if ( f.node )
        {
            out += pad + f.key + ":\n";
            f.node->render( out, indent + 2 );
            continue;
        }
        if ( !f.is_list )
        {
            out += pad + f.key + ": " + f.value + "\n";
            continue;
        }
        out += pad + f.key + ":\n";
        for ( const auto& it : f.items )
        {
            if ( !it.node )
            {
                out += pad + "  - " + it.text + "\n";
                continue;
            }
            // first field on the dash line, the rest aligned under it
            std::string body;
            it.node->render( body, indent + 4 );
            if ( body.size() >= indent + 4 )
                body.replace( indent + 2, 2, "- " );
            out += body;
        }
    }
}

std::string Report::render() const
{
    std::string out;
    render( out, 0 );
    return out;
}

std::uint64_t fnv1a64( std::string_view data )
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for ( unsigned char c : data )
    {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64( std::uint64_t v )
{
    char buf[ 17 ];
    std::snprintf( buf, sizeof buf, "%016llx", static_cast< unsigned long long >( v ) );
    return buf;
}

namespace
{

void add_witnesses( Report& r, const std::vector< Witness >& ws )
{
    for ( const auto& w : ws )
    {
        std::string line;
        for ( const auto& i : w.items )
            line += ( line.empty() ? "" : " ; " ) + i;
        if ( !w.detail.empty() )
            line += ( line.empty() ? "" : " ; " ) + w.detail;
        r.item( "witnesses", line );
    }
}

} // namespace

void add_property( Report& r, const PropertyReport& p )
{
    auto& s = r.section( p.property );
    s.put( "result", p.pass() ? "pass" : "fail" );
    s.put( "checked", p.checked );
    s.put( "violations", p.violations );
    add_witnesses( s, p.witnesses );
}

void add_claims( Report& r, const ClaimReport& claims )
{
    auto& cs = r.section( "claims" );
    for ( const auto& c : claims.claims )
    {
        auto& s = cs.section( c.name );
        s.put( "result", c.pass ? "pass" : "fail" );
        for ( const auto& [ k, v ] : c.facts )
            s.put( k, v );
        add_witnesses( s, c.witnesses );
    }
    if ( claims.notes.empty() )
        return;
    auto& ns = r.section( "notes" );
    for ( const auto& c : claims.notes )
    {
        auto& s = ns.section( c.name );
        for ( const auto& [ k, v ] : c.facts )
            s.put( k, v );
    }
}

void add_loop( Report& r, const LoopVerdict& v, const Universe& u )
{
    r.put( "result", v.pass ? "pass" : "fail" );
    r.put( "exhaustive", v.exhaustive );
    r.put( "k-reached", std::to_string( v.k_reached ) );
    r.put( "evaluations", v.evaluations );
    if ( v.pass )
        return;
    r.put( "k", v.chain.size() - 1 );
    for ( const auto& s : v.chain )
        r.item( "chain", u.format( s ) );
    r.put( "conclusion", u.format( v.conclusion ) );
}

void add_verdict( Report& r, const RealizabilityVerdict& v, const ConstraintSystem* sys, const Universe& u,
                  bool symmetric )
{
    r.put( "status", to_string( v.status ) );
    r.put( "symmetric", symmetric );
    r.put( "branches", v.branches );
    if ( v.status == RealizeStatus::Sat )
    {
        const PairIndex vars( u.size(), symmetric );
        for ( std::size_t i = 0; i < v.ranks.size(); ++i )
            r.item( "ranks", vars.label( i, u ) + " " + std::to_string( v.ranks[ i ] ) );
    }
    if ( v.status == RealizeStatus::Unsat && sys )
        for ( auto e : v.conflict )
        {
            const auto& en = sys->entries.at( e );
            r.item( "conflict", u.format( en.v ) + " | " + u.format( en.w ) + " = " + u.format( en.x ) );
        }
    else if ( v.status == RealizeStatus::Unsat )
        for ( auto e : v.conflict )
            r.item( "conflict", "entry " + std::to_string( e ) );
}

} // namespace distrev
