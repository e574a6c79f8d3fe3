#include "distrev/io.hpp"

#include "distrev/error.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace distrev
{

std::string read_file( const std::filesystem::path& path )
{
    std::ifstream in( path, std::ios::binary );
    if ( !in )
        throw InputError( "cannot read " + path.string() );
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file( const std::filesystem::path& path, std::string_view text )
{
    if ( path.has_parent_path() )
        std::filesystem::create_directories( path.parent_path() );
    std::ofstream out( path, std::ios::binary );
    if ( !out )
        throw InputError( "cannot write " + path.string() );
    out << text;
}

namespace
{

struct Line
{
    std::size_t number;
    std::string key;
    std::string rest;
};

std::string trim( std::string_view s )
{
    const auto b = s.find_first_not_of( " \t\r" );
    if ( b == std::string_view::npos )
        return {};
    const auto e = s.find_last_not_of( " \t\r" );
    return std::string( s.substr( b, e - b + 1 ) );
}

std::vector< std::string > words( std::string_view s )
{
    std::istringstream in{ std::string( s ) };
    std::vector< std::string > out;
    std::string w;
    while ( in >> w )
        out.push_back( w );
    return out;
}

// "key: rest" lines, comments and blanks dropped.
std::vector< Line > keyed_lines( std::string_view text )
{
    std::vector< Line > out;
    std::istringstream in{ std::string( text ) };
    std::string raw;
    std::size_t n = 0;
    while ( std::getline( in, raw ) )
    {
        ++n;
        if ( const auto h = raw.find( '#' ); h != std::string::npos )
            raw.erase( h );
        const auto line = trim( raw );
        if ( line.empty() )
            continue;
        const auto colon = line.find( ':' );
        if ( colon == std::string::npos )
            throw InputError( "line " + std::to_string( n ) + ": expected 'key: value'" );
        out.push_back( { n, trim( line.substr( 0, colon ) ), trim( line.substr( colon + 1 ) ) } );
    }
    return out;
}

[[noreturn]] void fail( const Line& l, const std::string& what )
{
    throw InputError( "line " + std::to_string( l.number ) + ": " + what );
}

// Valuation text: "01" when every truth-value label is one character, or
// space-separated labels.
Valuation parse_valuation( const Line& l, const std::vector< std::string >& tokens, const Matrix& m,
                           std::size_t atoms )
{
    std::vector< std::string > labels;
    if ( tokens.size() == 1 && tokens[ 0 ].size() == atoms && atoms != 1 )
        for ( char c : tokens[ 0 ] )
            labels.emplace_back( 1, c );
    else
        labels = tokens;
    if ( labels.size() != atoms )
        fail( l, "valuation needs " + std::to_string( atoms ) + " values" );
    Valuation v;
    for ( const auto& s : labels )
    {
        const auto t = m.value_of( s );
        if ( !t )
            fail( l, "unknown truth value '" + s + "'" );
        v.values.push_back( *t );
    }
    return v;
}

} // namespace

PointSet parse_point_set( std::string_view text, const Universe& u )
{
    const auto t = trim( text );
    if ( t.size() < 2 || t.front() != '{' || t.back() != '}' )
        throw InputError( "expected a set like {a b}, got '" + t + "'" );
    const auto labels = words( std::string_view( t ).substr( 1, t.size() - 2 ) );
    return u.set_of( labels );
}

DistanceFile parse_distance( std::string_view text, const Matrix& matrix )
{
    std::optional< Universe > universe;
    std::optional< OrderMode > mode;
    std::optional< Signature > signature;
    std::map< std::size_t, Valuation > valuations;
    std::vector< Cost > table;
    std::size_t rows = 0;
    for ( const auto& l : keyed_lines( text ) )
    {
        if ( l.key == "points" )
        {
            if ( universe )
                fail( l, "points given twice" );
            universe = Universe( words( l.rest ) );
        }
        else if ( l.key == "order" )
        {
            if ( l.rest == "real" )
                mode = OrderMode::Real;
            else if ( l.rest == "liberal" )
                mode = OrderMode::Liberal;
            else
                fail( l, "order must be real or liberal" );
        }
        else if ( l.key == "signature" )
            signature = Signature( words( l.rest ) );
        else if ( l.key == "valuation" )
        {
            if ( !universe || !signature )
                fail( l, "valuation before points and signature" );
            auto toks = words( l.rest );
            if ( toks.size() < 2 )
                fail( l, "valuation needs a point and values" );
            const auto point = universe->index_of( toks[ 0 ] );
            toks.erase( toks.begin() );
            if ( !valuations.emplace( point, parse_valuation( l, toks, matrix, signature->size() ) ).second )
                fail( l, "second valuation for " + universe->label( point ) );
        }
        else if ( l.key == "row" )
        {
            if ( !universe )
                fail( l, "row before points" );
            const auto toks = words( l.rest );
            if ( toks.size() != universe->size() )
                fail( l, "row needs " + std::to_string( universe->size() ) + " costs" );
            for ( const auto& t : toks )
            {
                try
                {
                    table.push_back( Cost::parse( t ) );
                }
                catch ( const InputError& e )
                {
                    fail( l, e.what() );
                }
            }
            ++rows;
        }
        else
            fail( l, "unknown key '" + l.key + "'" );
    }
    if ( !universe )
        throw InputError( "distance file has no points line" );
    if ( !mode )
        throw InputError( "distance file has no order line" );
    if ( rows != universe->size() )
        throw InputError( "distance file needs " + std::to_string( universe->size() ) + " rows, got " +
                          std::to_string( rows ) );
    DistanceFile out{ PseudoDistance( *universe, *mode, std::move( table ) ), signature, {} };
    if ( !valuations.empty() )
    {
        if ( valuations.size() != universe->size() )
            throw InputError( "every point needs a valuation once any has one" );
        for ( auto& [ i, v ] : valuations )
            out.valuations.push_back( std::move( v ) );
    }
    return out;
}

std::string format_distance( const PseudoDistance& d, const std::optional< Signature >& signature,
                             std::span< const Valuation > valuations, const Matrix& matrix )
{
    std::string out = "points:";
    for ( const auto& l : d.universe().labels() )
        out += " " + l;
    out += "\norder: ";
    out += to_string( d.mode() );
    out += "\n";
    if ( signature )
    {
        out += "signature:";
        for ( const auto& a : signature->atoms() )
            out += " " + a;
        out += "\n";
        for ( std::size_t i = 0; i < valuations.size(); ++i )
        {
            out += "valuation: " + d.universe().label( i );
            for ( auto t : valuations[ i ].values )
                out += " " + matrix.label( t );
            out += "\n";
        }
    }
    for ( std::size_t v = 0; v < d.size(); ++v )
    {
        out += "row:";
        for ( std::size_t w = 0; w < d.size(); ++w )
            out += " " + d( v, w ).to_string();
        out += "\n";
    }
    return out;
}

PseudoDistance distance_over_space( const DistanceFile& file, const ValuationSpace& space )
{
    const auto& d = file.distance;
    if ( d.size() != space.size() )
        throw InputError( "distance has " + std::to_string( d.size() ) + " points but the signature has " +
                          std::to_string( space.size() ) + " valuations" );
    if ( file.signature && !( *file.signature == space.signature() ) )
        throw InputError( "distance file signature differs from the theory signature" );

    // position in the space -> point of the file
    std::vector< std::size_t > point( space.size() );
    if ( !file.valuations.empty() )
    {
        std::vector< bool > seen( space.size(), false );
        for ( std::size_t p = 0; p < file.valuations.size(); ++p )
        {
            const auto i = space.index_of( file.valuations[ p ] );
            if ( seen[ i ] )
                throw InputError( "two points share the valuation " + space.universe().label( i ) );
            seen[ i ] = true;
            point[ i ] = p;
        }
    }
    else if ( std::all_of( space.universe().labels().begin(), space.universe().labels().end(),
                           [ & ]( const std::string& l ) { return d.universe().has( l ); } ) )
    {
        for ( std::size_t i = 0; i < space.size(); ++i )
            point[ i ] = d.universe().index_of( space.universe().label( i ) );
    }
    else
        for ( std::size_t i = 0; i < space.size(); ++i )
            point[ i ] = i;

    return PseudoDistance( space.universe(), d.mode(),
                           [ & ]( std::size_t a, std::size_t b ) { return d( point[ a ], point[ b ] ); } );
}

OperatorTable parse_operator( std::string_view text, const std::filesystem::path& base_dir )
{
    std::optional< Universe > universe;
    std::optional< OperatorTable > table;
    std::vector< Line > entries;
    for ( const auto& l : keyed_lines( text ) )
    {
        if ( l.key == "points" )
        {
            if ( universe )
                fail( l, "points given twice" );
            universe = Universe( words( l.rest ) );
        }
        else if ( l.key == "backing" )
        {
            if ( table )
                fail( l, "backing given twice" );
            const auto path = base_dir / l.rest;
            auto file = parse_distance( read_file( path ) );
            table.emplace( std::move( file.distance ) );
        }
        else if ( l.key == "entry" )
            entries.push_back( l );
        else
            fail( l, "unknown key '" + l.key + "'" );
    }
    if ( !universe )
        throw InputError( "operator file has no points line" );
    if ( table && !( table->universe() == *universe ) )
        throw InputError( "backing distance has different points" );
    if ( !table )
        table.emplace( *universe );
    for ( const auto& l : entries )
    {
        // three brace groups
        std::vector< std::string > groups;
        std::size_t pos = 0;
        while ( true )
        {
            const auto open = l.rest.find( '{', pos );
            if ( open == std::string::npos )
                break;
            const auto close = l.rest.find( '}', open );
            if ( close == std::string::npos )
                fail( l, "unclosed set" );
            groups.push_back( l.rest.substr( open, close - open + 1 ) );
            pos = close + 1;
        }
        if ( groups.size() != 3 || !trim( std::string_view( l.rest ).substr( pos ) ).empty() )
            fail( l, "entry needs three sets {V} {W} {X}" );
        try
        {
            table->add( parse_point_set( groups[ 0 ], *universe ), parse_point_set( groups[ 1 ], *universe ),
                        parse_point_set( groups[ 2 ], *universe ) );
        }
        catch ( const InputError& e )
        {
            fail( l, e.what() );
        }
    }
    return std::move( *table );
}

std::string format_operator( const OperatorTable& op, const std::string& backing_path )
{
    const auto& u = op.universe();
    std::string out = "points:";
    for ( const auto& l : u.labels() )
        out += " " + l;
    out += "\n";
    if ( !backing_path.empty() )
        out += "backing: " + backing_path + "\n";
    for ( const auto& e : op.entries() )
        out += "entry: " + u.format( e.v ) + " " + u.format( e.w ) + " " + u.format( e.x ) + "\n";
    return out;
}

SetFamily parse_family( std::string_view text, const Universe& u )
{
    std::vector< PointSet > sets;
    std::istringstream in{ std::string( text ) };
    std::string raw;
    std::size_t n = 0;
    while ( std::getline( in, raw ) )
    {
        ++n;
        if ( const auto h = raw.find( '#' ); h != std::string::npos )
            raw.erase( h );
        const auto line = trim( raw );
        if ( line.empty() )
            continue;
        try
        {
            sets.push_back( parse_point_set( line, u ) );
        }
        catch ( const InputError& e )
        {
            throw InputError( "line " + std::to_string( n ) + ": " + e.what() );
        }
    }
    return SetFamily( u.size(), std::move( sets ) );
}

std::vector< std::string > parse_theory_lines( std::string_view text )
{
    std::vector< std::string > out;
    std::istringstream in{ std::string( text ) };
    std::string raw;
    while ( std::getline( in, raw ) )
    {
        if ( const auto h = raw.find( '#' ); h != std::string::npos )
            raw.erase( h );
        auto line = trim( raw );
        if ( !line.empty() )
            out.push_back( std::move( line ) );
    }
    return out;
}

Matrix parse_matrix( std::string_view text )
{
    std::vector< std::string > values;
    std::vector< std::string > designated;
    std::map< std::string, std::vector< Line > > tables;
    for ( const auto& l : keyed_lines( text ) )
    {
        if ( l.key == "values" )
            values = words( l.rest );
        else if ( l.key == "designated" )
            designated = words( l.rest );
        else
            tables[ l.key ].push_back( l );
    }
    if ( values.empty() )
        throw InputError( "matrix file has no values line" );
    const auto value_of = [ & ]( const Line& l, const std::string& s ) {
        for ( std::size_t i = 0; i < values.size(); ++i )
            if ( values[ i ] == s )
                return static_cast< TruthValue >( i );
        fail( l, "unknown truth value '" + s + "'" );
    };
    std::vector< TruthValue > des;
    for ( const auto& s : designated )
    {
        bool found = false;
        for ( std::size_t i = 0; i < values.size(); ++i )
            if ( values[ i ] == s )
            {
                des.push_back( static_cast< TruthValue >( i ) );
                found = true;
            }
        if ( !found )
            throw InputError( "unknown designated value '" + s + "'" );
    }
    std::array< std::optional< Matrix::Table >, 7 > out;
    for ( auto c : all_connectives )
    {
        const auto it = tables.find( connective_name( c ) );
        if ( it == tables.end() )
            continue;
        Matrix::Table t;
        const std::size_t width = arity( c ) == 0 ? 1 : values.size();
        const std::size_t rows = arity( c ) == 2 ? values.size() : 1;
        if ( it->second.size() != rows )
            fail( it->second.back(), std::string( connective_name( c ) ) + " needs " + std::to_string( rows ) +
                                             " line(s)" );
        for ( const auto& l : it->second )
        {
            const auto toks = words( l.rest );
            if ( toks.size() != width )
                fail( l, "expected " + std::to_string( width ) + " values" );
            for ( const auto& s : toks )
                t.push_back( value_of( l, s ) );
        }
        out[ static_cast< std::size_t >( c ) ] = std::move( t );
        tables.erase( it );
    }
    if ( !tables.empty() )
        fail( tables.begin()->second.front(), "unknown key '" + tables.begin()->first + "'" );
    return Matrix( values, des, out );
}

} // namespace distrev
