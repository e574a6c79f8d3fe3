#include "distrev/formula.hpp"

#include "distrev/error.hpp"

#include <cctype>

namespace distrev
{

Signature::Signature( std::vector< std::string > atoms )
        : _atoms{ std::move( atoms ) }
{
    for ( std::size_t i = 0; i < _atoms.size(); ++i )
    {
        if ( !is_valid_atom_name( _atoms[ i ] ) )
            throw InputError( "invalid atom name '" + _atoms[ i ] + "'" );
        if ( !_index.emplace( _atoms[ i ], i ).second )
            throw InputError( "duplicate atom '" + _atoms[ i ] + "'" );
    }
}

std::optional< std::size_t > Signature::index_of( std::string_view name ) const
{
    const auto it = _index.find( std::string( name ) );
    if ( it == _index.end() )
        return std::nullopt;
    return it->second;
}

bool is_valid_atom_name( std::string_view name )
{
    if ( name.empty() || !( name[ 0 ] >= 'a' && name[ 0 ] <= 'z' ) )
        return false;
    for ( char c : name )
        if ( !( ( c >= 'a' && c <= 'z' ) || ( c >= '0' && c <= '9' ) || c == '_' ) )
            return false;
    return name != "true" && name != "false";
}

Formula Formula::atom( std::size_t index, std::string name )
{
    return Formula{ std::make_shared< const Node >( Node{ Kind::Atom, index, std::move( name ), {} } ) };
}

Formula Formula::truth()
{
    return Formula{ std::make_shared< const Node >( Node{ Kind::True, 0, {}, {} } ) };
}

Formula Formula::falsity()
{
    return Formula{ std::make_shared< const Node >( Node{ Kind::False, 0, {}, {} } ) };
}

Formula Formula::negation( Formula f )
{
    return Formula{ std::make_shared< const Node >( Node{ Kind::Not, 0, {}, { std::move( f ) } } ) };
}

Formula Formula::binary( Kind kind, Formula lhs, Formula rhs )
{
    return Formula{ std::make_shared< const Node >( Node{ kind, 0, {}, { std::move( lhs ), std::move( rhs ) } } ) };
}

Formula Formula::conjunction_of( std::span< const Formula > parts )
{
    if ( parts.empty() )
        return truth();
    Formula acc = parts[ 0 ];
    for ( std::size_t i = 1; i < parts.size(); ++i )
        acc = conjunction( acc, parts[ i ] );
    return acc;
}

Formula Formula::disjunction_of( std::span< const Formula > parts )
{
    if ( parts.empty() )
        return falsity();
    Formula acc = parts[ 0 ];
    for ( std::size_t i = 1; i < parts.size(); ++i )
        acc = disjunction( acc, parts[ i ] );
    return acc;
}

bool operator==( const Formula& a, const Formula& b )
{
    if ( a._node == b._node )
        return true;
    if ( a.kind() != b.kind() )
        return false;
    switch ( a.kind() )
    {
        case Formula::Kind::Atom: return a.atom_index() == b.atom_index() && a.atom_name() == b.atom_name();
        case Formula::Kind::True:
        case Formula::Kind::False: return true;
        case Formula::Kind::Not: return a.operand() == b.operand();
        default: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    }
}

namespace
{

// Binding strength: higher binds tighter.
int precedence( Formula::Kind k )
{
    switch ( k )
    {
        case Formula::Kind::Iff: return 1;
        case Formula::Kind::Implies: return 2;
        case Formula::Kind::Or: return 3;
        case Formula::Kind::And: return 4;
        case Formula::Kind::Not: return 5;
        default: return 6;
    }
}

const char* symbol( Formula::Kind k )
{
    switch ( k )
    {
        case Formula::Kind::And: return " & ";
        case Formula::Kind::Or: return " | ";
        case Formula::Kind::Implies: return " -> ";
        case Formula::Kind::Iff: return " <-> ";
        default: return "";
    }
}

void print( const Formula& f, std::string& out )
{
    switch ( f.kind() )
    {
        case Formula::Kind::Atom: out += f.atom_name(); return;
        case Formula::Kind::True: out += "true"; return;
        case Formula::Kind::False: out += "false"; return;
        case Formula::Kind::Not:
        {
            out += '!';
            const bool paren = precedence( f.operand().kind() ) < precedence( Formula::Kind::Not );
            if ( paren )
                out += '(';
            print( f.operand(), out );
            if ( paren )
                out += ')';
            return;
        }
        default: break;
    }
    const int p = precedence( f.kind() );
    const bool right_assoc = f.kind() == Formula::Kind::Implies;
    const int lp = precedence( f.lhs().kind() );
    const int rp = precedence( f.rhs().kind() );
    const bool paren_l = right_assoc ? lp <= p : lp < p;
    const bool paren_r = right_assoc ? rp < p : rp <= p;
    if ( paren_l )
        out += '(';
    print( f.lhs(), out );
    if ( paren_l )
        out += ')';
    out += symbol( f.kind() );
    if ( paren_r )
        out += '(';
    print( f.rhs(), out );
    if ( paren_r )
        out += ')';
}

enum class Tok
{
    Atom,
    True,
    False,
    Not,
    And,
    Or,
    Implies,
    Iff,
    LParen,
    RParen,
    End,
};

struct Token
{
    Tok kind;
    std::size_t offset;
    std::string_view text;
};

class Lexer
{
public:
    explicit Lexer( std::string_view text ) : _text{ text } {}

    Token next()
    {
        while ( _pos < _text.size() && std::isspace( static_cast< unsigned char >( _text[ _pos ] ) ) )
            ++_pos;
        const std::size_t start = _pos;
        if ( _pos >= _text.size() )
            return { Tok::End, start, {} };
        const char c = _text[ _pos ];
        if ( c >= 'a' && c <= 'z' )
        {
            while ( _pos < _text.size() &&
                    ( ( _text[ _pos ] >= 'a' && _text[ _pos ] <= 'z' ) || ( _text[ _pos ] >= '0' && _text[ _pos ] <= '9' ) ||
                      _text[ _pos ] == '_' ) )
                ++_pos;
            const auto word = _text.substr( start, _pos - start );
            if ( word == "true" )
                return { Tok::True, start, word };
            if ( word == "false" )
                return { Tok::False, start, word };
            return { Tok::Atom, start, word };
        }
        switch ( c )
        {
            case '!': ++_pos; return { Tok::Not, start, _text.substr( start, 1 ) };
            case '&': ++_pos; return { Tok::And, start, _text.substr( start, 1 ) };
            case '|': ++_pos; return { Tok::Or, start, _text.substr( start, 1 ) };
            case '(': ++_pos; return { Tok::LParen, start, _text.substr( start, 1 ) };
            case ')': ++_pos; return { Tok::RParen, start, _text.substr( start, 1 ) };
            case '-':
                if ( _text.substr( _pos, 2 ) == "->" )
                {
                    _pos += 2;
                    return { Tok::Implies, start, _text.substr( start, 2 ) };
                }
                break;
            case '<':
                if ( _text.substr( _pos, 3 ) == "<->" )
                {
                    _pos += 3;
                    return { Tok::Iff, start, _text.substr( start, 3 ) };
                }
                break;
            default: break;
        }
        throw ParseError( std::string( "unexpected character '" ) + c + "'", start );
    }

private:
    std::string_view _text;
    std::size_t _pos = 0;
};

class Parser
{
public:
    Parser( std::string_view text, const Signature* signature, std::vector< std::string >* seen )
            : _lexer{ text }, _signature{ signature }, _seen{ seen }
    {
        advance();
    }

    Formula parse()
    {
        Formula f = parse_iff();
        if ( _tok.kind != Tok::End )
            throw ParseError( "unexpected '" + std::string( _tok.text ) + "'", _tok.offset );
        return f;
    }

private:
    void advance() { _tok = _lexer.next(); }

    Formula parse_iff()
    {
        Formula lhs = parse_implies();
        while ( _tok.kind == Tok::Iff )
        {
            advance();
            lhs = Formula::binary( Formula::Kind::Iff, lhs, parse_implies() );
        }
        return lhs;
    }

    Formula parse_implies()
    {
        Formula lhs = parse_or();
        if ( _tok.kind == Tok::Implies )
        {
            advance();
            return Formula::binary( Formula::Kind::Implies, lhs, parse_implies() );
        }
        return lhs;
    }

    Formula parse_or()
    {
        Formula lhs = parse_and();
        while ( _tok.kind == Tok::Or )
        {
            advance();
            lhs = Formula::disjunction( lhs, parse_and() );
        }
        return lhs;
    }

    Formula parse_and()
    {
        Formula lhs = parse_unary();
        while ( _tok.kind == Tok::And )
        {
            advance();
            lhs = Formula::conjunction( lhs, parse_unary() );
        }
        return lhs;
    }

    Formula parse_unary()
    {
        switch ( _tok.kind )
        {
            case Tok::Not: advance(); return Formula::negation( parse_unary() );
            case Tok::True: advance(); return Formula::truth();
            case Tok::False: advance(); return Formula::falsity();
            case Tok::LParen:
            {
                advance();
                Formula inner = parse_iff();
                if ( _tok.kind != Tok::RParen )
                    throw ParseError( "expected ')'", _tok.offset );
                advance();
                return inner;
            }
            case Tok::Atom:
            {
                const std::string name( _tok.text );
                const auto offset = _tok.offset;
                advance();
                if ( _seen )
                {
                    std::size_t idx = 0;
                    while ( idx < _seen->size() && ( *_seen )[ idx ] != name )
                        ++idx;
                    if ( idx == _seen->size() )
                        _seen->push_back( name );
                    return Formula::atom( idx, name );
                }
                const auto idx = _signature->index_of( name );
                if ( !idx )
                    throw InputError( "unknown atom '" + name + "' at offset " + std::to_string( offset ) );
                return Formula::atom( *idx, name );
            }
            case Tok::End: throw ParseError( "unexpected end of input", _tok.offset );
            default: throw ParseError( "unexpected '" + std::string( _tok.text ) + "'", _tok.offset );
        }
    }

    Lexer _lexer;
    const Signature* _signature;
    std::vector< std::string >* _seen;
    Token _tok{ Tok::End, 0, {} };
};

} // namespace

std::string Formula::to_string() const
{
    std::string out;
    print( *this, out );
    return out;
}

Formula parse_formula( std::string_view text, const Signature& signature )
{
    return Parser{ text, &signature, nullptr }.parse();
}

std::vector< std::string > scan_atoms( std::string_view text )
{
    std::vector< std::string > seen;
    Parser{ text, nullptr, &seen }.parse();
    return seen;
}

} // namespace distrev
