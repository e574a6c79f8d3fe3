#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace distrev
{

// Ordered, finite set of atom names.
class Signature
{
public:
    Signature() = default;
    explicit Signature( std::vector< std::string > atoms );

    [[nodiscard]] std::size_t size() const { return _atoms.size(); }
    [[nodiscard]] const std::string& atom( std::size_t i ) const { return _atoms.at( i ); }
    [[nodiscard]] const std::vector< std::string >& atoms() const { return _atoms; }
    [[nodiscard]] std::optional< std::size_t > index_of( std::string_view name ) const;

    friend bool operator==( const Signature& a, const Signature& b ) { return a._atoms == b._atoms; }

private:
    std::vector< std::string > _atoms;
    std::unordered_map< std::string, std::size_t > _index;
};

bool is_valid_atom_name( std::string_view name );

// Immutable propositional formula; nodes are shared between copies.
class Formula
{
public:
    enum class Kind
    {
        Atom,
        Not,
        And,
        Or,
        Implies,
        Iff,
        True,
        False,
    };

    static Formula atom( std::size_t index, std::string name );
    static Formula truth();
    static Formula falsity();
    static Formula negation( Formula f );
    static Formula binary( Kind kind, Formula lhs, Formula rhs );
    static Formula conjunction( Formula lhs, Formula rhs ) { return binary( Kind::And, std::move( lhs ), std::move( rhs ) ); }
    static Formula disjunction( Formula lhs, Formula rhs ) { return binary( Kind::Or, std::move( lhs ), std::move( rhs ) ); }
    // Left-nested fold; empty input yields `true` / `false` respectively.
    static Formula conjunction_of( std::span< const Formula > parts );
    static Formula disjunction_of( std::span< const Formula > parts );

    [[nodiscard]] Kind kind() const { return _node->kind; }
    [[nodiscard]] std::size_t atom_index() const { return _node->atom; }
    [[nodiscard]] const std::string& atom_name() const { return _node->name; }
    [[nodiscard]] const Formula& operand() const { return _node->kids.front(); }
    [[nodiscard]] const Formula& lhs() const { return _node->kids.front(); }
    [[nodiscard]] const Formula& rhs() const { return _node->kids.back(); }

    // Prints in the input grammar with the minimum parentheses needed for
    // parse_formula to rebuild the same tree.
    [[nodiscard]] std::string to_string() const;

    friend bool operator==( const Formula& a, const Formula& b );

private:
    struct Node
    {
        Kind kind;
        std::size_t atom = 0;
        std::string name;
        std::vector< Formula > kids;
    };

    explicit Formula( std::shared_ptr< const Node > node ) : _node{ std::move( node ) } {}

    std::shared_ptr< const Node > _node;
};

// Grammar: atoms [a-z][a-z0-9_]*, literals true/false, parentheses, and
// ! > & > | > -> > <-> by decreasing precedence. & | <-> associate left,
// -> associates right. Throws ParseError (with offset) or InputError for an
// atom missing from the signature.
Formula parse_formula( std::string_view text, const Signature& signature );

// Atom names in order of first appearance; throws ParseError on bad syntax.
std::vector< std::string > scan_atoms( std::string_view text );

} // namespace distrev
