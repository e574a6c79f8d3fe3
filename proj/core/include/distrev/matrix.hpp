#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace distrev
{

using TruthValue = std::uint8_t;

enum class Connective
{
    Not,
    And,
    Or,
    Implies,
    Iff,
    True,
    False,
};

inline constexpr std::array< Connective, 7 > all_connectives{
    Connective::Not, Connective::And,  Connective::Or,   Connective::Implies,
    Connective::Iff, Connective::True, Connective::False,
};

std::size_t arity( Connective c );
const char* connective_name( Connective c ); // "not", "and", ... as used in matrix files

// Logical matrix <T, E, f>: truth values, designated values, and one
// interpretation table per supplied connective. Tables are stored row-major
// over argument tuples in truth-value order.
class Matrix
{
public:
    using Table = std::vector< TruthValue >;

    Matrix( std::vector< std::string > values, std::vector< TruthValue > designated,
            std::array< std::optional< Table >, 7 > tables );

    // Two values {0, 1}, 1 designated, the usual connectives.
    static const Matrix& classical();

    [[nodiscard]] std::size_t size() const { return _values.size(); }
    [[nodiscard]] const std::string& label( TruthValue v ) const { return _values.at( v ); }
    [[nodiscard]] const std::vector< std::string >& labels() const { return _values; }
    [[nodiscard]] std::optional< TruthValue > value_of( const std::string& label ) const;
    [[nodiscard]] bool is_designated( TruthValue v ) const { return _designated.at( v ); }
    [[nodiscard]] bool has( Connective c ) const { return _tables[ index( c ) ].has_value(); }
    [[nodiscard]] bool is_classical() const;

    // Throws MissingConnective when the matrix does not interpret `c`.
    [[nodiscard]] TruthValue apply( Connective c, std::span< const TruthValue > args ) const;
    [[nodiscard]] TruthValue apply( Connective c ) const { return apply( c, std::span< const TruthValue >{} ); }
    [[nodiscard]] TruthValue apply( Connective c, TruthValue a ) const;
    [[nodiscard]] TruthValue apply( Connective c, TruthValue a, TruthValue b ) const;

    [[nodiscard]] const std::optional< Table >& table( Connective c ) const { return _tables[ index( c ) ]; }

    friend bool operator==( const Matrix&, const Matrix& ) = default;

private:
    static std::size_t index( Connective c ) { return static_cast< std::size_t >( c ); }

    std::vector< std::string > _values;
    std::vector< bool > _designated;
    std::array< std::optional< Table >, 7 > _tables;
};

} // namespace distrev
