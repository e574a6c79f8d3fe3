#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace distrev
{

inline constexpr std::size_t default_witness_cap = 16;

// One violation: the offending tuple (point labels, sets, formulas) plus an
// optional explanation.
struct Witness
{
    std::vector< std::string > items;
    std::string detail;
};

// Outcome of an exhaustive or sampled property check. `violations` counts every
// violation found; at most `witness_cap` of them are kept as witnesses.
struct PropertyReport
{
    std::string property;
    std::size_t violations = 0;
    std::size_t checked = 0;
    std::vector< Witness > witnesses;
    std::size_t witness_cap = default_witness_cap;

    [[nodiscard]] bool pass() const { return violations == 0; }

    void record( Witness w )
    {
        ++violations;
        if ( witnesses.size() < witness_cap )
            witnesses.push_back( std::move( w ) );
    }
};

// One verified claim of a construction, with the facts that back it.
struct Claim
{
    std::string name;
    bool pass = true;
    std::vector< std::pair< std::string, std::string > > facts;
    std::vector< Witness > witnesses;

    void fact( std::string key, std::string value ) { facts.emplace_back( std::move( key ), std::move( value ) ); }
};

struct ClaimReport
{
    std::vector< Claim > claims;
    // Informational sections; they never affect pass().
    std::vector< Claim > notes;

    [[nodiscard]] bool pass() const
    {
        for ( const auto& c : claims )
            if ( !c.pass )
                return false;
        return true;
    }

    [[nodiscard]] const Claim* find( const std::string& name ) const
    {
        for ( const auto& c : claims )
            if ( c.name == name )
                return &c;
        return nullptr;
    }
};

// Claim view of a property report.
inline Claim to_claim( std::string name, const PropertyReport& r )
{
    Claim c{ std::move( name ), r.pass(), {}, r.witnesses };
    c.fact( "property", r.property );
    c.fact( "checked", std::to_string( r.checked ) );
    c.fact( "violations", std::to_string( r.violations ) );
    return c;
}

} // namespace distrev
