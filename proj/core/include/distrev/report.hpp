#pragma once

#include "distrev/operators.hpp"
#include "distrev/realize.hpp"
#include "distrev/report_types.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace distrev
{

// Line-oriented report: "key: value" fields, nested sections indented by two
// spaces, list items as "- ". Fields keep insertion order.
class Report
{
public:
    Report& put( std::string key, std::string value );
    Report& put( std::string key, std::size_t value ) { return put( std::move( key ), std::to_string( value ) ); }
    Report& put( std::string key, bool value ) { return put( std::move( key ), std::string( value ? "true" : "false" ) ); }
    Report& put( std::string key, const char* value ) { return put( std::move( key ), std::string( value ) ); }
    Report& section( std::string key );
    // List members under `key`; consecutive calls with one key share a list.
    Report& item( std::string key, std::string value );
    Report& item_section( std::string key );

    [[nodiscard]] std::string render() const;

private:
    struct Item
    {
        std::string text;
        std::shared_ptr< Report > node;
    };
    struct Field
    {
        std::string key;
        std::string value;
        std::shared_ptr< Report > node;
        std::vector< Item > items;
        bool is_list = false;
    };

    Field& list( const std::string& key );
    void render( std::string& out, std::size_t indent ) const;

    std::vector< Field > _fields;
};

std::uint64_t fnv1a64( std::string_view data );
std::string hex64( std::uint64_t v );

void add_property( Report& r, const PropertyReport& p );
void add_claims( Report& r, const ClaimReport& claims );
void add_loop( Report& r, const LoopVerdict& v, const Universe& u );
void add_verdict( Report& r, const RealizabilityVerdict& v, const ConstraintSystem* sys, const Universe& u,
                  bool symmetric );

} // namespace distrev
