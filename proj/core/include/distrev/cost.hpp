#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace distrev
{

enum class OrderMode
{
    Real,    // finite rationals only, usual order
    Liberal, // rationals plus a top element that is strictly above all of them
};

enum class Ordering
{
    Less,
    Equal,
    Greater,
};

// Exact cost: a rational in lowest terms, or the infinite top element |N|.
class Cost
{
public:
    // Zero.
    constexpr Cost() = default;
    Cost( std::int64_t numerator, std::int64_t denominator = 1 );

    static Cost infinite();
    // Accepts "num/den", integers, decimal shorthand ("1.4" is 7/5) and "inf".
    static Cost parse( std::string_view text );

    [[nodiscard]] bool is_infinite() const { return _infinite; }
    [[nodiscard]] bool is_finite() const { return !_infinite; }
    [[nodiscard]] std::int64_t numerator() const { return _num; }
    [[nodiscard]] std::int64_t denominator() const { return _den; }

    // Decimal when the value has a terminating expansion, "num/den" otherwise.
    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] double approx() const;

    // Structural equality (infinite == infinite).
    friend bool operator==( const Cost&, const Cost& ) = default;

private:
    bool _infinite = false;
    std::int64_t _num = 0;
    std::int64_t _den = 1;
};

// Throws ModeMismatch if an infinite cost is compared under OrderMode::Real.
Ordering compare_costs( const Cost& a, const Cost& b, OrderMode mode );
// Infinite absorbs.
Cost add_costs( const Cost& a, const Cost& b );

inline Cost operator+( const Cost& a, const Cost& b ) { return add_costs( a, b ); }

const char* to_string( OrderMode mode );
const char* to_string( Ordering ord );

} // namespace distrev
