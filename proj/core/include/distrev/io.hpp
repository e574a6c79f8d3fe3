#pragma once

#include "distrev/distance.hpp"
#include "distrev/logic.hpp"
#include "distrev/matrix.hpp"
#include "distrev/operators.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace distrev
{

// Throws InputError when the file cannot be read.
std::string read_file( const std::filesystem::path& path );
void write_file( const std::filesystem::path& path, std::string_view text );

// Distance file:
//   points: a b c
//   order: real | liberal
//   signature: p q            (optional)
//   valuation: a 01           (optional, one per point, needs a signature)
//   row: 0 1 inf              (one per point, in point order)
// '#' starts a comment.
struct DistanceFile
{
    PseudoDistance distance;
    std::optional< Signature > signature;
    std::vector< Valuation > valuations; // empty or one per point
};

DistanceFile parse_distance( std::string_view text, const Matrix& matrix = Matrix::classical() );
std::string format_distance( const PseudoDistance& d, const std::optional< Signature >& signature = std::nullopt,
                             std::span< const Valuation > valuations = {}, const Matrix& matrix = Matrix::classical() );

// The distance re-indexed by the valuations of `space`. Points are matched by
// valuation lines when present, otherwise by label, otherwise by position.
PseudoDistance distance_over_space( const DistanceFile& file, const ValuationSpace& space );

// Operator file:
//   points: a b c
//   backing: d.dist           (optional, relative to the operator file)
//   entry: {a} {b c} {b}
OperatorTable parse_operator( std::string_view text, const std::filesystem::path& base_dir = {} );
std::string format_operator( const OperatorTable& op, const std::string& backing_path = {} );

// One "{a b}" set per line.
SetFamily parse_family( std::string_view text, const Universe& u );

// One formula per line; blank lines and comments skipped.
std::vector< std::string > parse_theory_lines( std::string_view text );

// Matrix file:
//   values: 0 h 1
//   designated: 1
//   not: 1 h 0
//   and: 0 0 0                 (binary tables: one line per row)
//   true: 1
Matrix parse_matrix( std::string_view text );

// "{a b c}" against a universe.
PointSet parse_point_set( std::string_view text, const Universe& u );

} // namespace distrev
