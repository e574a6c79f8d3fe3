#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace distrev
{

// Malformed user input: files, formulas, command arguments.
class InputError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public InputError
{
public:
    ParseError( const std::string& message, std::size_t offset )
            : InputError( message + " at offset " + std::to_string( offset ) ), _offset{ offset }
    {
    }

    [[nodiscard]] std::size_t offset() const { return _offset; }

private:
    std::size_t _offset;
};

// A property or operation was requested under the wrong cost order
// (e.g. an infinite cost compared under the real order).
class ModeMismatch : public InputError
{
public:
    using InputError::InputError;
};

// A configured enumeration bound would be exceeded.
class BoundExceeded : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class InconsistentInput : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class MissingConnective : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class UndefinedPair : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class FamilyError : public InputError
{
public:
    using InputError::InputError;
};

} // namespace distrev
