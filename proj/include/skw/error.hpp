#pragma once

#include <stdexcept>
#include <string>

namespace skw {

// Bad arguments or unsupported configuration (CLI exit code 2).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// I/O and filesystem trouble (CLI exit code 3).
class EnvironmentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("division by zero in finite field") {}
};

// The ambient field has no room for a required root or isotropic vector.
class FieldTooSmall : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class AlgebraError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ModuleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CacheError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace skw
