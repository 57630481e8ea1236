#pragma once

#include <stdexcept>
#include <string>

namespace ecsf {

// Input that cannot be parsed (bad JSON, bad composition string, ...).
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Violated mathematical precondition (empty composition where nonempty
// required, absent edge, index out of range, ...).
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& msg) : std::domain_error(msg) {}
};

// An explicit resource guard was exceeded.  Never silently truncated.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A structural invariant the code relies on failed to hold.
class invariant_error : public std::logic_error {
public:
    explicit invariant_error(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace ecsf
