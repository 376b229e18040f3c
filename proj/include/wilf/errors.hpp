#pragma once

#include <stdexcept>
#include <string>

namespace wilf {

// Base class for every error the library raises.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed partition text, zero parts/multiplicities, duplicate parts.
class InvalidPartition : public Error {
public:
    using Error::Error;
};

// The involution is only defined on partitions with distinct multiplicities.
class NotWilf : public Error {
public:
    using Error::Error;
};

// A counting or enumeration request exceeded its configured feasibility guard.
class LimitExceeded : public Error {
public:
    using Error::Error;
};

// A CoverSet was queried beyond the depth it was built to.
class CoverTooShallow : public Error {
public:
    using Error::Error;
};

// An internal consistency check failed (e.g. the base cover table did not
// come out with the expected domain).
class IntegrityError : public Error {
public:
    using Error::Error;
};

class ArithmeticOverflow : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

}  // namespace wilf
