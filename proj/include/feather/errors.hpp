#ifndef FEATHER_ERRORS_HPP
#define FEATHER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace feather {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

// Argument is not odd, or not positive.
class DomainError : public Error {
public:
    using Error::Error;
};

class TypeMismatch : public Error {
public:
    using Error::Error;
};

class RankViolation : public Error {
public:
    using Error::Error;
};

class NotReducible : public Error {
public:
    using Error::Error;
};

class Exhausted : public Error {
public:
    using Error::Error;
};

class NonTermination : public Error {
public:
    using Error::Error;
};

class NotAHead : public Error {
public:
    using Error::Error;
};

class HeadInvariantViolation : public Error {
public:
    using Error::Error;
};

class IdentityViolation : public Error {
public:
    using Error::Error;
};

class InsufficientSamples : public Error {
public:
    using Error::Error;
};

class DegenerateFit : public Error {
public:
    using Error::Error;
};

} // namespace feather

#endif // FEATHER_ERRORS_HPP
