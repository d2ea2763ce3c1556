#pragma once

#include <stdexcept>
#include <string>

namespace primepat {

enum class ErrorKind {
    InvalidArgument,
    RangeTooLarge,
    EmptyInterval,
    Overflow,
    NotAPrimePair,
    SpecialPair,
    MemberDivisibleBy3,
    ConstraintViolation,
    EndpointIndex,
    NotPrimeLike,
    DuplicateMember,
    SingletonMultiplet,
    EqualBase,
    PremiseViolation,
    NotCoprime,
    Domain,
    ConductorViolation,
    ResidueViolation,
    LValueNearZero,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace primepat
