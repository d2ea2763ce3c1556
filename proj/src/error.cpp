#include "primepat/error.hpp"

namespace primepat {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "invalid-argument";
        case ErrorKind::RangeTooLarge: return "range-too-large";
        case ErrorKind::EmptyInterval: return "empty-interval";
        case ErrorKind::Overflow: return "overflow";
        case ErrorKind::NotAPrimePair: return "not-a-prime-pair";
        case ErrorKind::SpecialPair: return "special-pair";
        case ErrorKind::MemberDivisibleBy3: return "member-divisible-by-3";
        case ErrorKind::ConstraintViolation: return "constraint-violation";
        case ErrorKind::EndpointIndex: return "endpoint-index";
        case ErrorKind::NotPrimeLike: return "not-prime-like";
        case ErrorKind::DuplicateMember: return "duplicate-member";
        case ErrorKind::SingletonMultiplet: return "singleton-multiplet";
        case ErrorKind::EqualBase: return "equal-base";
        case ErrorKind::PremiseViolation: return "premise-violation";
        case ErrorKind::NotCoprime: return "not-coprime";
        case ErrorKind::Domain: return "domain";
        case ErrorKind::ConductorViolation: return "conductor-violation";
        case ErrorKind::ResidueViolation: return "residue-violation";
        case ErrorKind::LValueNearZero: return "l-value-near-zero";
    }
    return "unknown";
}

}  // namespace primepat
