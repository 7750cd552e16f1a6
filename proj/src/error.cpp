// SPDX-License-Identifier: Apache-2.0
#include "lpi/error.hpp"

namespace lpi
{

char const* to_string(ErrorKind kind)
{
    switch (kind)
    {
        case ErrorKind::NonFiniteState: return "NonFiniteState";
        case ErrorKind::InsufficientWarmup: return "InsufficientWarmup";
        case ErrorKind::ShiftTooLarge: return "ShiftTooLarge";
        case ErrorKind::ZeroDenominator: return "ZeroDenominator";
        case ErrorKind::DomainError: return "DomainError";
        case ErrorKind::NonuniformGrid: return "NonuniformGrid";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::ValidationError: return "ValidationError";
        case ErrorKind::Io: return "Io";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

ParseError::ParseError(std::size_t line, std::size_t column, std::string const& msg)
    : Error(ErrorKind::ParseError,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg)
    , line_(line)
    , column_(column)
{
}

}  // namespace lpi
