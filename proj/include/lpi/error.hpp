// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lpi
{

enum class ErrorKind
{
    NonFiniteState,
    InsufficientWarmup,
    ShiftTooLarge,
    ZeroDenominator,
    DomainError,
    NonuniformGrid,
    ParseError,
    ValidationError,
    Io,
    InvalidArgument,
};

char const* to_string(ErrorKind kind);

class Error : public std::runtime_error
{
  public:
    Error(ErrorKind kind, std::string const& what)
        : std::runtime_error(what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

//! Configuration text error with a 1-based source position.
class ParseError : public Error
{
  public:
    ParseError(std::size_t line, std::size_t column, std::string const& msg);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

//! Throw a ValidationError naming the violated invariant unless \c cond holds.
inline void require(bool cond, std::string const& invariant)
{
    if (!cond)
    {
        throw Error(ErrorKind::ValidationError, "invariant violated: " + invariant);
    }
}

}  // namespace lpi
