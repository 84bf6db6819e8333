#pragma once

#include <stdexcept>
#include <string>

namespace ifnas {

// Exit codes used by the CLI. Library code throws, the CLI maps to codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitInfeasibleBudget = 2,
  kExitNumericalFault = 3,
  kExitUsage = 64,
  kExitInfeasibleInjection = 65,
  kExitFile = 66,
};

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid specs, configs, or operation arguments.
struct ValidationError : Error {
  using Error::Error;
};

// Malformed input files; message carries a location.
struct ParseError : Error {
  using Error::Error;
};

struct FileError : Error {
  using Error::Error;
};

// Budget below what any valid architecture can reach.
struct InfeasibleBudgetError : Error {
  using Error::Error;
};

struct InfeasibleInjectionError : Error {
  using Error::Error;
};

// NaN/Inf detected, or a needed node lost all of its inputs.
struct NumericalFault : Error {
  using Error::Error;
};

struct StructuralFault : Error {
  using Error::Error;
};

}  // namespace ifnas
