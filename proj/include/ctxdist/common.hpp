#pragma once

#include <stdexcept>
#include <string>

namespace ctxdist {

inline constexpr const char* kVersion = "0.1.0";

// Absolute tolerances used throughout.  Probability-level consistency is
// separated from LP-level feasibility: table data is trusted to 1e-9,
// solver output to 1e-7.
inline constexpr double kProbTol = 1e-9;
inline constexpr double kVerdictSlack = 1e-9;
inline constexpr double kLpTol = 1e-7;
inline constexpr double kEntropyZero = 1e-12;

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Scenario construction or lookup with inconsistent structure.
struct ScenarioError : Error {
  using Error::Error;
};

// Behavior with missing tables or tables that fail validation hard enough
// to make an operation meaningless.
struct BehaviorError : Error {
  using Error::Error;
};

// A requested variable pair is not a context, so the quantity is not
// computable from data.
struct ContextError : Error {
  using Error::Error;
};

// Operation outside the supported family (e.g. even-cycle exclusive-event
// inequalities, nonlinear monogamy bounds).
struct UnsupportedError : Error {
  using Error::Error;
};

// Problem size beyond the hard cap of the dense LP backend.
struct CapacityError : Error {
  using Error::Error;
};

// Quantum measurement family parameters that break the compatibility
// structure they are supposed to realize.
struct IncompatibilityError : Error {
  using Error::Error;
};

// Numerical failure inside the LP solver; never a silently wrong status.
struct SolverError : Error {
  using Error::Error;
};

// Malformed user input (files, CLI names).
struct InputError : Error {
  using Error::Error;
};

}  // namespace ctxdist
