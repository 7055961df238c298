#pragma once

#include <stdexcept>
#include <string>

namespace moorecat {

// Every error raised by the library derives from `error`. The concrete
// subclasses name the contract that was broken so callers (and the CLI)
// can map them onto exit codes without parsing messages.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input violated a type invariant (non-monotone breaks, nonpositive length,
// malformed rational, duplicate label, ...).
struct validation_error : error {
  using error::error;
};

struct domain_error : error {
  using error::error;
};

struct composition_error : error {
  using error::error;
};

struct split_error : error {
  using error::error;
};

struct action_error : error {
  using error::error;
};

struct morphism_error : error {
  using error::error;
};

struct representative_error : error {
  using error::error;
};

struct collapse_error : error {
  using error::error;
};

struct braid_error : error {
  using error::error;
};

struct transpose_error : error {
  using error::error;
};

struct grouping_error : error {
  using error::error;
};

// Bad command-line or harness request (unknown suite name, ...).
struct usage_error : error {
  using error::error;
};

}  // namespace moorecat
