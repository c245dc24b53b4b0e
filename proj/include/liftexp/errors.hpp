#pragma once

#include <stdexcept>
#include <string>

namespace liftexp {

// Base of the library's exception taxonomy. The CLI maps the three branches
// below onto its exit codes: input_error and subclasses -> 1 (bad arguments
// or unmet preconditions), resource_error -> 2 (a configured budget ran out),
// invariant_violation -> 3 (a theorem-backed check failed, the alarming case).
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct input_error : error {
  using error::error;
};

struct range_error : input_error {
  using input_error::input_error;
};

// valuation of zero requested
struct undefined_valuation_error : input_error {
  using input_error::input_error;
};

// p divides a base it must be coprime to
struct base_divisible_error : input_error {
  using input_error::input_error;
};

// p does not divide a^n +/- b^n, so the identity does not apply
struct not_divisible_error : input_error {
  using input_error::input_error;
};

// a case the underlying statement deliberately excludes (p = 2, plus, n even)
struct out_of_scope_error : input_error {
  using input_error::input_error;
};

// the n = 1 reduction's hypothesis p | a +/- b fails
struct hypothesis_error : input_error {
  using input_error::input_error;
};

// construct_base parameter checks failed
struct construction_error : input_error {
  using input_error::input_error;
};

// a supplied factorization does not multiply back to its claimed value
struct certification_error : input_error {
  using input_error::input_error;
};

// x^n + y^n = z^n does not hold for the given inputs
struct not_a_solution_error : input_error {
  using input_error::input_error;
};

// a work budget (bits, factoring iterations, valuation cap) was exceeded
struct resource_error : error {
  using error::error;
};

// two independently computed values that a theorem forces equal disagreed
struct invariant_violation : error {
  using error::error;
};

} // namespace liftexp
