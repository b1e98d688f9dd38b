#pragma once

#include <stdexcept>
#include <string>

namespace flagschur {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : Error {
  using Error::Error;
};

// Division of Laurent polynomials left a nonzero remainder.
struct NotDivisible : Error {
  using Error::Error;
};

// eval_even was handed a polynomial with an odd power of v.
struct OddExponent : Error {
  using Error::Error;
};

struct NoFit : Error {
  using Error::Error;
};

struct Underdetermined : Error {
  using Error::Error;
};

struct TooLarge : Error {
  using Error::Error;
};

// Left factor of a product matches none of the multiplication formulas.
struct UnsupportedShape : Error {
  using Error::Error;
};

// co(left) != ro(right), or mismatched n / d.
struct Incompatible : Error {
  using Error::Error;
};

struct ChainInfeasible : Error {
  using Error::Error;
};

struct NoStabilization : Error {
  using Error::Error;
};

struct AnsatzFailure : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace flagschur
