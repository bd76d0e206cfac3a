#pragma once

#include <map>
#include <string>
#include <vector>

#include "weylphi/matrix.hpp"

namespace weylphi {

// Integer polynomial, coefficients from degree 0 upward.
using IntPoly = std::vector<long long>;

// det(x I - A), computed without division (Berkowitz).
IntPoly charpoly(const IntMatrix& a);
IntPoly cyclotomic_poly(int d);
long long eval(const IntPoly& f, long long x);
// Exact quotient f / g; throws if g does not divide f.
IntPoly poly_divide(const IntPoly& f, const IntPoly& g);

// Product of cyclotomic polynomials, d -> multiplicity.
struct CycloSignature {
  std::map<int, int> mult;

  int degree() const;
  // "Phi2^2Phi6"
  std::string to_string() const;
  // "2.2.6", indices repeated by multiplicity
  std::string key() const;
  static CycloSignature parse_key(const std::string& key);
  int multiplicity(int d) const {
    auto it = mult.find(d);
    return it == mult.end() ? 0 : it->second;
  }
  bool operator==(const CycloSignature&) const = default;
  auto operator<=>(const CycloSignature&) const = default;
};

struct NonCyclotomicFactor : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Throws NonCyclotomicFactor if something is left over.
CycloSignature factor_cyclotomic(IntPoly f);

}  // namespace weylphi
