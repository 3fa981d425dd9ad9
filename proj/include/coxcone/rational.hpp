#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <string>

#include "coxcone/error.hpp"

namespace coxcone {

// Exact scalar for the whole library. No floating point anywhere.
using Rat = mpq_class;
using Int = mpz_class;

// Parse "p", "-p", "p/q". Rejects empty input, zero denominators and any
// non-numeric garbage instead of letting gmp raise SIGFPE on canonicalize().
inline Rat rat_parse(const std::string& s) {
  auto bad = [&]() -> Rat {
    fail(ErrKind::validation, "not a rational: '" + s + "'");
  };
  if (s.empty()) return bad();
  std::string num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  Int p, q;
  if (p.set_str(num, 10) != 0) return bad();
  if (q.set_str(den, 10) != 0) return bad();
  if (q == 0) return bad();
  Rat r(p, q);
  r.canonicalize();
  return r;
}

// Canonical form: "p" when integral, else "p/q" with q > 0 coprime.
inline std::string rat_str(const Rat& q) { return q.get_str(); }

}  // namespace coxcone

namespace Eigen {

// Glue so Matrix<mpq_class, ...> works. Costs are rough ballparks; Eigen only
// uses them to pick evaluation strategies.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen
