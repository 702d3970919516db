#pragma once

#include "hcn/arith.hpp"
#include "hcn/interval.hpp"
#include "oracle.hpp"

namespace test_support {

inline bool encloses(const hcn::Interval& x, const oracle::Real& r) {
  return mpfr_cmp(x.lo().get(), r.get()) <= 0 && mpfr_cmp(r.get(), x.hi().get()) <= 0;
}

inline bool near(const hcn::Interval& x, double value, double tol) {
  return x.lower_double() > value - tol && x.upper_double() < value + tol;
}

inline hcn::FactoredNumber num(std::uint64_t n) { return hcn::factor(n); }

}  // namespace test_support
