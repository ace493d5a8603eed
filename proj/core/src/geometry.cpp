#include "lipdyn/geometry.hpp"

#include <cmath>
#include <sstream>

namespace lipdyn {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::domain: return "DomainError";
    case ErrorCode::eval: return "EvalError";
    case ErrorCode::parse: return "ParseError";
    case ErrorCode::coverage_gap: return "CoverageGap";
    case ErrorCode::degenerate_region: return "DegenerateRegion";
    case ErrorCode::not_invariant: return "NotInvariant";
    case ErrorCode::not_hyperbolic: return "NotHyperbolic";
    case ErrorCode::singular: return "Singular";
    case ErrorCode::ill_conditioned: return "IllConditioned";
    case ErrorCode::precondition_failed: return "PreconditionFailed";
    case ErrorCode::no_convergence: return "NoConvergence";
    case ErrorCode::inversion_failure: return "InversionFailure";
    case ErrorCode::lip_blowup: return "LipBlowup";
    case ErrorCode::threshold_exceeded: return "ThresholdExceeded";
    case ErrorCode::not_fixed: return "NotFixed";
    case ErrorCode::degenerate_c: return "DegenerateC";
    case ErrorCode::orbit_escape: return "OrbitEscape";
    case ErrorCode::zero_constant: return "ZeroConstant";
    case ErrorCode::not_asymptotic: return "NotAsymptotic";
    case ErrorCode::escaped_compactum: return "EscapedCompactum";
    case ErrorCode::not_on_set: return "NotOnSet";
    case ErrorCode::regraph_failure: return "RegraphFailure";
    case ErrorCode::depth_exceeded: return "DepthExceeded";
    case ErrorCode::bound_inapplicable: return "BoundInapplicable";
    case ErrorCode::internal: return "InternalError";
  }
  return "UnknownError";
}

std::string to_string(const Vec& v) {
  std::ostringstream os;
  os.precision(17);
  os << "(";
  for (int i = 0; i < v.n; ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ")";
  return os.str();
}

Mat Mat::inverse() const {
  Mat lhs = *this;
  Mat rhs = Mat::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::fabs(lhs(r, col)) > std::fabs(lhs(pivot, col))) pivot = r;
    if (std::fabs(lhs(pivot, col)) < 1e-300)
      fail(ErrorCode::singular, "matrix is singular");
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(lhs(pivot, j), lhs(col, j));
        std::swap(rhs(pivot, j), rhs(col, j));
      }
    }
    double inv = 1.0 / lhs(col, col);
    for (int j = 0; j < n; ++j) {
      lhs(col, j) *= inv;
      rhs(col, j) *= inv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      double factor = lhs(r, col);
      if (factor == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        lhs(r, j) -= factor * lhs(col, j);
        rhs(r, j) -= factor * rhs(col, j);
      }
    }
  }
  return rhs;
}

}  // namespace lipdyn
