#pragma once

#include "barnes/context.hpp"
#include "barnes/mpreal.hpp"

#include <string>

namespace barnes {

// One verified identity: both sides as decimal strings, the residual and
// the tolerance on a log10 scale, plus pass/fail/flagged.  "flagged" is
// reserved for known-suspect source entries that are reported but never
// counted as failures.
struct IdentityReport {
  std::string identity_id;
  std::string lhs;
  std::string rhs;
  double residual_log10 = -400;
  double tolerance_log10 = 0;
  enum class Status { pass, fail, flagged } status = Status::pass;
  std::string note;
};

inline const char* to_string(IdentityReport::Status s) {
  switch (s) {
    case IdentityReport::Status::pass: return "pass";
    case IdentityReport::Status::fail: return "fail";
    case IdentityReport::Status::flagged: return "flagged";
  }
  return "?";
}

inline IdentityReport make_report(std::string id, const MPReal& lhs, const MPReal& rhs,
                                  double tol_log10, long digits) {
  IdentityReport r;
  r.identity_id = std::move(id);
  r.lhs = lhs.to_string(digits);
  r.rhs = rhs.to_string(digits);
  r.residual_log10 = abs(lhs - rhs).log10_abs();
  r.tolerance_log10 = tol_log10;
  r.status = r.residual_log10 <= tol_log10 ? IdentityReport::Status::pass
                                           : IdentityReport::Status::fail;
  return r;
}

inline IdentityReport make_report(std::string id, const MPComplex& lhs, const MPComplex& rhs,
                                  double tol_log10, long digits) {
  IdentityReport r;
  r.identity_id = std::move(id);
  r.lhs = lhs.re.to_string(digits) + (lhs.im.sign() < 0 ? "" : "+") + lhs.im.to_string(6) + "i";
  r.rhs = rhs.re.to_string(digits) + (rhs.im.sign() < 0 ? "" : "+") + rhs.im.to_string(6) + "i";
  r.residual_log10 = abs(lhs - rhs).log10_abs();
  r.tolerance_log10 = tol_log10;
  r.status = r.residual_log10 <= tol_log10 ? IdentityReport::Status::pass
                                           : IdentityReport::Status::fail;
  return r;
}

}  // namespace barnes
