#include "sgforge/tangent_cone.hpp"

namespace sgforge {

namespace {

void require_certified(const DeterminantalCertificate& cert) {
  if (!cert.certified) throw Error(ErrorCode::Uncertified, "determinantal certificate was not certified");
}

Int criterion_lhs(const DeterminantalCertificate& cert) {
  switch (cert.branch) {
    case Branch::J1: return cert.h1 + 1;
    case Branch::JnMinus1: return cert.p;  // (h1 + 1 + alpha) / ell
    case Branch::Med: return cert.ell;
  }
  return 0;
}

}  // namespace

bool cm_by_formula(const DeterminantalCertificate& cert) {
  require_certified(cert);
  if (cert.branch == Branch::Med) return true;
  return criterion_lhs(cert) >= cert.ell;
}

SallyVerdict cm_by_sally(const NumericalSemigroup& H, const DeterminantalCertificate& cert) {
  require_certified(cert);
  SallyVerdict v;
  if (cert.branch == Branch::Med) return v;
  const Int target = checked_sub(checked_mul(cert.ell + 1, *cert.b), H.multiplicity());
  v.target = target;
  v.witness = max_order_factorization(H, target);
  if (!v.witness) {
    throw Error(ErrorCode::NotInSemigroup, "(ell+1)b - a1 = " + std::to_string(target) + " is not in H");
  }
  v.order = v.witness->length;
  v.cohen_macaulay = *v.order >= cert.ell;
  return v;
}

CmShortcuts cm_shortcuts(const DeterminantalCertificate& cert) {
  require_certified(cert);
  CmShortcuts s;
  const Int ell = cert.ell;
  if (cert.branch == Branch::JnMinus1 && cert.h1 >= ell * ell - ell - cert.alpha) s.h1_bound = true;
  if (cert.branch == Branch::JnMinus1 && ell == 2) s.ell_two_last = true;
  if (ell == 2 && cert.branch != Branch::Med) {
    const bool not_cm = cert.branch == Branch::J1 && cert.h == *cert.b && *cert.b == cert.a + cert.alpha;
    s.ell_two_iff = !not_cm;
  }
  return s;
}

TangentConeReport analyze_tangent_cone(const NumericalSemigroup& H, const DeterminantalCertificate& cert) {
  TangentConeReport r;
  r.branch = cert.branch;
  r.cm_formula = cm_by_formula(cert);
  r.sally = cm_by_sally(H, cert);
  r.shortcuts = cm_shortcuts(cert);
  r.criterion_lhs = criterion_lhs(cert);
  r.criterion_rhs = cert.ell;
  return r;
}

}  // namespace sgforge
