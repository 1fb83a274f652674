#include "sgforge/families.hpp"

#include <numeric>
#include <string>
#include <vector>

#include "sgforge/stretched.hpp"

namespace sgforge {

namespace {

void check_ranges(const FamilyParams& p) {
  if (p.ell < 2 || p.n < 3 || p.alpha <= 0 || p.h1 < 0) {
    throw Error(ErrorCode::PreconditionFailed, "need ell >= 2, n >= 3, alpha > 0, h1 >= 0");
  }
  if (std::gcd(p.a(), p.alpha) != 1) {
    throw Error(ErrorCode::PreconditionFailed,
                "gcd(a, alpha) = gcd(" + std::to_string(p.a()) + ", " + std::to_string(p.alpha) + ") != 1");
  }
}

NumericalSemigroup build_and_validate(const std::vector<Int>& raw, const FamilyParams& p, Int expected_h) {
  NumericalSemigroup H = [&] {
    try {
      return make_semigroup(raw);
    } catch (const Error& e) {
      throw Error(ErrorCode::ValidationFailed, e.what());
    }
  }();
  std::string broken;
  if (static_cast<Int>(H.embedding_dimension()) != p.n) broken += " embedding_dimension";
  if (H.multiplicity() != p.a()) broken += " multiplicity";
  if (!is_stretched(stretched_profile(H))) broken += " stretched";
  const auto profile = arithmetic_pf_profile(H);
  if (!profile || profile->h != expected_h || profile->alpha != p.alpha) broken += " arithmetic_pf";
  if (!broken.empty()) throw Error(ErrorCode::ValidationFailed, "failed:" + broken);
  return H;
}

}  // namespace

NumericalSemigroup family_j1(const FamilyParams& p) {
  check_ranges(p);
  const Int a = p.a();
  const Int b = checked_add(checked_mul(p.h1 + 1, a), p.alpha);
  std::vector<Int> raw{a, b};
  for (Int i = 1; i <= p.n - 2; ++i) raw.push_back(checked_add(checked_mul(p.ell, b), i * p.alpha));
  const Int h = checked_add(checked_mul(p.h1, a), checked_mul(p.ell - 1, b));
  return build_and_validate(raw, p, h);
}

NumericalSemigroup family_jn1(const FamilyParams& p) {
  check_ranges(p);
  const Int a = p.a();
  if ((p.h1 + 1 + p.alpha) % p.ell != 0) {
    throw Error(ErrorCode::PreconditionFailed, "(h1 + 1 + alpha) / ell is not an integer");
  }
  const Int q = (p.h1 + 1 + p.alpha) / p.ell;
  const Int b = checked_sub(checked_mul(q, a), p.alpha);
  if (b <= a) throw Error(ErrorCode::PreconditionFailed, "b = " + std::to_string(b) + " must exceed a");
  std::vector<Int> raw{a};
  for (Int i = p.n - 2; i >= 1; --i) raw.push_back(checked_sub(checked_mul(p.ell, b), i * p.alpha));
  raw.push_back(b);
  return build_and_validate(raw, p, checked_mul(p.h1, a));
}

}  // namespace sgforge
