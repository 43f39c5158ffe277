#include "frey13/frey.hpp"

#include <algorithm>
#include <stdexcept>

namespace frey13 {

QuadElt QuadPoly::eval(const BigInt& x, const BigInt& y) const {
  std::vector<BigInt> xp(static_cast<size_t>(degree) + 1), yp(xp.size());
  xp[0] = 1;
  yp[0] = 1;
  for (size_t i = 1; i < xp.size(); ++i) {
    xp[i] = xp[i - 1] * x;
    yp[i] = yp[i - 1] * y;
  }
  QuadElt acc;
  for (int i = 0; i <= degree; ++i)
    acc = acc + (xp[static_cast<size_t>(degree - i)] * yp[static_cast<size_t>(i)]) *
                    coeff[static_cast<size_t>(i)];
  return acc;
}

bool QuadPoly::operator==(const QuadPoly& o) const {
  return degree == o.degree && coeff == o.coeff;
}

QuadPoly operator+(const QuadPoly& p, const QuadPoly& q) {
  if (p.degree != q.degree) throw std::logic_error("adding forms of unequal degree");
  QuadPoly r = p;
  for (size_t i = 0; i < r.coeff.size(); ++i) r.coeff[i] = r.coeff[i] + q.coeff[i];
  return r;
}

QuadPoly operator-(const QuadPoly& p, const QuadPoly& q) {
  if (p.degree != q.degree)
    throw std::logic_error("subtracting forms of unequal degree");
  QuadPoly r = p;
  for (size_t i = 0; i < r.coeff.size(); ++i) r.coeff[i] = r.coeff[i] - q.coeff[i];
  return r;
}

QuadPoly operator*(const QuadPoly& p, const QuadPoly& q) {
  QuadPoly r;
  r.degree = p.degree + q.degree;
  r.coeff.assign(static_cast<size_t>(r.degree) + 1, QuadElt{});
  for (size_t i = 0; i < p.coeff.size(); ++i)
    for (size_t j = 0; j < q.coeff.size(); ++j)
      r.coeff[i + j] = r.coeff[i + j] + p.coeff[i] * q.coeff[j];
  return r;
}

QuadPoly operator*(const BigInt& n, const QuadPoly& p) {
  QuadPoly r = p;
  for (auto& c : r.coeff) c = n * c;
  return r;
}

QuadPoly conj(const QuadPoly& p) {
  QuadPoly r = p;
  for (auto& c : r.coeff) c = c.conj();
  return r;
}

bool is_zero(const QuadPoly& p) {
  for (const auto& c : p.coeff)
    if (!(c == QuadElt{})) return false;
  return true;
}

namespace {

CycElt zp(int k) { return CycElt::zeta_pow(k); }

CycPoly quadratic_form(const CycElt& mid) {
  CycPoly f;
  f.degree = 2;
  f.coeff = {CycElt::one(), mid, CycElt::one()};
  return f;
}

CycPoly scale(const CycElt& s, const CycPoly& p) {
  CycPoly r = p;
  for (auto& c : r.coeff) c = s * c;
  return r;
}

CycPoly add(const CycPoly& p, const CycPoly& q) {
  if (p.degree != q.degree) throw std::logic_error("adding forms of unequal degree");
  CycPoly r = p;
  for (size_t i = 0; i < r.coeff.size(); ++i)
    r.coeff[i] = r.coeff[i] + q.coeff[i];
  return r;
}

CycPoly sub(const CycPoly& p, const CycPoly& q) {
  if (p.degree != q.degree) throw std::logic_error("subtracting forms of unequal degree");
  CycPoly r = p;
  for (size_t i = 0; i < r.coeff.size(); ++i)
    r.coeff[i] = r.coeff[i] - q.coeff[i];
  return r;
}

CycPoly scale_int(long long n, const CycPoly& p) {
  return scale(CycElt::integer(BigInt(static_cast<long>(n))), p);
}

bool is_zero_form(const CycPoly& p) {
  for (const auto& c : p.coeff)
    if (!c.is_zero()) return false;
  return true;
}

QuadPoly descend_form(const CycPoly& p) {
  QuadPoly r;
  r.degree = p.degree;
  r.coeff.reserve(p.coeff.size());
  for (const auto& c : p.coeff) r.coeff.push_back(descend(c));
  return r;
}

struct FamilyScalars {
  CycElt alpha, beta, gamma;
  CycPoly f1, f2, f3;
};

FamilyScalars scalars() {
  FamilyScalars s;
  s.f1 = quadratic_form(zp(1) + zp(12));
  s.f2 = quadratic_form(zp(4) + zp(9));
  s.f3 = quadratic_form(zp(3) + zp(10));
  s.alpha = -zp(10) + zp(9) + zp(4) - zp(3);
  s.beta = zp(12) - zp(9) - zp(4) + zp(1);
  s.gamma = -zp(12) + zp(10) + zp(3) - zp(1);
  return s;
}

FreyFamily build_family() {
  auto s = scalars();
  const CycElt &alpha = s.alpha, &beta = s.beta, &gamma = s.gamma;
  const CycPoly &f1 = s.f1, &f2 = s.f2, &f3 = s.f3;

  if (!(f1 * f2 * f3 == phi_qr()))
    throw std::logic_error("f1 f2 f3 is not the residue sextic");
  for (const CycElt* e : {&alpha, &beta, &gamma})
    if (norm(*e) != 169) throw std::logic_error("scalar norm is not 13^2");
  if (norm(alpha * beta * gamma) != BigInt(4826809))
    throw std::logic_error("scalar product norm is not 13^6");
  if (!(sigma_pow(alpha, 4) == beta) || !(sigma_pow(beta, 4) == gamma) ||
      !(sigma_pow(gamma, 4) == alpha))
    throw std::logic_error("sigma^4 does not cycle the scalars");
  if (!(sigma_pow(f1, 4) == f3) || !(sigma_pow(f3, 4) == f2) ||
      !(sigma_pow(f2, 4) == f1))
    throw std::logic_error("sigma^4 does not cycle the forms");

  FreyFamily F;
  F.f1 = f1;
  F.f2 = f2;
  F.f3 = f3;
  F.alpha = alpha;
  F.beta = beta;
  F.gamma = gamma;
  // pair each scalar with the form that makes the sum vanish; the naive
  // (f1, f2, f3) order does not (see vanishing_pairing)
  F.A = scale(alpha, f1);
  F.B = scale(beta, f3);
  F.C = scale(gamma, f2);

  if (!is_zero_form(add(add(F.A, F.B), F.C)))
    throw std::logic_error("A + B + C must vanish");
  if (!(sigma_pow(F.A, 4) == F.B) || !(sigma_pow(F.B, 4) == F.C) ||
      !(sigma_pow(F.C, 4) == F.A))
    throw std::logic_error("sigma^4 does not cycle A, B, C");

  // y^2 = x(x - A)(x + B): c4 = 16 (A^2 + AB + B^2),
  // c6 = -32 (B - A)(2A + B)(A + 2B), disc = 16 (ABC)^2
  CycPoly c4 = scale_int(16, add(add(F.A * F.A, F.A * F.B), F.B * F.B));
  CycPoly c6 = scale_int(-32, sub(F.B, F.A) *
                                  add(scale_int(2, F.A), F.B) *
                                  add(F.A, scale_int(2, F.B)));
  CycPoly abc = F.A * F.B * F.C;
  CycPoly disc = scale_int(16, abc * abc);
  if (!is_zero_form(sub(sub(c4 * c4 * c4, c6 * c6), scale_int(1728, disc))))
    throw std::logic_error("c4^3 - c6^2 = 1728 disc fails");

  F.a4 = descend_form(scale_int(-27, c4));
  F.a6 = descend_form(scale_int(-54, c6));
  return F;
}

}  // namespace

const FreyFamily& frey_family() {
  static const FreyFamily F = build_family();
  return F;
}

bool naive_pairing_vanishes() {
  auto s = scalars();
  CycPoly sum = add(add(scale(s.alpha, s.f1), scale(s.beta, s.f2)),
                    scale(s.gamma, s.f3));
  return is_zero_form(sum);
}

std::array<int, 3> vanishing_pairing() {
  auto s = scalars();
  const CycPoly* forms[3] = {&s.f1, &s.f2, &s.f3};
  const CycElt* sc[3] = {&s.alpha, &s.beta, &s.gamma};
  std::array<int, 3> found{};
  int hits = 0;
  std::array<int, 3> p = {0, 1, 2};
  do {
    CycPoly sum = add(add(scale(*sc[0], *forms[p[0]]), scale(*sc[1], *forms[p[1]])),
                      scale(*sc[2], *forms[p[2]]));
    if (is_zero_form(sum)) {
      found = p;
      ++hits;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  if (hits != 1) throw std::logic_error("expected exactly one vanishing pairing");
  return found;
}

namespace {

QuadElt w_elt(long long rational, long long root) {
  return QuadElt::from_w(BigInt(static_cast<long>(rational)), BigInt(static_cast<long>(root)));
}

}  // namespace

QuadPoly reference_a4() {
  QuadPoly p;
  p.degree = 4;
  p.coeff = {w_elt(-2808, 216), w_elt(5616, -1728), w_elt(-11232, 1728),
             w_elt(5616, -1728), w_elt(-2808, 216)};
  return p;
}

QuadPoly reference_a6() {
  QuadPoly p;
  p.degree = 6;
  p.coeff = {w_elt(44928, -8640),   w_elt(-235872, 49248),
             w_elt(471744, -129600), w_elt(-662688, 152928),
             w_elt(471744, -129600), w_elt(-235872, 49248),
             w_elt(44928, -8640)};
  return p;
}

QuadElt reference_a6_extra_b6_term() { return w_elt(182520, 50193); }

FreyCoeffs frey_at(const BigInt& a, const BigInt& b) {
  const FreyFamily& F = frey_family();
  return {F.a4.eval(a, b), F.a6.eval(a, b)};
}

QuadPoly family_disc() {
  const FreyFamily& F = frey_family();
  QuadPoly a43 = F.a4 * F.a4 * F.a4;
  QuadPoly a62 = F.a6 * F.a6;
  return BigInt(-16) * (BigInt(4) * a43 + BigInt(27) * a62);
}

QuadPoly family_disc_from_cyc() {
  auto s = scalars();
  CycPoly A = scale(s.alpha, s.f1);
  CycPoly B = scale(s.beta, s.f3);
  CycPoly C = scale(s.gamma, s.f2);
  CycPoly abc = A * B * C;
  CycPoly disc = scale_int(16, abc * abc);
  // rescaling a4 = -27 c4, a6 = -54 c6 multiplies the discriminant by 6^12
  return descend_form(scale_int(2176782336LL, disc));
}

namespace {

struct CycInvariants {
  CycPoly c4, c6, disc;
};

CycInvariants invariants_raw() {
  auto s = scalars();
  CycPoly A = scale(s.alpha, s.f1);
  CycPoly B = scale(s.beta, s.f3);
  CycPoly C = scale(s.gamma, s.f2);
  CycInvariants inv;
  inv.c4 = scale_int(16, add(add(A * A, A * B), B * B));
  inv.c6 = scale_int(-32, sub(B, A) * add(scale_int(2, A), B) * add(A, scale_int(2, B)));
  CycPoly abc = A * B * C;
  inv.disc = scale_int(16, abc * abc);
  return inv;
}

}  // namespace

std::pair<CycPoly, CycPoly> family_invariants_cyc() {
  CycInvariants inv = invariants_raw();
  return {scale_int(-27, inv.c4), scale_int(-54, inv.c6)};
}

bool family_invariant_identity_holds() {
  CycInvariants inv = invariants_raw();
  return is_zero_form(
      sub(sub(inv.c4 * inv.c4 * inv.c4, inv.c6 * inv.c6), scale_int(1728, inv.disc)));
}

}  // namespace frey13
