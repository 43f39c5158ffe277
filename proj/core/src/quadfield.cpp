#include "frey13/quadfield.hpp"

#include <sstream>
#include <stdexcept>

namespace frey13 {

QuadElt::QuadElt(BigInt uu, BigInt vv) : u(std::move(uu)), v(std::move(vv)) {
  if ((u - v) % 2 != 0)
    throw std::invalid_argument("quadratic integer needs u = v (mod 2)");
}

QuadElt QuadElt::from_w(const BigInt& a, const BigInt& b) {
  return QuadElt(2 * a, 2 * b);
}

QuadElt QuadElt::conj() const { return QuadElt(u, -v); }

QuadElt operator+(const QuadElt& a, const QuadElt& b) {
  return QuadElt(a.u + b.u, a.v + b.v);
}

QuadElt operator-(const QuadElt& a, const QuadElt& b) {
  return QuadElt(a.u - b.u, a.v - b.v);
}

QuadElt operator-(const QuadElt& a) { return QuadElt(-a.u, -a.v); }

QuadElt operator*(const QuadElt& a, const QuadElt& b) {
  // (u1 + v1 w)(u2 + v2 w)/4 = ((u1 u2 + 13 v1 v2) + (u1 v2 + v1 u2) w)/4
  return QuadElt((a.u * b.u + 13 * a.v * b.v) / 2, (a.u * b.v + a.v * b.u) / 2);
}

QuadElt operator*(const BigInt& n, const QuadElt& a) {
  return QuadElt(n * a.u, n * a.v);
}

BigInt quad_norm(const QuadElt& a) { return (a.u * a.u - 13 * a.v * a.v) / 4; }

BigInt quad_trace(const QuadElt& a) { return a.u; }

std::optional<QuadElt> try_divide(const QuadElt& a, const QuadElt& d) {
  BigInt n = quad_norm(d);
  if (n == 0) throw std::invalid_argument("division by zero");
  QuadElt t = a * d.conj();  // = (a/d) * N(d)
  if (t.u % n != 0 || t.v % n != 0) return std::nullopt;
  BigInt qu = t.u / n, qv = t.v / n;
  if ((qu - qv) % 2 != 0) return std::nullopt;
  return QuadElt(qu, qv);
}

std::string quad_to_string(const QuadElt& a) {
  std::ostringstream os;
  os << "(" << a.u.get_str() << " + " << a.v.get_str() << "*w)/2";
  return os.str();
}

long long QuadPrime::residue_size() const {
  long long q = 1;
  for (int i = 0; i < f; ++i) q *= p;
  return q;
}

int val_at(const QuadPrime& L, const QuadElt& a) {
  if (a.is_zero()) throw std::invalid_argument("valuation of 0");
  int v = 0;
  QuadElt cur = a;
  while (true) {
    auto q = try_divide(cur, L.gen);
    if (!q) return v;
    cur = *q;
    ++v;
  }
}

static long long mod_inverse(long long a, long long p) {
  a %= p;
  if (a < 0) a += p;
  long long r = 1, base = a, e = p - 2;  // p prime
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r;
}

static QuadPrime make_prime(std::string name, long long p, PrimeKind kind,
                            long long u, long long v) {
  QuadPrime L;
  L.name = std::move(name);
  L.p = p;
  L.kind = kind;
  L.f = kind == PrimeKind::Inert ? 2 : 1;
  L.gen = QuadElt(BigInt(static_cast<long>(u)), BigInt(static_cast<long>(v)));
  BigInt n = quad_norm(L.gen);
  long lp = static_cast<long>(p);
  BigInt want = kind == PrimeKind::Inert ? BigInt(lp) * lp : BigInt(lp);
  if (abs(n) != want)
    throw std::logic_error("prime generator for " + L.name + " has wrong norm");
  if (kind == PrimeKind::Split) {
    // gen | (w - r) means w reduces to r = -u/v (mod p)
    long long r = (p - u % p + p) % p * mod_inverse(v, p) % p;
    if ((r * r - 13) % p != 0)
      throw std::logic_error("split root for " + L.name + " is not sqrt(13)");
    L.split_root = r;
  }
  return L;
}

const std::vector<QuadPrime>& named_primes() {
  static const std::vector<QuadPrime> primes = [] {
    std::vector<QuadPrime> v;
    v.push_back(make_prime("L2", 2, PrimeKind::Inert, 4, 0));
    v.push_back(make_prime("L13", 13, PrimeKind::Ramified, 0, 2));
    v.push_back(make_prime("L3_0", 3, PrimeKind::Split, 1, 1));
    v.push_back(make_prime("L3_1", 3, PrimeKind::Split, 1, -1));
    v.push_back(make_prime("L5", 5, PrimeKind::Inert, 10, 0));
    v.push_back(make_prime("L7", 7, PrimeKind::Inert, 14, 0));
    v.push_back(make_prime("L11", 11, PrimeKind::Inert, 22, 0));
    v.push_back(make_prime("L17_0", 17, PrimeKind::Split, 9, 1));
    v.push_back(make_prime("L17_1", 17, PrimeKind::Split, 9, -1));
    v.push_back(make_prime("L23_0", 23, PrimeKind::Split, -5, -3));
    v.push_back(make_prime("L23_1", 23, PrimeKind::Split, 5, -3));
    v.push_back(make_prime("L29_0", 29, PrimeKind::Split, 1, 3));
    v.push_back(make_prime("L29_1", 29, PrimeKind::Split, -1, 3));
    return v;
  }();
  return primes;
}

const QuadPrime& prime_by_name(const std::string& name) {
  for (const auto& L : named_primes())
    if (L.name == name) return L;
  throw std::out_of_range("no prime named " + name);
}

static long long modp(const BigInt& n, long long p) {
  return static_cast<long long>(mpz_fdiv_ui(n.get_mpz_t(), static_cast<unsigned long>(p)));
}

ResidueField::ResidueField(const QuadPrime& L)
    : p_(L.p), f_(L.f), kind_(L.kind), split_root_(L.split_root) {
  q_ = L.residue_size();
  if (p_ != 2) inv2_ = (p_ + 1) / 2;
  if (f_ == 2) {
    if (p_ == 2) {
      // basis {1, th} with th = (1 + w)/2, th^2 = th + 3 = th + 1 mod 2
      p1_ = 1;
      p0_ = 1;
    } else {
      // basis {1, w}, w^2 = 13
      p1_ = 0;
      p0_ = 13 % p_;
    }
  }
}

FFElt ResidueField::from_int(long long n) const {
  long long a = n % p_;
  if (a < 0) a += p_;
  return {a, 0};
}

FFElt ResidueField::add(FFElt x, FFElt y) const {
  return {(x.a + y.a) % p_, (x.b + y.b) % p_};
}

FFElt ResidueField::sub(FFElt x, FFElt y) const {
  return {(x.a - y.a + p_) % p_, (x.b - y.b + p_) % p_};
}

FFElt ResidueField::neg(FFElt x) const {
  return {(p_ - x.a) % p_, (p_ - x.b) % p_};
}

FFElt ResidueField::mul(FFElt x, FFElt y) const {
  // (a + b th)(c + d th) with th^2 = p1 th + p0
  long long cross = (x.a * y.b + x.b * y.a) % p_;
  long long sq = x.b * y.b % p_;
  return {(x.a * y.a + sq * p0_) % p_, (cross + sq * p1_) % p_};
}

FFElt ResidueField::pow(FFElt x, long long e) const {
  FFElt r = one(), base = x;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

FFElt ResidueField::inv(FFElt x) const {
  if (is_zero(x)) throw std::domain_error("inverse of zero residue");
  return pow(x, q_ - 2);
}

FFElt ResidueField::reduce(const QuadElt& e) const {
  switch (kind_) {
    case PrimeKind::Split: {
      long long t = (modp(e.u, p_) + modp(e.v, p_) * split_root_) % p_;
      return {t * inv2_ % p_, 0};
    }
    case PrimeKind::Ramified:
      return {modp(e.u, p_) * inv2_ % p_, 0};
    case PrimeKind::Inert:
      if (p_ == 2) {
        // (u + v w)/2 = (u - v)/2 + v th
        return {modp((e.u - e.v) / 2, 2), modp(e.v, 2)};
      }
      return {modp(e.u, p_) * inv2_ % p_, modp(e.v, p_) * inv2_ % p_};
  }
  throw std::logic_error("unreachable");
}

QuadElt ResidueField::lift(FFElt x) const {
  if (kind_ == PrimeKind::Inert && p_ == 2)
    return QuadElt(BigInt(static_cast<long>(2 * x.a + x.b)), BigInt(static_cast<long>(x.b)));
  if (f_ == 2) return QuadElt(BigInt(static_cast<long>(2 * x.a)), BigInt(static_cast<long>(2 * x.b)));
  return QuadElt(BigInt(static_cast<long>(2 * x.a)), BigInt(0));
}

FFElt ResidueField::sqrt_frobenius(FFElt x) const {
  if (p_ != 2) throw std::logic_error("frobenius square root needs characteristic 2");
  return pow(x, q_ / 2);
}

std::vector<FFElt> ResidueField::elements() const {
  std::vector<FFElt> out;
  out.reserve(static_cast<size_t>(q_));
  if (f_ == 1) {
    for (long long a = 0; a < p_; ++a) out.push_back({a, 0});
  } else {
    for (long long a = 0; a < p_; ++a)
      for (long long b = 0; b < p_; ++b) out.push_back({a, b});
  }
  return out;
}

}  // namespace frey13
