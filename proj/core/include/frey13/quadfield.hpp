#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frey13/exactalg.hpp"

namespace frey13 {

// Ring of integers of Q(sqrt(13)): elements (u + v*w)/2 with w = sqrt(13)
// and u = v (mod 2). Stored as the pair (u, v); the fundamental domain is
// exact, no reduction needed.
struct QuadElt {
  BigInt u, v;

  QuadElt() : u(0), v(0) {}
  QuadElt(BigInt uu, BigInt vv);  // checks parity
  static QuadElt integer(const BigInt& n) { return QuadElt(2 * n, 0); }
  static QuadElt from_w(const BigInt& a, const BigInt& b);  // a + b*w

  bool is_zero() const { return u == 0 && v == 0; }
  bool operator==(const QuadElt& o) const { return u == o.u && v == o.v; }

  QuadElt conj() const;  // w -> -w
};

QuadElt operator+(const QuadElt& a, const QuadElt& b);
QuadElt operator-(const QuadElt& a, const QuadElt& b);
QuadElt operator-(const QuadElt& a);
QuadElt operator*(const QuadElt& a, const QuadElt& b);
QuadElt operator*(const BigInt& n, const QuadElt& a);

// field norm to Q, lands in Z: N((u + v*w)/2) = (u^2 - 13 v^2)/4
BigInt quad_norm(const QuadElt& a);
BigInt quad_trace(const QuadElt& a);  // = u

// Exact division in the ring of integers; nullopt if d does not divide a.
std::optional<QuadElt> try_divide(const QuadElt& a, const QuadElt& d);

std::string quad_to_string(const QuadElt& a);

enum class PrimeKind { Split, Inert, Ramified };

// A prime of Q(sqrt(13)) given by an explicit generator (the class number
// is 1, so every prime is principal).
struct QuadPrime {
  std::string name;   // e.g. "L3_0"
  long long p;        // rational prime below
  PrimeKind kind;
  int f;              // residue degree
  QuadElt gen;
  // for split primes: the root r of t^2 = 13 (mod p) with gen | (w - r),
  // i.e. reduction sends w to r
  long long split_root = 0;

  long long residue_size() const;  // p^f
};

// prime valuation: largest k with gen^k | a, for nonzero a
int val_at(const QuadPrime& L, const QuadElt& a);

// The named primes used throughout: L2 (inert 2), L13 (ramified),
// both primes over each of 3, 17, 23, 29, and the inert primes 5, 7, 11.
// Generators are validated on construction (norm, split root).
const std::vector<QuadPrime>& named_primes();
const QuadPrime& prime_by_name(const std::string& name);

// Residue field k = F_{p^f} presented on a basis {1, th} with
// th^2 = p1*th + p0; degree-1 fields take th = 0. Arithmetic in int64,
// safe for p^f <= 29^2 used here.
struct FFElt {
  long long a = 0, b = 0;  // a + b*th
  bool operator==(const FFElt& o) const { return a == o.a && b == o.b; }
  bool operator!=(const FFElt& o) const { return !(*this == o); }
};

class ResidueField {
 public:
  explicit ResidueField(const QuadPrime& L);

  long long p() const { return p_; }
  int degree() const { return f_; }
  long long size() const { return q_; }

  FFElt zero() const { return {}; }
  FFElt one() const { return {1, 0}; }
  FFElt from_int(long long n) const;

  FFElt add(FFElt x, FFElt y) const;
  FFElt sub(FFElt x, FFElt y) const;
  FFElt neg(FFElt x) const;
  FFElt mul(FFElt x, FFElt y) const;
  FFElt pow(FFElt x, long long e) const;
  FFElt inv(FFElt x) const;  // throws on zero

  bool is_zero(FFElt x) const { return x.a == 0 && x.b == 0; }

  // image of a ring element under reduction mod L
  FFElt reduce(const QuadElt& a) const;
  // any preimage in the ring of the given residue
  QuadElt lift(FFElt x) const;

  // square root via Frobenius, only valid in characteristic 2 where
  // squaring is bijective: returns x^(q/2)
  FFElt sqrt_frobenius(FFElt x) const;

  // all q elements, fixed iteration order
  std::vector<FFElt> elements() const;

 private:
  long long p_, q_;
  int f_;
  long long p0_ = 0, p1_ = 0;  // th^2 = p1*th + p0
  PrimeKind kind_;
  long long split_root_ = 0;
  long long inv2_ = 0;  // inverse of 2 mod p (odd p)
};

}  // namespace frey13
