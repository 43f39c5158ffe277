#include "frey13/traces.hpp"

#include <mutex>
#include <set>
#include <stdexcept>

#include "frey13/frey.hpp"
#include "frey13/localred.hpp"
#include "frey13/parallel.hpp"

namespace frey13 {

namespace {

class Counter {
 public:
  explicit Counter(const ResidueField& k) : k_(k), elts_(k.elements()) {
    sq_.assign(static_cast<size_t>(k.size()), 0);
    for (FFElt e : elts_) ++sq_[idx(k_.mul(e, e))];
  }

  size_t idx(FFElt e) const { return static_cast<size_t>(e.a + e.b * k_.p()); }

  // projective count of y^2 = x^3 + a4 x + a6 (odd characteristic)
  long long count_short(FFElt a4, FFElt a6) const {
    long long n = 1;
    for (FFElt x : elts_) {
      FFElt v = k_.add(k_.mul(k_.mul(x, x), x), k_.add(k_.mul(a4, x), a6));
      n += sq_[idx(v)];
    }
    return n;
  }

 private:
  ResidueField k_;
  std::vector<FFElt> elts_;
  std::vector<int> sq_;
};

bool on_curve(const ResidueField& k, FFElt a1, FFElt a2, FFElt a3, FFElt a4,
              FFElt a6, FFElt x, FFElt y) {
  FFElt x2 = k.mul(x, x);
  FFElt lhs = k.add(k.mul(y, y), k.add(k.mul(a1, k.mul(x, y)), k.mul(a3, y)));
  FFElt rhs = k.add(k.mul(x2, x), k.add(k.mul(a2, x2), k.add(k.mul(a4, x), a6)));
  return lhs == rhs;
}

struct Engine {
  const QuadPrime& L;
  ResidueField k;
  Counter counter;
  long long l;
  std::vector<FFElt> a4red, a6red;

  explicit Engine(const QuadPrime& prime)
      : L(prime), k(prime), counter(k), l(prime.p) {
    const FreyFamily& F = frey_family();
    if (l >= 5) {
      for (const auto& c : F.a4.coeff) a4red.push_back(k.reduce(c));
      for (const auto& c : F.a6.coeff) a6red.push_back(k.reduce(c));
    }
  }

  FFElt eval_form(const std::vector<FFElt>& cf, FFElt x, FFElt y) const {
    const size_t d = cf.size() - 1;
    std::vector<FFElt> xp(d + 1), yp(d + 1);
    xp[0] = yp[0] = k.one();
    for (size_t i = 1; i <= d; ++i) {
      xp[i] = k.mul(xp[i - 1], x);
      yp[i] = k.mul(yp[i - 1], y);
    }
    FFElt acc = k.zero();
    for (size_t i = 0; i <= d; ++i)
      acc = k.add(acc, k.mul(cf[i], k.mul(xp[d - i], yp[i])));
    return acc;
  }

  int checked_trace(long long npoints) const {
    long long q = k.size();
    long long a = q + 1 - npoints;
    if (a * a > 4 * q)
      throw std::logic_error("point count violates the Weil bound at " + L.name);
    return static_cast<int>(a);
  }

  // nullopt marks a class where the curve degenerates multiplicatively
  // (the prime divides the third factor of the family); such classes carry
  // no good-reduction trace and the enumeration excludes them
  std::optional<int> at(long long x, long long y) const {
    if (l >= 5) {
      FFElt xr = k.from_int(x), yr = k.from_int(y);
      FFElt A4 = eval_form(a4red, xr, yr);
      FFElt A6 = eval_form(a6red, xr, yr);
      // disc = -16 (4 A4^3 + 27 A6^2), c4 = -48 A4
      FFElt d = k.mul(k.from_int(-16),
                      k.add(k.mul(k.from_int(4), k.mul(k.mul(A4, A4), A4)),
                            k.mul(k.from_int(27), k.mul(A6, A6))));
      if (!k.is_zero(d)) return checked_trace(counter.count_short(A4, A6));
      if (!k.is_zero(k.mul(k.from_int(-48), A4))) return std::nullopt;
      throw std::logic_error("additive class in the trace grid at " + L.name);
    }
    // residue characteristic 3: the integral model is non-minimal there;
    // classify it, demand good reduction, count on the minimal model
    FreyCoeffs co = frey_at(BigInt(static_cast<long>(x)), BigInt(static_cast<long>(y)));
    QuadCurve E{QuadElt(), QuadElt(), QuadElt(), co.a4, co.a6};
    LocalData ld = tate_local(E, L);
    if (ld.type != KodairaType::I0 || ld.f != 0)
      throw std::logic_error("expected good reduction at " + L.name);
    long long n = count_points_general(
        k, k.reduce(ld.minimal.a1), k.reduce(ld.minimal.a2),
        k.reduce(ld.minimal.a3), k.reduce(ld.minimal.a4), k.reduce(ld.minimal.a6));
    return checked_trace(n);
  }
};

}  // namespace

long long count_points_short(const ResidueField& k, FFElt a4, FFElt a6) {
  if (k.p() == 2)
    throw std::invalid_argument("short model is singular in characteristic 2");
  return Counter(k).count_short(a4, a6);
}

long long count_points_general(const ResidueField& k, FFElt a1, FFElt a2,
                               FFElt a3, FFElt a4, FFElt a6) {
  long long n = 1;
  for (FFElt x : k.elements())
    for (FFElt y : k.elements())
      if (on_curve(k, a1, a2, a3, a4, a6, x, y)) ++n;
  return n;
}

long long count_points_general_swapped(const ResidueField& k, FFElt a1,
                                       FFElt a2, FFElt a3, FFElt a4, FFElt a6) {
  long long n = 1;
  for (FFElt y : k.elements())
    for (FFElt x : k.elements())
      if (on_curve(k, a1, a2, a3, a4, a6, x, y)) ++n;
  return n;
}

TraceResult trace_set(const QuadPrime& L, const TraceOptions& opt) {
  if (L.p == 2 || L.p == 13)
    throw std::invalid_argument("trace enumeration excludes " + L.name);
  Engine eng(L);
  const long long l = L.p;
  const long long maxmod =
      opt.lift_modulus > 0 ? opt.lift_modulus : (l == 3 ? 27 : l * l);

  TraceResult res;
  res.prime_name = L.name;
  for (long long m = l; m <= maxmod; m *= l) res.grids.push_back(m);

  std::set<int> base;
  for (size_t gi = 0; gi < res.grids.size(); ++gi) {
    const long long m = res.grids[gi];
    std::set<int> cur;
    long long scanned = 0, skipped = 0;
    std::mutex mu;
    parallel_blocks(m, opt.workers, [&](long long lo, long long hi, int) {
      std::set<int> local;
      long long lscan = 0, lskip = 0;
      for (long long a = lo; a < hi; ++a) {
        for (long long b = 0; b < m; ++b) {
          if (a % l == 0 && b % l == 0) continue;
          if (opt.d != 0 && opt.d == l) {
            long long sum = opt.squares ? (a * a + b * b) % l : (a + b) % l;
            if (sum != 0) continue;
          }
          long long x = a, y = b;
          if (opt.squares) {
            x = a * a % m;
            y = b * b % m;
          }
          ++lscan;
          auto t = eng.at(x, y);
          if (!t) {
            ++lskip;
            continue;
          }
          local.insert(*t);
        }
      }
      std::lock_guard<std::mutex> g(mu);
      cur.insert(local.begin(), local.end());
      scanned += lscan;
      skipped += lskip;
    });
    res.classes_scanned += scanned;
    res.classes_skipped += skipped;
    if (gi == 0) {
      base = cur;
    } else if (cur != base) {
      throw std::runtime_error("trace set at " + L.name +
                               " changed between parameter grids mod " +
                               std::to_string(res.grids[0]) + " and mod " +
                               std::to_string(m));
    }
  }
  res.traces.assign(base.begin(), base.end());
  return res;
}

int frey_trace_at(const QuadPrime& L, const BigInt& a, const BigInt& b) {
  Engine eng(L);
  std::optional<int> t;
  if (L.p >= 5) {
    long long x = static_cast<long long>(mpz_fdiv_ui(a.get_mpz_t(), static_cast<unsigned long>(L.p)));
    long long y = static_cast<long long>(mpz_fdiv_ui(b.get_mpz_t(), static_cast<unsigned long>(L.p)));
    t = eng.at(x, y);
  } else {
    FreyCoeffs co = frey_at(a, b);
    QuadCurve E{QuadElt(), QuadElt(), QuadElt(), co.a4, co.a6};
    LocalData ld = tate_local(E, L);
    if (ld.type != KodairaType::I0 || ld.f != 0)
      throw std::domain_error("curve has bad reduction at " + L.name);
    ResidueField k(L);
    long long n = count_points_general(
        k, k.reduce(ld.minimal.a1), k.reduce(ld.minimal.a2),
        k.reduce(ld.minimal.a3), k.reduce(ld.minimal.a4), k.reduce(ld.minimal.a6));
    t = eng.checked_trace(n);
  }
  if (!t) throw std::domain_error("curve has multiplicative reduction at " + L.name);
  return *t;
}

const std::vector<std::string>& trace_prime_names() {
  static const std::vector<std::string> names = {
      "L3_0", "L3_1", "L5", "L7", "L11", "L17_0",
      "L17_1", "L23_0", "L23_1", "L29_0", "L29_1"};
  return names;
}

const std::vector<int>& expected_trace_set(const std::string& prime_name) {
  static const std::map<std::string, std::vector<int>> sets = {
      {"L3_0", {-3, -1}},
      {"L3_1", {-3, -1, 1}},
      {"L5", {-6, -2, 2}},
      {"L7", {-11, -5, -1, 11}},
      {"L11", {-15, -7, -1, 3, 5, 9, 15}},
      {"L17_0", {-3, -1, 1, 3, 5, 7}},
      {"L17_1", {-7, -5, -3, 3, 5, 7}},
      {"L23_0", {-9, -7, -5, -3, 1, 3, 5, 7}},
      {"L23_1", {-9, -3, -1, 1, 3, 7}},
      {"L29_0", {-9, -7, -5, -3, -1, 1, 3, 5}},
      {"L29_1", {-9, -7, -5, -3, -1, 1, 3, 5, 9}},
  };
  auto it = sets.find(prime_name);
  if (it == sets.end()) throw std::out_of_range("no trace set for " + prime_name);
  return it->second;
}

std::map<std::string, int> expected_constrained_traces(int d) {
  switch (d) {
    case 3: return {{"L3_0", -3}, {"L3_1", -1}};
    case 5: return {{"L5", -2}};
    case 7: return {{"L7", -11}};
    case 11: return {{"L11", -15}};
    default: throw std::invalid_argument("d must be one of 3, 5, 7, 11");
  }
}

}  // namespace frey13
