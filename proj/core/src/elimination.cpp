#include "frey13/elimination.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace frey13 {

const std::vector<std::string>& eigenvalue_columns() {
  static const std::vector<std::string> cols = {
      "L3_0", "L3_1", "L17_0", "L17_1", "L23_0", "L23_1",
      "L5", "L29_0", "L29_1", "L7", "L11"};
  return cols;
}

namespace {

const long long kColumnQ[11] = {3, 3, 17, 17, 23, 23, 25, 29, 29, 49, 121};

[[noreturn]] void fail_at(const std::string& path, int line, const std::string& msg) {
  throw std::runtime_error(path + ":" + std::to_string(line) + ": " + msg);
}

std::string strip(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

long long parse_ll(const std::string& tok, const std::string& path, int line) {
  try {
    size_t pos = 0;
    long long v = std::stoll(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    fail_at(path, line, "not an integer: '" + tok + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(strip(cur));
  return out;
}

}  // namespace

std::vector<NewformRow> load_newforms(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<NewformRow> rows;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = strip(raw);
    if (s.empty() || s[0] == '#') continue;
    auto toks = split(s, ',');
    if (toks.size() != 12)
      fail_at(path, line, "expected 12 comma-separated fields, got " +
                              std::to_string(toks.size()));
    NewformRow r;
    r.line = line;
    r.s = static_cast<int>(parse_ll(toks[0], path, line));
    if (r.s != 3 && r.s != 4) fail_at(path, line, "level class must be 3 or 4");
    for (int i = 0; i < 11; ++i) {
      long long a = parse_ll(toks[static_cast<size_t>(i) + 1], path, line);
      if (a * a > 4 * kColumnQ[i])
        fail_at(path, line, "eigenvalue " + std::to_string(a) +
                                " violates the Weil bound in column " +
                                eigenvalue_columns()[static_cast<size_t>(i)]);
      r.a[static_cast<size_t>(i)] = a;
    }
    rows.push_back(r);
  }
  if (rows.empty()) throw std::runtime_error(path + ": no records");
  return rows;
}

std::vector<FactorEntry> load_factors(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<FactorEntry> rows;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = strip(raw);
    if (s.empty() || s[0] == '#') continue;
    auto fields = split(s, ';');
    if (fields.size() != 3)
      fail_at(path, line, "expected 'level_s; multiplicity; coefficients'");
    FactorEntry e;
    e.line = line;
    e.s = static_cast<int>(parse_ll(fields[0], path, line));
    if (e.s != 3 && e.s != 4) fail_at(path, line, "level class must be 3 or 4");
    e.multiplicity = parse_ll(fields[1], path, line);
    if (e.multiplicity < 1) fail_at(path, line, "multiplicity must be positive");
    std::istringstream cs(fields[2]);
    std::vector<long long> coeffs;
    std::string tok;
    while (cs >> tok) coeffs.push_back(parse_ll(tok, path, line));
    if (coeffs.size() < 2) fail_at(path, line, "factor must have degree >= 1");
    if (coeffs.back() != 1) fail_at(path, line, "factor must be monic");
    e.poly = IntPoly::from_ints(coeffs);
    rows.push_back(e);
  }
  if (rows.empty()) throw std::runtime_error(path + ": no records");
  return rows;
}

SieveOutcome sieve(const std::vector<NewformRow>& forms,
                   const std::vector<std::set<int>>& allowed) {
  if (allowed.size() != 11)
    throw std::invalid_argument("need one allowed set per eigenvalue column");
  SieveOutcome out;
  for (const auto& f : forms) {
    FormFate fate;
    fate.form = f;
    fate.survived = true;
    for (int i = 0; i < 11; ++i) {
      const auto& set = allowed[static_cast<size_t>(i)];
      if (set.empty()) throw std::invalid_argument("empty allowed set");
      if (set.count(static_cast<int>(f.a[static_cast<size_t>(i)]))) continue;
      fate.survived = false;
      fate.failing_column = i;
      BigInt margin = 0;
      for (int t : set) {
        BigInt d = abs(BigInt(static_cast<long>(f.a[static_cast<size_t>(i)])) - t);
        if (d > margin) margin = d;
      }
      fate.margin = margin;
      break;
    }
    if (fate.survived) {
      out.survivors.push_back(f);
    } else if (fate.margin > out.margin) {
      out.margin = fate.margin;
    }
    out.fates.push_back(std::move(fate));
  }
  return out;
}

BigInt irreducibility_bound() {
  // twelfth roots of unity against the characteristic polynomials
  // x^2 - a x + 3 of the possible crossed eigenvalues, |a| <= 3
  std::vector<BigInt> cyc(13, BigInt(0));
  cyc[0] = -1;
  cyc[12] = 1;
  IntPoly x12m1(std::move(cyc));
  BigInt best = 1;
  for (long long a = -3; a <= 3; ++a) {
    IntPoly q = IntPoly::from_ints({3, -a, 1});
    BigInt r = resultant(x12m1, q);
    if (r == 0) throw std::logic_error("resultant unexpectedly zero");
    BigInt mp = factorize(r).max_prime();
    if (mp > best) best = mp;
  }
  return best;
}

NonrationalReport nonrational_bound(const std::vector<FactorEntry>& factors,
                                    const std::vector<long long>& points) {
  NonrationalReport rep;
  for (const auto& e : factors) {
    if (e.poly.degree() < 2) continue;  // rational eigenvalues live in the table
    for (long long v : points) {
      BigInt val = poly_eval(e.poly, BigInt(static_cast<long>(v)));
      if (val == 0)
        throw std::runtime_error(
            "irreducible factor of degree >= 2 has a rational root (line " +
            std::to_string(e.line) + ")");
      BigInt mp = factorize(val).max_prime();
      rep.rows.push_back({e.s, e.multiplicity, e.poly.degree(), v, val, mp});
      if (mp > rep.bound) rep.bound = mp;
    }
  }
  return rep;
}

std::vector<long long> reference_eval_points() { return {3, -1}; }

std::vector<long long> enumerated_eval_points() { return {-3, -1}; }

}  // namespace frey13
