#pragma once
#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace nl {

using Int = mpz_class;
using Rat = mpq_class;
using IVec = std::vector<Int>;
using RVec = std::vector<Rat>;
using IMat = std::vector<IVec>;  // row-major
using RMat = std::vector<RVec>;

// Thrown for inputs violating an operation's preconditions.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Thrown when an input is well formed but outside the supported domain
// (e.g. a non-convenient polyhedron where finiteness is required).
struct ScopeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rat make_rat(const Int& p, const Int& q) {
  Rat r(p, q);
  r.canonicalize();
  return r;
}

inline IVec ivec(std::initializer_list<long> xs) {
  IVec v;
  v.reserve(xs.size());
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline RVec to_rat(const IVec& v) { return RVec(v.begin(), v.end()); }

Int dot(const IVec& a, const IVec& b);
Rat dot(const RVec& a, const RVec& b);
Rat dot(const RVec& a, const IVec& b);
IVec sub(const IVec& a, const IVec& b);
IVec add(const IVec& a, const IVec& b);

// Divide by the gcd of entries; zero vector is returned unchanged.
IVec primitive(IVec v);
// Clear denominators and make primitive.
IVec primitive(const RVec& v);
Int lcm_denominators(const RVec& v);

// Lexicographic comparison of integer vectors.
std::strong_ordering lex_cmp(const IVec& a, const IVec& b);
struct LexLess {
  bool operator()(const IVec& a, const IVec& b) const { return lex_cmp(a, b) < 0; }
};
std::strong_ordering lex_cmp(const RVec& a, const RVec& b);

std::string to_string(const Rat& r);  // "p" or "p/q"
std::string to_string(const IVec& v);  // "(a,b,c)"
std::string to_string(const RVec& v);

Int factorial(int n);

}  // namespace nl
