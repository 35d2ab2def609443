#pragma once
#include <initializer_list>
#include <string>
#include <vector>

#include "doctest.h"
#include "newtonlab/arith.hpp"

namespace nltest {

inline std::vector<nl::IVec> pts(std::initializer_list<std::initializer_list<long>> xs) {
  std::vector<nl::IVec> out;
  for (auto x : xs) out.push_back(nl::ivec(x));
  return out;
}

inline std::vector<nl::IVec> lift(const std::vector<nl::IVec>& ps, long level) {
  std::vector<nl::IVec> out;
  for (auto p : ps) {
    p.emplace_back(level);
    out.push_back(std::move(p));
  }
  return out;
}

// i(F) ∪ (i(G) + e_ε) without the checks of build_H.
inline std::vector<nl::IVec> raw_H(const std::vector<nl::IVec>& f, const std::vector<nl::IVec>& g) {
  auto h = lift(f, 0);
  for (auto& p : lift(g, 1)) h.push_back(p);
  return h;
}

inline nl::RVec rv(std::initializer_list<std::pair<long, long>> xs) {
  nl::RVec v;
  for (auto [p, q] : xs) v.push_back(nl::make_rat(p, q));
  return v;
}

inline std::string str(const nl::IVec& v) { return nl::to_string(v); }

}  // namespace nltest

namespace doctest {
template <>
struct StringMaker<nl::IVec> {
  static String convert(const nl::IVec& v) { return nl::to_string(v).c_str(); }
};
template <>
struct StringMaker<std::vector<nl::IVec>> {
  static String convert(const std::vector<nl::IVec>& vs) {
    std::string s = "{";
    for (const auto& v : vs) s += nl::to_string(v);
    return (s + "}").c_str();
  }
};
}  // namespace doctest
