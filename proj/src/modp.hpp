#pragma once

#include "qvt/lpoly.hpp"

#include <cstdint>
#include <vector>

namespace qvt::modp {

inline constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  auto p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(p) & kPrime;
  std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
  std::uint64_t s = lo + hi;
  return s >= kPrime ? s - kPrime : s;
}

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kPrime ? s - kPrime : s;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }

inline std::uint64_t pow(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1U) r = mul(r, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return r;
}

inline std::uint64_t inv(std::uint64_t a) { return pow(a, kPrime - 2); }

inline std::uint64_t reduce(const Int& z) {
  Int r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), kPrime);
  return r.get_ui();
}

// Returns false if the denominator vanishes modulo the prime.
inline bool reduce(const Rat& q, std::uint64_t& out) {
  std::uint64_t d = reduce(Int(q.get_den()));
  if (d == 0) return false;
  out = mul(reduce(Int(q.get_num())), inv(d));
  return true;
}

// Degree of gcd of two dense polynomials over F_p (coefficients low to high).
inline int gcd_degree(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
  auto trim = [](std::vector<std::uint64_t>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    std::uint64_t il = inv(b.back());
    while (a.size() >= b.size()) {
      std::uint64_t c = mul(a.back(), il);
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = sub(a[i + shift], mul(c, b[i]));
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

}  // namespace qvt::modp
