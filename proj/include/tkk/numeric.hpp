#pragma once

// Exact arithmetic primitives shared by the whole library: arbitrary-precision
// rationals for anything user-visible, and 62-bit prime fields for the heavy
// rank computations (verified against a second prime, with an exact rational
// fallback on disagreement).

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace tkk {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string rat_to_string(const Rat& r) {
  const Int num = boost::multiprecision::numerator(r);
  const Int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

// ---------------------------------------------------------------------------
// Prime fields used for rank verification.

inline constexpr std::uint64_t kVerifyPrimes[4] = {
    4611686018427387847ull,  // 2^62 - 57
    4611686018427387817ull,  // 2^62 - 87
    4611686018427387787ull,  // 2^62 - 117
    4611686018427387631ull,
};

inline int verify_prime_count() {
  if (const char* env = std::getenv("TKK_VERIFY_PRIME_COUNT")) {
    int n = std::atoi(env);
    if (n >= 1 && n <= 4) return n;
  }
  return 2;
}

// Z/p with p < 2^63; elements are canonical representatives.
struct Zp {
  std::uint64_t p;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    if (s >= p || s < a) s -= p;
    return s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + (p - b);
  }
  std::uint64_t neg(std::uint64_t a) const { return a ? p - a : 0; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const {
    if (a == 0) throw std::domain_error("Zp: inverse of zero");
    return pow(a, p - 2);
  }
  std::uint64_t from_long(long long v) const {
    long long m = v % static_cast<long long>(p);
    if (m < 0) m += static_cast<long long>(p);
    return static_cast<std::uint64_t>(m);
  }
  std::uint64_t from_rat(const Rat& r) const {
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);
    const Int pp(p);
    Int nm = num % pp;
    if (nm < 0) nm += pp;
    Int dm = den % pp;
    std::uint64_t n64 = nm.convert_to<std::uint64_t>();
    std::uint64_t d64 = dm.convert_to<std::uint64_t>();
    if (d64 == 0) throw std::domain_error("Zp: denominator divisible by p");
    return mul(n64, inv(d64));
  }
};

}  // namespace tkk
