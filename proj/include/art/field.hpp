#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace art {

/// Exact scalar arithmetic. Two field kinds are supported: the rationals,
/// backed by arbitrary-precision GMP rationals kept in canonical (reduced)
/// form, and prime fields F_p for p < 2^61 with single-word residues.
/// Field objects are tiny value types passed alongside the data they act on;
/// all operations are pure and never round.

struct Rationals {
  using Elt = mpq_class;

  Elt zero() const { return Elt(0); }
  Elt one() const { return Elt(1); }
  Elt from_int(long long n) const { return Elt(static_cast<long>(n)); }

  Elt add(const Elt& a, const Elt& b) const { return canon(a + b); }
  Elt sub(const Elt& a, const Elt& b) const { return canon(a - b); }
  Elt neg(const Elt& a) const { return canon(-a); }
  Elt mul(const Elt& a, const Elt& b) const { return canon(a * b); }
  Elt inv(const Elt& a) const {
    if (is_zero(a)) throw std::domain_error("division by zero");
    return canon(1 / a);
  }
  Elt div(const Elt& a, const Elt& b) const { return mul(a, inv(b)); }

  bool is_zero(const Elt& a) const { return sgn(a) == 0; }
  bool eq(const Elt& a, const Elt& b) const { return cmp(a, b) == 0; }

  std::string to_string(const Elt& a) const { return a.get_str(); }

  /// Accepts "n", "-n", "n/d".
  Elt parse(const std::string& s) const {
    Elt v;
    if (v.set_str(s, 10) != 0)
      throw std::invalid_argument("bad rational literal: '" + s + "'");
    if (v.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    v.canonicalize();
    return v;
  }

  bool operator==(const Rationals&) const { return true; }

 private:
  static Elt canon(Elt v) {
    v.canonicalize();
    return v;
  }
};

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, p);
    a = mulmod_u64(a, a, p);
    e >>= 1;
  }
  return r;
}

/// Deterministic Miller-Rabin, valid for every n < 3.3e24 with these bases.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace detail

struct PrimeField {
  using Elt = std::uint64_t;

  std::uint64_t p = 2;

  PrimeField() = default;
  explicit PrimeField(std::uint64_t prime) : p(prime) {
    if (p >= (1ull << 61)) throw std::invalid_argument("prime field: p must be < 2^61");
    if (!detail::is_prime_u64(p)) throw std::invalid_argument("prime field: p is not prime");
  }

  Elt zero() const { return 0; }
  Elt one() const { return 1 % p; }
  Elt from_int(long long n) const {
    long long r = n % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return static_cast<Elt>(r);
  }

  Elt add(Elt a, Elt b) const {
    Elt s = a + b;  // p < 2^61 so no overflow
    return s >= p ? s - p : s;
  }
  Elt sub(Elt a, Elt b) const { return a >= b ? a - b : a + p - b; }
  Elt neg(Elt a) const { return a == 0 ? 0 : p - a; }
  Elt mul(Elt a, Elt b) const { return detail::mulmod_u64(a, b, p); }
  Elt inv(Elt a) const {
    if (a == 0) throw std::domain_error("division by zero");
    return detail::powmod_u64(a, p - 2, p);
  }
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }

  bool is_zero(Elt a) const { return a == 0; }
  bool eq(Elt a, Elt b) const { return a == b; }

  std::string to_string(Elt a) const { return std::to_string(a); }

  Elt parse(const std::string& s) const {
    if (s.empty()) throw std::invalid_argument("empty scalar literal");
    mpz_class z;
    if (z.set_str(s, 10) != 0)
      throw std::invalid_argument("bad integer literal: '" + s + "'");
    mpz_class r = z % mpz_class(std::to_string(p));
    if (r < 0) r += mpz_class(std::to_string(p));
    return static_cast<Elt>(r.get_ui());
  }

  bool operator==(const PrimeField& o) const { return p == o.p; }
};

}  // namespace art
