#include "poly.hpp"

#include <algorithm>

#include "tiltglue/error.hpp"

namespace tiltglue::poly {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

long degree(const Poly& f) {
  Poly g = f;
  trim(g);
  return static_cast<long>(g.size()) - 1;
}

Poly monic(const Poly& f, const PrimeField& F) {
  Poly g = f;
  trim(g);
  if (g.empty()) return g;
  const Scalar inv = F.inv(g.back());
  for (auto& c : g) c = F.mul(c, inv);
  return g;
}

Poly add(const Poly& a, const Poly& b, const PrimeField& F) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b, const PrimeField& F) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, const PrimeField& F) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, const PrimeField& F) {
  Poly r = a, d = b;
  trim(r);
  trim(d);
  if (d.empty()) throw Error(ErrorCode::Internal, "polynomial division by zero");
  if (r.size() < d.size()) return {{}, r};
  Poly q(r.size() - d.size() + 1, 0);
  const Scalar lead_inv = F.inv(d.back());
  for (std::size_t k = q.size(); k-- > 0;) {
    const Scalar c = F.mul(r[k + d.size() - 1], lead_inv);
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < d.size(); ++j) r[k + j] = F.sub(r[k + j], F.mul(c, d[j]));
  }
  trim(q);
  trim(r);
  return {q, r};
}

Poly mod(const Poly& a, const Poly& b, const PrimeField& F) { return divmod(a, b, F).second; }

Poly gcd(Poly a, Poly b, const PrimeField& F) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, F);
}

ExtGcd ext_gcd(const Poly& a, const Poly& b, const PrimeField& F) {
  Poly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, F);
    Poly s2 = sub(s0, mul(q, s1, F), F);
    Poly t2 = sub(t0, mul(q, t1, F), F);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {{}, {}, {}};
  const Scalar inv = F.inv(r0.back());
  auto scale = [&](Poly p) {
    for (auto& c : p) c = F.mul(c, inv);
    trim(p);
    return p;
  };
  return {scale(r0), scale(s0), scale(t0)};
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& m, const PrimeField& F) {
  Poly result{1};
  result = mod(result, m, F);
  Poly b = mod(base, m, F);
  while (e > 0) {
    if (e & 1) result = mod(mul(result, b, F), m, F);
    b = mod(mul(b, b, F), m, F);
    e >>= 1;
  }
  return result;
}

Poly derivative(const Poly& f, const PrimeField& F) {
  if (f.size() <= 1) return {};
  Poly d(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = F.mul(f[i], F.reduce(static_cast<std::int64_t>(i)));
  trim(d);
  return d;
}

namespace {

Poly random_poly(long deg_below, const PrimeField& F, std::mt19937_64& rng) {
  std::uniform_int_distribution<Scalar> dist(0, F.modulus() - 1);
  Poly a(static_cast<std::size_t>(deg_below));
  for (auto& c : a) c = dist(rng);
  trim(a);
  return a;
}

// Some nonconstant proper factor of a squarefree monic f, or nullopt if f is irreducible.
std::optional<Poly> proper_factor(const Poly& f, const PrimeField& F, std::mt19937_64& rng) {
  const long n = degree(f);
  if (n <= 1) return std::nullopt;
  const Poly x{0, 1};
  Poly h = x;
  for (long d = 1; 2 * d <= n; ++d) {
    h = powmod(h, F.modulus(), f, F);
    Poly g = gcd(sub(h, x, F), f, F);
    const long dg = degree(g);
    if (dg > 0 && dg < n) return g;
    if (dg == n) {
      // Every irreducible factor has degree d and there are at least two.
      for (int attempt = 0; attempt < 256; ++attempt) {
        Poly a = random_poly(n, F, rng);
        if (degree(a) < 1) continue;
        // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p-1)/2)
        Poly acc = mod(a, f, F), t = acc;
        for (long i = 1; i < d; ++i) {
          t = powmod(t, F.modulus(), f, F);
          acc = mod(mul(acc, t, F), f, F);
        }
        Poly b = sub(powmod(acc, (F.modulus() - 1) / 2, f, F), Poly{1}, F);
        Poly g2 = gcd(b, f, F);
        const long dg2 = degree(g2);
        if (dg2 > 0 && dg2 < n) return g2;
      }
      throw Error(ErrorCode::Internal, "equal-degree splitting did not converge");
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Poly> splitting_idempotent(const Poly& f_in, const PrimeField& F, std::mt19937_64& rng) {
  const Poly f = monic(f_in, F);
  if (degree(f) <= 1) return std::nullopt;
  const Poly df = derivative(f, F);
  if (df.empty()) return std::nullopt;  // f is a p-th power; degrees here stay below p
  const Poly squarefree = divmod(f, gcd(f, df, F), F).first;
  auto factor = proper_factor(monic(squarefree, F), F, rng);
  if (!factor) return std::nullopt;
  // Collect the full power of `factor`'s primes inside f.
  Poly g_full = *factor;
  for (;;) {
    Poly rest = divmod(f, g_full, F).first;
    Poly t = gcd(rest, *factor, F);
    if (degree(t) <= 0) break;
    g_full = mul(g_full, t, F);
  }
  const Poly h_full = divmod(f, g_full, F).first;
  if (degree(h_full) <= 0) return std::nullopt;
  const auto eg = ext_gcd(g_full, h_full, F);
  if (degree(eg.g) != 0) throw Error(ErrorCode::Internal, "factors are not coprime");
  // e = u g: 0 modulo g_full, 1 modulo h_full.
  return mod(mul(eg.u, g_full, F), f, F);
}

}  // namespace tiltglue::poly
