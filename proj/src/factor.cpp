#include "sailkit/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace sailkit::poly {

namespace {

// ---- arithmetic of polynomials over F_p (p < 2^31, stored as int64) ----

using ModPoly = std::vector<int64_t>;

ModPoly mp_trim(ModPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

int64_t inv_mod(int64_t a, int64_t p) {
  int64_t t = 0, nt = 1, r = p, nr = a % p;
  if (nr < 0) nr += p;
  while (nr != 0) {
    int64_t q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  return t < 0 ? t + p : t;
}

ModPoly mp_mul(const ModPoly& a, const ModPoly& b, int64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return mp_trim(r);
}

// remainder of a by monic-izable b
ModPoly mp_rem(ModPoly a, const ModPoly& b, int64_t p) {
  a = mp_trim(a);
  int64_t bl = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    int64_t c = a.back() * bl % p;
    size_t k = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i)
      a[i + k] = ((a[i + k] - c * b[i]) % p + p) % p;
    a = mp_trim(a);
    if (a.empty()) break;
  }
  return a;
}

ModPoly mp_gcd(ModPoly a, ModPoly b, int64_t p) {
  a = mp_trim(a);
  b = mp_trim(b);
  while (!b.empty()) {
    ModPoly r = mp_rem(a, b, p);
    a = b;
    b = r;
  }
  if (!a.empty()) {
    int64_t il = inv_mod(a.back(), p);
    for (auto& c : a) c = c * il % p;
  }
  return a;
}

ModPoly mp_derivative(const ModPoly& a, int64_t p) {
  if (a.size() <= 1) return {};
  ModPoly r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = (int64_t)(i % p) * a[i] % p;
  return mp_trim(r);
}

ModPoly mp_pow_x(int64_t e, const ModPoly& f, int64_t p) {
  // x^e mod f
  ModPoly base = mp_rem(ModPoly{0, 1}, f, p);
  ModPoly acc{1};
  while (e > 0) {
    if (e & 1) acc = mp_rem(mp_mul(acc, base, p), f, p);
    base = mp_rem(mp_mul(base, base, p), f, p);
    e >>= 1;
  }
  return acc;
}

ModPoly to_modpoly(const IPoly& f, int64_t p) {
  ModPoly r(f.size());
  for (Eigen::Index i = 0; i < f.size(); ++i) {
    Int c = f(i) % p;
    long v = c.get_si();
    if (v < 0) v += p;
    r[i] = v;
  }
  return mp_trim(r);
}

// Berlekamp: factor a squarefree monic polynomial over F_p.
std::vector<ModPoly> berlekamp(const ModPoly& fin, int64_t p) {
  ModPoly f = fin;
  int64_t il = inv_mod(f.back(), p);
  for (auto& c : f) c = c * il % p;
  const int n = (int)f.size() - 1;
  if (n <= 1) return {f};
  // Q matrix: column j = x^(jp) mod f
  std::vector<std::vector<int64_t>> Q(n, std::vector<int64_t>(n, 0));
  ModPoly xp = mp_pow_x(p, f, p);
  ModPoly cur{1};
  for (int j = 0; j < n; ++j) {
    for (size_t i = 0; i < cur.size(); ++i) Q[i][j] = cur[i];
    cur = mp_rem(mp_mul(cur, xp, p), f, p);
  }
  // nullspace of (Q - I)
  for (int i = 0; i < n; ++i) Q[i][i] = ((Q[i][i] - 1) % p + p) % p;
  // gaussian elimination, track free columns
  std::vector<int> pivot_row(n, -1);
  int rank = 0;
  for (int col = 0, row = 0; col < n && row < n; ++col) {
    int pr = -1;
    for (int i = row; i < n; ++i)
      if (Q[i][col] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(Q[pr], Q[row]);
    int64_t iv = inv_mod(Q[row][col], p);
    for (int j = 0; j < n; ++j) Q[row][j] = Q[row][j] * iv % p;
    for (int i = 0; i < n; ++i) {
      if (i != row && Q[i][col] != 0) {
        int64_t c = Q[i][col];
        for (int j = 0; j < n; ++j)
          Q[i][j] = ((Q[i][j] - c * Q[row][j]) % p + p) % p;
      }
    }
    pivot_row[col] = row;
    ++row;
    ++rank;
  }
  std::vector<ModPoly> basis;
  for (int col = 0; col < n; ++col) {
    if (pivot_row[col] >= 0) continue;
    std::vector<int64_t> v(n, 0);
    v[col] = 1;
    for (int c2 = 0; c2 < n; ++c2)
      if (pivot_row[c2] >= 0) v[c2] = (p - Q[pivot_row[c2]][col]) % p;
    basis.push_back(mp_trim(ModPoly(v.begin(), v.end())));
  }
  const size_t r = basis.size();  // number of irreducible factors
  std::vector<ModPoly> factors{f};
  if (r == 1) return factors;
  for (const ModPoly& h : basis) {
    if (factors.size() == r) break;
    if (h.size() <= 1) continue;  // constant vector splits nothing
    std::vector<ModPoly> next;
    for (ModPoly& g : factors) {
      if ((int)g.size() - 1 <= 1) {
        next.push_back(g);
        continue;
      }
      ModPoly rem = g;
      for (int64_t s = 0; s < p && (int)rem.size() - 1 > 0; ++s) {
        ModPoly hs = h;
        if (hs.empty()) hs = {0};
        hs[0] = ((hs[0] - s) % p + p) % p;
        ModPoly d = mp_gcd(rem, hs, p);
        if ((int)d.size() - 1 > 0 && d.size() < rem.size()) {
          next.push_back(d);
          // rem /= d
          ModPoly q;
          {
            // division: rem = d * q  (exact in F_p[x])
            ModPoly a = rem;
            int64_t dl = inv_mod(d.back(), p);
            q.assign(a.size() - d.size() + 1, 0);
            while (a.size() >= d.size() && !a.empty()) {
              int64_t c = a.back() * dl % p;
              size_t k = a.size() - d.size();
              q[k] = c;
              for (size_t i = 0; i < d.size(); ++i)
                a[i + k] = ((a[i + k] - c * d[i]) % p + p) % p;
              a = mp_trim(a);
              if (a.empty()) break;
            }
          }
          rem = mp_trim(q);
        }
      }
      if ((int)rem.size() - 1 > 0) next.push_back(rem);
    }
    factors = next;
  }
  // monicize all
  for (auto& g : factors) {
    int64_t il2 = inv_mod(g.back(), p);
    for (auto& c : g) c = c * il2 % p;
  }
  return factors;
}

// ---- Hensel lifting (monic case) ----

struct ZmPoly {  // polynomial with Int coefficients, reduced mod m
  IPoly c;
};

IPoly zm_reduce(const IPoly& a, const Int& m) {
  IPoly r = a;
  for (Eigen::Index i = 0; i < r.size(); ++i) {
    r(i) %= m;
    if (sign(r(i)) < 0) r(i) += m;
  }
  return trim(r);
}

IPoly zm_mul(const IPoly& a, const IPoly& b, const Int& m) {
  return zm_reduce(mul(a, b), m);
}

IPoly zm_add(const IPoly& a, const IPoly& b, const Int& m) {
  return zm_reduce(add(a, b), m);
}

IPoly zm_sub(const IPoly& a, const IPoly& b, const Int& m) {
  return zm_reduce(sub(a, b), m);
}

// division by monic b
std::pair<IPoly, IPoly> zm_divmod(const IPoly& a, const IPoly& b, const Int& m) {
  IPoly r = a;
  if (deg(r) < deg(b)) return {IPoly(), r};
  IPoly q = IPoly::Zero(deg(r) - deg(b) + 1);
  while (!is_zero(r) && deg(r) >= deg(b)) {
    Eigen::Index k = deg(r) - deg(b);
    Int c = lc(r);
    q(k) = c;
    IPoly nr = r;
    for (Eigen::Index i = 0; i < b.size(); ++i) {
      nr(i + k) -= c * b(i);
    }
    r = zm_reduce(nr, m);
    if (deg(r) >= deg(b) + k) {
      // leading coefficient must have cancelled; guard against stall
      r = trim(r);
    }
  }
  return {zm_reduce(trim(q), m), r};
}

struct LiftPair {
  IPoly g, h, s, t;  // f = g h, s g + t h = 1 (mod m)
};

// One quadratic Hensel step: mod m -> mod m^2 (von zur Gathen & Gerhard 15.10)
LiftPair hensel_step(const IPoly& f, const LiftPair& in, const Int& m) {
  Int m2 = m * m;
  const IPoly &g = in.g, &h = in.h, &s = in.s, &t = in.t;
  IPoly e = zm_reduce(sub(f, mul(g, h)), m2);
  auto [q, r] = zm_divmod(zm_mul(s, e, m2), h, m2);
  IPoly gs = zm_reduce(add(add(g, zm_mul(t, e, m2)), zm_mul(q, g, m2)), m2);
  IPoly hs = zm_add(h, r, m2);
  IPoly b = zm_reduce(sub(add(mul(s, gs), mul(t, hs)), ipoly({1})), m2);
  auto [c, d] = zm_divmod(zm_mul(s, b, m2), hs, m2);
  IPoly ss = zm_sub(s, d, m2);
  IPoly ts = zm_reduce(sub(t, add(zm_mul(t, b, m2), zm_mul(c, gs, m2))), m2);
  return {gs, hs, ss, ts};
}

// extended gcd of g, h over F_p: s g + t h = 1
std::pair<IPoly, IPoly> modp_bezout(const IPoly& g, const IPoly& h, int64_t p) {
  ModPoly a = to_modpoly(g, p), b = to_modpoly(h, p);
  ModPoly r0 = a, r1 = b;
  ModPoly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    // r0 = q r1 + r2
    ModPoly q((r0.size() >= r1.size()) ? r0.size() - r1.size() + 1 : 1, 0);
    ModPoly a2 = r0;
    int64_t il = inv_mod(r1.back(), p);
    while (a2.size() >= r1.size() && !a2.empty()) {
      int64_t c = a2.back() * il % p;
      size_t k = a2.size() - r1.size();
      q[k] = c;
      for (size_t i = 0; i < r1.size(); ++i)
        a2[i + k] = ((a2[i + k] - c * r1[i]) % p + p) % p;
      a2 = mp_trim(a2);
    }
    auto comb = [&](const ModPoly& x0, const ModPoly& x1) {
      ModPoly qx = mp_mul(q, x1, p);
      ModPoly res(std::max(x0.size(), qx.size()), 0);
      for (size_t i = 0; i < x0.size(); ++i) res[i] = x0[i];
      for (size_t i = 0; i < qx.size(); ++i)
        res[i] = ((res[i] - qx[i]) % p + p) % p;
      return mp_trim(res);
    };
    ModPoly r2 = a2, s2 = comb(s0, s1), t2 = comb(t0, t1);
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  // r0 = gcd (a nonzero constant); scale
  int64_t il = inv_mod(r0[0], p);
  auto to_ipoly = [&](const ModPoly& v) {
    IPoly r(static_cast<Eigen::Index>(v.size()));
    for (size_t i = 0; i < v.size(); ++i) r(static_cast<Eigen::Index>(i)) = Int(v[i] * il % p);
    return trim(r);
  };
  return {to_ipoly(s0), to_ipoly(t0)};
}

// Lift the factorization f = prod(fs) (monic, mod p) to mod p^(2^iters) >= bound.
std::vector<IPoly> hensel_lift_tree(const IPoly& f, std::vector<IPoly> fs,
                                    int64_t p, const Int& bound) {
  if (fs.size() == 1) return {f};
  size_t half = fs.size() / 2;
  IPoly g = ipoly({1}), h = ipoly({1});
  Int pI(static_cast<long>(p));
  for (size_t i = 0; i < half; ++i) g = zm_reduce(mul(g, fs[i]), pI);
  for (size_t i = half; i < fs.size(); ++i) h = zm_reduce(mul(h, fs[i]), pI);
  auto [s, t] = modp_bezout(g, h, p);
  LiftPair lp{g, h, s, t};
  Int m = pI;
  while (m < bound) {
    lp = hensel_step(f, lp, m);
    m = m * m;
  }
  std::vector<IPoly> gs(fs.begin(), fs.begin() + half);
  std::vector<IPoly> hs(fs.begin() + half, fs.end());
  auto left = hensel_lift_tree(lp.g, gs, p, bound);
  auto right = hensel_lift_tree(lp.h, hs, p, bound);
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

IPoly balance_mod(const IPoly& a, const Int& m) {
  IPoly r = zm_reduce(a, m);
  Int half = m / 2;
  for (Eigen::Index i = 0; i < r.size(); ++i)
    if (r(i) > half) r(i) -= m;
  return trim(r);
}

// Try to divide f (monic) by g (monic, integer); return quotient if exact.
bool monic_trial_div(const IPoly& f, const IPoly& g, IPoly* q_out) {
  if (deg(g) > deg(f)) return false;
  IPoly r = f;
  IPoly q = IPoly::Zero(deg(f) - deg(g) + 1);
  while (!is_zero(r) && deg(r) >= deg(g)) {
    Eigen::Index k = deg(r) - deg(g);
    Int c = lc(r);
    q(k) = c;
    IPoly nr = r;
    for (Eigen::Index i = 0; i < g.size(); ++i) nr(i + k) -= c * g(i);
    r = trim(nr);
  }
  if (!is_zero(r)) return false;
  *q_out = trim(q);
  return true;
}

// Factor a squarefree monic integer polynomial.
std::vector<IPoly> factor_squarefree_monic(const IPoly& fin) {
  IPoly f = fin;
  const int n = deg(f);
  if (n <= 1) return {f};
  static const int64_t primes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                                   37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
                                   79, 83, 89, 97, 101, 103, 107, 109, 113, 127};
  // pick the usable prime with the fewest modular factors among the first few
  int64_t best_p = 0;
  std::vector<ModPoly> best_factors;
  int tried = 0;
  for (int64_t p : primes) {
    ModPoly fp = to_modpoly(f, p);
    if ((int)fp.size() - 1 != n) continue;  // lc divisible by p (monic: never)
    ModPoly d = mp_gcd(fp, mp_derivative(fp, p), p);
    if ((int)d.size() - 1 != 0) continue;  // not squarefree mod p
    auto fac = berlekamp(fp, p);
    if (best_p == 0 || fac.size() < best_factors.size()) {
      best_p = p;
      best_factors = fac;
    }
    if (++tried >= 4 || best_factors.size() == 1) break;
  }
  if (best_p == 0)
    throw Error("FactorNoPrime", "no usable prime found for factorization");
  if (best_factors.size() == 1) return {f};  // irreducible
  // coefficient bound for any monic factor of f (Mignotte-style, generous)
  Int norm1 = 0;
  for (Eigen::Index i = 0; i < f.size(); ++i) norm1 += abs(f(i));
  Int bound = pow_int(2, static_cast<unsigned long>(n + 2)) * norm1;
  std::vector<IPoly> seed;
  seed.reserve(best_factors.size());
  for (const ModPoly& g : best_factors) {
    IPoly gi(static_cast<Eigen::Index>(g.size()));
    for (size_t i = 0; i < g.size(); ++i)
      gi(static_cast<Eigen::Index>(i)) = Int(g[i]);
    seed.push_back(trim(gi));
  }
  auto lifted = hensel_lift_tree(f, seed, best_p, 2 * bound + 1);
  Int m(static_cast<long>(best_p));
  while (m < 2 * bound + 1) m = m * m;

  // subset recombination
  std::vector<IPoly> out;
  IPoly rem = f;
  std::vector<IPoly> pool = lifted;
  bool restart = true;
  while (restart) {
    restart = false;
    size_t r = pool.size();
    if (r == 0) break;
    if (r == 1) {
      out.push_back(rem);
      pool.clear();
      break;
    }
    for (size_t sz = 1; sz <= r / 2 && !restart; ++sz) {
      if (sz > 12)
        throw Error("FactorTooLarge",
                    "factor recombination beyond desk-scale subset cap");
      std::vector<size_t> idx(sz);
      std::iota(idx.begin(), idx.end(), 0);
      while (true) {
        IPoly cand = ipoly({1});
        for (size_t i : idx) cand = zm_reduce(mul(cand, pool[i]), m);
        cand = balance_mod(cand, m);
        IPoly q;
        if (deg(cand) >= 1 && monic_trial_div(rem, cand, &q)) {
          out.push_back(cand);
          rem = q;
          std::vector<IPoly> np;
          for (size_t i = 0, k = 0; i < pool.size(); ++i) {
            if (k < idx.size() && idx[k] == i) {
              ++k;
              continue;
            }
            np.push_back(pool[i]);
          }
          pool = np;
          restart = true;
          break;
        }
        // next subset
        int pos = (int)sz - 1;
        while (pos >= 0 && idx[pos] == r - sz + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (size_t j = pos + 1; j < sz; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
    if (!restart && !pool.empty()) {
      out.push_back(rem);  // remaining product is irreducible
      pool.clear();
    }
  }
  return out;
}

}  // namespace

std::vector<IPoly> factor_squarefree(const IPoly& fin) {
  IPoly f = primitive_part(fin);
  if (is_zero(f) || deg(f) == 0) return {};
  // pull out a power of x
  Eigen::Index k = 0;
  while (k < f.size() && sign(f(k)) == 0) ++k;
  std::vector<IPoly> out;
  if (k > 0) {
    out.push_back(ipoly({0, 1}));
    IPoly g(f.size() - k);
    for (Eigen::Index i = 0; i < g.size(); ++i) g(i) = f(i + k);
    f = g;
  }
  if (deg(f) == 0) return out;
  if (deg(f) == 1) {
    out.push_back(primitive_part(f));
    return out;
  }
  // reduce to monic via y = lc * x
  Int l = lc(f);
  const int n = deg(f);
  IPoly fm(n + 1);
  // fm(y) = l^(n-1) f(y/l): coefficient of y^i is f_i l^(n-1-i), monic at top.
  for (int i = 0; i <= n; ++i) {
    if (i == n)
      fm(i) = 1;
    else
      fm(i) = f(i) * pow_int(l, static_cast<unsigned long>(n - 1 - i));
  }
  auto monic_factors = factor_squarefree_monic(trim(fm));
  for (const IPoly& G : monic_factors) {
    // map back: g(x) = primitive_part(G(l x))
    IPoly g(G.size());
    Int lp = 1;
    for (Eigen::Index i = 0; i < G.size(); ++i) {
      g(i) = G(i) * lp;
      lp *= l;
    }
    out.push_back(primitive_part(trim(g)));
  }
  std::sort(out.begin(), out.end(), [](const IPoly& a, const IPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Eigen::Index i = a.size(); i-- > 0;)
      if (a(i) != b(i)) return a(i) < b(i);
    return false;
  });
  return out;
}

std::vector<std::pair<IPoly, int>> factor(const IPoly& fin) {
  std::vector<std::pair<IPoly, int>> out;
  IPoly f = primitive_part(fin);
  if (is_zero(f) || deg(f) == 0) return out;
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    for (const IPoly& irr : factor_squarefree(part)) out.push_back({irr, mult});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    for (Eigen::Index i = a.first.size(); i-- > 0;)
      if (a.first(i) != b.first(i)) return a.first(i) < b.first(i);
    return a.second < b.second;
  });
  return out;
}

bool is_irreducible(const IPoly& fin) {
  IPoly f = primitive_part(fin);
  if (deg(f) <= 0) return false;
  if (deg(f) == 1) return true;
  auto sq = squarefree_decomposition(f);
  if (sq.size() != 1 || sq[0].second != 1) return false;
  return factor_squarefree(sq[0].first).size() == 1;
}

}  // namespace sailkit::poly
