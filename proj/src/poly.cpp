#include "sailkit/poly.hpp"

#include <sstream>

namespace sailkit::poly {

Int content(const IPoly& p) {
  Int g = 0;
  for (Eigen::Index i = 0; i < p.size(); ++i) g = sailkit::gcd(g, p(i));
  return g;
}

IPoly primitive_part(const IPoly& p) {
  if (is_zero(p)) return p;
  Int g = content(p);
  if (sign(lc(p)) < 0) g = -g;
  IPoly r(p.size());
  for (Eigen::Index i = 0; i < p.size(); ++i) r(i) = p(i) / g;
  return r;
}

QPoly to_q(const IPoly& p) {
  QPoly r(p.size());
  for (Eigen::Index i = 0; i < p.size(); ++i) r(i) = Rat(p(i));
  return r;
}

IPoly clear_denominators(const QPoly& p) {
  Int l = 1;
  for (Eigen::Index i = 0; i < p.size(); ++i) l = lcm(l, den(p(i)));
  IPoly r(p.size());
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    Rat c = p(i) * Rat(l);
    c.canonicalize();
    r(i) = num(c);
  }
  return primitive_part(trim(r));
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (is_zero(b)) throw Error("DivisionByZero", "polynomial division by zero");
  QPoly r = a;
  r = trim(r);
  if (deg(r) < deg(b)) return {QPoly(), r};
  QPoly q = QPoly::Zero(deg(r) - deg(b) + 1);
  Rat binv = Rat(1) / lc(b);
  while (!is_zero(r) && deg(r) >= deg(b)) {
    Eigen::Index k = deg(r) - deg(b);
    Rat c = lc(r) * binv;
    q(k) = c;
    for (Eigen::Index i = 0; i < b.size(); ++i) r(i + k) -= c * b(i);
    r = trim(r);
  }
  return {trim(q), r};
}

IPoly exact_div(const IPoly& a, const IPoly& b) {
  auto [q, r] = divmod(to_q(a), to_q(b));
  if (!is_zero(r)) throw Error("InexactDivision", "polynomial division not exact");
  IPoly qi(q.size());
  for (Eigen::Index i = 0; i < q.size(); ++i) {
    Rat c = q(i);
    c.canonicalize();
    if (den(c) != 1)
      throw Error("InexactDivision", "quotient not integral");
    qi(i) = num(c);
  }
  return trim(qi);
}

IPoly pseudo_rem(const IPoly& a, const IPoly& b) {
  if (is_zero(b)) throw Error("DivisionByZero", "pseudo_rem by zero");
  IPoly r = a;
  Int d = lc(b);
  int e = deg(a) - deg(b) + 1;
  if (e < 0) return r;
  while (!is_zero(r) && deg(r) >= deg(b)) {
    Eigen::Index k = deg(r) - deg(b);
    Int c = lc(r);
    IPoly nr = IPoly::Zero(r.size());
    for (Eigen::Index i = 0; i < r.size(); ++i) nr(i) = r(i) * d;
    for (Eigen::Index i = 0; i < b.size(); ++i) nr(i + k) -= c * b(i);
    r = trim(nr);
    --e;
  }
  // normalize so the result equals lc(b)^(deg a - deg b + 1) * a mod b
  while (e-- > 0) {
    for (Eigen::Index i = 0; i < r.size(); ++i) r(i) *= d;
  }
  return r;
}

IPoly gcd(const IPoly& a, const IPoly& b) {
  IPoly f = primitive_part(a), g = primitive_part(b);
  if (is_zero(f)) return g;
  if (is_zero(g)) return f;
  if (deg(f) < deg(g)) std::swap(f, g);
  while (true) {
    IPoly r = pseudo_rem(f, g);
    if (is_zero(r)) return primitive_part(g);
    r = primitive_part(r);
    f = g;
    g = r;
  }
}

IPoly squarefree_part(const IPoly& f) {
  if (is_zero(f) || deg(f) == 0) return primitive_part(f);
  IPoly g = gcd(f, derivative(f));
  return primitive_part(exact_div(primitive_part(f), g));
}

std::vector<std::pair<IPoly, int>> squarefree_decomposition(const IPoly& fin) {
  // Yun's algorithm over Q, cleared back to Z.
  std::vector<std::pair<IPoly, int>> out;
  IPoly f = primitive_part(fin);
  if (is_zero(f) || deg(f) == 0) return out;
  IPoly fp = derivative(f);
  IPoly a = gcd(f, fp);
  IPoly b = exact_div(f, a);
  IPoly c = exact_div(fp, a);
  int k = 1;
  while (true) {
    IPoly d = sub(c, derivative(b));
    if (is_zero(d)) {
      if (deg(b) > 0) out.push_back({primitive_part(b), k});
      break;
    }
    IPoly g = gcd(b, d);
    if (deg(g) > 0) out.push_back({primitive_part(g), k});
    b = exact_div(b, g);
    c = exact_div(d, g);
    ++k;
    if (deg(b) == 0) break;
  }
  return out;
}

namespace {

bool int_iszero(const Int& x) { return sign(x) == 0; }

template <class S>
std::vector<std::vector<S>> sylvester(const std::vector<S>& a, int dega,
                                      const std::vector<S>& b, int degb) {
  const int n = dega + degb;
  std::vector<std::vector<S>> m(n, std::vector<S>(n, S()));
  for (int i = 0; i < degb; ++i)
    for (int j = 0; j <= dega; ++j) m[i][i + j] = a[dega - j];
  for (int i = 0; i < dega; ++i)
    for (int j = 0; j <= degb; ++j) m[degb + i][i + j] = b[degb - j];
  return m;
}

}  // namespace

Int resultant(const IPoly& a, const IPoly& b) {
  if (is_zero(a) || is_zero(b)) return 0;
  if (deg(a) == 0) return pow_int(a(0), static_cast<unsigned long>(deg(b)));
  if (deg(b) == 0) return pow_int(b(0), static_cast<unsigned long>(deg(a)));
  std::vector<Int> av(a.size()), bv(b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) av[i] = a(i);
  for (Eigen::Index i = 0; i < b.size(); ++i) bv[i] = b(i);
  auto m = sylvester(av, deg(a), bv, deg(b));
  // Bareiss with prev initialized to 1 on the first elimination step.
  const int n = static_cast<int>(m.size());
  Int prev = 1;
  int signflip = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (int_iszero(m[k][k])) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (!int_iszero(m[i][k])) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      std::swap(m[k], m[p]);
      signflip = -signflip;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  Int d = m[n - 1][n - 1];
  return signflip < 0 ? Int(-d) : d;
}

BiPoly subst_x_minus_y(const IPoly& g) {
  // g(x - y) = sum_k g_k (x - y)^k; collect by powers of y.
  const int m = deg(g);
  BiPoly out(static_cast<size_t>(m) + 1);
  // (x - y)^k = sum_j C(k,j) x^(k-j) (-y)^j
  std::vector<std::vector<Int>> binom(m + 1, std::vector<Int>(m + 1, 0));
  for (int k = 0; k <= m; ++k) {
    binom[k][0] = 1;
    for (int j = 1; j <= k; ++j)
      binom[k][j] = binom[k - 1][j - 1] + (j <= k - 1 ? binom[k - 1][j] : Int(0));
  }
  for (int j = 0; j <= m; ++j) {
    IPoly cj = IPoly::Zero(m - j + 1);
    for (int k = j; k <= m; ++k) {
      Int c = g(k) * binom[k][j];
      if (j % 2 == 1) c = -c;
      cj(k - j) += c;
    }
    out[j] = trim(cj);
  }
  while (!out.empty() && is_zero(out.back())) out.pop_back();
  return out;
}

BiPoly homogenize_x_over_y(const IPoly& g) {
  // y^m g(x/y) = sum_k g_k x^k y^(m-k)
  const int m = deg(g);
  BiPoly out(static_cast<size_t>(m) + 1);
  for (int k = 0; k <= m; ++k) {
    IPoly c = IPoly::Zero(k + 1);
    c(k) = g(k);
    out[m - k] = trim(c);
  }
  while (!out.empty() && is_zero(out.back())) out.pop_back();
  return out;
}

IPoly resultant_y(const IPoly& a, const BiPoly& b) {
  // a(y) univariate (coeffs constants), b(x,y) with IPoly x-coeffs per y power.
  const int dega = deg(a);
  const int degb = static_cast<int>(b.size()) - 1;
  if (dega <= 0 || degb < 0)
    throw Error("BadResultant", "resultant_y needs positive degree in y");
  std::vector<IPoly> av(dega + 1), bv(degb + 1);
  for (int i = 0; i <= dega; ++i) {
    IPoly c(1);
    c(0) = a(i);
    av[i] = trim(c);
  }
  for (int i = 0; i <= degb; ++i) bv[i] = b[i];
  auto m = sylvester(av, dega, bv, degb);
  const int n = static_cast<int>(m.size());
  IPoly prev = ipoly({1});
  int signflip = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (is_zero(m[k][k])) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (!is_zero(m[i][k])) {
          p = i;
          break;
        }
      if (p < 0) return IPoly();
      std::swap(m[k], m[p]);
      signflip = -signflip;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        IPoly t = sub(mul(m[i][j], m[k][k]), mul(m[i][k], m[k][j]));
        m[i][j] = exact_div(t, prev);
      }
      m[i][k] = IPoly();
    }
    prev = m[k][k];
  }
  IPoly d = m[n - 1][n - 1];
  return signflip < 0 ? neg(d) : d;
}

IPoly compose_shift(const IPoly& f, const Rat& c) {
  // integer multiple of f(x + c): q^deg(f) * f(x + p/q) with c = p/q
  Int p = num(c), q = den(c);
  const int n = deg(f);
  if (n < 0) return f;
  // Horner: result = f_n; result = result*(q x + p) + f_k q^(n-k)
  IPoly acc = IPoly::Zero(1);
  acc(0) = f(n);
  IPoly lin(2);
  lin(0) = p;
  lin(1) = q;
  Int qpow = 1;
  for (int k = n - 1; k >= 0; --k) {
    qpow *= q;
    IPoly t = mul(acc, lin);
    IPoly cterm(1);
    cterm(0) = f(k) * qpow;
    acc = add(t, cterm);
  }
  return primitive_part(acc);
}

IPoly compose_scale_arg(const IPoly& f, const Rat& r) {
  // integer multiple of f(x / r): sum f_k x^k q^k p^(n-k), r = p/q
  if (sign(r) == 0) throw Error("DivisionByZero", "compose_scale_arg by zero");
  Int p = num(r), q = den(r);
  const int n = deg(f);
  IPoly out(n + 1);
  Int qp = 1;
  for (int k = 0; k <= n; ++k) {
    out(k) = f(k) * qp * pow_int(p, static_cast<unsigned long>(n - k));
    qp *= q;
  }
  return primitive_part(trim(out));
}

IPoly reverse(const IPoly& f) {
  IPoly out(f.size());
  for (Eigen::Index i = 0; i < f.size(); ++i) out(i) = f(f.size() - 1 - i);
  return primitive_part(trim(out));
}

IPoly compose_neg(const IPoly& f) {
  IPoly out = f;
  for (Eigen::Index i = 0; i < out.size(); ++i)
    if (i % 2 == 1) out(i) = -out(i);
  return primitive_part(out);
}

namespace {
int sign_at(const QPoly& p, const Rat& x) {
  return sign(eval(p, x));
}
}  // namespace

int SturmSeq::variations_at(const Rat& x) const {
  int v = 0, last = 0;
  for (const auto& p : seq) {
    int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int SturmSeq::variations_at_neg_inf() const {
  int v = 0, last = 0;
  for (const auto& p : seq) {
    if (is_zero(p)) continue;
    int s = sign(lc(p));
    if (deg(p) % 2 == 1) s = -s;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int SturmSeq::variations_at_pos_inf() const {
  int v = 0, last = 0;
  for (const auto& p : seq) {
    if (is_zero(p)) continue;
    int s = sign(lc(p));
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

SturmSeq sturm(const IPoly& fin) {
  SturmSeq s;
  IPoly f = squarefree_part(fin);
  if (is_zero(f) || deg(f) == 0) {
    if (!is_zero(f)) s.seq.push_back(to_q(f));
    return s;
  }
  QPoly p0 = to_q(f), p1 = to_q(derivative(f));
  s.seq.push_back(p0);
  s.seq.push_back(p1);
  while (true) {
    auto [q, r] = divmod(s.seq[s.seq.size() - 2], s.seq.back());
    if (is_zero(r)) break;
    s.seq.push_back(neg(r));
  }
  return s;
}

int count_roots(const SturmSeq& s, const Rat& a, const Rat& b) {
  if (s.seq.empty()) return 0;
  return s.variations_at(a) - s.variations_at(b);
}

int count_real_roots(const SturmSeq& s) {
  if (s.seq.empty()) return 0;
  return s.variations_at_neg_inf() - s.variations_at_pos_inf();
}

int count_roots_gt(const SturmSeq& s, const Rat& a) {
  if (s.seq.empty()) return 0;
  return s.variations_at(a) - s.variations_at_pos_inf();
}

Rat cauchy_bound(const IPoly& f) {
  Rat m(0);
  Int l = lc(f);
  for (Eigen::Index i = 0; i + 1 < f.size(); ++i) {
    Rat c = Rat(abs(f(i)), abs(l));
    c.canonicalize();
    if (c > m) m = c;
  }
  return m + 1;
}

std::vector<QInterval> isolate_real_roots(const IPoly& fin) {
  std::vector<QInterval> out;
  if (is_zero(fin) || deg(fin) == 0) return out;
  IPoly f = squarefree_part(fin);
  SturmSeq s = sturm(f);
  Rat b = cauchy_bound(f);
  // exact roots at rational endpoints are avoided by nudging the bound
  struct Item {
    Rat lo, hi;
    int n;
  };
  std::vector<Item> stack;
  QPoly fq = to_q(f);
  // count_roots works on half-open (a, b]; an isolated root sitting exactly
  // at the right endpoint becomes a point interval.
  auto push_result = [&](const Rat& lo, const Rat& hi) {
    if (sign(eval(fq, hi)) == 0)
      out.push_back({hi, hi});
    else
      out.push_back({lo, hi});
  };
  int total = count_roots(s, -b, b);
  if (total == 0) return out;
  stack.push_back({-b, b, total});
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    if (it.n == 0) continue;
    if (it.n == 1) {
      push_result(it.lo, it.hi);
      continue;
    }
    Rat mid = (it.lo + it.hi) / 2;
    // If mid is a root, split strictly around it.
    if (sign(eval(to_q(f), mid)) == 0) {
      // Shrink a tiny isolating interval around the rational root mid.
      Rat w = (it.hi - it.lo);
      Rat lo2 = mid, hi2 = mid;
      Rat step = w;
      do {
        step /= 2;
        lo2 = mid - step;
        hi2 = mid + step;
      } while (count_roots(s, lo2, hi2) != 1);
      out.push_back({lo2, hi2});
      int nl = count_roots(s, it.lo, lo2);
      int nr = count_roots(s, hi2, it.hi);
      if (nl > 0) stack.push_back({it.lo, lo2, nl});
      if (nr > 0) stack.push_back({hi2, it.hi, nr});
      continue;
    }
    int nl = count_roots(s, it.lo, mid);
    int nr = it.n - nl;
    if (nl > 0) stack.push_back({it.lo, mid, nl});
    if (nr > 0) stack.push_back({mid, it.hi, nr});
  }
  std::sort(out.begin(), out.end(),
            [](const QInterval& a, const QInterval& c) { return a.lo < c.lo; });
  return out;
}

QInterval refine_step(const IPoly& f, const QInterval& iv) {
  QPoly fq = to_q(f);
  Rat mid = iv.mid();
  int sm = sign(eval(fq, mid));
  if (sm == 0) return {mid, mid};
  int slo = sign(eval(fq, iv.lo));
  if (slo == 0) {
    // endpoint is a root only if the interval degenerated; keep right half
    return {mid, iv.hi};
  }
  if (slo != sm) return {iv.lo, mid};
  return {mid, iv.hi};
}

QInterval refine_root(const IPoly& f, QInterval iv, const Rat& eps) {
  if (iv.is_point()) return iv;
  QPoly fq = to_q(f);
  int slo = sign(eval(fq, iv.lo));
  int shi = sign(eval(fq, iv.hi));
  if (slo == 0 || shi == 0) {
    // Root exactly at an endpoint: only possible for rational roots; return
    // the point interval.
    if (slo == 0) return {iv.lo, iv.lo};
    return {iv.hi, iv.hi};
  }
  while (iv.width() > eps) {
    QInterval nv = refine_step(f, iv);
    if (nv.is_point()) return nv;
    iv = nv;
  }
  return iv;
}

std::string to_string(const IPoly& f, const char* var) {
  if (is_zero(f)) return "0";
  std::ostringstream os;
  bool first = true;
  for (Eigen::Index i = f.size(); i-- > 0;) {
    if (sign(f(i)) == 0) continue;
    if (!first) os << (sign(f(i)) > 0 ? " + " : " - ");
    else if (sign(f(i)) < 0)
      os << "-";
    first = false;
    Int a = abs(f(i));
    if (a != 1 || i == 0) os << a.get_str();
    if (i > 0) {
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace sailkit::poly
