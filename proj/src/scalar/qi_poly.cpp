#include "hh/qi_poly.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>

#include "hh/errors.hpp"

namespace hh {

void trim(QIPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const QIPoly& p) {
  for (size_t k = p.size(); k-- > 0;)
    if (!p[k].is_zero()) return static_cast<int>(k);
  return -1;
}

bool is_real_poly(const QIPoly& p) {
  return std::all_of(p.begin(), p.end(), [](const QI& c) { return c.is_real(); });
}

QIPoly poly_add(const QIPoly& a, const QIPoly& b) {
  QIPoly r(std::max(a.size(), b.size()));
  for (size_t k = 0; k < a.size(); ++k) r[k] += a[k];
  for (size_t k = 0; k < b.size(); ++k) r[k] += b[k];
  trim(r);
  return r;
}

QIPoly poly_sub(const QIPoly& a, const QIPoly& b) {
  QIPoly r(std::max(a.size(), b.size()));
  for (size_t k = 0; k < a.size(); ++k) r[k] += a[k];
  for (size_t k = 0; k < b.size(); ++k) r[k] -= b[k];
  trim(r);
  return r;
}

QIPoly poly_mul(const QIPoly& a, const QIPoly& b) {
  if (a.empty() || b.empty()) return {};
  QIPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

QIPoly poly_scale(const QIPoly& a, const QI& c) {
  if (c.is_zero()) return {};
  QIPoly r(a);
  for (auto& x : r) x *= c;
  return r;
}

QIPoly poly_monic(const QIPoly& a) {
  QIPoly r(a);
  trim(r);
  if (r.empty()) return r;
  QI lead = r.back();
  for (auto& x : r) x /= lead;
  return r;
}

QIPoly poly_derivative(const QIPoly& a) {
  if (a.size() <= 1) return {};
  QIPoly r(a.size() - 1);
  for (size_t k = 1; k < a.size(); ++k) r[k - 1] = a[k] * QI(static_cast<long>(k));
  trim(r);
  return r;
}

std::pair<QIPoly, QIPoly> poly_divmod(const QIPoly& a, const QIPoly& b) {
  QIPoly den(b);
  trim(den);
  if (den.empty()) throw ArithmeticError("polynomial division by zero");
  QIPoly rem(a);
  trim(rem);
  int db = degree(den);
  if (degree(rem) < db) return {{}, rem};
  QIPoly quo(static_cast<size_t>(degree(rem) - db + 1));
  QI lead_inv = QI(1) / den.back();
  while (degree(rem) >= db) {
    int dr = degree(rem);
    QI f = rem.back() * lead_inv;
    size_t shift = static_cast<size_t>(dr - db);
    quo[shift] = f;
    for (size_t k = 0; k < den.size(); ++k) rem[shift + k] -= f * den[k];
    rem.pop_back();
    trim(rem);
  }
  trim(quo);
  return {quo, rem};
}

QIPoly poly_gcd(QIPoly a, QIPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(a);
}

bool is_squarefree(const QIPoly& p) { return degree(poly_gcd(p, poly_derivative(p))) == 0; }

QIPoly poly_inflate(const QIPoly& p, unsigned n) {
  if (p.empty()) return {};
  QIPoly r((p.size() - 1) * n + 1);
  for (size_t k = 0; k < p.size(); ++k) r[k * n] = p[k];
  return r;
}

QI poly_eval(const QIPoly& p, const QI& x) {
  QI acc;
  for (size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

CBig poly_eval(const QIPoly& p, const CBig& x) {
  CBig acc(x.prec());
  for (size_t k = p.size(); k-- > 0;) acc = acc * x + CBig::from_qi(p[k], x.prec());
  return acc;
}

CBall poly_eval(const QIPoly& p, const CBall& x) {
  CBall acc(x.prec());
  for (size_t k = p.size(); k-- > 0;) acc = acc * x + CBall::exact_qi(p[k], x.prec());
  return acc;
}

namespace {

using cd = std::complex<double>;

std::vector<cd> aberth_double(const std::vector<cd>& c) {
  const size_t d = c.size() - 1;
  double r0 = 0;
  for (size_t k = 0; k < d; ++k)
    r0 = std::max(r0, std::pow(std::abs(c[k]), 1.0 / static_cast<double>(d - k)));
  if (r0 == 0) r0 = 1;
  std::vector<cd> z(d);
  for (size_t j = 0; j < d; ++j)
    z[j] = std::polar(r0, 2 * M_PI * static_cast<double>(j) / static_cast<double>(d) + 0.7);
  for (int iter = 0; iter < 1000; ++iter) {
    double worst = 0;
    for (size_t j = 0; j < d; ++j) {
      cd p = c[d], dp = 0;
      for (size_t k = d; k-- > 0;) {
        dp = dp * z[j] + p;
        p = p * z[j] + c[k];
      }
      if (p == cd(0)) continue;
      cd ratio = p / dp;
      cd s = 0;
      for (size_t k = 0; k < d; ++k)
        if (k != j) s += 1.0 / (z[j] - z[k]);
      cd w = ratio / (1.0 - ratio * s);
      z[j] -= w;
      worst = std::max(worst, std::abs(w) / std::max(std::abs(z[j]), 1e-300));
    }
    if (worst < 1e-15) break;
  }
  return z;
}

}  // namespace

std::vector<CBig> poly_roots(const QIPoly& p_in, mpfr_prec_t prec) {
  QIPoly p = poly_monic(p_in);
  int d = degree(p);
  if (d < 1) return {};
  std::vector<cd> cdbl(p.size());
  for (size_t k = 0; k < p.size(); ++k) cdbl[k] = cd(p[k].re.get_d(), p[k].im.get_d());
  std::vector<cd> z0 = aberth_double(cdbl);

  const mpfr_prec_t wp = prec + 32;
  std::vector<CBig> c(p.size(), CBig(wp));
  for (size_t k = 0; k < p.size(); ++k) c[k] = CBig::from_qi(p[k], wp);
  std::vector<CBig> z;
  z.reserve(z0.size());
  for (const auto& v : z0) z.push_back(CBig::from_complex(v, wp));

  const Real tol = Real::pow2(-static_cast<long>(prec) - 8, wp);
  const CBig one = CBig::from_rat(1, wp);
  int settled = 0;
  for (int iter = 0; iter < 400 && settled < 2; ++iter) {
    bool converged = true;
    for (size_t j = 0; j < z.size(); ++j) {
      CBig pv(wp), dv(wp);
      pv = c[static_cast<size_t>(d)];
      for (size_t k = static_cast<size_t>(d); k-- > 0;) {
        dv = dv * z[j] + pv;
        pv = pv * z[j] + c[k];
      }
      if (pv.is_zero()) continue;
      if (dv.is_zero()) {
        converged = false;
        continue;
      }
      CBig ratio = pv / dv;
      CBig s(wp);
      for (size_t k = 0; k < z.size(); ++k)
        if (k != j) s += one / (z[j] - z[k]);
      CBig w = ratio / (one - ratio * s);
      z[j] -= w;
      Real scale = abs(z[j]);
      if (scale < Real(1, wp)) scale = Real(1, wp);
      if (abs(w) > tol * scale) converged = false;
    }
    if (converged) ++settled;
  }
  for (auto& r : z) r = r.with_prec(prec);
  return z;
}

CBig refine_root(const QIPoly& p, const CBig& z0, mpfr_prec_t prec) {
  const mpfr_prec_t wp = prec + 32;
  QIPoly dp = poly_derivative(p);
  CBig z = z0.with_prec(wp);
  const Real tol = Real::pow2(-static_cast<long>(prec) - 8, wp);
  for (int iter = 0; iter < 200; ++iter) {
    CBig pv = poly_eval(p, z);
    if (pv.is_zero()) break;
    CBig dv = poly_eval(dp, z);
    if (dv.is_zero()) throw ArithmeticError("Newton refinement hit a critical point");
    CBig step = pv / dv;
    z -= step;
    Real scale = abs(z);
    if (scale < Real(1, wp)) scale = Real(1, wp);
    if (abs(step) <= tol * scale) break;
  }
  return z.with_prec(prec);
}

namespace {

BigInt rat_lcm_den(const QIPoly& p) {
  BigInt l = 1;
  for (const auto& c : p) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re.get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.im.get_den_mpz_t());
  }
  return l;
}

// Nearest integer to an MPFR value, with the distance.
BigInt round_real(const Real& x, Real& dist) {
  Real r(x.prec());
  mpfr_rint(r.get(), x.get(), MPFR_RNDN);
  dist = abs(x - r);
  BigInt z;
  mpfr_get_z(z.get_mpz_t(), r.get(), MPFR_RNDN);
  return z;
}

}  // namespace

QIPoly minimal_factor_containing(const QIPoly& p_in, const std::vector<CBig>& roots_in, size_t index,
                                 bool real_only) {
  QIPoly p = poly_monic(p_in);
  const int d = degree(p);
  if (d <= 1) return p;
  // Scale to a monic polynomial with Gaussian-integer coefficients:
  // q(x) = L^d p(x / L); its monic factors are integral.
  const BigInt L = rat_lcm_den(p);
  QIPoly q(p.size());
  BigInt lpow = 1;
  for (int k = d; k >= 0; --k) {
    q[static_cast<size_t>(k)] = p[static_cast<size_t>(k)] * QI(Rat(lpow));
    lpow *= L;
  }
  // Mignotte-style bound on factor coefficients decides the working precision.
  double logc = 0;
  for (const auto& c : q) logc = std::max(logc, std::log2(1.0 + std::abs(c.re.get_d()) + std::abs(c.im.get_d())));
  const mpfr_prec_t wp = static_cast<mpfr_prec_t>(64 + 2 * d + 2 * logc);

  std::vector<CBig> roots;
  roots.reserve(roots_in.size());
  const Real Lr = Real::from_rat(Rat(L), wp);
  for (const auto& r : roots_in) {
    CBig rr = refine_root(p, r, wp);
    roots.push_back(CBig(rr.re() * Lr, rr.im() * Lr));
  }
  if (static_cast<int>(roots.size()) != d) throw ArithmeticError("root count mismatch in factor search");

  std::vector<cd> rd(roots.size());
  for (size_t k = 0; k < roots.size(); ++k) rd[k] = roots[k].to_complex();

  std::vector<size_t> others;
  for (size_t k = 0; k < roots.size(); ++k)
    if (k != index) others.push_back(k);
  const size_t m = others.size();

  for (size_t size = 0; size + 1 < static_cast<size_t>(d); ++size) {
    // Enumerate subsets of `others` of the given size (Gosper's hack).
    if (size > m) break;
    std::uint64_t mask = size == 0 ? 0 : ((std::uint64_t{1} << size) - 1);
    while (true) {
      std::vector<size_t> pick{index};
      for (size_t b = 0; b < m; ++b)
        if (mask >> b & 1) pick.push_back(others[b]);
      // Cheap trace filter in double precision.
      cd tr = 0;
      double mag = 0;
      for (auto k : pick) {
        tr += rd[k];
        mag += std::abs(rd[k]);
      }
      double tol = 1e-6 * (1 + mag);
      bool pass = std::abs(tr.real() - std::round(tr.real())) < tol &&
                  std::abs(tr.imag() - std::round(tr.imag())) < tol &&
                  (!real_only || std::abs(tr.imag()) < tol);
      if (pass) {
        std::vector<CBig> prod{CBig::from_rat(1, wp)};
        for (auto k : pick) {
          std::vector<CBig> next(prod.size() + 1, CBig(wp));
          for (size_t j = 0; j < prod.size(); ++j) {
            next[j + 1] += prod[j];
            next[j] -= prod[j] * roots[k];
          }
          prod = std::move(next);
        }
        QIPoly f(prod.size());
        bool ok = true;
        const Real limit = Real::from_double(0.25, 64);
        for (size_t j = 0; j < prod.size() && ok; ++j) {
          Real dr(wp), di(wp);
          BigInt zr = round_real(prod[j].re(), dr);
          BigInt zi = round_real(prod[j].im(), di);
          if (dr > limit || di > limit) ok = false;
          if (real_only && zi != 0) ok = false;
          f[j] = QI(Rat(zr), Rat(zi));
        }
        if (ok && poly_divmod(q, f).second.empty()) {
          // Undo the scaling: g(x) = f(L x) / L^deg f.
          QIPoly g(f.size());
          BigInt lp = 1;
          for (size_t j = 0; j < f.size(); ++j) {
            g[j] = f[j] * QI(Rat(lp));
            lp *= L;
          }
          return poly_monic(g);
        }
      }
      if (size == 0) break;
      std::uint64_t c = mask & -mask;
      std::uint64_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
      if (mask >> m) break;
    }
  }
  return p;
}

QIPoly find_proper_factor(const QIPoly& p, bool real_only) {
  int d = degree(p);
  if (d <= 1) return {};
  auto roots = poly_roots(p, 64);
  QIPoly f = minimal_factor_containing(p, roots, 0, real_only);
  if (degree(f) < d) return f;
  return {};
}

QIPoly charpoly(const std::vector<std::vector<QI>>& a) {
  const size_t n = a.size();
  std::vector<std::vector<QI>> m(n, std::vector<QI>(n));
  QIPoly c(n + 1);
  c[n] = QI(1);
  for (size_t k = 1; k <= n; ++k) {
    // m <- a * m + c[n-k+1] I
    std::vector<std::vector<QI>> am(n, std::vector<QI>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t l = 0; l < n; ++l) {
        if (a[i][l].is_zero()) continue;
        for (size_t j = 0; j < n; ++j) am[i][j] += a[i][l] * m[l][j];
      }
    for (size_t i = 0; i < n; ++i) am[i][i] += c[n - k + 1];
    m = std::move(am);
    QI tr;
    for (size_t i = 0; i < n; ++i)
      for (size_t l = 0; l < n; ++l) tr += a[i][l] * m[l][i];
    c[n - k] = -tr / QI(static_cast<long>(k));
  }
  return c;
}

std::string to_string(const QIPoly& p, const std::string& var) {
  if (degree(p) < 0) return "0";
  std::string out;
  for (size_t k = p.size(); k-- > 0;) {
    if (p[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(p[k]) + ")";
    if (k >= 1) out += "*" + var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace hh
