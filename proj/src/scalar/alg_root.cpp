#include "hh/alg_root.hpp"

#include <cmath>

#include "hh/errors.hpp"

namespace hh {

std::optional<Rat> rationalize(const Real& x, long bits) {
  const mpfr_prec_t wp = x.prec();
  Real tol = up_mul(up_add(abs(x).with_prec(64, MPFR_RNDU), Real(1, 64)), Real::pow2(-bits));
  BigInt p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Real rem = x;
  for (int iter = 0; iter < 4 * bits; ++iter) {
    Real fl(wp);
    mpfr_floor(fl.get(), rem.get());
    BigInt a;
    mpfr_get_z(a.get_mpz_t(), fl.get(), MPFR_RNDN);
    BigInt p2 = a * p1 + p0, q2 = a * q1 + q0;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    Rat cand(p1, q1);
    cand.canonicalize();
    if (abs(x - Real::from_rat(cand, wp)) <= tol) return cand;
    Real frac = rem - fl;
    if (frac.is_zero()) return cand;
    rem = Real(1, wp) / frac;
  }
  return std::nullopt;
}

namespace {

const mpfr_prec_t kWork = 256;

// Coordinates of a^k (k < d) as columns; solves sum u_k a^k = θ exactly.
std::optional<std::vector<QI>> express_generator(const AlgScalar& a) {
  const FieldPtr& f = a.field();
  const size_t d = static_cast<size_t>(f->degree());
  std::vector<std::vector<QI>> m(d, std::vector<QI>(d + 1));
  AlgScalar pw = AlgScalar(1).lifted(f);
  for (size_t k = 0; k < d; ++k) {
    for (size_t r = 0; r < d; ++r) m[r][k] = pw.coords()[r];
    pw *= a;
  }
  m[1][d] = QI(1);
  // Gauss-Jordan over Q(i).
  for (size_t c = 0; c < d; ++c) {
    size_t piv = c;
    while (piv < d && m[piv][c].is_zero()) ++piv;
    if (piv == d) return std::nullopt;
    std::swap(m[c], m[piv]);
    QI inv = QI(1) / m[c][c];
    for (auto& v : m[c]) v *= inv;
    for (size_t r = 0; r < d; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      QI f0 = m[r][c];
      for (size_t k = c; k <= d; ++k) m[r][k] -= f0 * m[c][k];
    }
  }
  std::vector<QI> u(d);
  for (size_t k = 0; k < d; ++k) u[k] = m[k][d];
  return u;
}

QIPoly multiplication_charpoly(const AlgScalar& a) {
  const FieldPtr& f = a.field();
  const size_t d = static_cast<size_t>(f->degree());
  std::vector<std::vector<QI>> mat(d, std::vector<QI>(d));
  for (size_t k = 0; k < d; ++k) {
    std::vector<QI> e(d);
    e[k] = QI(1);
    AlgScalar col = a * AlgScalar(f, e);
    for (size_t r = 0; r < d; ++r) mat[r][k] = col.coords()[r];
  }
  return charpoly(mat);
}

// Gaussian elimination with partial pivoting on complex MPFR values.
std::optional<std::vector<CBig>> solve_complex(std::vector<std::vector<CBig>> m, std::vector<CBig> rhs) {
  const size_t n = m.size();
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    for (size_t r = c + 1; r < n; ++r)
      if (abs(m[r][c]) > abs(m[piv][c])) piv = r;
    if (m[piv][c].is_zero()) return std::nullopt;
    std::swap(m[c], m[piv]);
    std::swap(rhs[c], rhs[piv]);
    for (size_t r = c + 1; r < n; ++r) {
      CBig f = m[r][c] / m[c][c];
      for (size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
      rhs[r] -= f * rhs[c];
    }
  }
  std::vector<CBig> x(n, CBig(rhs[0].prec()));
  for (size_t r = n; r-- > 0;) {
    CBig acc = rhs[r];
    for (size_t k = r + 1; k < n; ++k) acc -= m[r][k] * x[k];
    x[r] = acc / m[r][r];
  }
  return x;
}

// Looks for b in a's field with b^n = a and embedding close to `target`.
std::optional<AlgScalar> recognize_in_field(const AlgScalar& a, unsigned n, const CBig& target) {
  const FieldPtr& f = a.field();
  const size_t d = static_cast<size_t>(f->degree());
  if (d == 1) return std::nullopt;
  double combos = std::pow(static_cast<double>(n), static_cast<double>(d - 1));
  if (combos > 4096) return std::nullopt;
  auto conj = f->conjugates(kWork);
  std::vector<std::vector<CBig>> vand(d, std::vector<CBig>(d, CBig(kWork)));
  for (size_t j = 0; j < d; ++j) {
    CBig pw = CBig::from_rat(1, kWork);
    for (size_t k = 0; k < d; ++k) {
      vand[j][k] = pw;
      pw *= conj[j];
    }
  }
  // Candidate n-th roots of every conjugate of a.
  std::vector<std::vector<CBig>> cand(d);
  Real two_pi(kWork);
  mpfr_const_pi(two_pi.get(), MPFR_RNDN);
  two_pi = two_pi * Real(2, kWork);
  for (size_t j = 1; j < d; ++j) {
    CBig aj(kWork);
    for (size_t k = d; k-- > 0;) aj = aj * conj[j] + CBig::from_qi(a.coords()[k], kWork);
    CBig r0 = principal_root(aj, n);
    for (unsigned l = 0; l < n; ++l) {
      Real ang = two_pi * Real(static_cast<long>(l), kWork) / Real(static_cast<long>(n), kWork);
      CBig w(kWork);
      mpfr_sin_cos(w.im().get(), w.re().get(), ang.get(), MPFR_RNDN);
      cand[j].push_back(r0 * w);
    }
  }
  std::vector<size_t> choice(d, 0);
  while (true) {
    std::vector<CBig> rhs{target.with_prec(kWork)};
    for (size_t j = 1; j < d; ++j) rhs.push_back(cand[j][choice[j]]);
    if (auto sol = solve_complex(vand, rhs)) {
      std::vector<QI> coords(d);
      bool ok = true;
      for (size_t k = 0; k < d && ok; ++k) {
        auto re = rationalize((*sol)[k].re(), kWork - 64);
        auto im = rationalize((*sol)[k].im(), kWork - 64);
        if (!re || !im || (!f->has_i() && sgn(*im) != 0)) ok = false;
        else coords[k] = QI(*re, *im);
      }
      if (ok) {
        AlgScalar b(f, coords);
        if (b.pow(n) == a) return b;
      }
    }
    size_t pos = 1;
    while (pos < d && ++choice[pos] == n) choice[pos++] = 0;
    if (pos >= d) break;
  }
  return std::nullopt;
}

bool near(const CBig& a, const CBig& b, long bits) {
  Real scale = abs(b);
  if (scale < Real(1, scale.prec())) scale = Real(1, scale.prec());
  return abs(a - b) <= scale * Real::pow2(-bits, scale.prec());
}

QI rational_approx(const CBig& z) {
  return QI(Rat(z.re().with_prec(40).to_rat()), Rat(z.im().with_prec(40).to_rat()));
}

// Horner evaluation of field coordinates at an embedding of the generator.
CBig eval_coords(const std::vector<QI>& c, const CBig& z) {
  CBig acc(z.prec());
  for (size_t k = c.size(); k-- > 0;) acc = acc * z + CBig::from_qi(c[k], z.prec());
  return acc;
}

AlgScalar eval_in(const std::vector<QI>& c, const AlgScalar& z) {
  AlgScalar acc = AlgScalar(0).lifted(z.field());
  for (size_t k = c.size(); k-- > 0;) acc = acc * z + AlgScalar(c[k]);
  return acc.lifted(z.field());
}

// n-th root when it generates a proper extension of a non-base field: a
// primitive element γ = β + kθ of Q(θ, β) is adjoined to the base, its
// minimal polynomial recovered from the numeric conjugates and verified.
RootResult compositum_root(const AlgScalar& a, unsigned n, const CBig& target) {
  const FieldPtr& f = a.field();
  const bool base_i = f->has_i();
  const size_t d = static_cast<size_t>(f->degree());
  for (mpfr_prec_t wp = 2 * kWork; wp <= 8 * kWork; wp *= 2) {
    auto conj = f->conjugates(wp);
    Real two_pi(wp);
    mpfr_const_pi(two_pi.get(), MPFR_RNDN);
    two_pi = two_pi * Real(2, wp);
    // roots[j * n + l]: l-th n-th root of the j-th conjugate of a.
    std::vector<CBig> roots;
    std::vector<size_t> conj_of;
    for (size_t j = 0; j < d; ++j) {
      CBig r0 = principal_root(eval_coords(a.coords(), conj[j]), n);
      for (unsigned l = 0; l < n; ++l) {
        Real ang = two_pi * Real(static_cast<long>(l), wp) / Real(static_cast<long>(n), wp);
        CBig w(wp);
        mpfr_sin_cos(w.im().get(), w.re().get(), ang.get(), MPFR_RNDN);
        roots.push_back(r0 * w);
        conj_of.push_back(j);
      }
    }
    size_t t_idx = 0;
    for (size_t k = 1; k < n; ++k)
      if (abs(roots[k] - target) < abs(roots[t_idx] - target)) t_idx = k;
    for (long shift : {1L, 2L, -1L, 3L, -2L, 5L, 7L}) {
      std::vector<CBig> gam;
      for (size_t s = 0; s < roots.size(); ++s)
        gam.push_back(roots[s] + conj[conj_of[s]] * CBig::from_rat(shift, wp));
      bool distinct = true;
      for (size_t s = 0; s < gam.size() && distinct; ++s)
        for (size_t t = s + 1; t < gam.size() && distinct; ++t)
          distinct = !near(gam[s], gam[t], static_cast<long>(wp) / 4);
      if (!distinct) continue;
      std::vector<CBig> prod{CBig::from_rat(1, wp)};
      for (const auto& g : gam) {
        std::vector<CBig> next(prod.size() + 1, CBig(wp));
        for (size_t k = 0; k < prod.size(); ++k) {
          next[k + 1] += prod[k];
          next[k] -= prod[k] * g;
        }
        prod = std::move(next);
      }
      QIPoly P;
      bool ok = true;
      for (const auto& c : prod) {
        auto re = rationalize(c.re(), static_cast<long>(wp) - 64);
        auto im = rationalize(c.im(), static_cast<long>(wp) - 64);
        if (!re || !im || (!base_i && sgn(*im) != 0)) {
          ok = false;
          break;
        }
        P.push_back(QI(*re, *im));
      }
      if (!ok) break;  // retry at higher precision
      QIPoly m;
      try {
        m = minimal_factor_containing(P, gam, t_idx, !base_i);
      } catch (const Error&) {
        continue;
      }
      const size_t D = static_cast<size_t>(degree(m));
      std::vector<size_t> sub;
      for (size_t s = 0; s < gam.size(); ++s) {
        Real scale = abs(gam[s]);
        CBig v = poly_eval(m, gam[s]);
        if (abs(v) < Real::pow2(-static_cast<long>(wp) / 2, wp) * (scale + Real(1, wp))) sub.push_back(s);
      }
      if (sub.size() != D) continue;
      std::vector<std::vector<CBig>> vand;
      std::vector<CBig> rhs;
      for (size_t s : sub) {
        std::vector<CBig> row;
        CBig pw = CBig::from_rat(1, wp);
        for (size_t k = 0; k < D; ++k) {
          row.push_back(pw);
          pw *= gam[s];
        }
        vand.push_back(std::move(row));
        rhs.push_back(conj[conj_of[s]]);
      }
      auto sol = solve_complex(vand, rhs);
      if (!sol) continue;
      std::vector<QI> u;
      for (const auto& v : *sol) {
        auto re = rationalize(v.re(), static_cast<long>(wp) - 64);
        auto im = rationalize(v.im(), static_cast<long>(wp) - 64);
        if (!re || !im) {
          ok = false;
          break;
        }
        u.push_back(QI(*re, *im));
      }
      if (!ok) break;
      FieldPtr base = base_i ? NumberField::gaussian() : NumberField::rationals();
      FieldPtr K = field_adjoin(base, m, rational_approx(gam[t_idx]));
      AlgScalar g = AlgScalar::generator(K);
      AlgScalar theta_img = eval_in(u, g);
      if (!eval_in(f->minpoly(), theta_img).is_zero()) continue;
      AlgScalar beta = g - theta_img * AlgScalar(shift);
      if (!(beta.pow(n) == eval_in(a.coords(), theta_img))) continue;
      return {beta, K, theta_img};
    }
  }
  throw FieldError("no primitive element found for a root over " + f->describe());
}

}  // namespace

RootResult alg_root(const AlgScalar& a, unsigned n, std::optional<CBig> approx) {
  if (a.is_zero()) throw PreconditionError("root of zero");
  if (n == 0) throw PreconditionError("zeroth root");
  const FieldPtr& f = a.field();
  const CBig av = a.embed(kWork);
  CBig target = principal_root(av, n);
  if (approx) {
    // Snap the hint to the nearest true root.
    Real two_pi(kWork);
    mpfr_const_pi(two_pi.get(), MPFR_RNDN);
    two_pi = two_pi * Real(2, kWork);
    CBig best = target;
    Real best_d = abs(target - approx->with_prec(kWork));
    for (unsigned l = 1; l < n; ++l) {
      Real ang = two_pi * Real(static_cast<long>(l), kWork) / Real(static_cast<long>(n), kWork);
      CBig w(kWork);
      mpfr_sin_cos(w.im().get(), w.re().get(), ang.get(), MPFR_RNDN);
      CBig c = target * w;
      Real dd = abs(c - approx->with_prec(kWork));
      if (dd < best_d) {
        best = c;
        best_d = dd;
      }
    }
    target = best;
  }
  AlgScalar theta_f = AlgScalar::generator(f);
  if (n == 1) return {a, f, theta_f};

  if (auto b = recognize_in_field(a, n, target)) return {*b, f, theta_f};

  // Minimal polynomial of a over the base, then of its n-th root.
  QIPoly chi = multiplication_charpoly(a);
  QIPoly mu = poly_divmod(chi, poly_gcd(chi, poly_derivative(chi))).first;
  mu = poly_monic(mu);
  const bool base_i = f->has_i();
  QIPoly big = poly_inflate(mu, n);
  auto roots = poly_roots(big, kWork);
  size_t idx = 0;
  for (size_t k = 1; k < roots.size(); ++k)
    if (abs(roots[k] - target) < abs(roots[idx] - target)) idx = k;
  QIPoly m = minimal_factor_containing(big, roots, idx, !base_i);

  std::optional<std::vector<QI>> u;
  if (!f->is_base()) {
    if (degree(mu) != f->degree() || !(u = express_generator(a))) return compositum_root(a, n, target);
  }

  FieldPtr k_field;
  AlgScalar beta;  // the root, in k_field
  const int e = degree(m);
  if (e == 1) {
    QI r = -m[0];
    k_field = (base_i || !r.is_real()) ? NumberField::gaussian() : NumberField::rationals();
    beta = AlgScalar(r);
  } else {
    bool binomial = m[0].is_real();
    for (int k = 1; k < e; ++k) binomial = binomial && m[static_cast<size_t>(k)].is_zero();
    bool done = false;
    if (binomial) {
      // x^e - c with c = sigma * (s/q)^e * mm.
      Rat c = -m[0].re;
      int sigma = sgn(c);
      Rat ac = abs(c);
      BigInt num = ac.get_num(), den = ac.get_den();
      BigInt den_pow;
      mpz_pow_ui(den_pow.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(e - 1));
      auto [s, mm] = extract_power(num * den_pow, static_cast<unsigned>(e));
      Rat scale(s, den);
      scale.canonicalize();
      Rat cm(mm);
      if (sigma < 0) cm = -cm;
      CBig psi0 = principal_root(CBig::from_rat(cm, kWork), static_cast<unsigned>(e));
      CBig zeta = target / (CBig::from_rat(scale, kWork) * psi0);
      const QI units[] = {QI(1), QI(-1), QI(0, 1), QI(0, -1)};
      for (const auto& z : units) {
        if (!near(zeta, CBig::from_qi(z, kWork), kWork / 2)) continue;
        bool need_i = base_i || !z.is_real() || sigma < 0;
        QIPoly bin(static_cast<size_t>(e) + 1);
        bin[0] = QI(-cm);
        bin[static_cast<size_t>(e)] = QI(1);
        auto broots = poly_roots(bin, kWork);
        size_t bi = 0;
        for (size_t k = 1; k < broots.size(); ++k)
          if (abs(broots[k] - psi0) < abs(broots[bi] - psi0)) bi = k;
        QIPoly mf = minimal_factor_containing(bin, broots, bi, !need_i);
        FieldPtr base = need_i ? NumberField::gaussian() : NumberField::rationals();
        if (degree(mf) == 1) {
          k_field = base;
          beta = AlgScalar(-mf[0]) * AlgScalar(z) * AlgScalar(scale);
        } else {
          k_field = field_adjoin(base, mf, rational_approx(psi0));
          beta = AlgScalar::generator(k_field) * AlgScalar(z) * AlgScalar(scale);
        }
        done = true;
        break;
      }
      if (!done) {
        // Keep the binomial but designate the rescaled target directly.
        CBig psi = target / CBig::from_rat(scale, kWork);
        QIPoly bin(static_cast<size_t>(e) + 1);
        bin[0] = QI(-cm);
        bin[static_cast<size_t>(e)] = QI(1);
        FieldPtr base = base_i ? NumberField::gaussian() : NumberField::rationals();
        k_field = field_adjoin(base, bin, rational_approx(psi));
        beta = AlgScalar::generator(k_field) * AlgScalar(scale);
        done = true;
      }
    }
    if (!done) {
      FieldPtr base = base_i ? NumberField::gaussian() : NumberField::rationals();
      k_field = field_adjoin(base, m, rational_approx(target));
      beta = AlgScalar::generator(k_field);
    }
  }

  // Image of the old generator: θ = sum u_k a^k with a = beta^n.
  AlgScalar theta_img;
  if (f->is_base()) {
    theta_img = AlgScalar(-f->minpoly()[0]).lifted(k_field);
  } else {
    AlgScalar an = beta.pow(n);
    AlgScalar acc = AlgScalar(0).lifted(k_field);
    for (size_t k = u->size(); k-- > 0;) acc = acc * an + AlgScalar((*u)[k]);
    theta_img = acc.lifted(k_field);
  }
  RootResult res{beta.lifted(k_field), k_field, theta_img};
  if (!(res.root.pow(n) == map_to_field(a, res))) throw ArithmeticError("alg_root verification failed");
  return res;
}

AlgScalar map_to_field(const AlgScalar& x, const RootResult& r) {
  if (x.field() == r.field) return x;
  if (x.field()->is_base()) return x.lifted(r.field);
  AlgScalar acc = AlgScalar(0).lifted(r.field);
  const auto& c = x.coords();
  for (size_t k = c.size(); k-- > 0;) acc = acc * r.theta_image + AlgScalar(c[k]);
  return acc.lifted(r.field);
}

std::optional<AlgScalar> embed_into(const AlgScalar& x, const FieldPtr& target) {
  try {
    if (common_field(x.field(), target) == target) return x.lifted(target);
  } catch (const FieldError&) {
  }
  const FieldPtr& f = x.field();
  if (f->is_base() || (f->has_i() && !target->has_i())) return std::nullopt;
  const QIPoly& m = f->minpoly();
  const int e = degree(m);
  for (int k = 1; k < e; ++k)
    if (!m[static_cast<size_t>(k)].is_zero()) return std::nullopt;
  try {
    AlgScalar c = AlgScalar(-m[0]).lifted(target);
    RootResult rr = alg_root(c, static_cast<unsigned>(e), AlgScalar::generator(f).embed(kWork));
    if (rr.field != target) return std::nullopt;
    AlgScalar acc = AlgScalar(0).lifted(target);
    const auto& cs = x.coords();
    for (size_t k = cs.size(); k-- > 0;) acc = acc * rr.root + AlgScalar(cs[k]);
    return acc.lifted(target);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace hh
