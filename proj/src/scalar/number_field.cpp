#include "hh/number_field.hpp"

#include <map>

#include "hh/errors.hpp"

namespace hh {

NumberField::NumberField(QIPoly minpoly, bool has_i, QI center, Rat radius)
    : minpoly_(std::move(minpoly)), has_i_(has_i), center_(std::move(center)), radius_(std::move(radius)) {}

namespace {

struct Registry {
  std::mutex mu;
  std::vector<FieldPtr> fields;
  std::map<const NumberField*, FieldPtr> lifted;
};

Registry& registry() {
  static Registry r;
  return r;
}

// Upper bound on the distance between a point and a rational center.
Real dist_up(const CBig& z, const QI& c) {
  CBall d = CBall(z, Real(0, 64)) - CBall::exact_qi(c, z.prec());
  return d.mag_upper();
}

Real dist_down(const CBig& z, const QI& c) {
  CBall d = CBall(z, Real(0, 64)) - CBall::exact_qi(c, z.prec());
  return d.mag_lower();
}

// d * |P(z)| / |P'(z)| bounds the distance from z to some root of P.
Real inclusion_radius(const QIPoly& p, const CBig& z) {
  CBall zb(z, Real(0, 64));
  Real num = poly_eval(p, zb).mag_upper();
  Real den = poly_eval(poly_derivative(p), zb).mag_lower();
  if (den.sign() <= 0) throw ArithmeticError("derivative vanishes near a root");
  return up_mul(Real(degree(p), 64), up_div(num, den));
}

bool same_root(const NumberField& a, const NumberField& b) {
  if (a.degree() == 1) return true;
  CBall ga = a.generator(96);
  CBall gb = b.generator(96);
  Real d = abs(ga.mid() - gb.mid());
  return d <= up_add(up_add(ga.rad(), gb.rad()), Real::pow2(-80));
}

FieldPtr intern(std::shared_ptr<NumberField> f) {
  auto& reg = registry();
  {
    std::lock_guard<std::mutex> lock(reg.mu);
    for (const auto& g : reg.fields)
      if (g->has_i() == f->has_i() && g->minpoly() == f->minpoly() && (f->degree() == 1)) return g;
  }
  // Root comparison refines generators; do it outside the registry lock.
  std::vector<FieldPtr> candidates;
  {
    std::lock_guard<std::mutex> lock(reg.mu);
    for (const auto& g : reg.fields)
      if (g->has_i() == f->has_i() && g->minpoly() == f->minpoly()) candidates.push_back(g);
  }
  for (const auto& g : candidates)
    if (same_root(*g, *f)) return g;
  std::lock_guard<std::mutex> lock(reg.mu);
  reg.fields.push_back(f);
  return f;
}

}  // namespace

FieldPtr NumberField::rationals() {
  static FieldPtr q = intern(std::make_shared<NumberField>(QIPoly{QI(0), QI(1)}, false, QI(0), Rat(1)));
  return q;
}

FieldPtr NumberField::gaussian() {
  static FieldPtr q = intern(std::make_shared<NumberField>(QIPoly{QI(0), QI(1)}, true, QI(0), Rat(1)));
  return q;
}

CBall NumberField::generator(mpfr_prec_t prec) const {
  const mpfr_prec_t wp = prec + 32;
  if (degree() == 1) {
    QI root = -minpoly_[0];
    return CBall::exact_qi(root, wp);
  }
  CBig z(wp);
  {
    std::lock_guard<std::mutex> lock(cache_mu_);
    if (cache_ && cache_->prec() >= wp) {
      z = *cache_;
    } else {
      if (cache_) {
        z = refine_root(minpoly_, *cache_, wp);
      } else {
        auto roots = poly_roots(minpoly_, wp);
        size_t best = 0;
        for (size_t k = 1; k < roots.size(); ++k)
          if (dist_up(roots[k], center_) < dist_up(roots[best], center_)) best = k;
        z = roots[best];
      }
      cache_ = z;
    }
  }
  Real rho = inclusion_radius(minpoly_, z);
  Real reach = up_add(dist_up(z, center_), rho);
  if (reach > up_from_rat(radius_))
    throw ArithmeticError("generator enclosure escapes its isolating disc");
  return CBall(z, rho);
}

std::vector<CBig> NumberField::conjugates(mpfr_prec_t prec) const {
  if (degree() == 1) return {CBig::from_qi(-minpoly_[0], prec)};
  auto roots = poly_roots(minpoly_, prec);
  size_t best = 0;
  for (size_t k = 1; k < roots.size(); ++k)
    if (dist_up(roots[k], center_) < dist_up(roots[best], center_)) best = k;
  std::swap(roots[0], roots[best]);
  // Pin the designated root to the cached high-precision value.
  roots[0] = generator(prec).mid().with_prec(prec);
  return roots;
}

std::string NumberField::describe() const {
  std::string base = has_i_ ? "Q(i)" : "Q";
  if (degree() == 1) return base;
  return base + "(th), th root of " + to_string(minpoly_, "th") + " near " + to_string(center_);
}

FieldPtr field_adjoin(const FieldPtr& base, const QIPoly& poly_in, const QI& approx, std::optional<Rat> radius) {
  if (!base->is_base()) throw PreconditionError("adjoining over a proper extension is not supported");
  QIPoly poly(poly_in);
  trim(poly);
  const int d = degree(poly);
  if (d < 1 || !(poly.back() == QI(1))) throw PreconditionError("generator polynomial must be monic");
  if (d == 1) throw PreconditionError("degree-1 generator lies in the base field");
  const bool has_i = base->has_i();
  if (!has_i && !is_real_poly(poly)) throw PreconditionError("polynomial coefficients lie outside the base field");
  if (!is_squarefree(poly)) throw PreconditionError("generator polynomial is not squarefree");
  QIPoly factor = find_proper_factor(poly, !has_i);
  if (!factor.empty()) throw FieldError("generator polynomial is reducible; factor " + to_string(factor));

  const mpfr_prec_t wp = 128;
  auto roots = poly_roots(poly, wp);
  std::vector<Real> rho;
  for (auto& z : roots) {
    z = refine_root(poly, z, wp);
    rho.push_back(inclusion_radius(poly, z));
  }
  for (size_t a = 0; a < roots.size(); ++a)
    for (size_t b = a + 1; b < roots.size(); ++b)
      if (abs(roots[a] - roots[b]) <= up_add(rho[a], rho[b]))
        throw ArithmeticError("could not separate the roots of the generator polynomial");
  size_t j = 0;
  for (size_t k = 1; k < roots.size(); ++k)
    if (dist_up(roots[k], approx) < dist_up(roots[j], approx)) j = k;

  Rat R;
  if (radius) {
    R = *radius;
  } else {
    Real sep(64);
    bool first = true;
    for (size_t k = 0; k < roots.size(); ++k) {
      if (k == j) continue;
      Real dk = dist_down(roots[k], approx);
      if (first || dk < sep) sep = dk;
      first = false;
    }
    Real mid = (dist_up(roots[j], approx) + sep) / Real(2, 64);
    // Keep the stored radius short: three significant bits suffice.
    R = Rat(mid.with_prec(8).to_rat());
  }
  Real Rup = Real::from_rat(R, 64, MPFR_RNDD);
  if (up_add(dist_up(roots[j], approx), rho[j]) > Rup)
    throw PreconditionError("approximation does not isolate a root (designated root not inside the disc)");
  for (size_t k = 0; k < roots.size(); ++k) {
    if (k == j) continue;
    if (down_sub(dist_down(roots[k], approx), rho[k]) <= Real::from_rat(R, 64, MPFR_RNDU))
      throw PreconditionError("approximation does not isolate a root (disc holds several roots)");
  }
  auto f = std::make_shared<NumberField>(poly, has_i, approx, R);
  return intern(std::move(f));
}

FieldPtr with_i(const FieldPtr& f) {
  if (f->has_i()) return f;
  if (f->is_base()) return NumberField::gaussian();
  auto& reg = registry();
  {
    std::lock_guard<std::mutex> lock(reg.mu);
    auto it = reg.lifted.find(f.get());
    if (it != reg.lifted.end()) return it->second;
  }
  QIPoly factor = find_proper_factor(f->minpoly(), false);
  if (!factor.empty())
    throw FieldError("minimal polynomial " + to_string(f->minpoly(), "th") + " splits over Q(i)");
  FieldPtr g = intern(std::make_shared<NumberField>(f->minpoly(), true, f->center(), f->radius()));
  std::lock_guard<std::mutex> lock(reg.mu);
  reg.lifted[f.get()] = g;
  return g;
}

FieldPtr common_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return a;
  if (a->is_base() && b->is_base()) return NumberField::gaussian();
  if (a->is_base()) return a->has_i() ? with_i(b) : b;
  if (b->is_base()) return b->has_i() ? with_i(a) : a;
  FieldPtr la = with_i(a);
  FieldPtr lb = with_i(b);
  if (la == lb) return la;
  throw FieldError("no common field for " + a->describe() + " and " + b->describe());
}

}  // namespace hh
