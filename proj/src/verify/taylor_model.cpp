#include "hh/taylor_model.hpp"

#include <functional>

#include "hh/errors.hpp"

namespace hh {

TMSpace::TMSpace(std::vector<std::string> names, int dmax, mpfr_prec_t prec)
    : names_(std::move(names)), dmax_(dmax), prec_(prec) {
  if (dmax < 0) throw PreconditionError("negative Taylor-model degree");
  const size_t n = names_.size();
  std::vector<int> e(n, 0);
  std::function<void(size_t, int)> gen = [&](size_t k, int left) {
    if (k == n) {
      monos_.push_back(e);
      return;
    }
    for (int d = 0; d <= left; ++d) {
      e[k] = d;
      gen(k + 1, left - d);
    }
    e[k] = 0;
  };
  gen(0, dmax);
  const size_t m = monos_.size();
  prod_.assign(m * m, -1);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      std::vector<int> s(n);
      for (size_t k = 0; k < n; ++k) s[k] = monos_[i][k] + monos_[j][k];
      prod_[i * m + j] = index_of(s);
    }
}

int TMSpace::index_of(const std::vector<int>& e) const {
  for (size_t k = 0; k < monos_.size(); ++k)
    if (monos_[k] == e) return static_cast<int>(k);
  return -1;
}

TaylorModel::TaylorModel(std::shared_ptr<const TMSpace> space) : space_(std::move(space)), rem_(0, 64) {}

TaylorModel TaylorModel::constant(std::shared_ptr<const TMSpace> space, const CBall& c) {
  TaylorModel t(space);
  t.c_.assign(space->size(), CBall(space->prec()));
  t.nz_.assign(space->size(), 0);
  t.dense_ = true;
  t.c_[0] = c;
  t.nz_[0] = 1;
  return t;
}

TaylorModel TaylorModel::from_poly(std::shared_ptr<const TMSpace> space, const ParamPoly& p) {
  TaylorModel t(space);
  t.c_.assign(space->size(), CBall(space->prec()));
  t.nz_.assign(space->size(), 0);
  t.dense_ = true;
  const auto& names = space->names();
  for (const auto& [e, c] : p.terms()) {
    std::vector<int> ex(names.size(), 0);
    for (size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      size_t pos = 0;
      while (pos < names.size() && names[pos] != p.names()[k]) ++pos;
      if (pos == names.size()) throw ParameterError("parameter " + p.names()[k] + " is not bounded");
      ex[pos] = e[k];
    }
    CBall b = c.enclose(space->prec());
    int idx = space->index_of(ex);
    if (idx < 0) {
      t.rem_ = up_add(t.rem_, b.mag_upper());
    } else {
      auto k = static_cast<size_t>(idx);
      t.c_[k] = t.nz_[k] ? t.c_[k] + b : b;
      t.nz_[k] = 1;
    }
  }
  return t;
}

bool TaylorModel::is_zero() const {
  if (!rem_.is_zero()) return false;
  if (!dense_) return true;
  for (size_t k = 0; k < nz_.size(); ++k)
    if (nz_[k] && (!c_[k].mid().is_zero() || !c_[k].rad().is_zero())) return false;
  return true;
}

Real TaylorModel::mag_upper() const {
  Real m = rem_;
  if (dense_)
    for (size_t k = 0; k < c_.size(); ++k)
      if (nz_[k]) m = up_add(m, c_[k].mag_upper());
  return m;
}

void TaylorModel::squash(const Real& tiny) {
  if (!dense_) return;
  Real m = mag_upper();
  if (m < tiny) {
    c_.clear();
    nz_.clear();
    dense_ = false;
    rem_ = m;
  }
}

TaylorModel TaylorModel::operator-() const {
  TaylorModel t(*this);
  for (auto& c : t.c_) c = -c;
  return t;
}

TaylorModel operator+(const TaylorModel& a, const TaylorModel& b) {
  TaylorModel t(a);
  t += b;
  return t;
}

TaylorModel& TaylorModel::operator+=(const TaylorModel& b) {
  rem_ = up_add(rem_, b.rem_);
  if (!b.dense_) return *this;
  if (!dense_) {
    c_.assign(space_->size(), CBall(space_->prec()));
    nz_.assign(space_->size(), 0);
    dense_ = true;
  }
  for (size_t k = 0; k < c_.size(); ++k)
    if (b.nz_[k]) {
      c_[k] = nz_[k] ? c_[k] + b.c_[k] : b.c_[k];
      nz_[k] = 1;
    }
  return *this;
}

TaylorModel operator-(const TaylorModel& a, const TaylorModel& b) { return a + (-b); }

TaylorModel operator*(const TaylorModel& a, const TaylorModel& b) {
  TaylorModel t(a.space_);
  // (pa + ra)(pb + rb) = pa·pb + ra·(pb + rb) + pa·rb
  Real mb = b.mag_upper();
  Real pa(0, 64);
  if (a.dense_)
    for (size_t k = 0; k < a.c_.size(); ++k)
      if (a.nz_[k]) pa = up_add(pa, a.c_[k].mag_upper());
  t.rem_ = up_add(up_mul(a.rem_, mb), up_mul(pa, b.rem_));
  if (!a.dense_ || !b.dense_) return t;
  const TMSpace& sp = *a.space_;
  t.c_.assign(sp.size(), CBall(sp.prec()));
  t.nz_.assign(sp.size(), 0);
  t.dense_ = true;
  for (size_t i = 0; i < sp.size(); ++i) {
    if (!a.nz_[i]) continue;
    for (size_t j = 0; j < sp.size(); ++j) {
      if (!b.nz_[j]) continue;
      int k = sp.product(i, j);
      if (k < 0) {
        t.rem_ = up_add(t.rem_, up_mul(a.c_[i].mag_upper(), b.c_[j].mag_upper()));
      } else {
        auto uk = static_cast<size_t>(k);
        t.c_[uk] = t.nz_[uk] ? t.c_[uk] + a.c_[i] * b.c_[j] : a.c_[i] * b.c_[j];
        t.nz_[uk] = 1;
      }
    }
  }
  return t;
}

TaylorModel operator*(const TaylorModel& a, const CBall& c) {
  TaylorModel t(a.space_);
  t.rem_ = up_mul(a.rem_, c.mag_upper());
  if (!a.dense_) return t;
  t.c_.assign(a.c_.size(), CBall(a.space_->prec()));
  t.nz_ = a.nz_;
  t.dense_ = true;
  for (size_t k = 0; k < a.c_.size(); ++k)
    if (a.nz_[k]) t.c_[k] = a.c_[k] * c;
  return t;
}

}  // namespace hh
