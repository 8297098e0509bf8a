#include "hh/param_poly.hpp"

#include <algorithm>

#include "hh/errors.hpp"

namespace hh {

ParamPoly::ParamPoly(const AlgScalar& c) {
  if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

ParamPoly::ParamPoly(std::vector<std::string> names) : names_(std::move(names)) {}

ParamPoly ParamPoly::variable(const std::vector<std::string>& names, const std::string& name) {
  ParamPoly p(names);
  int k = p.index_of(name);
  if (k < 0) throw ParameterError("unknown parameter " + name);
  Exponents e(names.size(), 0);
  e[static_cast<size_t>(k)] = 1;
  p.terms_.emplace(std::move(e), AlgScalar(1));
  return p;
}

ParamPoly ParamPoly::constant(const std::vector<std::string>& names, const AlgScalar& c) {
  ParamPoly p(names);
  if (!c.is_zero()) p.terms_.emplace(Exponents(names.size(), 0), c);
  return p;
}

int ParamPoly::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

bool ParamPoly::is_constant() const {
  for (const auto& [e, c] : terms_)
    if (std::any_of(e.begin(), e.end(), [](int v) { return v != 0; })) return false;
  return true;
}

AlgScalar ParamPoly::constant_term() const {
  for (const auto& [e, c] : terms_)
    if (std::all_of(e.begin(), e.end(), [](int v) { return v == 0; })) return c;
  return AlgScalar(0);
}

std::optional<AlgScalar> ParamPoly::as_constant() const {
  if (!is_constant()) return std::nullopt;
  return constant_term();
}

int ParamPoly::total_degree() const {
  int d = is_zero() ? -1 : 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int v : e) s += v;
    d = std::max(d, s);
  }
  return d;
}

int ParamPoly::degree_in(const std::string& name) const {
  int k = index_of(name);
  if (k < 0) return 0;
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<size_t>(k)]);
  return d;
}

ParamPoly ParamPoly::with_names(const std::vector<std::string>& names) const {
  if (names == names_) return *this;
  ParamPoly r(names);
  std::vector<int> pos(names_.size());
  for (size_t k = 0; k < names_.size(); ++k) {
    pos[k] = r.index_of(names_[k]);
    if (pos[k] < 0) {
      bool used = std::any_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first[k] != 0; });
      if (used) throw ParameterError("parameter " + names_[k] + " missing from the target list");
    }
  }
  for (const auto& [e, c] : terms_) {
    Exponents ne(names.size(), 0);
    for (size_t k = 0; k < e.size(); ++k)
      if (pos[k] >= 0) ne[static_cast<size_t>(pos[k])] = e[k];
    r.terms_[ne] += c;
  }
  return r;
}

void align(ParamPoly& a, ParamPoly& b) {
  if (a.names_ == b.names_) return;
  if (b.is_constant()) {
    b = b.with_names(a.names_);
  } else if (a.is_constant()) {
    a = a.with_names(b.names_);
  } else {
    throw ParameterError("parameter lists differ");
  }
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& b_in) {
  if (b_in.is_zero()) return *this;
  ParamPoly b(b_in);
  align(*this, b);
  for (auto& [e, c] : b.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& b) { return *this += -b; }

ParamPoly& ParamPoly::operator*=(const ParamPoly& b_in) {
  if (is_zero() || b_in.is_zero()) {
    ParamPoly b(b_in);
    align(*this, b);
    terms_.clear();
    return *this;
  }
  ParamPoly b(b_in);
  align(*this, b);
  std::map<Exponents, AlgScalar> out;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(ea);
      for (size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
      auto it = out.find(e);
      if (it == out.end()) out.emplace(std::move(e), ca * cb);
      else it->second += ca * cb;
    }
  std::erase_if(out, [](const auto& t) { return t.second.is_zero(); });
  terms_ = std::move(out);
  return *this;
}

ParamPoly& ParamPoly::operator*=(const AlgScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

bool operator==(const ParamPoly& a_in, const ParamPoly& b_in) {
  ParamPoly a(a_in), b(b_in);
  try {
    align(a, b);
  } catch (const ParameterError&) {
    return false;
  }
  if (a.terms_.size() != b.terms_.size()) return false;
  for (const auto& [e, c] : a.terms_) {
    auto it = b.terms_.find(e);
    if (it == b.terms_.end() || it->second != c) return false;
  }
  return true;
}

ParamPoly ParamPoly::substitute(const std::map<std::string, ParamPoly>& values,
                                const std::vector<std::string>& result_names) const {
  std::vector<ParamPoly> image;
  for (const auto& n : names_) {
    auto it = values.find(n);
    if (it != values.end()) image.push_back(it->second.with_names(result_names));
    else image.push_back(variable(result_names, n));
  }
  ParamPoly out(result_names);
  for (const auto& [e, c] : terms_) {
    ParamPoly t = constant(result_names, c);
    for (size_t k = 0; k < e.size(); ++k)
      for (int p = 0; p < e[k]; ++p) t *= image[k];
    out += t;
  }
  return out;
}

ParamPoly ParamPoly::bind(const std::map<std::string, AlgScalar>& values) const {
  std::vector<std::string> rest;
  std::map<std::string, ParamPoly> sub;
  for (const auto& n : names_) {
    auto it = values.find(n);
    if (it == values.end()) rest.push_back(n);
    else sub.emplace(n, ParamPoly(it->second));
  }
  return substitute(sub, rest);
}

AlgScalar ParamPoly::evaluate(const std::map<std::string, AlgScalar>& values) const {
  AlgScalar acc;
  for (const auto& [e, c] : terms_) {
    AlgScalar t = c;
    for (size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      auto it = values.find(names_[k]);
      if (it == values.end()) throw ParameterError("parameter " + names_[k] + " is unbound");
      t *= it->second.pow(e[k]);
    }
    acc += t;
  }
  return acc;
}

CBig ParamPoly::evaluate(const std::map<std::string, CBig>& values, mpfr_prec_t prec) const {
  CBig acc(prec);
  for (const auto& [e, c] : terms_) {
    CBig t = c.embed(prec + 16);
    for (size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      auto it = values.find(names_[k]);
      if (it == values.end()) throw ParameterError("parameter " + names_[k] + " is unbound");
      t *= pow(it->second.with_prec(prec + 16), e[k]);
    }
    acc += t;
  }
  return acc.with_prec(prec);
}

ParamPoly ParamPoly::derivative(const std::string& name) const {
  ParamPoly r(names_);
  int k = index_of(name);
  if (k < 0) return r;
  for (const auto& [e, c] : terms_) {
    if (e[static_cast<size_t>(k)] == 0) continue;
    Exponents ne(e);
    ne[static_cast<size_t>(k)] -= 1;
    r.terms_.emplace(std::move(ne), c * AlgScalar(static_cast<long>(e[static_cast<size_t>(k)])));
  }
  return r;
}

ParamPoly ParamPoly::map_coeffs(const std::function<AlgScalar(const AlgScalar&)>& f) const {
  ParamPoly r(names_);
  for (const auto& [e, c] : terms_) {
    AlgScalar v = f(c);
    if (!v.is_zero()) r.terms_.emplace(e, std::move(v));
  }
  return r;
}

std::string ParamPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string cs = c.to_string();
    bool has_var = std::any_of(e.begin(), e.end(), [](int v) { return v != 0; });
    out += has_var ? "(" + cs + ")" : cs;
    for (size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      out += "*" + names_[k];
      if (e[k] > 1) out += "^" + std::to_string(e[k]);
    }
  }
  return out;
}

}  // namespace hh
