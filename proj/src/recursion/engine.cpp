#include <algorithm>

#include "hh/errors.hpp"
#include "hh/recursion.hpp"

namespace hh {

namespace {

int s_offset(const FamilySpec& f) {
  Rat s = f.shift * 2 * f.q;
  if (s.get_den() != 1 || sgn(s) < 0) throw PreconditionError("x/y exponent offset does not fit the grid");
  return static_cast<int>(s.get_num().get_si());
}

ParamPoly at(const std::vector<ParamPoly>& v, int L, int L0) {
  int k = L - L0;
  if (k < 0 || k >= static_cast<int>(v.size())) throw PreconditionError("coefficient label out of range");
  return v[static_cast<size_t>(k)];
}

std::string default_name(char comp, int L) { return std::string(1, comp) + std::to_string(L); }

std::string family_name(const FamilySpec& f, char comp, int L) {
  std::string n = default_name(comp, L);
  auto it = f.rename.find(n);
  return it == f.rename.end() ? n : it->second;
}

struct Pivot {
  int row = -1;
  int col = -1;
};

// Rank-1 step: prefer a parameter-free pivot, column a first.
Pivot choose_pivot(const Mat2& m) {
  for (int c = 0; c < 2; ++c)
    for (int r = 0; r < 2; ++r)
      if (!m[r][c].is_zero() && m[r][c].is_constant()) return {r, c};
  for (int c = 0; c < 2; ++c)
    for (int r = 0; r < 2; ++r)
      if (!m[r][c].is_zero()) return {r, c};
  return {};
}

bool all_zero(const Mat2& m) {
  for (const auto& row : m)
    for (const auto& v : row)
      if (!v.is_zero()) return false;
  return true;
}

}  // namespace

Mat2 recursion_matrix(const FamilySpec& f, int L) {
  const int S = s_offset(f);
  const Rat e = f.x_exponent(L);
  const Rat g = f.y_exponent(L);
  Mat2 m;
  m[0][0] = ParamPoly(e * (e - 1)) + f.b_lead * AlgScalar(2);
  m[0][1] = f.a_lead * AlgScalar(2);
  m[1][0] = S == 0 ? f.a_lead * AlgScalar(2) : ParamPoly();
  m[1][1] = ParamPoly(g * (g - 1)) - f.b_lead * AlgScalar(2 * f.params.C);
  return m;
}

ParamPoly det(const Mat2& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

std::array<ParamPoly, 2> rhs_convolution(const FamilySpec& f, const std::vector<ParamPoly>& a,
                                         const std::vector<ParamPoly>& b, int L) {
  const int L0 = f.L0();
  const int S = s_offset(f);
  const int q2 = 2 * f.q;
  ParamPoly r1, r2;
  if (L - q2 >= L0) {
    r1 += at(a, L - q2, L0) * AlgScalar(f.params.lambda);
    r2 += at(b, L - q2, L0);
  }
  // 2xy at label sum L + L0, skipping the two unknown products.
  for (int i = L0 + 1; i < L; ++i) {
    const ParamPoly& ai = a[static_cast<size_t>(i - L0)];
    const ParamPoly& bj = b[static_cast<size_t>(L + L0 - i - L0)];
    if (!ai.is_zero() && !bj.is_zero()) r1 += ai * bj * AlgScalar(2);
  }
  // x² at label sum L + L0 - S.
  const int sx = L + L0 - S;
  for (int i = L0; i <= sx - L0; ++i) {
    if (i >= L) continue;
    int j = sx - i;
    if (j >= L || j < L0) continue;
    const ParamPoly& ai = a[static_cast<size_t>(i - L0)];
    const ParamPoly& aj = a[static_cast<size_t>(j - L0)];
    if (!ai.is_zero() && !aj.is_zero()) r2 += ai * aj;
  }
  // -C y² at label sum L + L0.
  ParamPoly yy;
  for (int i = L0 + 1; i < L; ++i) {
    const ParamPoly& bi = b[static_cast<size_t>(i - L0)];
    const ParamPoly& bj = b[static_cast<size_t>(L - i)];
    if (!bi.is_zero() && !bj.is_zero()) yy += bi * bj;
  }
  r2 -= yy * AlgScalar(f.params.C);
  return {-r1, -r2};
}

std::vector<std::string> planned_names(const FamilySpec& f, int L_max) {
  std::vector<std::string> names = f.base_names;
  auto add = [&](char comp, int L) {
    std::string n = family_name(f, comp, L);
    if (!f.bindings.count(n)) names.push_back(n);
  };
  for (int L = f.L0() + 1; L <= L_max; ++L) {
    Mat2 m = recursion_matrix(f, L);
    ParamPoly d = det(m);
    if (!d.is_zero()) {
      if (!d.is_constant()) throw PreconditionError("recursion determinant depends on free data");
      continue;
    }
    if (all_zero(m)) {
      add('a', L);
      add('b', L);
    } else {
      add(choose_pivot(m).col == 0 ? 'b' : 'a', L);
    }
  }
  return names;
}

RecursionRun run_recursion(const FamilySpec& f, int L_max) {
  RecursionRun run;
  run.names = planned_names(f, L_max);
  const auto& names = run.names;
  const int L0 = f.L0();
  run.a.push_back(f.a_lead.with_names(names));
  run.b.push_back(f.b_lead.with_names(names));
  run.last_label = L0;

  auto free_value = [&](char comp, int L) {
    FreeParam fp;
    fp.name = family_name(f, comp, L);
    fp.label = L;
    fp.component = comp;
    fp.resonance = f.resonance_of(L);
    auto it = f.bindings.find(fp.name);
    ParamPoly v;
    if (it != f.bindings.end()) {
      fp.bound = it->second;
      v = ParamPoly::constant(names, it->second);
    } else {
      v = ParamPoly::variable(names, fp.name);
    }
    run.free.push_back(fp);
    return v;
  };

  for (int L = L0 + 1; L <= L_max; ++L) {
    Mat2 m = recursion_matrix(f, L);
    for (auto& row : m)
      for (auto& v : row) v = v.with_names(names);
    auto rhs = rhs_convolution(f, run.a, run.b, L);
    ParamPoly d = det(m);
    ParamPoly aL, bL;
    if (!d.is_zero()) {
      auto dc = d.as_constant();
      if (!dc) throw PreconditionError("recursion determinant depends on free data");
      AlgScalar inv = dc->inverse();
      aL = (m[1][1] * rhs[0] - m[0][1] * rhs[1]) * inv;
      bL = (m[0][0] * rhs[1] - m[1][0] * rhs[0]) * inv;
    } else {
      run.singular_labels.push_back(L);
      ParamPoly cond;
      if (all_zero(m)) {
        cond = !rhs[0].is_zero() ? rhs[0] : rhs[1];
      } else {
        Pivot pv = choose_pivot(m);
        int o = 1 - pv.row;
        cond = m[pv.row][pv.col] * rhs[o] - m[o][pv.col] * rhs[pv.row];
      }
      if (!cond.is_zero()) {
        Obstruction ob;
        ob.label = L;
        ob.resonance = f.resonance_of(L);
        ob.condition = cond;
        ob.message = "inconsistent resonance step at label " + std::to_string(L) + " (r = " +
                     to_string(ob.resonance) + "): compatibility condition " + cond.to_string() +
                     " != 0; a logarithmic term is needed";
        run.obstruction = ob;
        return run;
      }
      if (all_zero(m)) {
        aL = free_value('a', L);
        bL = free_value('b', L);
      } else {
        Pivot pv = choose_pivot(m);
        auto pc = m[pv.row][pv.col].as_constant();
        if (!pc) throw PreconditionError("resonance pivot depends on free data");
        int fc = 1 - pv.col;
        ParamPoly fv = free_value(fc == 0 ? 'a' : 'b', L);
        ParamPoly solved = (rhs[pv.row] - m[pv.row][fc] * fv) * pc->inverse();
        if (pv.col == 0) {
          aL = solved;
          bL = fv;
        } else {
          aL = fv;
          bL = solved;
        }
      }
    }
    run.a.push_back(aL.with_names(names));
    run.b.push_back(bL.with_names(names));
    run.last_label = L;
  }
  return run;
}

}  // namespace hh
