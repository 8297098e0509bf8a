#pragma once

#include <vector>

#include "hh/rat.hpp"
#include "hh/real.hpp"

namespace hh {

/// Dense univariate polynomial over Q(i), coefficients low -> high.
/// The zero polynomial is the empty vector.
using QIPoly = std::vector<QI>;

void trim(QIPoly& p);
int degree(const QIPoly& p);
bool is_real_poly(const QIPoly& p);

QIPoly poly_add(const QIPoly& a, const QIPoly& b);
QIPoly poly_sub(const QIPoly& a, const QIPoly& b);
QIPoly poly_mul(const QIPoly& a, const QIPoly& b);
QIPoly poly_scale(const QIPoly& a, const QI& c);
QIPoly poly_monic(const QIPoly& a);
QIPoly poly_derivative(const QIPoly& a);
/// Returns (quotient, remainder).
std::pair<QIPoly, QIPoly> poly_divmod(const QIPoly& a, const QIPoly& b);
/// Monic gcd.
QIPoly poly_gcd(QIPoly a, QIPoly b);
bool is_squarefree(const QIPoly& p);
/// p(x^n).
QIPoly poly_inflate(const QIPoly& p, unsigned n);
QI poly_eval(const QIPoly& p, const QI& x);
CBig poly_eval(const QIPoly& p, const CBig& x);
CBall poly_eval(const QIPoly& p, const CBall& x);

/// All complex roots (with multiplicity) by Aberth iteration; `prec` bits.
std::vector<CBig> poly_roots(const QIPoly& p, mpfr_prec_t prec);
/// Newton refinement of an approximate simple root to about `prec` bits.
CBig refine_root(const QIPoly& p, const CBig& z, mpfr_prec_t prec);

/// Nontrivial monic factor of p over Q(i) (or over Q if `real_only`) that
/// vanishes at roots[index], found by subset search over the numeric roots.
/// Returns p itself (monic) when no proper factor exists.
QIPoly minimal_factor_containing(const QIPoly& p, const std::vector<CBig>& roots, size_t index,
                                 bool real_only);
/// Any proper factor, or empty when p is irreducible (over Q(i), or over Q).
QIPoly find_proper_factor(const QIPoly& p, bool real_only);

/// Characteristic polynomial of a square matrix (Faddeev-LeVerrier).
QIPoly charpoly(const std::vector<std::vector<QI>>& m);

std::string to_string(const QIPoly& p, const std::string& var = "x");

}  // namespace hh
