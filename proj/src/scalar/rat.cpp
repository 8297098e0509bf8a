#include "hh/rat.hpp"

#include <cctype>

#include "hh/errors.hpp"

namespace hh {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Exact decimal: [sign] digits [. digits] [e|E [sign] digits]
Rat parse_decimal(std::string_view s) {
  s = trim(s);
  if (s.empty()) throw PreconditionError("empty number");
  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string digits;
  long exponent = 0;
  bool seen_dot = false;
  bool any_digit = false;
  std::size_t pos = 0;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      any_digit = true;
      if (seen_dot) --exponent;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  if (!any_digit) throw PreconditionError("malformed number '" + std::string(s) + "'");
  if (pos < s.size()) {
    if (s[pos] != 'e' && s[pos] != 'E') throw PreconditionError("malformed number '" + std::string(s) + "'");
    std::string_view rest = s.substr(pos + 1);
    if (rest.empty()) throw PreconditionError("malformed exponent in '" + std::string(s) + "'");
    bool eneg = false;
    if (rest.front() == '+' || rest.front() == '-') {
      eneg = rest.front() == '-';
      rest.remove_prefix(1);
    }
    if (rest.empty() || rest.size() > 6) throw PreconditionError("malformed exponent in '" + std::string(s) + "'");
    long e = 0;
    for (char c : rest) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw PreconditionError("malformed exponent in '" + std::string(s) + "'");
      e = e * 10 + (c - '0');
    }
    exponent += eneg ? -e : e;
  }
  BigInt num(digits, 10);
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rat out = exponent >= 0 ? Rat(num * scale) : Rat(num, scale);
  out.canonicalize();
  return negative ? Rat(-out) : out;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text);
  Rat num = parse_decimal(text.substr(0, slash));
  Rat den = parse_decimal(text.substr(slash + 1));
  if (sgn(den) == 0) throw PreconditionError("zero denominator in '" + std::string(text) + "'");
  Rat out = num / den;
  out.canonicalize();
  return out;
}

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

Rat rat(long num, long den) {
  if (den == 0) throw ArithmeticError("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::optional<BigInt> exact_root(const BigInt& z, unsigned n) {
  if (sgn(z) < 0) return std::nullopt;
  BigInt root;
  if (mpz_root(root.get_mpz_t(), z.get_mpz_t(), n) == 0) return std::nullopt;
  return root;
}

std::optional<Rat> exact_root(const Rat& r, unsigned n) {
  auto num = exact_root(r.get_num(), n);
  auto den = exact_root(r.get_den(), n);
  if (!num || !den) return std::nullopt;
  Rat out(*num, *den);
  out.canonicalize();
  return out;
}

std::pair<BigInt, BigInt> extract_power(const BigInt& z, unsigned n, unsigned long trial_limit) {
  BigInt m = abs(z);
  BigInt s = 1;
  if (m == 0) return {0, 0};
  auto take = [&](const BigInt& p) {
    unsigned count = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
      m /= p;
      ++count;
    }
    BigInt keep = 1;
    for (unsigned k = 0; k < count / n; ++k) s *= p;
    for (unsigned k = 0; k < count % n; ++k) keep *= p;
    return keep;
  };
  BigInt rest = 1;
  for (unsigned long p = 2; p <= trial_limit; p = (p == 2 ? 3 : p + 2)) {
    BigInt bp(p);
    if (bp * bp > m) break;
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) rest *= take(bp);
  }
  // leftover cofactor: either prime or beyond the trial bound
  if (m > 1) {
    if (auto r = exact_root(m, n)) {
      s *= *r;
    } else {
      rest *= m;
    }
  }
  return {s, rest};
}

QI& QI::operator*=(const QI& o) {
  Rat r = re * o.re - im * o.im;
  Rat i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

QI& QI::operator/=(const QI& o) {
  Rat n = o.norm();
  if (sgn(n) == 0) throw ArithmeticError("division by zero");
  Rat r = (re * o.re + im * o.im) / n;
  Rat i = (im * o.re - re * o.im) / n;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

std::string to_string(const QI& z) {
  if (z.is_real()) return to_string(z.re);
  std::string imag = to_string(z.im) + "*i";
  if (sgn(z.re) == 0) return imag;
  return to_string(z.re) + (sgn(z.im) > 0 ? "+" : "") + imag;
}

QI parse_qi(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw PreconditionError("empty Gaussian rational");
  if (text.back() != 'i') return QI(parse_rat(text));
  std::string_view body = text.substr(0, text.size() - 1);
  if (!body.empty() && body.back() == '*') body.remove_suffix(1);
  // split at the last sign that is not the first character nor part of an exponent
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imag_of = [](std::string_view s) -> Rat {
    if (s.empty() || s == "+") return Rat(1);
    if (s == "-") return Rat(-1);
    return parse_rat(s);
  };
  if (split == std::string_view::npos) return QI(Rat(0), imag_of(body));
  return QI(parse_rat(body.substr(0, split)), imag_of(body.substr(split)));
}

}  // namespace hh
