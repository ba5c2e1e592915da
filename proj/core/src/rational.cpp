#include "dihg/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace dihg {

Rat make_rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(std::string_view text) {
  auto bad = [&] { return std::invalid_argument("malformed rational: '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  std::string num, den = "1";
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    num = std::string(text);
  } else {
    num = std::string(text.substr(0, slash));
    den = std::string(text.substr(slash + 1));
  }
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  if (!is_int(num) || !is_int(den)) throw bad();
  mpz_class n(num), d(den);
  if (d == 0) throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

double rat_double(const Rat& r) { return r.get_d(); }

std::optional<Rat> rationalize(double v, unsigned long max_den) {
  if (!std::isfinite(v)) return std::nullopt;
  bool neg = v < 0;
  double x = neg ? -v : v;
  // Continued fraction convergents p/q of x until the denominator cap.
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;  // two previous convergents
  double frac = x;
  mpz_class best_p = 0, best_q = 1;
  for (int it = 0; it < 64; ++it) {
    double a_floor = std::floor(frac);
    if (a_floor > 9e18) break;
    mpz_class a(static_cast<unsigned long>(a_floor));
    mpz_class p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > mpz_class(max_den)) {
      // Largest semiconvergent still under the cap.
      if (q1 != 0) {
        mpz_class k = (mpz_class(max_den) - q0) / q1;
        mpz_class ps = k * p1 + p0, qs = k * q1 + q0;
        if (qs > 0 && k * 2 >= a) {  // closer than the previous convergent
          best_p = ps;
          best_q = qs;
        }
      }
      break;
    }
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    best_p = p1;
    best_q = q1;
    double rem = frac - a_floor;
    if (rem < 1e-15) break;
    frac = 1.0 / rem;
  }
  if (best_q == 0) return std::nullopt;
  Rat r(neg ? -best_p : best_p, best_q);
  r.canonicalize();
  return r;
}

long rat_floor(const Rat& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q.get_si();
}

long rat_ceil(const Rat& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q.get_si();
}

}  // namespace dihg
