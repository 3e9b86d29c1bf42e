#include "fanforge/univariate.hpp"

#include "fanforge/error.hpp"

#include <algorithm>
#include <numeric>

namespace fanforge::univariate {

void trim(Coeffs& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Coeffs& p) { return static_cast<int>(p.size()) - 1; }

Rational evaluate(const Coeffs& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Coeffs derivative(const Coeffs& p) {
  Coeffs d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

Coeffs multiply(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

Coeffs remainder(const Coeffs& a, const Coeffs& b) {
  Coeffs r = a;
  trim(r);
  const int db = degree(b);
  if (db < 0) fail(ErrorCode::DivisionByZero, "polynomial remainder by zero");
  while (degree(r) >= db) {
    const int shift = degree(r) - db;
    const Rational factor = r.back() / b.back();
    for (int i = 0; i <= db; ++i) r[i + shift] -= factor * b[i];
    r.pop_back();
    trim(r);
  }
  return r;
}

namespace {

int sign_of(const Rational& q) { return sgn(q); }

int sign_variations(const std::vector<Coeffs>& chain, const Rational& x) {
  int variations = 0;
  int last = 0;
  for (const auto& p : chain) {
    const int s = sign_of(evaluate(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

// Primitive integer polynomial proportional to p.
std::vector<mpz_class> primitive_integer(const Coeffs& p) {
  mpz_class common_den = 1;
  for (const auto& c : p) common_den = lcm(common_den, c.get_den());
  std::vector<mpz_class> z;
  z.reserve(p.size());
  for (const auto& c : p) z.push_back(c.get_num() * (common_den / c.get_den()));
  mpz_class content = 0;
  for (const auto& c : z) content = gcd(content, c);
  if (content != 0) {
    for (auto& c : z) c /= content;
  }
  return z;
}

mpz_class evaluate_integer(const std::vector<mpz_class>& p, const mpz_class& x) {
  mpz_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<mpz_class> positive_divisors(mpz_class v) {
  v = abs(v);
  std::vector<mpz_class> small;
  std::vector<mpz_class> large;
  for (mpz_class d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      small.push_back(d);
      if (d * d != v) large.push_back(v / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Lagrange interpolation through (xs[i], ys[i]); ascending rational coefficients.
Coeffs interpolate(const std::vector<mpz_class>& xs, const std::vector<mpz_class>& ys) {
  Coeffs result;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Coeffs basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = multiply(basis, Coeffs{Rational(-xs[j]), Rational(1)});
      denom *= Rational(xs[i] - xs[j]);
    }
    const Rational scale = Rational(ys[i]) / denom;
    if (result.size() < basis.size()) result.resize(basis.size(), Rational(0));
    for (std::size_t k = 0; k < basis.size(); ++k) result[k] += basis[k] * scale;
  }
  trim(result);
  return result;
}

}  // namespace

int count_real_roots(const Coeffs& p, const Rational& lo, const Rational& hi) {
  Coeffs p0 = p;
  trim(p0);
  if (degree(p0) <= 0) return 0;
  std::vector<Coeffs> chain{p0, derivative(p0)};
  while (degree(chain.back()) > 0) {
    Coeffs r = remainder(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

bool is_irreducible_over_q(const Coeffs& p, long work_limit) {
  Coeffs q = p;
  trim(q);
  const int n = degree(q);
  if (n <= 0) return false;
  if (n == 1) return true;
  const auto f = primitive_integer(q);
  const Coeffs fq(f.begin(), f.end());

  // Sample points ordered by |f(x)| so the divisor enumeration stays small.
  std::vector<std::pair<mpz_class, mpz_class>> samples;
  const long window = 4L * n + 8;
  for (long x = -window; x <= window; ++x) {
    const mpz_class value = evaluate_integer(f, mpz_class(x));
    if (value == 0) return false;  // integer root
    samples.emplace_back(abs(value), mpz_class(x));
  }
  std::stable_sort(samples.begin(), samples.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  long work = 0;
  for (int k = 1; k <= n / 2; ++k) {
    std::vector<mpz_class> xs;
    std::vector<std::vector<mpz_class>> divisor_lists;
    for (int i = 0; i <= k; ++i) {
      xs.push_back(samples[i].second);
      divisor_lists.push_back(positive_divisors(samples[i].first));
    }
    // Enumerate signed divisor tuples; the first value is kept positive since g and -g are equivalent.
    std::vector<std::size_t> index(k + 1, 0);
    std::vector<int> signs(k + 1, 1);
    const auto advance = [&]() {
      for (int pos = k; pos >= 0; --pos) {
        if (pos > 0 && signs[pos] == 1) {
          signs[pos] = -1;
          return true;
        }
        signs[pos] = 1;
        if (++index[pos] < divisor_lists[pos].size()) return true;
        index[pos] = 0;
      }
      return false;
    };
    do {
      if (++work > work_limit) {
        fail(ErrorCode::InvalidSymbolTable, "irreducibility check exceeded its work limit");
      }
      std::vector<mpz_class> ys;
      for (int i = 0; i <= k; ++i) ys.push_back(divisor_lists[i][index[i]] * signs[i]);
      Coeffs g = interpolate(xs, ys);
      if (degree(g) != k) continue;
      const bool integral =
          std::all_of(g.begin(), g.end(), [](const Rational& c) { return c.get_den() == 1; });
      if (!integral) continue;
      if (remainder(fq, g).empty()) return false;
    } while (advance());
  }
  return true;
}

}  // namespace fanforge::univariate
