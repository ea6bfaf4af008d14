#include "grauert/rational.hpp"

#include <cmath>
#include <numeric>

#include "grauert/error.hpp"

namespace grauert {

SingularPointError::SingularPointError(double lambda, std::complex<double> z)
    : Error("adapted block is singular at z = " + std::to_string(z.real()) + " + " +
            std::to_string(z.imag()) + "i for lambda = " + std::to_string(lambda)),
      lambda_(lambda),
      z_(z) {}

double to_double(const Rational& q) {
  return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

std::vector<double> to_double(const RationalVector& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(to_double(q));
  return out;
}

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s) {
  s = trim(s);
  if (s.empty()) throw InvalidArgument("empty integer");
  std::size_t pos = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    pos = 1;
  }
  if (pos == s.size()) throw InvalidArgument("malformed integer '" + std::string(s) + "'");
  std::int64_t v = 0;
  for (; pos < s.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(s[pos])))
      throw InvalidArgument("malformed integer '" + std::string(s) + "'");
    v = v * 10 + (s[pos] - '0');
  }
  return neg ? -v : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  text = trim(text);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto den = parse_int(text.substr(slash + 1));
    if (den == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_int(text.substr(0, slash)), den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    bool neg = !whole.empty() && whole[0] == '-';
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    std::int64_t w = (whole.empty() || whole == "-" || whole == "+") ? 0 : parse_int(whole);
    std::int64_t f = frac.empty() ? 0 : parse_int(frac);
    Rational r = Rational(std::abs(w)) + Rational(f, den);
    return neg ? -r : r;
  }
  return Rational(parse_int(text));
}

RationalVector parse_rational_list(std::string_view text) {
  RationalVector out;
  while (true) {
    auto comma = text.find(',');
    out.push_back(parse_rational(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw InvalidArgument("dimension mismatch in dot product");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational abs(const Rational& q) { return q < 0 ? -q : q; }

RationalVector scaled(const RationalVector& v, const Rational& s) {
  RationalVector out(v);
  for (auto& x : out) x *= s;
  return out;
}

RationalVector add(const RationalVector& a, const RationalVector& b) {
  RationalVector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

RationalVector sub(const RationalVector& a, const RationalVector& b) {
  RationalVector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

bool is_zero(const RationalVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool rationalize(double x, std::int64_t max_den, double tol, Rational& out) {
  for (std::int64_t den = 1; den <= max_den; ++den) {
    double num = std::round(x * static_cast<double>(den));
    if (std::abs(num / static_cast<double>(den) - x) <= tol) {
      out = Rational(static_cast<std::int64_t>(num), den);
      return true;
    }
  }
  return false;
}

namespace exact {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Rational p = m[row][col];
    for (auto& x : m[row]) x /= p;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(RationalMatrix m) {
  if (m.empty()) return 0;
  return rref(m, m[0].size()).size();
}

RationalMatrix nullspace(RationalMatrix m, std::size_t cols) {
  auto pivots = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  RationalMatrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool inverse(const RationalMatrix& m, RationalMatrix& out) {
  const std::size_t n = m.size();
  RationalMatrix aug(n, RationalVector(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  auto pivots = rref(aug, n);
  if (pivots.size() != n) return false;
  out.assign(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
  return true;
}

RationalVector multiply(const RationalMatrix& m, const RationalVector& v) {
  RationalVector out;
  out.reserve(m.size());
  for (const auto& row : m) out.push_back(dot(row, v));
  return out;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.empty()) return {};
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  RationalMatrix out(a.size(), RationalVector(cols, Rational(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

RationalMatrix transpose(const RationalMatrix& m) {
  if (m.empty()) return {};
  RationalMatrix out(m[0].size(), RationalVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) out[j][i] = m[i][j];
  return out;
}

RationalMatrix identity(std::size_t n) {
  RationalMatrix out(n, RationalVector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

}  // namespace exact

double PiRational::value() const { return to_double(coeff) * M_PI; }

std::string to_string(const PiRational& x) {
  const auto num = x.coeff.numerator();
  const auto den = x.coeff.denominator();
  if (num == 0) return "0";
  std::string s = num < 0 ? "-" : "";
  auto a = num < 0 ? -num : num;
  if (a != 1) s += std::to_string(a) + "*";
  s += "pi";
  if (den != 1) s += "/" + std::to_string(den);
  return s;
}

namespace {

// Largest k with k^2 | n, n > 0.
std::int64_t square_part(std::int64_t n) {
  std::int64_t k = 1;
  for (std::int64_t f = 2; f * f <= n; ++f) {
    while (n % (f * f) == 0) {
      n /= f * f;
      k *= f;
    }
  }
  return k;
}

}  // namespace

PiSqrtRational PiSqrtRational::make(const Rational& coeff, const Rational& radicand) {
  if (radicand < 0) throw InvalidArgument("negative radicand");
  if (radicand == 0) return {Rational(0), 1};
  // sqrt(a/b) = sqrt(a*b)/b
  std::int64_t ab = radicand.numerator() * radicand.denominator();
  std::int64_t k = square_part(ab);
  return {coeff * Rational(k, radicand.denominator()), ab / (k * k)};
}

double PiSqrtRational::value() const {
  return to_double(coeff) * M_PI * std::sqrt(static_cast<double>(radicand));
}

std::string to_string(const PiSqrtRational& x) {
  if (x.radicand == 1) return to_string(PiRational{x.coeff});
  if (x.coeff == 0) return "0";
  const auto num = x.coeff.numerator();
  const auto den = x.coeff.denominator();
  std::string s = num < 0 ? "-" : "";
  auto a = num < 0 ? -num : num;
  if (a != 1) s += std::to_string(a) + "*";
  s += "sqrt(" + std::to_string(x.radicand) + ")*pi";
  if (den != 1) s += "/" + std::to_string(den);
  return s;
}

}  // namespace grauert
