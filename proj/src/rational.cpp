#include "taut/rational.hpp"

#include <mutex>
#include <vector>

#include "taut/error.hpp"

namespace taut {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational Rational::parse(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw DomainError("malformed rational '" + s + "'");
  }
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

namespace {

// Append-only memo tables shared by all callers.
std::mutex g_factorial_mutex;
std::vector<Integer> g_factorials{Integer(1)};

std::mutex g_bernoulli_mutex;
std::vector<Rational> g_bernoulli{Rational(1)};

}  // namespace

Integer factorial(int n) {
  if (n < 0) throw DomainError("factorial of a negative integer");
  std::lock_guard lock(g_factorial_mutex);
  while (static_cast<int>(g_factorials.size()) <= n) {
    const auto k = static_cast<unsigned long>(g_factorials.size());
    g_factorials.push_back(g_factorials.back() * k);
  }
  return g_factorials[static_cast<std::size_t>(n)];
}

Integer binomial(int n, int k) {
  if (n < 0) throw DomainError("binomial with negative n");
  if (k < 0 || k > n) return 0;
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

Rational inverse_factorial(int n) { return Rational(Integer(1), factorial(n)); }

Rational bernoulli(int k) {
  if (k < 0) throw DomainError("Bernoulli number with negative index");
  if (k > 1 && k % 2 == 1) return Rational(0);
  std::lock_guard lock(g_bernoulli_mutex);
  // sum_{i=0}^{n} C(n+1, i) B_i = 0  =>  B_n = -(1/(n+1)) sum_{i<n} C(n+1, i) B_i
  while (static_cast<int>(g_bernoulli.size()) <= k) {
    const int n = static_cast<int>(g_bernoulli.size());
    Rational acc;
    for (int i = 0; i < n; ++i) acc += Rational(binomial(n + 1, i)) * g_bernoulli[static_cast<std::size_t>(i)];
    g_bernoulli.push_back(-acc / Rational(n + 1));
  }
  return g_bernoulli[static_cast<std::size_t>(k)];
}

Rational a_coeff(int m) {
  if (m < 3) throw DomainError("a_m is defined for m >= 3");
  Rational sum;
  for (int h = 1; h <= (m - 1) / 2; ++h) {
    sum += bernoulli(2 * h) / Rational(Integer(factorial(2 * h) * factorial(m - 2 * h)));
  }
  return sum;
}

}  // namespace taut
