#include "az/series.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace az {

IntSeries::IntSeries(std::vector<Integer> coefficients) : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw ArgumentError("a series needs at least the constant coefficient");
}

IntSeries IntSeries::one(std::size_t order) {
  std::vector<Integer> c(order + 1);
  c[0] = 1;
  return IntSeries(std::move(c));
}

IntSeries IntSeries::with_order(std::size_t order) const {
  std::vector<Integer> c(order + 1);
  const std::size_t keep = std::min(order + 1, coefficients_.size());
  std::copy_n(coefficients_.begin(), keep, c.begin());
  return IntSeries(std::move(c));
}

bool IntSeries::operator==(const IntSeries& other) const {
  if (order() != other.order())
    throw ArgumentError("cannot compare series of orders " + std::to_string(order()) + " and " +
                        std::to_string(other.order()));
  return coefficients_ == other.coefficients_;
}

IntSeries mul_truncated(const IntSeries& f, const IntSeries& g) {
  if (f.order() != g.order()) throw ArgumentError("mul_truncated: orders differ");
  const std::size_t n = f.order();
  std::vector<Integer> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) mpz_addmul(out[i + j].get_mpz_t(), f[i].get_mpz_t(), g[j].get_mpz_t());
  }
  return IntSeries(std::move(out));
}

IntSeries pow_truncated(const IntSeries& f, std::uint64_t e) {
  IntSeries result = IntSeries::one(f.order());
  IntSeries base = f;
  while (e > 0) {
    if (e & 1) result = mul_truncated(result, base);
    e >>= 1;
    if (e > 0) base = mul_truncated(base, base);
  }
  return result;
}

RootOutcome nth_root_integral(const IntSeries& f, std::uint64_t n) {
  if (n < 2) throw ArgumentError("nth_root_integral requires n >= 2");
  if (f[0] != 1) throw ArgumentError("nth_root_integral requires constant coefficient 1");

  // With c_0 = f_0 = 1, comparing z^(k-1) in R f' = n R' f for R = f^(1/n)
  // gives n k c_k = k f_k - sum_{0<i<k} ((n+1) i - k) c_i f_{k-i}, so
  // f_k - T_k = n c_k is that right-hand side divided (exactly) by k.
  const std::size_t order = f.order();
  const Integer n_big = static_cast<unsigned long>(n);
  std::vector<Integer> c{Integer(1)};
  c.reserve(order + 1);
  Integer acc, weight;
  for (std::size_t k = 1; k <= order; ++k) {
    const Integer k_big = static_cast<unsigned long>(k);
    acc = k_big * f[k];
    for (std::size_t i = 1; i < k; ++i) {
      weight = (n_big + 1) * static_cast<unsigned long>(i) - k_big;
      acc -= weight * c[i] * f[k - i];
    }
    if (!mpz_divisible_p(acc.get_mpz_t(), k_big.get_mpz_t()))
      throw InternalMismatch("root recurrence numerator not divisible by k");
    mpz_divexact(acc.get_mpz_t(), acc.get_mpz_t(), k_big.get_mpz_t());  // acc = f_k - T_k

    if (!mpz_divisible_p(acc.get_mpz_t(), n_big.get_mpz_t())) {
      RootOutcome out;
      out.status = RootStatus::Fails;
      out.failure_index = k;
      mpz_fdiv_r(out.failure_remainder.get_mpz_t(), acc.get_mpz_t(), n_big.get_mpz_t());
      return out;
    }
    mpz_divexact(acc.get_mpz_t(), acc.get_mpz_t(), n_big.get_mpz_t());
    c.push_back(acc);
  }
  RootOutcome out;
  out.status = RootStatus::Integral;
  out.root = IntSeries(std::move(c));
  return out;
}

std::uint64_t mu(std::uint64_t n) {
  if (n == 0) throw ArgumentError("mu requires n >= 1");
  std::uint64_t radical = 1;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p <= rest / p; ++p) {
    if (rest % p != 0) continue;
    radical *= p;
    while (rest % p == 0) rest /= p;
  }
  if (rest > 1) radical *= rest;
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(n, radical, &out)) throw ArgumentError("mu(" + std::to_string(n) + ") overflows 64 bits");
  return out;
}

ResidueSeries reduce_mod(const IntSeries& f, std::uint64_t m) {
  if (m < 2) throw ArgumentError("reduce_mod requires m >= 2");
  ResidueSeries r;
  r.modulus = m;
  r.residues.reserve(f.order() + 1);
  for (const auto& c : f.coefficients())
    r.residues.push_back(mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(m)));
  return r;
}

bool is_one_mod(const IntSeries& f, std::uint64_t m) {
  const ResidueSeries r = reduce_mod(f, m);
  if (r.residues[0] != 1) return false;
  return std::all_of(r.residues.begin() + 1, r.residues.end(), [](std::uint64_t x) { return x == 0; });
}

namespace {

using Residues = std::vector<std::uint64_t>;

class ResidueSearch {
 public:
  ResidueSearch(const ResidueSeries& f, std::uint64_t n, std::size_t cap)
      : f_(f), n_(n), mod_(f.modulus), order_(f.order()), cap_(cap) {
    // choose_[e][i] = C(e, i) mod mu; i never needs to exceed the order.
    const std::size_t cols = std::min<std::uint64_t>(n, order_) + 1;
    choose_.assign(n + 1, Residues(cols, 0));
    for (std::uint64_t e = 0; e <= n; ++e) {
      choose_[e][0] = 1 % mod_;
      for (std::size_t i = 1; i < cols && i <= e; ++i)
        choose_[e][i] = (choose_[e - 1][i - 1] + choose_[e - 1][i]) % mod_;
    }
  }

  bool run() {
    if (f_.residues[0] != 1 % mod_) return false;
    // powers[e] = P^e mod mu, truncated, for the current prefix P.
    std::vector<Residues> start(n_ + 1, Residues(order_ + 1, 0));
    for (auto& p : start) p[0] = 1 % mod_;
    std::vector<std::vector<Residues>> frontier{std::move(start)};

    const std::uint64_t g = std::gcd(n_ % mod_, mod_);  // gcd(0, mu) = mu
    const std::uint64_t step = mod_ / g;
    const std::uint64_t unit = inverse(static_cast<std::uint64_t>((n_ % mod_) / g), step);

    for (std::size_t k = 1; k <= order_; ++k) {
      std::map<Residues, std::vector<Residues>> next;
      for (const auto& powers : frontier) {
        const std::uint64_t t = powers[n_][k];
        const std::uint64_t rhs = (f_.residues[k] + mod_ - t) % mod_;
        if (rhs % g != 0) continue;
        const std::uint64_t base = mulmod(rhs / g, unit, step);
        for (std::uint64_t s = 0; s < g; ++s) {
          auto child = extend(powers, k, base + s * step);
          auto key = future_key(child, k);
          if (next.contains(key)) continue;
          next.emplace(std::move(key), std::move(child));
          if (next.size() > cap_)
            throw FrontierCapExceeded("residue-root frontier exceeded " + std::to_string(cap_) +
                                      " prefixes at index " + std::to_string(k));
        }
      }
      if (next.empty()) return false;
      frontier.clear();
      for (auto& [key, powers] : next) frontier.push_back(std::move(powers));
    }
    return true;
  }

 private:
  std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
  }

  static std::uint64_t inverse(std::uint64_t a, std::uint64_t m) {
    if (m == 1) return 0;
    // extended Euclid; a and m are coprime here
    __int128 t = 0, new_t = 1, r = m, new_r = a % m;
    while (new_r != 0) {
      const __int128 q = r / new_r;
      t -= q * new_t;
      std::swap(t, new_t);
      r -= q * new_r;
      std::swap(r, new_r);
    }
    if (t < 0) t += m;
    return static_cast<std::uint64_t>(t);
  }

  // Powers of P + c z^k from the powers of P (deg P < k):
  // (P + c z^k)^e = sum_i C(e,i) c^i z^(k i) P^(e-i).
  std::vector<Residues> extend(const std::vector<Residues>& powers, std::size_t k, std::uint64_t c) const {
    if (c == 0) return powers;
    const std::size_t max_i = order_ / k;
    Residues c_pow(max_i + 1);
    c_pow[0] = 1 % mod_;
    for (std::size_t i = 1; i <= max_i; ++i) c_pow[i] = mulmod(c_pow[i - 1], c, mod_);

    std::vector<Residues> out(n_ + 1);
    out[0] = powers[0];
    for (std::uint64_t e = 1; e <= n_; ++e) {
      Residues r = powers[e];
      for (std::size_t i = 1; i <= std::min<std::uint64_t>(e, max_i); ++i) {
        const std::uint64_t w = mulmod(choose_[e][i], c_pow[i], mod_);
        if (w == 0) continue;
        const Residues& lower = powers[e - i];
        for (std::size_t d = 0; d + k * i <= order_; ++d)
          r[d + k * i] = (r[d + k * i] + mulmod(w, lower[d], mod_)) % mod_;
      }
      out[e] = std::move(r);
    }
    return out;
  }

  // Extensions of a degree-<=k prefix P add Q z^(k+1), and
  // (P + Q z^(k+1))^n = sum_e C(n,e) P^(n-e) Q^e z^((k+1) e). The slices of
  // C(n,e) P^(n-e) that can still reach indices k+1..order therefore decide
  // every later congruence; prefixes with equal slices are interchangeable.
  Residues future_key(const std::vector<Residues>& powers, std::size_t k) const {
    Residues key;
    const std::size_t shift = k + 1;
    for (std::uint64_t e = 0; e < n_; ++e) {
      if (e * shift > order_) break;
      const std::uint64_t w = choose_[n_][e];
      const Residues& p = powers[n_ - e];
      const std::size_t lo = e == 0 ? shift : 0;
      const std::size_t hi = order_ - e * shift;
      for (std::size_t d = lo; d <= hi; ++d) key.push_back(mulmod(w, p[d], mod_));
    }
    return key;
  }

  const ResidueSeries& f_;
  std::uint64_t n_;
  std::uint64_t mod_;
  std::size_t order_;
  std::size_t cap_;
  std::vector<Residues> choose_;
};

}  // namespace

bool residue_root_exists(const ResidueSeries& f, std::uint64_t n, std::size_t frontier_cap) {
  if (n < 1) throw ArgumentError("root degree must be >= 1");
  if (f.modulus < 2) throw ArgumentError("modulus must be >= 2");
  if (f.residues.empty()) throw ArgumentError("empty residue series");
  for (auto r : f.residues)
    if (r >= f.modulus) throw ArgumentError("residue out of range");
  return ResidueSearch(f, n, frontier_cap).run();
}

bool pn_membership_mod(const ResidueSeries& f, std::uint64_t n, std::size_t frontier_cap) {
  if (n < 2) throw ArgumentError("pn_membership_mod requires n >= 2");
  if (f.modulus != mu(n))
    throw ArgumentError("modulus " + std::to_string(f.modulus) + " differs from mu(" + std::to_string(n) +
                        ") = " + std::to_string(mu(n)));
  if (f.residues.empty() || f.residues[0] != 1) throw ArgumentError("constant residue must be 1");
  return residue_root_exists(f, n, frontier_cap);
}

bool heninger_check(const IntSeries& f, std::uint64_t n, std::size_t frontier_cap) {
  if (n < 2) throw ArgumentError("heninger_check requires n >= 2");
  if (f[0] != 1) throw ArgumentError("heninger_check requires constant coefficient 1");
  return pn_membership_mod(reduce_mod(f, mu(n)), n, frontier_cap);
}

std::string to_text(const IntSeries& f) {
  std::string out;
  for (const auto& c : f.coefficients()) {
    out += c.get_str();
    out += '\n';
  }
  return out;
}

std::string to_list(const IntSeries& f) {
  std::string out = "[";
  for (std::size_t i = 0; i <= f.order(); ++i) {
    if (i > 0) out += ", ";
    out += f[i].get_str();
  }
  out += ']';
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

}  // namespace

IntSeries parse_series(std::string_view text) {
  std::string_view body = trim(text);
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw ArgumentError("unterminated '[' in series");
    body = trim(body.substr(1, body.size() - 2));
  }
  if (body.empty()) throw ArgumentError("empty series");

  const bool comma_separated = body.find(',') != std::string_view::npos;
  std::vector<Integer> coefficients;
  auto take = [&](std::string_view token) {
    token = trim(token);
    std::string digits(token);
    if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
    Integer value;
    const bool ok = !digits.empty() &&
                    digits.find_first_not_of("-0123456789") == std::string::npos &&
                    value.set_str(digits, 10) == 0;
    if (!ok) throw ArgumentError("malformed coefficient '" + std::string(token) + "'");
    coefficients.push_back(std::move(value));
  };

  if (comma_separated) {
    std::size_t start = 0;
    while (true) {
      const auto pos = body.find(',', start);
      take(body.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
  } else {
    std::istringstream lines{std::string(body)};
    std::string line;
    while (std::getline(lines, line))
      if (!trim(line).empty()) take(line);
  }
  return IntSeries(std::move(coefficients));
}

}  // namespace az
