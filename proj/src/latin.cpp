#include "snark/latin.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "snark/error.hpp"

namespace snark {

namespace {

// Arithmetic in GF(p^m), elements encoded as base-p digit vectors.
class FiniteField {
 public:
  FiniteField(int p, int m) : p_(p), m_(m), q_(1) {
    for (int i = 0; i < m; ++i) q_ *= p;
    add_.assign(static_cast<std::size_t>(q_ * q_), 0);
    for (int a = 0; a < q_; ++a)
      for (int b = 0; b < q_; ++b) add_[idx(a, b)] = digitwise_add(a, b);
    if (m == 1) {
      mul_.assign(static_cast<std::size_t>(q_ * q_), 0);
      for (int a = 0; a < q_; ++a)
        for (int b = 0; b < q_; ++b) mul_[idx(a, b)] = (a * b) % p;
      return;
    }
    // Monic modulus x^m + c(x); the low coefficients run over all codes.
    for (int low = 0; low < q_; ++low) {
      if (build_mul(low)) return;
    }
    throw Error("no irreducible polynomial found for GF(" + std::to_string(q_) + ")");
  }

  int order() const { return q_; }
  int add(int a, int b) const { return add_[idx(a, b)]; }
  int mul(int a, int b) const { return mul_[idx(a, b)]; }

 private:
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a * q_ + b); }

  int digitwise_add(int a, int b) const {
    int out = 0, place = 1;
    for (int i = 0; i < m_; ++i) {
      out += ((a % p_ + b % p_) % p_) * place;
      a /= p_;
      b /= p_;
      place *= p_;
    }
    return out;
  }

  std::vector<int> digits(int a) const {
    std::vector<int> d(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i, a /= p_) d[static_cast<std::size_t>(i)] = a % p_;
    return d;
  }

  bool build_mul(int low) {
    std::vector<int> modulus = digits(low);  // x^m = -modulus(x)
    mul_.assign(static_cast<std::size_t>(q_ * q_), 0);
    for (int a = 0; a < q_; ++a) {
      for (int b = 0; b < q_; ++b) {
        auto da = digits(a), db = digits(b);
        std::vector<int> prod(static_cast<std::size_t>(2 * m_), 0);
        for (int i = 0; i < m_; ++i)
          for (int j = 0; j < m_; ++j)
            prod[static_cast<std::size_t>(i + j)] =
                (prod[static_cast<std::size_t>(i + j)] + da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) % p_;
        for (int deg = 2 * m_ - 1; deg >= m_; --deg) {
          int c = prod[static_cast<std::size_t>(deg)];
          if (!c) continue;
          prod[static_cast<std::size_t>(deg)] = 0;
          for (int i = 0; i < m_; ++i) {
            auto& slot = prod[static_cast<std::size_t>(deg - m_ + i)];
            slot = ((slot - c * modulus[static_cast<std::size_t>(i)]) % p_ + p_) % p_;
          }
        }
        int code = 0, place = 1;
        for (int i = 0; i < m_; ++i, place *= p_) code += prod[static_cast<std::size_t>(i)] * place;
        mul_[idx(a, b)] = code;
      }
    }
    // A field has no zero divisors.
    for (int a = 1; a < q_; ++a)
      for (int b = 1; b < q_; ++b)
        if (mul_[idx(a, b)] == 0) return false;
    return true;
  }

  int p_, m_, q_;
  std::vector<int> add_, mul_;
};

// n = p^m with p prime; nullopt-like {0,0} otherwise.
std::pair<int, int> prime_power(int n) {
  if (n < 2) return {0, 0};
  int p = 2;
  while (n % p != 0) ++p;
  int m = 0;
  while (n % p == 0) {
    n /= p;
    ++m;
  }
  return n == 1 ? std::make_pair(p, m) : std::make_pair(0, 0);
}

std::vector<int> prime_power_factors(int n) {
  std::vector<int> out;
  for (int p = 2; n > 1; ++p) {
    int q = 1;
    while (n % p == 0) {
      n /= p;
      q *= p;
    }
    if (q > 1) out.push_back(q);
  }
  return out;
}

std::vector<LatinSquare> field_mols(int q, int count) {
  auto [p, m] = prime_power(q);
  FiniteField f(p, m);
  std::vector<LatinSquare> out;
  for (int a = 1; a <= count; ++a) {
    LatinSquare l(static_cast<std::size_t>(q), std::vector<int>(static_cast<std::size_t>(q)));
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < q; ++j) l[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = f.add(f.mul(a, i), j);
    out.push_back(std::move(l));
  }
  return out;
}

LatinSquare product(const LatinSquare& a, const LatinSquare& b) {
  const int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
  const int n = na * nb;
  LatinSquare out(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      out[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
          a[static_cast<std::size_t>(r / nb)][static_cast<std::size_t>(c / nb)] * nb +
          b[static_cast<std::size_t>(r % nb)][static_cast<std::size_t>(c % nb)];
  return out;
}

}  // namespace

bool is_latin_square(const LatinSquare& l) {
  const std::size_t n = l.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (l[i].size() != n) return false;
    std::vector<char> row(n, 0), col(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      int r = l[i][j], c = l[j][i];
      if (r < 0 || c < 0 || static_cast<std::size_t>(r) >= n || static_cast<std::size_t>(c) >= n) return false;
      if (row[static_cast<std::size_t>(r)]++ || col[static_cast<std::size_t>(c)]++) return false;
    }
  }
  return true;
}

bool are_orthogonal(const LatinSquare& a, const LatinSquare& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return false;
  std::vector<char> seen(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t key = static_cast<std::size_t>(a[i][j]) * n + static_cast<std::size_t>(b[i][j]);
      if (seen[key]++) return false;
    }
  return true;
}

int mols_capacity(int n) {
  if (n < 1) return 0;
  if (n == 1) return 1 << 20;
  int cap = 1 << 20;
  for (int q : prime_power_factors(n)) cap = std::min(cap, q - 1);
  return std::max(cap, 1);
}

std::vector<LatinSquare> mols(int n, int count) {
  if (n < 1 || count < 1) throw Error("mols needs n >= 1 and count >= 1");
  if (n == 1) return std::vector<LatinSquare>(static_cast<std::size_t>(count), LatinSquare{{0}});
  if (count == 1) {
    LatinSquare l(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) l[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
    return {l};
  }
  if (count > mols_capacity(n)) {
    throw UnreachableError(std::to_string(count) + " MOLS of side " + std::to_string(n) + " not constructible here");
  }
  std::vector<LatinSquare> out;
  for (int q : prime_power_factors(n)) {
    auto part = field_mols(q, count);
    if (out.empty()) {
      out = std::move(part);
    } else {
      for (int i = 0; i < count; ++i) {
        out[static_cast<std::size_t>(i)] = product(out[static_cast<std::size_t>(i)], part[static_cast<std::size_t>(i)]);
      }
    }
  }
  return out;
}

}  // namespace snark
