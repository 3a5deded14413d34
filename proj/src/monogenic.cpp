#include "rsphere/monogenic.hpp"

#include "rsphere/rational_linalg.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace rsph {

namespace {

long long binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// all exponent vectors of total degree k over nvars variables, lexicographic
std::vector<Expo> monomials_of_degree(int nvars, int k) {
  std::vector<Expo> out;
  Expo cur(nvars, 0);
  std::function<void(int, int)> rec = [&](int var, int remaining) {
    if (var == nvars - 1) {
      cur[var] = static_cast<std::uint8_t>(remaining);
      out.push_back(cur);
      return;
    }
    for (int d = 0; d <= remaining; ++d) {
      cur[var] = static_cast<std::uint8_t>(d);
      rec(var + 1, remaining - d);
    }
  };
  if (nvars > 0) rec(0, k);
  return out;
}

struct CacheKey {
  SpaceBasis::Kind kind;
  int n, k, gens;
  bool full_span;
  auto tie() const { return std::tie(kind, n, k, gens, full_span); }
  bool operator<(const CacheKey& o) const { return tie() < o.tie(); }
};

std::map<CacheKey, std::shared_ptr<const SpaceBasis>>& cache_map() {
  static std::map<CacheKey, std::shared_ptr<const SpaceBasis>> m;
  return m;
}
std::mutex& cache_mutex() {
  static std::mutex mu;
  return mu;
}

std::shared_ptr<const SpaceBasis> build_harmonic(int n, int k) {
  const int gens = n + 1;
  BlockLayout layout{n};
  auto monos = monomials_of_degree(n, k);
  auto rows_monos = k >= 2 ? monomials_of_degree(n, k - 2) : std::vector<Expo>{};

  std::map<Expo, int> row_index;
  for (std::size_t i = 0; i < rows_monos.size(); ++i) row_index[rows_monos[i]] = int(i);

  RationalMatrix m(rows_monos.size(), std::vector<Rational>(monos.size(), Rational(0)));
  for (std::size_t c = 0; c < monos.size(); ++c) {
    const Expo& e = monos[c];
    for (int i = 0; i < n; ++i) {
      if (e[i] < 2) continue;
      Expo d = e;
      d[i] -= 2;
      m[row_index.at(d)][c] += Rational(int(e[i]) * (int(e[i]) - 1));
    }
  }
  auto null = rows_monos.empty()
                  ? [&] {
                      std::vector<std::vector<Rational>> id;
                      for (std::size_t i = 0; i < monos.size(); ++i) {
                        std::vector<Rational> v(monos.size(), Rational(0));
                        v[i] = 1;
                        id.push_back(std::move(v));
                      }
                      return id;
                    }()
                  : nullspace(std::move(m));

  auto basis = std::make_shared<SpaceBasis>();
  basis->kind = SpaceBasis::Kind::harmonic_scalar;
  basis->n = n;
  basis->k = k;
  basis->gens = gens;
  for (const auto& v : null) {
    CliffordPolynomial<Rational> p(layout, gens);
    for (std::size_t c = 0; c < monos.size(); ++c)
      if (v[c] != 0) p.add_term(monos[c], Multivector<Rational>::scalar(gens, v[c]));
    basis->elements.push_back(std::move(p));
  }
  return basis;
}

std::shared_ptr<const SpaceBasis> build_monogenic(int n, int k, SpaceBasis::Kind side,
                                                  const std::vector<BladeMask>& span,
                                                  int gens) {
  BlockLayout layout{n};
  std::vector<BladeMask> blades = span;
  if (blades.empty())
    for (BladeMask b = 0; b < (BladeMask(1) << gens); ++b) blades.push_back(b);

  auto monos = monomials_of_degree(n, k);
  auto row_monos = k >= 1 ? monomials_of_degree(n, k - 1) : std::vector<Expo>{};
  std::map<Expo, int> row_mono_index;
  for (std::size_t i = 0; i < row_monos.size(); ++i) row_mono_index[row_monos[i]] = int(i);

  const int ncols = int(monos.size() * blades.size());
  const int blade_count = 1 << gens;  // rows span the full algebra
  const int nrows = int(row_monos.size()) * blade_count;
  auto col = [&](std::size_t mono, std::size_t blade) {
    return int(mono * blades.size() + blade);
  };

  RationalMatrix m(nrows, std::vector<Rational>(ncols, Rational(0)));
  for (std::size_t c_m = 0; c_m < monos.size(); ++c_m) {
    const Expo& e = monos[c_m];
    for (std::size_t c_b = 0; c_b < blades.size(); ++c_b) {
      BladeMask A = blades[c_b];
      for (int i = 0; i < n; ++i) {
        if (e[i] == 0) continue;
        Expo d = e;
        d[i] -= 1;
        BladeMask ei = BladeMask(1) << i;
        // left: e_i * e_A, right: e_A * e_i
        int sign = side == SpaceBasis::Kind::left_monogenic ? blade_product_sign(ei, A)
                                                            : blade_product_sign(A, ei);
        BladeMask out = ei ^ A;
        int row = row_mono_index.at(d) * blade_count + int(out);
        m[row][col(c_m, c_b)] += Rational(int(e[i]) * sign);
      }
    }
  }

  std::vector<std::vector<Rational>> null;
  if (k == 0) {
    for (int c = 0; c < ncols; ++c) {
      std::vector<Rational> v(ncols, Rational(0));
      v[c] = 1;
      null.push_back(std::move(v));
    }
  } else {
    null = nullspace(std::move(m));
  }

  auto basis = std::make_shared<SpaceBasis>();
  basis->kind = side;
  basis->n = n;
  basis->k = k;
  basis->gens = gens;
  for (const auto& v : null) {
    CliffordPolynomial<Rational> p(layout, gens);
    for (std::size_t c_m = 0; c_m < monos.size(); ++c_m) {
      Multivector<Rational> coeff(gens);
      for (std::size_t c_b = 0; c_b < blades.size(); ++c_b) {
        const Rational& x = v[col(c_m, c_b)];
        if (x != 0) coeff.add_term(blades[c_b], x);
      }
      if (!coeff.zero()) p.add_term(monos[c_m], coeff);
    }
    basis->elements.push_back(std::move(p));
  }
  return basis;
}

}  // namespace

long long harmonic_scalar_dimension(int n, int k) {
  return binomial(n + k - 1, k) - binomial(n + k - 3, k - 2);
}

std::shared_ptr<const SpaceBasis> harmonic_basis(int n, int k) {
  if (n < 2 || k < 0) throw std::invalid_argument("harmonic_basis: need n >= 2, k >= 0");
  CacheKey key{SpaceBasis::Kind::harmonic_scalar, n, k, n + 1, true};
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto it = cache_map().find(key);
  if (it != cache_map().end()) return it->second;
  auto b = build_harmonic(n, k);
  cache_map()[key] = b;
  return b;
}

std::shared_ptr<const SpaceBasis> monogenic_basis(int n, int k, SpaceBasis::Kind side,
                                                  const std::vector<BladeMask>& spinor_span,
                                                  int gens) {
  if (n < 2 || k < 0) throw std::invalid_argument("monogenic_basis: need n >= 2, k >= 0");
  if (side == SpaceBasis::Kind::harmonic_scalar)
    throw std::invalid_argument("monogenic_basis: side must be left or right");
  if (gens < 0) gens = n + 1;
  if (gens < n) throw std::invalid_argument("monogenic_basis: gens must cover the variables");
  const bool full = spinor_span.empty();
  CacheKey key{side, n, k, gens, full};
  if (full) {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = cache_map().find(key);
    if (it != cache_map().end()) return it->second;
  }
  auto b = build_monogenic(n, k, side, spinor_span, gens);
  if (full) {
    std::lock_guard<std::mutex> lock(cache_mutex());
    cache_map()[key] = b;
  }
  return b;
}

}  // namespace rsph
