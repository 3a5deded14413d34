#include "rsphere/kernels.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

namespace rsph {

namespace {

using Poly = CliffordPolynomial<Rational>;
using RH = RationalHomogeneous<Rational>;
using MV = Multivector<Rational>;

// multisets (j_2, ..., j_n) with sum k, as sorted index sequences over 2..n
std::vector<std::vector<int>> index_multisets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int lo) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = lo; i <= n; ++i) {
      cur.push_back(i);
      rec(i);
      cur.pop_back();
    }
  };
  rec(2);
  return out;
}

// z_i(u) = u_i - u_1 e_1^{-1} e_i = u_i + u_1 e_1 e_i on the given layout
Poly z_factor(const BlockLayout& layout, int gens, int ublock, int i) {
  auto zi = Poly::variable(layout, gens, ublock, i - 1);
  BladeMask e1ei = BladeMask(1) | (BladeMask(1) << (i - 1));
  Expo e(layout.total(), 0);
  e[std::size_t(layout.flat(ublock, 0))] = 1;
  Poly head(layout, gens);
  head.add_term(e, MV::blade(gens, e1ei, Rational(1)));
  return zi + head;
}

// P_sigma(u) = (1/k!) sum over distinct orderings of the multiset of
// z_{i_1} ... z_{i_k}
Poly p_sigma(const BlockLayout& layout, int gens, int ublock,
             const std::vector<int>& multiset) {
  const int k = static_cast<int>(multiset.size());
  Poly one = Poly::constant(layout, MV::scalar(gens, Rational(1)));
  if (k == 0) return one;
  Poly sum(layout, gens);
  std::vector<int> order = multiset;  // sorted already
  do {
    Poly prod = one;
    for (int idx : order) prod = prod * z_factor(layout, gens, ublock, idx);
    sum += prod;
  } while (std::next_permutation(order.begin(), order.end()));
  return sum.scaled(Rational(1, factorial(k)));
}

// homogenize a v-only rational-homogeneous expression to the degree-k
// polynomial it equals on |v| = 1
Poly homogenize_on_sphere(const RH& f, int k) {
  const auto& layout = f.layout();
  Poly norm2(layout, f.gens());
  for (int i = 0; i < layout.sizes[0]; ++i) {
    auto vi = Poly::variable(layout, f.gens(), 0, i);
    norm2 += vi * vi;
  }
  Poly out(layout, f.gens());
  for (const auto& t : f.terms()) {
    for (const auto& c : t.center)
      if (!is_zero(c)) throw std::logic_error("homogenize_on_sphere: centered term");
    auto deg = t.numer.homogeneous_degree(0);
    if (!deg) throw std::logic_error("homogenize_on_sphere: inhomogeneous numerator");
    int s2 = k - *deg;
    if (s2 % 2 != 0) throw std::logic_error("homogenize_on_sphere: parity mismatch");
    int s = s2 / 2;
    Poly term = t.numer;
    if (s >= 0) {
      for (int i = 0; i < s; ++i) term = term * norm2;
    } else {
      for (int i = 0; i < -s; ++i) term = divide_by_norm_squared(term, 0);
    }
    out += term;
  }
  return out;
}

std::shared_ptr<const ZkKernel> build_zk(int n, int k) {
  if (n < 3) throw std::invalid_argument("zk: requires n >= 3");
  if (k < 0) throw std::invalid_argument("zk: requires k >= 0");
  const int gens = n + 1;
  BlockLayout uv{n, n};
  BlockLayout vonly{n};

  // derivative lattice of G^ = -v |v|^{-n} over the multiset exponents
  auto ghat = RH::from_polynomial(
      Poly::position_vector(vonly, gens, 0).scaled(Rational(-1)), 0, n);
  std::map<std::vector<int>, RH> derivs;
  derivs[std::vector<int>(std::size_t(n - 1), 0)] = ghat;
  std::function<const RH&(const std::vector<int>&)> deriv_at =
      [&](const std::vector<int>& key) -> const RH& {
    auto it = derivs.find(key);
    if (it != derivs.end()) return it->second;
    for (int i = 0; i < n - 1; ++i) {
      if (key[std::size_t(i)] == 0) continue;
      std::vector<int> prev = key;
      prev[std::size_t(i)] -= 1;
      const RH& p = deriv_at(prev);
      auto d = p.derivative(0, i + 1);
      return derivs.emplace(key, std::move(d)).first->second;
    }
    throw std::logic_error("zk: empty derivative key reached unexpectedly");
  };

  auto kernel = std::make_shared<ZkKernel>();
  kernel->n = n;
  kernel->k = k;
  kernel->poly = Poly(uv, gens);
  auto vvec = Poly::position_vector(vonly, gens, 0);
  std::vector<int> v_to_target(std::size_t(n), 0);
  for (int i = 0; i < n; ++i) v_to_target[std::size_t(i)] = uv.flat(kZkBlockV, i);

  for (const auto& sigma : index_multisets(n, k)) {
    auto ps = p_sigma(uv, gens, kZkBlockU, sigma);
    std::vector<int> key(std::size_t(n - 1), 0);
    for (int idx : sigma) key[std::size_t(idx - 2)] += 1;
    auto vs = deriv_at(key).mul_poly_right(vvec);
    auto vpoly_1 = homogenize_on_sphere(vs, k);
    Poly vpoly(uv, gens);
    for (const auto& [e, c] : vpoly_1.terms()) {
      Expo t(std::size_t(uv.total()), 0);
      for (int i = 0; i < n; ++i) t[std::size_t(v_to_target[std::size_t(i)])] = e[std::size_t(i)];
      vpoly.add_term(t, c);
    }
    kernel->poly += ps * vpoly;
  }

  // prefactor (-1)^k / omega_n; the sign restores the Taylor expansion of the
  // Cauchy kernel, which the reproducing property requires
  auto om = omega_exact(n);
  kernel->prefactor = PiRational(Rational(k % 2 == 0 ? 1 : -1) / om.coef, -om.pi_pow);
  return kernel;
}

std::shared_ptr<const EkKernel> build_ek(int n, int k) {
  auto z = zk(n, k);
  const int gens = n + 1;
  BlockLayout duv{n, n, n};

  auto dvec = Poly::position_vector(duv, gens, kEkBlockD);
  auto uvec = Poly::position_vector(duv, gens, kEkBlockU);
  auto dud = dvec * uvec * dvec;
  // the substituted argument (d u d)/|d|^2 must stay in R^n
  std::vector<Poly> rows;
  for (int m = 1; m <= n; ++m) {
    Poly comp(duv, gens);
    for (const auto& [e, c] : dud.terms()) {
      Rational coeff = c.vec_comp(m);
      if (coeff != 0) comp.add_term(e, MV::scalar(gens, coeff));
    }
    rows.push_back(std::move(comp));
  }
  for (const auto& [e, c] : dud.terms())
    if (c.vec_comp(n + 1) != 0) throw std::logic_error("ek: reflection leaves R^n");

  std::vector<int> other(std::size_t(z->poly.layout().total()), 0);
  for (int i = 0; i < n; ++i)
    other[std::size_t(z->poly.layout().flat(kZkBlockV, i))] = duv.flat(kEkBlockV, i);
  auto zsub = z->poly.substitute_block(kZkBlockU, rows, duv, other);

  auto kernel = std::make_shared<EkKernel>();
  kernel->n = n;
  kernel->k = k;
  kernel->expr = RH(duv, gens, kEkBlockD);
  // (d / |d|^n) Z_k(d u d / |d|^2, v): the substitution contributed |d|^{2k}
  kernel->expr.add_term(dvec * zsub, n + 2 * k,
                        std::vector<Rational>(std::size_t(n), Rational(0)));
  auto om = omega_exact(n);
  Rational ck = c_k_constant(n, k);
  kernel->prefactor = z->prefactor * PiRational(Rational(1) / (om.coef * ck), -om.pi_pow);
  return kernel;
}

template <class Value>
class Memo {
 public:
  std::shared_ptr<const Value> get(std::pair<int, int> key,
                                   std::shared_ptr<const Value> (*builder)(int, int)) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    auto built = builder(key.first, key.second);
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = map_.emplace(key, std::move(built));
    return it->second;
  }

 private:
  std::map<std::pair<int, int>, std::shared_ptr<const Value>> map_;
  std::mutex mu_;
};

}  // namespace

std::shared_ptr<const ZkKernel> zk(int n, int k) {
  static Memo<ZkKernel> memo;
  return memo.get({n, k}, &build_zk);
}

std::shared_ptr<const EkKernel> ek(int n, int k) {
  static Memo<EkKernel> memo;
  return memo.get({n, k}, &build_ek);
}

CliffordPolynomial<double> eks_at(const Multivector<double>& xs,
                                  const Multivector<double>& ys, int n, int k,
                                  Side representation) {
  auto z = zk(n, k);
  const int gens = n + 1;
  BlockLayout uv{n, n};
  auto zd = to_double_poly(z->poly);

  auto a = kernel_reflector(xs, ys, n);
  auto at = a.reversion();
  auto jy_inv = vector_inverse(weight_J(CayleyDir::inverse, ys, n));
  auto diff = xs - ys;
  double dist2 = diff.norm_squared();
  auto singular = diff.scaled(std::pow(dist2, -n / 2.0));
  double scale = to_double(z->prefactor) / (omega(n) * to_double(c_k_constant(n, k)));

  std::vector<int> keep(std::size_t(uv.total()), 0);
  if (representation == Side::left) {
    std::vector<CliffordPolynomial<double>> rows;
    for (int m = 1; m <= n; ++m) {
      std::vector<double> coeffs(std::size_t(n), 0.0);
      for (int j = 1; j <= n; ++j)
        coeffs[std::size_t(j - 1)] =
            (a * Multivector<double>::basis_vector(gens, j) * at).vec_comp(m);
      rows.push_back(linear_form<double>(uv, gens, kZkBlockU, coeffs));
    }
    for (int i = 0; i < n; ++i)
      keep[std::size_t(uv.flat(kZkBlockV, i))] = uv.flat(kZkBlockV, i);
    auto sub = zd.substitute_block(kZkBlockU, rows, uv, keep);
    return sub.mul_left(singular * jy_inv).scaled(scale);
  }
  std::vector<CliffordPolynomial<double>> rows;
  for (int m = 1; m <= n; ++m) {
    std::vector<double> coeffs(std::size_t(n), 0.0);
    for (int j = 1; j <= n; ++j)
      coeffs[std::size_t(j - 1)] =
          (at * Multivector<double>::basis_vector(gens, j) * a).vec_comp(m);
    rows.push_back(linear_form<double>(uv, gens, kZkBlockV, coeffs));
  }
  for (int i = 0; i < n; ++i)
    keep[std::size_t(uv.flat(kZkBlockU, i))] = uv.flat(kZkBlockU, i);
  auto sub = zd.substitute_block(kZkBlockV, rows, uv, keep);
  return sub.mul_right(jy_inv * singular).scaled(scale);
}

CliffordPolynomial<double> projective_kernel_at(Bundle bundle, const Multivector<double>& x,
                                                const Multivector<double>& y, int n, int k) {
  auto plus = eks_at(x, y, n, k);
  auto minus = eks_at(-x, y, n, k);
  return bundle == Bundle::E1 ? plus + minus : plus - minus;
}

Multivector<double> canonical_rep(const Multivector<double>& x, double tol) {
  for (int i = x.gens(); i >= 1; --i) {
    double c = x.vec_comp(i);
    if (std::abs(c) > tol) return c > 0 ? x : -x;
  }
  throw std::invalid_argument("canonical_rep: zero vector");
}

CliffordPolynomial<double> rp_kernel_at(Bundle bundle, const Multivector<double>& x_lift,
                                        const Multivector<double>& y_lift, int n, int k) {
  return projective_kernel_at(bundle, canonical_rep(x_lift), canonical_rep(y_lift), n, k);
}

}  // namespace rsph
