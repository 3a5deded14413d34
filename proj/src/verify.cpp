#include "rsphere/pushforward.hpp"

#include "rsphere/sphere_integration.hpp"

namespace rsph {

Multivector<double> hyperplane_pair(const CliffordPolynomial<double>& A,
                                    const CliffordPolynomial<double>& B,
                                    const Multivector<double>& a, int n) {
  const int gens = a.gens();
  BlockLayout ulayout{n};
  double inv = 1.0 / a.norm_squared();
  std::vector<CliffordPolynomial<double>> rows;
  for (int j = 1; j <= gens; ++j) {
    std::vector<double> coeffs(std::size_t(n), 0.0);
    for (int i = 1; i <= n; ++i)
      coeffs[std::size_t(i - 1)] =
          (a * Multivector<double>::basis_vector(gens, i) * a).vec_comp(j) * inv;
    rows.push_back(linear_form<double>(ulayout, gens, 0, coeffs));
  }
  std::vector<int> other(std::size_t(A.layout().total()), 0);
  auto Au = A.substitute_block(0, rows, ulayout, other);
  auto Bu = B.substitute_block(0, rows, ulayout, other);
  return integrate_sphere(Au * Bu, 0);
}

}  // namespace rsph
