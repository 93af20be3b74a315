#include "isgx/l_algebra.hpp"

#include <random>
#include <sstream>

#include "isgx/error.hpp"

namespace isgx {

nlohmann::json LElement::to_json(const FiniteInverseSemigroup& sg) const {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [g, a] : coeffs) {
    nlohmann::json values = nlohmann::json::array();
    for (int x = 0; x < a.size(); ++x)
      values.push_back({a.at(x).real(), a.at(x).imag()});
    out[sg.name(g)] = values;
  }
  return out;
}

LElement operator+(const LElement& x, const LElement& y) {
  LElement out = x;
  for (const auto& [g, a] : y.coeffs) {
    auto it = out.coeffs.find(g);
    if (it == out.coeffs.end())
      out.coeffs.emplace(g, a);
    else
      it->second = it->second + a;
  }
  return out;
}

LElement operator-(const LElement& x, const LElement& y) {
  return x + (Complex(-1.0) * y);
}

LElement operator*(Complex lambda, const LElement& x) {
  LElement out;
  for (const auto& [g, a] : x.coeffs) out.coeffs.emplace(g, lambda * a);
  return out;
}

LAlgebra::LAlgebra(std::shared_ptr<const PartialAction> action) : action_(std::move(action)) {
  const auto& pa = *action_;
  const auto& sg = pa.semigroup();
  const int n = pa.ground().size();

  pos_.assign(sg.size(), std::vector<int>(n, -1));
  for (int g = 0; g < sg.size(); ++g) {
    for (int x : pa.ideal(g).points()) {
      pos_[g][x] = dim();
      basis_.push_back({g, x});
    }
  }

  // (1_x δ_g)(1_y δ_h) = 1_x δ_{gh} when alpha_g^{-1}(x) = y, else 0; the
  // target slot exists by axiom (ii).
  table_.assign(dim(), std::vector<int>(dim(), -1));
  for (int i = 0; i < dim(); ++i) {
    const auto [g, x] = basis_[i];
    const int y = pa.map(g).inverse().apply(x);
    if (y == PartialBijection::kUndefined)
      throw StructureError("L basis: alpha_g does not reach a supported point (invalid action)");
    for (int j = 0; j < dim(); ++j) {
      const auto [h, yj] = basis_[j];
      if (yj != y) continue;
      const int k = pos_[sg.mult(g, h)][x];
      if (k < 0)
        throw StructureError("L structure constants escape the ideal supports (invalid action)");
      table_[i][j] = k;
    }
  }
}

LElement LAlgebra::delta(const AlgebraElement& a, int g) const {
  const Ideal& dg = action_->ideal(g);
  const auto bad = a.support_violations(dg, tol());
  if (!bad.empty()) {
    std::ostringstream msg;
    msg << "delta: coefficient of " << action_->semigroup().name(g) << " not supported in D_"
        << action_->semigroup().name(g) << "; offending point "
        << action_->ground().label(bad.front());
    throw DomainError(msg.str());
  }
  const AlgebraElement clipped = a.clip_to(dg);
  LElement out;
  if (clipped.sup_norm() > 0.0) out.coeffs.emplace(g, clipped);
  return out;
}

LElement LAlgebra::unit() const {
  return delta(AlgebraElement::indicator(Ideal::full(action_->ground().size())),
               action_->semigroup().unit());
}

Vec LAlgebra::to_vector(const LElement& x) const {
  Vec v = Vec::Zero(dim());
  for (const auto& [g, a] : x.coeffs) {
    const auto bad = a.support_violations(action_->ideal(g), tol());
    if (!bad.empty())
      throw DomainError("L element has a coefficient materially outside its ideal at key " +
                        action_->semigroup().name(g));
    for (int xp : action_->ideal(g).points()) v(pos_[g][xp]) = a.at(xp);
  }
  return v;
}

LElement LAlgebra::from_vector(const Vec& v) const {
  LElement out;
  for (int i = 0; i < dim(); ++i) {
    if (v(i) == 0.0) continue;
    const auto [g, x] = basis_[i];
    auto it = out.coeffs.find(g);
    if (it == out.coeffs.end())
      it = out.coeffs.emplace(g, AlgebraElement::zero(action_->ground().size())).first;
    it->second = it->second + AlgebraElement::point_mass(action_->ground().size(), x, v(i));
  }
  return out;
}

LElement LAlgebra::convolve(const LElement& x, const LElement& y) const {
  const Vec xv = to_vector(x);
  const Vec yv = to_vector(y);
  Vec out = Vec::Zero(dim());
  for (int i = 0; i < dim(); ++i) {
    if (xv(i) == 0.0) continue;
    for (int j = 0; j < dim(); ++j) {
      if (yv(j) == 0.0) continue;
      const int k = table_[i][j];
      if (k >= 0) out(k) += xv(i) * yv(j);
    }
  }
  return from_vector(out);
}

LElement LAlgebra::star(const LElement& x) const {
  const auto& sg = action_->semigroup();
  LElement out;
  for (const auto& [h, a] : x.coeffs) {
    const int g = sg.inv(h);  // x*(g) = beta_g(x(g*)*)
    const AlgebraElement value = action_->apply(g, a.conjugate());
    if (value.sup_norm() == 0.0) continue;
    auto it = out.coeffs.find(g);
    if (it == out.coeffs.end())
      out.coeffs.emplace(g, value);
    else
      it->second = it->second + value;
  }
  return out;
}

double LAlgebra::l1_norm(const LElement& x) const {
  double sum = 0.0;
  for (const auto& [g, a] : x.coeffs) sum += a.sup_norm();
  return sum;
}

double LAlgebra::max_coeff_diff(const LElement& x, const LElement& y) const {
  const LElement d = x - y;
  double m = 0.0;
  for (const auto& [g, a] : d.coeffs) m = std::max(m, a.sup_norm());
  return m;
}

namespace {

LElement random_element(const LAlgebra& lalg, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec v(lalg.dim());
  for (int i = 0; i < lalg.dim(); ++i) v(i) = Complex(gauss(rng), gauss(rng));
  return lalg.from_vector(v);
}

std::string basis_name(const LAlgebra& lalg, int i) {
  const auto [g, x] = lalg.basis()[i];
  return "1_" + lalg.action().ground().label(x) + " d_" + lalg.action().semigroup().name(g);
}

}  // namespace

ValidationReport verify_banach_star_laws(const LAlgebra& lalg, std::uint64_t seed, int samples,
                                         double tol, const MultiplyFn& multiply) {
  ValidationReport report;
  const MultiplyFn mul =
      multiply ? multiply
               : [&lalg](const LElement& a, const LElement& b) { return lalg.convolve(a, b); };
  const int d = lalg.dim();

  std::vector<LElement> basis_elems;
  basis_elems.reserve(d);
  for (int i = 0; i < d; ++i) {
    Vec v = Vec::Zero(d);
    v(i) = 1.0;
    basis_elems.push_back(lalg.from_vector(v));
  }

  // Associativity over all basis triples.
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const LElement ij = mul(basis_elems[i], basis_elems[j]);
      for (int k = 0; k < d; ++k) {
        const LElement lhs = mul(ij, basis_elems[k]);
        const LElement rhs = mul(basis_elems[i], mul(basis_elems[j], basis_elems[k]));
        const double r = lalg.max_coeff_diff(lhs, rhs);
        report.expect(r <= tol, "associativity",
                      "(" + basis_name(lalg, i) + ", " + basis_name(lalg, j) + ", " +
                          basis_name(lalg, k) + ")",
                      r);
      }
    }
  }

  // (x∗y)* = y*∗x* on basis pairs.
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const std::string witness = "(" + basis_name(lalg, i) + ", " + basis_name(lalg, j) + ")";
      try {
        const double r =
            lalg.max_coeff_diff(lalg.star(mul(basis_elems[i], basis_elems[j])),
                                mul(lalg.star(basis_elems[j]), lalg.star(basis_elems[i])));
        report.expect(r <= tol, "star-antimultiplicative", witness, r);
      } catch (const DomainError&) {
        report.record_check();
        report.fail("star-antimultiplicative", witness + " (product left L)");
      }
    }
  }

  // Unit laws: 1δ_e is a genuine two-sided unit, and its multiplication
  // operators are the identity on coordinates (rank = dim L).
  const LElement one = lalg.unit();
  for (int i = 0; i < d; ++i) {
    const double rl = lalg.max_coeff_diff(mul(one, basis_elems[i]), basis_elems[i]);
    const double rr = lalg.max_coeff_diff(mul(basis_elems[i], one), basis_elems[i]);
    report.expect(rl <= tol, "unit-left", basis_name(lalg, i), rl);
    report.expect(rr <= tol, "unit-right", basis_name(lalg, i), rr);
  }
  {
    Mat left = Mat::Zero(d, d), right = Mat::Zero(d, d);
    for (int i = 0; i < d; ++i) {
      left.col(i) = lalg.to_vector(mul(one, basis_elems[i]));
      right.col(i) = lalg.to_vector(mul(basis_elems[i], one));
    }
    const double r = std::max((left - Mat::Identity(d, d)).norm(),
                              (right - Mat::Identity(d, d)).norm());
    report.expect(r <= tol, "unit-operator-identity",
                  "left/right multiplication by 1 d_e as a dim-L matrix", r);
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int trial = 0; trial < samples; ++trial) {
    const LElement x = random_element(lalg, rng);
    const LElement y = random_element(lalg, rng);
    const Complex lambda(gauss(rng), gauss(rng));

    const double r_inv = lalg.max_coeff_diff(lalg.star(lalg.star(x)), x);
    report.expect(r_inv <= tol, "star-involutive", "random sample " + std::to_string(trial),
                  r_inv);
    const double r_add =
        lalg.max_coeff_diff(lalg.star(x + y), lalg.star(x) + lalg.star(y));
    report.expect(r_add <= tol, "star-additive", "random sample " + std::to_string(trial), r_add);
    const double r_hom =
        lalg.max_coeff_diff(lalg.star(lambda * x), std::conj(lambda) * lalg.star(x));
    report.expect(r_hom <= tol, "star-conjugate-homogeneous",
                  "random sample " + std::to_string(trial), r_hom);
    const double r_iso = std::abs(lalg.l1_norm(lalg.star(x)) - lalg.l1_norm(x));
    report.expect(r_iso <= tol, "star-isometric", "random sample " + std::to_string(trial),
                  r_iso);
    const double prod_norm = lalg.l1_norm(mul(x, y));
    const double bound = lalg.l1_norm(x) * lalg.l1_norm(y);
    report.expect(prod_norm <= bound + tol, "norm-submultiplicative",
                  "random sample " + std::to_string(trial),
                  std::max(0.0, prod_norm - bound));
  }

  return report;
}

}  // namespace isgx
