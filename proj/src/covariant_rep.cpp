#include "isgx/covariant_rep.hpp"

#include <sstream>

#include "isgx/error.hpp"
#include "isgx/linalg.hpp"

namespace isgx {

Mat MatrixRep::pi(const AlgebraElement& a) const {
  Mat m = Mat::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) m(i, i) = a.at(labeling[i]);
  return m;
}

Mat MatrixRep::ideal_projection(const Ideal& ideal) const {
  Mat m = Mat::Zero(dim, dim);
  for (int i = 0; i < dim; ++i)
    if (ideal.contains(labeling[i])) m(i, i) = 1.0;
  return m;
}

std::vector<int> MatrixRep::subspace_indices(const Ideal& ideal) const {
  std::vector<int> idx;
  for (int i = 0; i < dim; ++i)
    if (ideal.contains(labeling[i])) idx.push_back(i);
  return idx;
}

MatrixRep regular_rep(const PartialAction& pa, const std::string& name) {
  const int n = pa.ground().size();
  MatrixRep rep;
  rep.dim = n;
  rep.name = name;
  rep.labeling.resize(n);
  for (int i = 0; i < n; ++i) rep.labeling[i] = i;
  rep.u.reserve(pa.semigroup().size());
  for (int g = 0; g < pa.semigroup().size(); ++g) {
    Mat m = Mat::Zero(n, n);
    const PartialBijection& alpha = pa.map(g);
    for (int x = 0; x < n; ++x)
      if (alpha.defined_at(x)) m(alpha.apply(x), x) = 1.0;
    rep.u.push_back(std::move(m));
  }
  return rep;
}

MatrixRep direct_sum(const MatrixRep& a, const MatrixRep& b, const std::string& name) {
  if (a.u.size() != b.u.size()) throw StructureError("direct_sum: reps over different semigroups");
  MatrixRep out;
  out.dim = a.dim + b.dim;
  out.name = name;
  out.labeling = a.labeling;
  out.labeling.insert(out.labeling.end(), b.labeling.begin(), b.labeling.end());
  for (std::size_t g = 0; g < a.u.size(); ++g) {
    Mat m = Mat::Zero(out.dim, out.dim);
    m.topLeftCorner(a.dim, a.dim) = a.u[g];
    m.bottomRightCorner(b.dim, b.dim) = b.u[g];
    out.u.push_back(std::move(m));
  }
  return out;
}

namespace {

void check_rep_shape(const PartialAction& pa, const MatrixRep& rep) {
  if (rep.dim <= 0) throw StructureError("representation dimension must be positive");
  if (static_cast<int>(rep.labeling.size()) != rep.dim)
    throw StructureError("labeling size does not match representation dimension");
  for (int p : rep.labeling)
    if (p < 0 || p >= pa.ground().size())
      throw StructureError("labeling refers to a point outside the ground set");
  if (static_cast<int>(rep.u.size()) != pa.semigroup().size())
    throw StructureError("one u matrix per semigroup element required");
  for (const auto& m : rep.u)
    if (m.rows() != rep.dim || m.cols() != rep.dim)
      throw StructureError("u matrix has wrong shape");
}

double norm_of(const Mat& m) { return linalg::operator_norm(m); }

}  // namespace

ValidationReport validate_covariant(const PartialAction& pa, const MatrixRep& rep, double tol) {
  check_rep_shape(pa, rep);
  ValidationReport report;
  const auto& sg = pa.semigroup();
  const Mat eye = Mat::Identity(rep.dim, rep.dim);

  // u_e = I (forced by condition (2); checked directly).
  report.expect(norm_of(rep.u[sg.unit()] - eye) <= tol, "u-e-identity", "u_e != I",
                norm_of(rep.u[sg.unit()] - eye));

  for (int g = 0; g < sg.size(); ++g) {
    const Mat& ug = rep.u[g];
    const int gi = sg.inv(g);

    // Condition (3): u_{g*} = u_g^*.
    const double r3 = norm_of(rep.u[gi] - ug.adjoint());
    report.expect(r3 <= tol, "condition-3", "u_{" + sg.name(gi) + "} != u_" + sg.name(g) + "^*",
                  r3);

    // Partial isometry with the prescribed initial and final spaces,
    // as exact projection equalities.
    const double riso = norm_of(ug * ug.adjoint() * ug - ug);
    report.expect(riso <= tol, "partial-isometry", "u_" + sg.name(g), riso);
    const double rini = norm_of(ug.adjoint() * ug - rep.ideal_projection(pa.ideal(gi)));
    report.expect(rini <= tol, "initial-space",
                  "ran(u_" + sg.name(g) + "^* u_" + sg.name(g) + ") != pi(D_" + sg.name(gi) +
                      ")H",
                  rini);
    const double rfin = norm_of(ug * ug.adjoint() - rep.ideal_projection(pa.ideal(g)));
    report.expect(rfin <= tol, "final-space",
                  "ran(u_" + sg.name(g) + " u_" + sg.name(g) + "^*) != pi(D_" + sg.name(g) + ")H",
                  rfin);

    // Condition (1): u_g pi(a) u_{g*} = pi(alpha_g(a)) on a basis of D_{g*}.
    for (int x : pa.ideal(gi).points()) {
      const auto a = AlgebraElement::point_mass(pa.ground().size(), x);
      const double r1 = norm_of(ug * rep.pi(a) * rep.u[gi] - rep.pi(pa.apply(g, a)));
      report.expect(r1 <= tol, "condition-1",
                    "g=" + sg.name(g) + " a=1_" + pa.ground().label(x), r1);
    }
  }

  // Condition (2): u_{st} h = u_s u_t h for h spanning pi(D_{t*} D_{t*s*})H.
  for (int s = 0; s < sg.size(); ++s) {
    for (int t = 0; t < sg.size(); ++t) {
      const Ideal h_ideal =
          pa.ideal(sg.inv(t)).intersect(pa.ideal(sg.mult(sg.inv(t), sg.inv(s))));
      const Mat p = rep.ideal_projection(h_ideal);
      const double r2 = norm_of((rep.u[sg.mult(s, t)] - rep.u[s] * rep.u[t]) * p);
      report.expect(r2 <= tol, "condition-2", "s=" + sg.name(s) + " t=" + sg.name(t), r2);
    }
  }

  return report;
}

ValidationReport word_isometry_check(const PartialAction& pa, const MatrixRep& rep,
                                     std::span<const int> word, double tol) {
  if (word.empty()) throw PreconditionError("word_isometry_check: empty word");
  check_rep_shape(pa, rep);
  ValidationReport report;
  const auto& sg = pa.semigroup();

  Mat w = rep.u[word[0]];
  for (std::size_t i = 1; i < word.size(); ++i) w = w * rep.u[word[i]];

  std::string word_str;
  for (std::size_t i = 0; i < word.size(); ++i)
    word_str += (i ? "," : "") + sg.name(word[i]);

  const double riso = norm_of(w * w.adjoint() * w - w);
  report.expect(riso <= tol, "word-partial-isometry", "[" + word_str + "]", riso);

  // Final space: pi(D_{s1} D_{s1 s2} ... D_{s1...sn})H.
  Ideal final_ideal = Ideal::full(pa.ground().size());
  int prod = -1;
  for (std::size_t j = 0; j < word.size(); ++j) {
    prod = (prod < 0) ? word[j] : sg.mult(prod, word[j]);
    final_ideal = final_ideal.intersect(pa.ideal(prod));
  }
  // Initial space: pi(D_{sn*} D_{sn* s_{n-1}*} ... D_{sn*...s1*})H.
  Ideal initial_ideal = Ideal::full(pa.ground().size());
  prod = -1;
  for (int j = static_cast<int>(word.size()) - 1; j >= 0; --j) {
    prod = (prod < 0) ? sg.inv(word[j]) : sg.mult(prod, sg.inv(word[j]));
    initial_ideal = initial_ideal.intersect(pa.ideal(prod));
  }

  const double rfin = norm_of(w * w.adjoint() - rep.ideal_projection(final_ideal));
  const double rini = norm_of(w.adjoint() * w - rep.ideal_projection(initial_ideal));
  if (rfin > tol) {
    // Statement assigns this product to the final space; note when the
    // matrix instead matches the other formula.
    const double swapped = norm_of(w * w.adjoint() - rep.ideal_projection(initial_ideal));
    std::ostringstream msg;
    msg << "[" << word_str << "]";
    if (swapped <= tol) msg << " (WW* matches the initial-space formula instead)";
    report.record_check();
    report.fail("word-final-space", msg.str(), rfin);
  } else {
    report.record_check();
  }
  report.expect(rini <= tol, "word-initial-space", "[" + word_str + "]", rini);

  return report;
}

ValidationReport word_identity_check(const PartialAction& pa, const MatrixRep& rep,
                                     std::span<const int> word, double tol) {
  if (word.empty()) throw PreconditionError("word_identity_check: empty word");
  check_rep_shape(pa, rep);
  ValidationReport report;
  const auto& sg = pa.semigroup();

  Mat w = rep.u[word[0]];
  for (std::size_t i = 1; i < word.size(); ++i) w = w * rep.u[word[i]];
  const Mat& u_prod = rep.u[sg.product_of_word(word)];

  std::string word_str;
  for (std::size_t i = 0; i < word.size(); ++i)
    word_str += (i ? "," : "") + sg.name(word[i]);

  // Initial-space ideal D_{sn*} D_{sn* s_{n-1}*} ... D_{sn*...s1*}.
  Ideal initial_ideal = Ideal::full(pa.ground().size());
  int prod = -1;
  for (int j = static_cast<int>(word.size()) - 1; j >= 0; --j) {
    prod = (prod < 0) ? sg.inv(word[j]) : sg.mult(prod, sg.inv(word[j]));
    initial_ideal = initial_ideal.intersect(pa.ideal(prod));
  }
  const Mat p = rep.ideal_projection(initial_ideal);
  const double r1 = norm_of((u_prod - w) * p);
  report.expect(r1 <= tol, "word-vector-identity",
                "u_{" + sg.name(sg.product_of_word(word)) + "} != u_[" + word_str +
                    "] on the initial space",
                r1);

  // Final-space ideal D_{s1} D_{s1 s2} ... D_{s1...sn}.
  Ideal final_ideal = Ideal::full(pa.ground().size());
  prod = -1;
  for (std::size_t j = 0; j < word.size(); ++j) {
    prod = (prod < 0) ? word[j] : sg.mult(prod, word[j]);
    final_ideal = final_ideal.intersect(pa.ideal(prod));
  }
  for (int x : final_ideal.points()) {
    const Mat pia = rep.pi(AlgebraElement::point_mass(pa.ground().size(), x));
    const double r2 = norm_of(pia * u_prod - pia * w);
    report.expect(r2 <= tol, "word-ideal-identity",
                  "a=1_" + pa.ground().label(x) + " word=[" + word_str + "]", r2);
  }

  return report;
}

}  // namespace isgx
