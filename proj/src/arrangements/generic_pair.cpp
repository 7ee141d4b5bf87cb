#include "logcoh/arrangements/arrangement.hpp"

namespace logcoh {
namespace {

// H^*(S_I) for the generic pair, realized inside an exterior quotient so that
// restriction from H^*(X) is an explicit algebra map on generators.
struct StratumModel {
  GradedAlgebra ring;
  std::unique_ptr<ExteriorQuotient> quotient;
  Matrix<Rational> embedding;        // quotient.dim x ring.dim
  std::vector<ExtElement> images;    // image of B_m, m = 0..k-1
};

StratumModel stratum_model(int n, int k, Subset s) {
  StratumModel model;
  const auto in = s.elements();
  const int size = s.size();
  if (size < k) {
    std::vector<int> outside;
    for (int j = 0; j < k; ++j)
      if (!s.contains(j)) outside.push_back(j);
    const int t = static_cast<int>(outside.size());
    const Arrangement full = generic_projective(n, k);
    const Matrix<Rational> m = full.matrix();
    Matrix<Rational> v_basis;
    if (in.empty()) {
      v_basis = Matrix<Rational>::Identity(n + 1, n + 1);
    } else {
      Matrix<Rational> rows(size, n + 1);
      for (int r = 0; r < size; ++r) rows.row(r) = m.row(in[static_cast<std::size_t>(r)]);
      v_basis = kernel_basis<Rational>(rows);
    }
    Arrangement restricted;
    restricted.mode = ArrangementMode::Projective;
    for (int j : outside) {
      const Matrix<Rational> f = m.row(j) * v_basis;
      restricted.forms.emplace_back(f.data(), f.data() + f.size());
      restricted.labels.push_back(std::to_string(j + 1));
    }
    const ProjectiveComplement c = projective_complement(restricted);
    std::vector<std::pair<std::string, int>> torus;
    for (int i : in) torus.emplace_back("e" + std::to_string(i + 1), 1);
    model.ring = tensor_product(c.ring, exterior_algebra(torus));
    model.quotient = std::make_unique<ExteriorQuotient>(k, os_ideal_generators(restricted));
    const auto torus_order = exterior_monomial_order(size);
    model.embedding = Matrix<Rational>(model.quotient->dim(), model.ring.dim());
    for (Index a = 0; a < c.ring.dim(); ++a) {
      const ExtElement base = c.os.quotient.lift(c.inclusion.col(a));
      for (std::size_t e = 0; e < torus_order.size(); ++e)
        model.embedding.col(a * static_cast<Index>(torus_order.size()) + static_cast<Index>(e)) =
            model.quotient->reduce(ext_mul(base, ext_monomial(torus_order[e] << t)));
    }
    const int ref = outside.back();
    const auto pos = [&](int j) { return static_cast<int>(std::find(outside.begin(), outside.end(), j) - outside.begin()); };
    for (int j = 0; j < k; ++j) {
      if (s.contains(j)) {
        const int e = t + static_cast<int>(std::find(in.begin(), in.end(), j) - in.begin());
        model.images.push_back(ext_add(ext_generator(e), ext_generator(pos(ref))));
      } else {
        model.images.push_back(ext_generator(pos(j)));
      }
    }
    return model;
  }
  // every hyperplane contains the stratum: a torus bundle over P^{n-k} whose
  // cohomology is that of T^{k-1} x S^{2(n-k)+1}
  std::vector<std::pair<std::string, int>> circles;
  for (int i = 0; i + 1 < k; ++i) circles.emplace_back("c" + std::to_string(i + 1), 1);
  model.ring = tensor_product(exterior_algebra(circles), exterior_algebra({{"s", 2 * (n - k) + 1}}));
  model.quotient = std::make_unique<ExteriorQuotient>(k + 1, std::vector<ExtElement>{});
  const auto circle_order = exterior_monomial_order(k - 1);
  model.embedding = Matrix<Rational>(model.quotient->dim(), model.ring.dim());
  for (std::size_t a = 0; a < circle_order.size(); ++a) {
    ExtElement x{{0u, Rational(1)}};
    for (unsigned bits = circle_order[a]; bits; bits &= bits - 1)
      x = ext_mul(x, ext_add(ext_generator(__builtin_ctz(bits)), ext_generator(k - 1), Rational(-1)));
    model.embedding.col(static_cast<Index>(2 * a)) = model.quotient->reduce(x);
    model.embedding.col(static_cast<Index>(2 * a + 1)) = model.quotient->reduce(ext_mul(x, ext_generator(k)));
  }
  for (int j = 0; j < k; ++j) model.images.push_back(ext_generator(j));
  return model;
}

Matrix<Rational> restriction_from_x(const ProjectiveComplement& x, const StratumModel& model) {
  Matrix<Rational> r(model.ring.dim(), x.ring.dim());
  for (Index c = 0; c < x.ring.dim(); ++c) {
    const ExtElement lifted = x.os.quotient.lift(x.inclusion.col(c));
    const Vector<Rational> image = model.quotient->reduce(ext_apply(lifted, model.images));
    const auto coords = solve<Rational>(model.embedding, image);
    if (!coords) throw std::logic_error("generic pair: restriction leaves the stratum cohomology");
    r.col(c) = *coords;
  }
  return r;
}

void check_parameters(int n, int k) {
  if (n < 1) throw InvalidParameters("n must be at least 1");
  if (k < 1) throw InvalidParameters("k must be at least 1");
  if (k > 12) throw InvalidParameters("k must be at most 12");
}

}  // namespace

NCPairData build_generic_pair(int n, int k) {
  check_parameters(n, k);
  NCPairData p;
  p.k = k;
  p.dim = n;
  p.kappa.assign(static_cast<std::size_t>(k), 1);
  p.pole_orders.assign(static_cast<std::size_t>(k), 1);
  const ProjectiveComplement x = projective_complement(generic_projective(n, k));
  p.strata[Subset()] = Stratum{1, x.ring};
  std::map<Subset, Matrix<Rational>> from_x;
  for (Subset s : subsets_of(Subset::full(k))) {
    if (s.empty() || s.size() > n) continue;
    const StratumModel model = stratum_model(n, k, s);
    from_x[s] = restriction_from_x(x, model);
    p.strata[s] = Stratum{1, model.ring};
    p.restrictions[{Subset(), s}] = from_x[s];
  }
  // r*_{JK} through a preimage under the surjection r*_{{},J}
  for (const auto& [j, rj] : from_x)
    for (const auto& [kk, rk] : from_x) {
      if (j == kk || !j.is_subset_of(kk)) continue;
      const Matrix<Rational> ker = kernel_basis<Rational>(rj);
      if (ker.cols() > 0 && !all_zero(Matrix<Rational>(rk * ker)))
        throw std::logic_error("generic pair: kernel of r*_{{}," + j.label() + "} not inside kernel of r*_{{}," + kk.label() + "}");
      Matrix<Rational> m(rk.rows(), rj.rows());
      for (Index b = 0; b < rj.rows(); ++b) {
        const auto pre = solve<Rational>(rj, Vector<Rational>::Unit(rj.rows(), b));
        if (!pre) throw std::logic_error("generic pair: r*_{{}," + j.label() + "} is not surjective");
        m.col(b) = rk * *pre;
      }
      p.restrictions[{j, kk}] = m;
    }
  p.flags.fano = true;
  p.flags.anticanonical = (k == n + 1);
  p.flags.same_line_bundle = std::vector<long long>(static_cast<std::size_t>(k), 1);
  p.flags.effective_classes = std::vector<std::vector<long long>>{std::vector<long long>(static_cast<std::size_t>(k), 1)};
  p.h1_relations = {std::vector<long long>(static_cast<std::size_t>(k), 1)};
  const ValidationReport rep = validate(p);
  if (!rep.ok()) throw std::logic_error("generic pair failed validation: " + rep.issues.front());
  return p;
}

RestrictionKernel restriction_kernel(int n, int k, Subset s) {
  check_parameters(n, k);
  if (s.size() > n || !s.is_subset_of(Subset::full(k))) throw InvalidParameters("stratum " + s.label() + " is empty");
  const ProjectiveComplement x = projective_complement(generic_projective(n, k));
  RestrictionKernel out;
  const Matrix<Rational> r = s.empty() ? Matrix<Rational>::Identity(x.ring.dim(), x.ring.dim())
                                       : restriction_from_x(x, stratum_model(n, k, s));
  out.kernel = kernel_basis<Rational>(r);
  const auto in_x = [&](const ExtElement& e) {
    const auto c = solve<Rational>(x.inclusion, x.os.quotient.reduce(e));
    if (!c) throw std::logic_error("restriction_kernel: element outside H^*(X)");
    return *c;
  };
  const auto difference_product = [&](Subset j, int ref) {
    ExtElement e{{0u, Rational(1)}};
    for (int l : j.elements()) e = ext_mul(e, ext_add(ext_generator(l), ext_generator(ref), Rational(-1)));
    return e;
  };
  const Index dim = x.ring.dim();
  Matrix<Rational> span(dim, 0);
  std::vector<int> outside;
  for (int j = 0; j < k; ++j)
    if (!s.contains(j)) outside.push_back(j);
  if (!outside.empty()) {
    const int ref = outside.back();
    Subset pool;
    for (int j : outside)
      if (j != ref) pool = pool.with(j);
    for (Subset j : subsets_of(pool)) {
      if (j.size() <= n - s.size()) continue;
      const Vector<Rational> h = in_x(difference_product(j, ref));
      for (Index b = 0; b < dim; ++b)
        span = hstack<Rational>(span, Matrix<Rational>(x.ring.multiply(Vector<Rational>::Unit(dim, b), h)));
    }
  }
  out.formula_span = span.cols() > 0 ? column_basis<Rational>(span) : span;
  out.agree = out.formula_span.cols() == out.kernel.cols() &&
              (out.kernel.cols() == 0 || same_span<Rational>(out.kernel, out.formula_span));
  Matrix<Rational> literal(dim, 0);
  for (Subset j : subsets_of(Subset::full(k - 1))) {
    if (j.empty() || !(j & s).empty()) continue;
    literal = hstack<Rational>(literal, Matrix<Rational>(in_x(difference_product(j, k - 1))));
  }
  out.literal_dim = literal.cols() > 0 ? rank<Rational>(literal) : 0;
  out.literal_agrees = out.literal_dim == out.kernel.cols() &&
                       (out.kernel.cols() == 0 || same_span<Rational>(out.kernel, literal));
  return out;
}

}  // namespace logcoh
