#include "frobenia/decomp.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "frobenia/hecke.hpp"

namespace frobenia {

AlgebraPtr reduce_algebra(const Algebra& A, const PrimeSpec& p) {
  const Field k = residue_field(A.field(), p);
  std::vector<std::string> bad;
  auto red = [&](const Scalar& x, const std::string& where) {
    if (valuation(x, p) < 0) {
      bad.push_back(where + " = " + x.to_string());
      return k.zero();
    }
    return reduce_mod(x, p, k);
  };
  std::vector<StructureEntry> st;
  for (const auto& e : A.structure()) {
    Scalar c = red(e.coeff, "c(" + std::to_string(e.i) + "," + std::to_string(e.j) + "," + std::to_string(e.k) + ")");
    if (!c.is_zero()) st.push_back({e.i, e.j, e.k, c});
  }
  Vec unit, tau;
  for (std::size_t w = 0; w < A.dim(); ++w) {
    unit.push_back(red(A.unit()[w], "unit[" + std::to_string(w) + "]"));
    tau.push_back(red(A.tau()[w], "tau[" + std::to_string(w) + "]"));
  }
  if (!bad.empty()) {
    std::string msg = "not integral at " + p.describe() + ":";
    for (std::size_t i = 0; i < bad.size() && i < 8; ++i) msg += " " + bad[i];
    if (bad.size() > 8) msg += " ...";
    fail(Errc::NotIntegralAtPrime, msg);
  }
  return std::make_shared<const Algebra>(A.name() + "@" + p.describe(), k, A.labels(), st, unit, tau);
}

namespace {

long min_valuation(const Mat& M, const PrimeSpec& p) {
  long v = kInfiniteValuation;
  for (const auto& x : M.entries())
    if (!x.is_zero()) v = std::min(v, valuation(x, p));
  return v;
}

// Triangular basis of the local-ring span of the rows (valuation-minimal pivots).
Mat local_span_basis(std::vector<Vec> rows, std::size_t dim, const PrimeSpec& p) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < dim; ++c) {
    std::size_t best = rows.size();
    long bestv = kInfiniteValuation;
    for (std::size_t k = r; k < rows.size(); ++k) {
      if (rows[k][c].is_zero()) continue;
      const long v = valuation(rows[k][c], p);
      if (best == rows.size() || v < bestv) {
        best = k;
        bestv = v;
      }
    }
    if (best == rows.size()) continue;
    std::swap(rows[r], rows[best]);
    const Scalar inv = rows[r][c].inv();
    for (std::size_t k = r + 1; k < rows.size(); ++k) {
      if (rows[k][c].is_zero()) continue;
      const Scalar q = rows[k][c] * inv;
      rows[k] = vec_sub(rows[k], vec_scale(rows[r], q));
    }
    ++r;
  }
  for (std::size_t k = r; k < rows.size(); ++k)
    if (!vec_is_zero(rows[k])) fail(Errc::VerificationFailed, "lattice elimination left a nonzero row");
  rows.resize(r);
  return Mat::from_rows(rows.empty() ? Field() : rows[0][0].field(), rows, dim);
}

}  // namespace

LatticeReduction reduce_module(const RightModule& V, const AlgebraPtr& reduced_algebra, const PrimeSpec& p, std::size_t seed_index) {
  const std::size_t d = V.dim();
  const Field& K = V.field();
  if (seed_index >= d) fail(Errc::InvalidInput, "lattice seed index out of range");
  std::vector<Vec> gens;
  for (std::size_t w = 0; w < V.actions().size(); ++w) gens.push_back(V.action(w).row(seed_index));
  if (rank(Mat::from_rows(K, gens, d)) < d)
    for (std::size_t s = 0; s < d; ++s)
      for (std::size_t w = 0; w < V.actions().size(); ++w) gens.push_back(V.action(w).row(s));
  LatticeReduction out;
  out.basis = local_span_basis(gens, d, p);
  if (out.basis.rows() != d) fail(Errc::VerificationFailed, "lattice does not have full rank");
  const Mat inv = inverse(out.basis);
  const Field& k = reduced_algebra->field();
  std::vector<Mat> red;
  for (const auto& R : V.actions()) {
    Mat L = out.basis * R * inv;
    if (min_valuation(L, p) < 0) fail(Errc::VerificationFailed, "lattice is not stable under the action");
    Mat Lbar(k, d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) Lbar(i, j) = reduce_mod(L(i, j), p, k);
    out.lattice_action.push_back(std::move(L));
    red.push_back(std::move(Lbar));
  }
  out.reduced = RightModule(reduced_algebra, std::move(red), true);
  return out;
}

Decomposition decompose(const AlgebraAnalysis& source, const PrimeSpec& p, std::size_t seed_index, std::uint64_t seed) {
  Decomposition D;
  D.source = source;
  AlgebraPtr Abar = reduce_algebra(*source.algebra, p);
  D.residue = analyze(Abar, seed);
  D.matrix.rows = source.catalog.labels;
  D.matrix.cols = D.residue.catalog.labels;
  D.matrix.prime = p;
  D.matrix.residue_field = Abar->field().describe();
  for (std::size_t v = 0; v < source.catalog.size(); ++v) {
    const RightModule& V = source.catalog.simples[v];
    LatticeReduction L = reduce_module(V, Abar, p, std::min(seed_index, V.dim() - 1));
    std::vector<unsigned> row(D.residue.catalog.size(), 0);
    std::size_t dims = 0;
    for (const auto& cf : chop(L.reduced, seed)) {
      row[D.residue.catalog.find(cf.module)] += cf.multiplicity;
      dims += cf.module.dim() * cf.multiplicity;
    }
    if (dims != V.dim()) fail(Errc::VerificationFailed, "composition factors do not add up to the dimension");
    D.matrix.entries.push_back(row);
    D.lattices.push_back(std::move(L));
  }
  return D;
}

ReciprocityResult reciprocity_check(const Decomposition& D, std::uint64_t seed) {
  (void)seed;
  const PrimeSpec& p = D.matrix.prime;
  const Field& K = D.source.algebra->field();
  const auto residue_pims = extract_pims(D.residue);
  const Poly f = lift_polynomial(2).over(K);
  ReciprocityResult res;
  for (const auto& P : residue_pims) {
    Vec x;
    for (const auto& c : P.idempotent) x.push_back(lift_residue(c, p, K));
    std::vector<unsigned> row;
    for (std::size_t v = 0; v < D.lattices.size(); ++v) {
      const auto& L = D.lattices[v];
      const std::size_t dv = L.basis.rows();
      Mat X(K, dv, dv);
      for (std::size_t w = 0; w < x.size(); ++w)
        if (!x[w].is_zero()) X += L.lattice_action[w] * x[w];
      long need = 1;
      for (std::size_t k = 1; k <= dv; ++k) need = std::max(need, 1 + valuation(K.from_int(static_cast<long>(k)), p));
      unsigned steps = 0;
      long prec = min_valuation(X * X - X, p);
      while (steps < 2 || prec < need) {
        if (prec == kInfiniteValuation) break;
        if (steps > 12) fail(Errc::VerificationFailed, "idempotent lift does not converge");
        X = eval_poly(f, X);
        if (min_valuation(X, p) < 0) fail(Errc::VerificationFailed, "idempotent lift left the local ring");
        prec = min_valuation(X * X - X, p);
        ++steps;
      }
      res.newton_steps = std::max(res.newton_steps, steps);
      if (prec < 1) fail(Errc::VerificationFailed, "lifted element is not idempotent modulo p");
      const Scalar t = X.trace();
      std::optional<unsigned> r;
      for (unsigned c = 0; c <= dv; ++c) {
        const Scalar diff = t - K.from_int(static_cast<long>(c));
        if (diff.is_zero() || valuation(diff, p) >= prec) r = c;
      }
      if (!r) fail(Errc::VerificationFailed, "trace of the lifted idempotent is not an integer modulo p");
      row.push_back(*r);
    }
    res.e_matrix.push_back(row);
  }
  const auto& d = D.matrix.entries;
  res.holds = res.e_matrix.size() == D.matrix.cols.size();
  for (std::size_t j = 0; res.holds && j < res.e_matrix.size(); ++j)
    for (std::size_t v = 0; v < d.size(); ++v)
      if (res.e_matrix[j][v] != d[v][j]) res.holds = false;
  return res;
}

namespace {

void add_primes(std::set<std::uint64_t>& out, const Scalar& x) {
  for (auto q : denominator_primes(x)) out.insert(q);
}

}  // namespace

CriteriaReport trivial_column_criteria(const FrobeniusData& fd, const std::vector<AdaptedPim>& pims, const SimpleCatalog& cat,
                                       std::optional<std::vector<std::size_t>> generators) {
  CriteriaReport rep;
  rep.generators = generators ? *generators : fd.algebra->generators();
  std::set<std::uint64_t> dual_primes;
  for (const auto& x : fd.dual.dual.entries()) add_primes(dual_primes, x);
  for (const auto& P : pims) {
    PimCriteria pc;
    pc.simple = P.pim.simple;
    pc.label = cat.labels[P.pim.simple];
    pc.c_folded = P.m == 0;
    std::set<std::uint64_t> I = dual_primes, J = dual_primes;
    for (std::size_t i = 0; i < P.d; ++i)
      for (const auto& a : etilde_coefficients(P, i)) add_primes(I, a);
    for (auto g : rep.generators) {
      if (g >= fd.algebra->dim()) fail(Errc::InvalidInput, "generator index out of range");
      for (const auto& x : P.adapted.action(g).entries()) add_primes(J, x);
    }
    add_primes(J, P.c.inv());
    pc.excluded_I.assign(I.begin(), I.end());
    pc.excluded_J.assign(J.begin(), J.end());
    rep.pims.push_back(std::move(pc));
  }
  return rep;
}

std::vector<ColumnCheck> check_columns(const FrobeniusData& fd, const std::vector<AdaptedPim>& pims, const Decomposition& D,
                                       const CriteriaReport& crit) {
  const Algebra& A = *fd.algebra;
  const PrimeSpec& p = D.matrix.prime;
  const Field k = D.residue.algebra->field();
  const Poly f = lift_polynomial(std::max(1u, D.source.nilpotency)).over(A.field());
  std::vector<ColumnCheck> out;
  for (std::size_t idx = 0; idx < pims.size(); ++idx) {
    const AdaptedPim& P = pims[idx];
    ColumnCheck cc;
    cc.pim = idx;
    cc.prime = p;
    const auto& pc = crit.pims[idx];
    cc.excluded_I = std::binary_search(pc.excluded_I.begin(), pc.excluded_I.end(), p.ell);
    cc.excluded_J = std::binary_search(pc.excluded_J.begin(), pc.excluded_J.end(), p.ell);
    Vec et = zero_vec(A.field(), A.dim());
    const Vec a = etilde_coefficients(P, 0);
    for (std::size_t w = 0; w < A.dim(); ++w)
      if (!a[w].is_zero()) et = vec_add(et, vec_scale(fd.dual.vector(w), a[w]));
    const Vec e = eval_in_algebra(A, f, et);
    bool integral = true;
    for (const auto& x : e)
      if (valuation(x, p) < 0) integral = false;
    if (!integral) {
      cc.note = "idempotent not integral at " + p.describe();
      out.push_back(cc);
      continue;
    }
    Vec ebar;
    for (const auto& x : e) ebar.push_back(reduce_mod(x, p, k));
    std::vector<std::size_t> hits;
    for (std::size_t j = 0; j < D.residue.catalog.size(); ++j)
      if (!D.residue.catalog.simples[j].act(ebar).is_zero()) hits.push_back(j);
    if (hits.size() != 1) {
      cc.note = "reduced idempotent is not primitive (" + std::to_string(hits.size()) + " heads)";
      out.push_back(cc);
      continue;
    }
    cc.column = hits[0];
    cc.trivial = true;
    for (std::size_t v = 0; v < D.matrix.entries.size(); ++v)
      if (D.matrix.entries[v][hits[0]] != (v == P.pim.simple ? 1u : 0u)) cc.trivial = false;
    out.push_back(cc);
  }
  return out;
}

JamesResult james_check(const std::string& coxeter_type, unsigned e, std::uint64_t ell, const std::vector<std::uint64_t>& factor,
                        std::uint64_t seed) {
  const CoxeterGroup G = coxeter_group(coxeter_type);
  const Field K = Field::cyclotomic(e);
  const HeckeAlgebra H = build_hecke(G, K.generator(), "hecke-" + coxeter_type + "-root" + std::to_string(e));
  const PrimeSpec p = make_prime_spec(K, ell, factor);
  JamesResult r;
  r.group_order = G.order();
  r.coprime = G.order() % ell != 0;
  r.decomposition = decompose(analyze(H.algebra, seed), p, 0, seed);
  const auto& M = r.decomposition.matrix.entries;
  const std::size_t rows = M.size(), cols = r.decomposition.matrix.cols.size();
  r.is_permutation = rows == cols;
  std::vector<unsigned> colsum(cols, 0);
  for (std::size_t i = 0; r.is_permutation && i < rows; ++i) {
    std::optional<std::size_t> hit;
    for (std::size_t j = 0; j < cols; ++j) {
      if (M[i][j] > 1 || (M[i][j] == 1 && hit)) r.is_permutation = false;
      if (M[i][j] == 1) hit = j;
      colsum[j] += M[i][j];
    }
    if (!hit) r.is_permutation = false;
    if (hit) r.permutation.push_back(*hit);
  }
  for (auto c : colsum)
    if (c != 1) r.is_permutation = false;
  if (!r.is_permutation) r.permutation.clear();
  return r;
}

std::string render_table(const DecompositionMatrix& d) {
  std::size_t w0 = 0, w = 1;
  for (const auto& r : d.rows) w0 = std::max(w0, r.size());
  for (const auto& c : d.cols) w = std::max(w, c.size());
  for (const auto& row : d.entries)
    for (auto x : row) w = std::max(w, std::to_string(x).size());
  auto pad = [](const std::string& s, std::size_t width) { return std::string(width - s.size(), ' ') + s; };
  std::ostringstream out;
  out << "decomposition matrix at " << d.prime.describe() << " (residue field " << d.residue_field << ")\n";
  out << std::string(w0, ' ');
  for (const auto& c : d.cols) out << "  " << pad(c, w);
  out << "\n";
  for (std::size_t i = 0; i < d.rows.size(); ++i) {
    out << pad(d.rows[i], w0);
    for (auto x : d.entries[i]) out << "  " << pad(std::to_string(x), w);
    out << "\n";
  }
  return out.str();
}

}  // namespace frobenia
