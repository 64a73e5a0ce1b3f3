#include "frobenia/cli.hpp"

#include <chrono>
#include <exception>
#include <filesystem>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "frobenia/examples.hpp"
#include "frobenia/hecke.hpp"
#include "frobenia/io.hpp"

namespace frobenia {

namespace {

constexpr const char* kVersion = "0.1.0";

int exit_code(Errc c) {
  switch (c) {
    case Errc::VerificationFailed:
    case Errc::NoIntertwiner:
    case Errc::NotEndomorphism:
    case Errc::SplittingFailure:
    case Errc::NotSplit:
    case Errc::FactorizationIncomplete:
    case Errc::PrecisionExhausted:
    case Errc::Singular:
      return 1;
    default:
      return 2;
  }
}

// Runs f(0..n-1) on up to `jobs` threads; results and the first exception
// come back in index order.
template <class T>
std::vector<T> parallel_map(std::size_t n, unsigned jobs, const std::function<T(std::size_t)>& f) {
  std::vector<std::optional<T>> res(n);
  std::vector<std::exception_ptr> errs(n);
  auto work = [&](std::size_t start, std::size_t step) {
    for (std::size_t i = start; i < n; i += step) {
      try {
        res[i] = f(i);
      } catch (...) {
        errs[i] = std::current_exception();
      }
    }
  };
  const std::size_t t = std::max<std::size_t>(1, std::min<std::size_t>(jobs, n));
  if (t <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t k = 0; k < t; ++k) pool.emplace_back(work, k, t);
    for (auto& th : pool) th.join();
  }
  std::vector<T> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (errs[i]) std::rethrow_exception(errs[i]);
    out.push_back(std::move(*res[i]));
  }
  return out;
}

struct Options {
  std::optional<std::uint64_t> seed;
  unsigned jobs = 1;
  bool table = false;
  bool timing = false;
  std::string input;
  std::string prime;
  bool full = false;
  std::optional<std::size_t> sample;
  std::string module_file, simple_label;
  std::vector<std::size_t> generators;
  std::uint64_t check_up_to = 0;
  std::size_t lattice_seed = 0;
  std::string type, coxeter_matrix, param = "one", name;
  unsigned e = 0;
  std::uint64_t ell = 0;
  std::optional<std::uint64_t> root;
  std::string dir;
};

// Lazily computed pipeline state for one input algebra.
class Session {
 public:
  Session(AlgebraPtr A, std::uint64_t seed, unsigned jobs) : A_(std::move(A)), seed_(seed), jobs_(jobs) {}

  const AlgebraPtr& algebra() const { return A_; }
  const FrobeniusData& fd() {
    if (!fd_) fd_ = frobenius_data(A_);
    return *fd_;
  }
  const AlgebraAnalysis& analysis() {
    if (!an_) an_ = analyze(A_, seed_);
    return *an_;
  }
  const std::vector<Pim>& pims() {
    if (!pims_) pims_ = extract_pims(analysis());
    return *pims_;
  }
  const std::vector<AdaptedPim>& adapted() {
    if (!adapted_) {
      const auto& fdat = fd();
      const auto& an = analysis();
      const auto& ps = pims();
      adapted_ = parallel_map<AdaptedPim>(ps.size(), jobs_, [&](std::size_t k) { return adapt_basis(fdat, an, ps[k]); });
    }
    return *adapted_;
  }
  const std::string& label(std::size_t simple) { return analysis().catalog.labels[simple]; }

 private:
  AlgebraPtr A_;
  std::uint64_t seed_;
  unsigned jobs_;
  std::optional<FrobeniusData> fd_;
  std::optional<AlgebraAnalysis> an_;
  std::optional<std::vector<Pim>> pims_;
  std::optional<std::vector<AdaptedPim>> adapted_;
};

struct Output {
  Json json;
  std::string table;  // used with --table when non-empty
  bool failed = false;
};

Json quad_json(const Quad& q) { return Json::array({q[0], q[1], q[2], q[3]}); }

std::vector<std::uint64_t> small_primes(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q <= bound; ++q) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= q; ++d)
      if (q % d == 0) prime = false;
    if (prime) out.push_back(q);
  }
  return out;
}

PrimeSpec prime_for(const Field& K, const std::string& text) {
  if (text.empty()) fail(Errc::InvalidInput, "--prime is required");
  auto [ell, factor] = parse_prime_option(text);
  return make_prime_spec(K, ell, factor);
}

Output cmd_check(Session& s) {
  const Algebra& A = *s.algebra();
  const FrobeniusCheck c = check_frobenius(A);
  Output o;
  o.json = Json{{"algebra", A.name()}, {"field", A.field().describe()}, {"dim", A.dim()},
                {"is_frobenius", c.is_frobenius}, {"is_symmetric", c.is_symmetric}, {"gram_rank", c.gram_rank}};
  std::ostringstream t;
  t << A.name() << " over " << A.field().describe() << ", dim " << A.dim() << "\n"
    << "frobenius " << (c.is_frobenius ? "yes" : "no") << ", symmetric " << (c.is_symmetric ? "yes" : "no") << ", gram rank "
    << c.gram_rank << "\n";
  o.table = t.str();
  return o;
}

Output cmd_dual_basis(Session& s) {
  const Algebra& A = *s.algebra();
  const DualBasis& D = s.fd().dual;
  Output o;
  Json duals = Json::array();
  std::ostringstream t;
  for (std::size_t w = 0; w < A.dim(); ++w) {
    duals.push_back(Json{{"label", A.labels()[w]}, {"dual", vec_to_json(D.vector(w))}, {"text", format_element(A, D.vector(w))}});
    t << A.labels()[w] << "^vee = " << format_element(A, D.vector(w)) << "\n";
  }
  o.json = Json{{"algebra", A.name()}, {"gram", mat_to_json(D.gram)}, {"dual_basis", duals}};
  o.table = t.str();
  return o;
}

Output cmd_nakayama(Session& s) {
  const Algebra& A = *s.algebra();
  const Nakayama& N = s.fd().alpha;
  Output o;
  Json images = Json::array();
  std::ostringstream t;
  for (std::size_t w = 0; w < A.dim(); ++w) {
    const Vec img = N.alpha.row(w);
    images.push_back(Json{{"label", A.labels()[w]}, {"image", vec_to_json(img)}, {"text", format_element(A, img)}});
    t << "alpha(" << A.labels()[w] << ") = " << format_element(A, img) << "\n";
  }
  const bool id = N.alpha == Mat::identity(A.field(), A.dim());
  o.json = Json{{"algebra", A.name()}, {"alpha", mat_to_json(N.alpha)}, {"images", images}, {"is_identity", id}};
  o.table = t.str();
  return o;
}

Output cmd_radical(Session& s) {
  const Algebra& A = *s.algebra();
  const AlgebraAnalysis& an = s.analysis();
  Output o;
  Json simples = Json::array();
  for (std::size_t k = 0; k < an.catalog.size(); ++k)
    simples.push_back(Json{{"label", an.catalog.labels[k]}, {"dim", an.catalog.simples[k].dim()}});
  Json basis = Json::array();
  std::ostringstream t;
  t << "rad(" << A.name() << "): dim " << an.radical.rows() << ", nilpotency index " << an.nilpotency << "\n";
  for (std::size_t r = 0; r < an.radical.rows(); ++r) {
    basis.push_back(format_element(A, an.radical.row(r)));
    t << "  " << format_element(A, an.radical.row(r)) << "\n";
  }
  o.json = Json{{"algebra", A.name()},           {"dim", an.radical.rows()}, {"radical", mat_to_json(an.radical)},
                {"radical_text", basis},         {"nilpotency", an.nilpotency}, {"semisimple", an.radical.rows() == 0},
                {"simples", simples}};
  o.table = t.str();
  return o;
}

Output cmd_pims(Session& s) {
  const Algebra& A = *s.algebra();
  const auto& an = s.analysis();
  Output o;
  Json list = Json::array();
  std::ostringstream t;
  for (const auto& P : s.pims()) {
    list.push_back(Json{{"simple", s.label(P.simple)},
                        {"simple_dim", an.catalog.simples[P.simple].dim()},
                        {"dim", P.module.dim()},
                        {"idempotent", vec_to_json(P.idempotent)},
                        {"idempotent_text", format_element(A, P.idempotent)},
                        {"embedding", mat_to_json(P.embedding)}});
    t << "P(" << s.label(P.simple) << "): dim " << P.module.dim() << ", e = " << format_element(A, P.idempotent) << "\n";
  }
  o.json = Json{{"algebra", A.name()}, {"nilpotency", an.nilpotency}, {"pims", list}};
  o.table = t.str();
  return o;
}

Output cmd_adapt(Session& s) {
  Output o;
  Json list = Json::array();
  std::ostringstream t;
  for (const auto& P : s.adapted()) {
    Json j = adapted_pim_to_json(P);
    j["simple"] = s.label(P.pim.simple);
    j["socle"] = s.label(P.socle_simple);
    j["socle_iso_head"] = P.socle_iso_head;
    list.push_back(j);
    t << "P(" << s.label(P.pim.simple) << "): n " << P.n << ", d " << P.d << ", m " << P.m << ", socle " << s.label(P.socle_simple)
      << ", c " << P.c.to_string() << "\n";
  }
  o.json = Json{{"algebra", s.algebra()->name()}, {"pims", list}};
  o.table = t.str();
  return o;
}

std::optional<bool> mode_of(const Options& opt) {
  if (opt.full) return true;
  if (opt.sample) return false;
  return std::nullopt;
}

Output cmd_c_tensor(Session& s, const Options& opt, std::uint64_t seed) {
  const auto& ad = s.adapted();
  const auto tensors = parallel_map<CTensor>(ad.size(), opt.jobs, [&](std::size_t k) {
    CTensor T = c_tensor(ad[k], mode_of(opt), opt.sample.value_or(200), seed);
    for (const auto& q : T.coverage) T.get(q);
    return T;
  });
  Output o;
  Json list = Json::array();
  std::ostringstream t;
  for (std::size_t k = 0; k < ad.size(); ++k) {
    const CTensor& T = tensors[k];
    Json vals = Json::array();
    for (const auto& q : T.coverage) {
      const Scalar& v = T.get(q);
      if (!v.is_zero()) vals.push_back(Json::array({q[0], q[1], q[2], q[3], v.to_string()}));
    }
    list.push_back(Json{{"simple", s.label(ad[k].pim.simple)}, {"n", ad[k].n}, {"d", ad[k].d}, {"m", ad[k].m},
                        {"full", T.full}, {"quadruples", T.coverage.size()}, {"nonzero", vals}});
    t << "P(" << s.label(ad[k].pim.simple) << "): " << (T.full ? "full" : "sampled") << ", " << T.coverage.size() << " quadruples, "
      << vals.size() << " nonzero\n";
  }
  o.json = Json{{"algebra", s.algebra()->name()}, {"index_base", 0}, {"pims", list}};
  o.table = t.str();
  return o;
}

Output cmd_fs_verify(Session& s, const Options& opt, std::uint64_t seed) {
  const auto& ad = s.adapted();
  const auto reports = parallel_map<FsReport>(ad.size(), opt.jobs, [&](std::size_t k) {
    const CTensor T = c_tensor(ad[k], mode_of(opt), opt.sample.value_or(200), seed);
    return verify_fs_relations(T);
  });
  Output o;
  Json list = Json::array();
  std::ostringstream t;
  for (std::size_t k = 0; k < ad.size(); ++k) {
    const FsReport& R = reports[k];
    Json rels = Json::array();
    for (const auto& r : R.relations) {
      Json jr{{"name", r.name}, {"applicable", r.applicable}, {"checked", r.checked}, {"pass", r.pass()}};
      jr["counterexample"] = r.counterexample ? quad_json(*r.counterexample) : Json(nullptr);
      rels.push_back(jr);
    }
    list.push_back(Json{{"simple", s.label(ad[k].pim.simple)}, {"c", R.c.to_string()}, {"socle_iso_head", R.socle_iso_head},
                        {"full", R.full}, {"quadruples", R.quadruples}, {"pass", R.pass()}, {"relations", rels}});
    t << "P(" << s.label(ad[k].pim.simple) << "): " << (R.pass() ? "pass" : "FAIL") << " (" << R.quadruples << " quadruples, "
      << (R.full ? "full" : "sampled") << ")\n";
    for (const auto& r : R.relations)
      t << "  " << r.name << " " << (!r.applicable ? "n/a" : r.pass() ? "pass" : "FAIL") << " " << r.checked << "\n";
    if (!R.pass()) o.failed = true;
  }
  o.json = Json{{"algebra", s.algebra()->name()}, {"pass", !o.failed}, {"index_base", 0}, {"pims", list}};
  o.table = t.str();
  return o;
}

Output cmd_idempotents(Session& s, const Options& opt) {
  const Algebra& A = *s.algebra();
  const auto& ad = s.adapted();
  const auto& fdat = s.fd();
  const auto& an = s.analysis();
  const auto reports = parallel_map<std::vector<IdempotentReport>>(
      ad.size(), opt.jobs, [&](std::size_t k) { return make_idempotents(fdat, an, ad[k], false); });
  Output o;
  Json list = Json::array();
  std::ostringstream t;
  for (std::size_t k = 0; k < ad.size(); ++k) {
    Json items = Json::array();
    for (const auto& r : reports[k]) {
      Json checks{{"square", r.square},     {"iso", r.iso},
                  {"pairwise_rad", r.pairwise_rad}, {"E_square", r.E_square},
                  {"E_head", r.E_head},     {"head_projection", r.head_projection},
                  {"annihilates_others", r.annihilates_others}};
      items.push_back(Json{{"i", r.i + 1},
                           {"etilde", vec_to_json(r.etilde)},
                           {"etilde_text", format_element(A, r.etilde)},
                           {"e", vec_to_json(r.e)},
                           {"e_text", format_element(A, r.e)},
                           {"Etilde", vec_to_json(r.Etilde)},
                           {"Etilde_text", format_element(A, r.Etilde)},
                           {"E", vec_to_json(r.E)},
                           {"E_text", format_element(A, r.E)},
                           {"checks", checks},
                           {"ok", r.ok()}});
      t << "P(" << s.label(ad[k].pim.simple) << ") e" << r.i + 1 << " = " << format_element(A, r.e) << "  ["
        << (r.ok() ? "ok" : "FAIL") << "]\n";
      if (!r.ok()) o.failed = true;
    }
    list.push_back(Json{{"simple", s.label(ad[k].pim.simple)}, {"c", ad[k].c.to_string()}, {"idempotents", items}});
  }
  o.json = Json{{"algebra", A.name()}, {"pass", !o.failed}, {"pims", list}};
  o.table = t.str();
  return o;
}

Output cmd_gaschutz(Session& s, const Options& opt) {
  const auto& fdat = s.fd();
  struct Target {
    std::string name;
    RightModule module;
    bool must_be_projective;
  };
  std::vector<Target> targets;
  if (!opt.module_file.empty()) {
    targets.push_back({opt.module_file, module_from_json(s.algebra(), read_json_file(opt.module_file)), false});
  } else if (!opt.simple_label.empty()) {
    const auto& cat = s.analysis().catalog;
    std::optional<std::size_t> k;
    for (std::size_t i = 0; i < cat.size(); ++i)
      if (cat.labels[i] == opt.simple_label) k = i;
    if (!k) fail(Errc::InvalidInput, "no simple module labelled " + opt.simple_label);
    targets.push_back({"simple " + opt.simple_label, cat.simples[*k], false});
  } else {
    targets.push_back({"regular", regular_module(s.algebra()), true});
    for (const auto& P : s.pims()) targets.push_back({"P(" + s.label(P.simple) + ")", P.module, true});
  }
  Output o;
  Json list = Json::array();
  std::ostringstream t;
  for (const auto& tg : targets) {
    const auto psi = gaschutz_certificate(fdat, tg.module);
    Json j{{"module", tg.name}, {"dim", tg.module.dim()}, {"projective", psi.has_value()}};
    j["psi"] = psi ? mat_to_json(*psi) : Json(nullptr);
    list.push_back(j);
    t << tg.name << ": " << (psi ? "certificate found (projective)" : "no certificate (not projective)") << "\n";
    if (tg.must_be_projective && !psi) o.failed = true;
  }
  o.json = Json{{"algebra", s.algebra()->name()}, {"modules", list}};
  o.table = t.str();
  return o;
}

Json excluded_json(const CriteriaReport& crit) {
  Json j = Json::object();
  for (const auto& pc : crit.pims) j[pc.label] = Json{{"I", pc.excluded_I}, {"J", pc.excluded_J}, {"c_folded", pc.c_folded}};
  return j;
}

Output cmd_decomp(Session& s, const Options& opt, std::uint64_t seed) {
  const PrimeSpec p = prime_for(s.algebra()->field(), opt.prime);
  const Decomposition D = decompose(s.analysis(), p, opt.lattice_seed, seed);
  Output o;
  o.json = decomposition_to_json(D.matrix);
  o.json["algebra"] = s.algebra()->name();
  if (check_frobenius(*s.algebra()).is_frobenius) {
    const CriteriaReport crit = trivial_column_criteria(s.fd(), s.adapted(), s.analysis().catalog);
    o.json["excluded_primes"] = excluded_json(crit);
  }
  o.table = render_table(D.matrix);
  return o;
}

Json int_matrix(const std::vector<std::vector<unsigned>>& m) {
  Json j = Json::array();
  for (const auto& r : m) j.push_back(r);
  return j;
}

Output cmd_reciprocity(Session& s, const Options& opt, std::uint64_t seed) {
  const PrimeSpec p = prime_for(s.algebra()->field(), opt.prime);
  const Decomposition D = decompose(s.analysis(), p, opt.lattice_seed, seed);
  const ReciprocityResult R = reciprocity_check(D, seed);
  std::vector<std::vector<unsigned>> dt(D.matrix.cols.size(), std::vector<unsigned>(D.matrix.rows.size()));
  for (std::size_t i = 0; i < D.matrix.rows.size(); ++i)
    for (std::size_t j = 0; j < D.matrix.cols.size(); ++j) dt[j][i] = D.matrix.entries[i][j];
  Output o;
  o.json = Json{{"algebra", s.algebra()->name()},
                {"decomposition", decomposition_to_json(D.matrix)},
                {"e_matrix", int_matrix(R.e_matrix)},
                {"d_transpose", int_matrix(dt)},
                {"holds", R.holds},
                {"lift_iterations", R.newton_steps}};
  o.failed = !R.holds;
  std::ostringstream t;
  t << render_table(D.matrix) << "e_p equals the transpose of d_p: " << (R.holds ? "yes" : "NO") << "\n";
  o.table = t.str();
  return o;
}

Output cmd_criteria(Session& s, const Options& opt, std::uint64_t seed) {
  const Algebra& A = *s.algebra();
  if (A.field().is_finite()) fail(Errc::InvalidInput, "criteria need an algebra over Q or Q(zeta_e)");
  std::optional<std::vector<std::size_t>> gens;
  if (!opt.generators.empty()) gens = opt.generators;
  const CriteriaReport crit = trivial_column_criteria(s.fd(), s.adapted(), s.analysis().catalog, gens);
  Output o;
  Json pims = Json::array();
  std::ostringstream t;
  auto set_text = [](const std::vector<std::uint64_t>& v) {
    std::string r = "{";
    for (std::size_t i = 0; i < v.size(); ++i) r += (i ? "," : "") + std::to_string(v[i]);
    return r + "}";
  };
  for (const auto& pc : crit.pims) {
    pims.push_back(Json{{"simple", pc.label}, {"excluded_I", pc.excluded_I}, {"excluded_J", pc.excluded_J}, {"c_folded", pc.c_folded}});
    t << "P(" << pc.label << "): I " << set_text(pc.excluded_I) << ", J " << set_text(pc.excluded_J) << (pc.c_folded ? " (c folded)" : "")
      << "\n";
  }
  Json gl = Json::array();
  for (auto g : crit.generators) gl.push_back(A.labels()[g]);
  o.json = Json{{"algebra", A.name()}, {"generators", gl}, {"pims", pims}};
  if (opt.check_up_to >= 2) {
    Json checks = Json::array();
    bool sound = true;
    for (auto ell : small_primes(opt.check_up_to)) {
      std::vector<PrimeSpec> ps;
      try {
        ps = primes_above(A.field(), ell);
      } catch (const Error& e) {
        if (e.code() != Errc::UnsupportedPrime) throw;
        checks.push_back(Json{{"ell", ell}, {"skipped", e.what()}});
        continue;
      }
      for (const auto& p : ps) {
        const Decomposition D = decompose(s.analysis(), p, 0, seed);
        for (const auto& cc : check_columns(s.fd(), s.adapted(), D, crit)) {
          const bool bad = (!cc.excluded_I || !cc.excluded_J) && !cc.trivial;
          if (bad) sound = false;
          Json jc{{"prime", prime_to_json(p)},      {"simple", crit.pims[cc.pim].label}, {"excluded_I", cc.excluded_I},
                  {"excluded_J", cc.excluded_J},    {"trivial", cc.trivial}};
          jc["column"] = cc.column ? Json(D.matrix.cols[*cc.column]) : Json(nullptr);
          if (!cc.note.empty()) jc["note"] = cc.note;
          checks.push_back(jc);
        }
      }
    }
    o.json["column_checks"] = checks;
    o.json["sound"] = sound;
    o.failed = !sound;
    t << "column checks up to " << opt.check_up_to << ": " << (sound ? "sound" : "VIOLATION") << "\n";
  }
  o.table = t.str();
  return o;
}

CoxeterGroup group_from_options(const Options& opt) {
  if (!opt.coxeter_matrix.empty()) {
    const std::string text = opt.coxeter_matrix.front() == '[' ? opt.coxeter_matrix : read_text_file(opt.coxeter_matrix);
    CoxeterMatrix m;
    try {
      m = Json::parse(text).get<CoxeterMatrix>();
    } catch (const std::exception& e) {
      fail(Errc::InvalidMatrix, std::string("Coxeter matrix: ") + e.what());
    }
    return build_coxeter(m);
  }
  if (opt.type.empty()) fail(Errc::InvalidInput, "--type or --coxeter-matrix is required");
  return coxeter_group(opt.type);
}

Output cmd_hecke(const Options& opt) {
  const CoxeterGroup G = group_from_options(opt);
  const HeckeParam hp = parse_hecke_param(opt.param);
  std::string name = opt.name;
  if (name.empty()) name = "hecke-" + (opt.type.empty() ? std::string("custom") : opt.type) + "-" + hp.text;
  const HeckeAlgebra H = build_hecke(G, hp.v, name);
  Output o;
  o.json = algebra_to_json(*H.algebra);
  std::ostringstream t;
  t << name << ": |W| = " << G.order() << ", v = " << hp.v.to_string() << " over " << hp.field.describe() << "\n";
  o.table = t.str();
  return o;
}

Output cmd_james(const Options& opt, std::uint64_t seed) {
  const std::string type = opt.type.empty() ? "A2" : opt.type;
  if (opt.e == 0 || opt.ell == 0) fail(Errc::InvalidInput, "--e and --ell are required");
  std::vector<std::uint64_t> factor;
  if (opt.root) factor = {(opt.ell - (*opt.root % opt.ell)) % opt.ell, 1};
  const JamesResult r = james_check(type, opt.e, opt.ell, factor, seed);
  Output o;
  o.json = Json{{"type", type},
                {"e", opt.e},
                {"ell", opt.ell},
                {"group_order", r.group_order},
                {"decomposition", decomposition_to_json(r.decomposition.matrix)},
                {"is_identity", r.is_permutation},
                {"permutation", r.permutation},
                {"coprime", r.coprime}};
  o.failed = r.coprime && !r.is_permutation;
  std::ostringstream t;
  t << render_table(r.decomposition.matrix) << "permutation matrix: " << (r.is_permutation ? "yes" : "no") << ", ell coprime to |W| = "
    << r.group_order << ": " << (r.coprime ? "yes" : "no") << "\n";
  o.table = t.str();
  return o;
}

Output cmd_examples(const Options& opt) {
  namespace fs = std::filesystem;
  fs::create_directories(opt.dir);
  Json files = Json::array();
  std::ostringstream t;
  for (const auto& name : example_names()) {
    const std::string path = (fs::path(opt.dir) / (name + ".json")).string();
    const std::string text = dump(algebra_to_json(*example_algebra(name)));
    write_text_file(path, text);
    files.push_back(Json{{"file", name + ".json"}, {"sha256", sha256_hex(text)}});
    t << path << "\n";
  }
  Output o;
  o.json = Json{{"directory", opt.dir}, {"files", files}};
  o.table = t.str();
  return o;
}

}  // namespace

std::pair<std::uint64_t, std::vector<std::uint64_t>> parse_prime_option(const std::string& text) {
  const auto comma = text.find(',');
  const std::string ls = text.substr(0, comma);
  std::uint64_t ell = 0;
  try {
    std::size_t pos = 0;
    ell = std::stoull(ls, &pos);
    if (pos != ls.size()) throw std::invalid_argument(ls);
  } catch (...) {
    fail(Errc::InvalidInput, "bad prime " + ls);
  }
  std::vector<std::uint64_t> factor;
  if (comma == std::string::npos) return {ell, factor};
  std::string f;
  for (char ch : text.substr(comma + 1))
    if (!std::isspace(static_cast<unsigned char>(ch))) f += ch;
  if (f.empty()) fail(Errc::InvalidInput, "empty residue factor");
  auto mod = [&](long long v) { return static_cast<std::uint64_t>(((v % static_cast<long long>(ell)) + static_cast<long long>(ell)) % static_cast<long long>(ell)); };
  if (f.front() == '[') {
    try {
      for (auto v : Json::parse(f).get<std::vector<long long>>()) factor.push_back(mod(v));
    } catch (const std::exception& e) {
      fail(Errc::InvalidInput, "bad residue factor " + f);
    }
    return {ell, factor};
  }
  // Sum of terms [+-][c][*]x[^k] or [+-]c.
  std::size_t i = 0;
  std::vector<long long> coeffs;
  while (i < f.size()) {
    long long sign = 1;
    if (f[i] == '+' || f[i] == '-') {
      sign = f[i] == '-' ? -1 : 1;
      ++i;
    }
    long long c = 1;
    bool has_c = false;
    std::size_t j = i;
    while (j < f.size() && std::isdigit(static_cast<unsigned char>(f[j]))) ++j;
    if (j > i) {
      c = std::stoll(f.substr(i, j - i));
      has_c = true;
      i = j;
    }
    std::size_t deg = 0;
    if (i < f.size() && f[i] == '*') ++i;
    if (i < f.size() && f[i] == 'x') {
      deg = 1;
      ++i;
      if (i < f.size() && f[i] == '^') {
        ++i;
        std::size_t k = i;
        while (k < f.size() && std::isdigit(static_cast<unsigned char>(f[k]))) ++k;
        if (k == i) fail(Errc::InvalidInput, "bad exponent in " + f);
        deg = std::stoul(f.substr(i, k - i));
        i = k;
      }
    } else if (!has_c) {
      fail(Errc::InvalidInput, "bad residue factor " + f);
    }
    if (coeffs.size() <= deg) coeffs.resize(deg + 1, 0);
    coeffs[deg] += sign * c;
    if (i < f.size() && f[i] != '+' && f[i] != '-') fail(Errc::InvalidInput, "bad residue factor " + f);
  }
  for (auto c : coeffs) factor.push_back(mod(c));
  return {ell, factor};
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Primitive idempotents and decomposition matrices of split Frobenius algebras", "frobenia"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Options opt;
  app.add_option("--seed", opt.seed, "RNG seed (FROBENIA_SEED overrides)");
  app.add_option("--jobs", opt.jobs, "worker threads across independent PIMs")->check(CLI::PositiveNumber);
  app.add_flag("--table", opt.table, "aligned text instead of JSON");
  app.add_flag("--timing", opt.timing, "record wall time in the manifest");
  app.fallthrough();

  auto algebra_cmd = [&](const std::string& name, const std::string& desc) {
    auto* c = app.add_subcommand(name, desc);
    c->add_option("algebra", opt.input, "algebra JSON file")->required()->check(CLI::ExistingFile);
    return c;
  };
  algebra_cmd("check", "Frobenius and symmetry check");
  algebra_cmd("dual-basis", "dual basis with respect to tau");
  algebra_cmd("nakayama", "Nakayama automorphism");
  algebra_cmd("radical", "Jacobson radical and simple modules");
  algebra_cmd("pims", "projective indecomposable modules");
  algebra_cmd("adapt", "adapted bases of the PIMs");
  for (const char* name : {"c-tensor", "fs-verify"}) {
    auto* c = algebra_cmd(name, std::string(name) == "c-tensor" ? "constants c(i,j,s,t)" : "Frobenius-Schur relations");
    auto* full = c->add_flag("--full", opt.full, "all quadruples");
    c->add_option("--sample", opt.sample, "sampled mode with N quadruples per family")->excludes(full);
  }
  algebra_cmd("idempotents", "primitive idempotents e_i and E_i");
  {
    auto* c = algebra_cmd("gaschutz", "projectivity certificates");
    c->add_option("--module", opt.module_file, "module JSON file")->check(CLI::ExistingFile);
    c->add_option("--simple", opt.simple_label, "simple module label from the catalog");
  }
  for (const char* name : {"decomp", "reciprocity"}) {
    auto* c = algebra_cmd(name, std::string(name) == "decomp" ? "decomposition matrix" : "Brauer reciprocity");
    c->add_option("--prime", opt.prime, "L or L,factor")->required();
    c->add_option("--lattice-seed", opt.lattice_seed, "standard vector spanning the lattice");
  }
  {
    auto* c = algebra_cmd("criteria", "excluded primes for trivial columns");
    c->add_option("--generators", opt.generators, "basis indices (0-based) of a generating set")->delimiter(',');
    c->add_option("--check-up-to", opt.check_up_to, "cross-check decomposition columns for primes up to N");
  }
  {
    auto* c = app.add_subcommand("hecke", "Iwahori-Hecke algebra");
    c->add_option("--type", opt.type, "A1..A6, B2..B4, D4, D5, H3, H4, I2:m");
    c->add_option("--coxeter-matrix", opt.coxeter_matrix, "JSON matrix or file");
    c->add_option("--param", opt.param, "root:e | fp:p,q | fq:p,m0;m1;...,q0;q1;... | one");
    c->add_option("--name", opt.name, "algebra name");
  }
  {
    auto* c = app.add_subcommand("james-check", "decomposition matrix of a Hecke algebra at a root of unity");
    c->add_option("--type", opt.type, "Coxeter type (default A2)");
    c->add_option("--e", opt.e, "order of the root of unity")->required();
    c->add_option("--ell", opt.ell, "rational prime")->required();
    c->add_option("--root", opt.root, "image r of zeta (residue factor x - r)");
  }
  {
    auto* c = app.add_subcommand("examples", "write the bundled example algebras");
    c->add_option("dir", opt.dir, "output directory")->required();
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, r;
    const int code = app.exit(e, o, r);
    out << o.str();
    err << r.str();
    return code == 0 ? 0 : 2;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const std::uint64_t seed = resolve_seed(opt.seed);
    Json inputs = Json::array();
    std::optional<Session> session;
    if (!opt.input.empty()) {
      const std::string text = read_text_file(opt.input);
      inputs.push_back(Json{{"path", opt.input}, {"sha256", sha256_hex(text)}});
      Json j;
      try {
        j = Json::parse(text);
      } catch (const std::exception& e) {
        fail(Errc::InvalidInput, opt.input + ": " + e.what());
      }
      session.emplace(algebra_from_json(j), seed, opt.jobs);
    }
    if (!opt.module_file.empty()) inputs.push_back(Json{{"path", opt.module_file}, {"sha256", sha256_hex(read_text_file(opt.module_file))}});

    Output o;
    if (cmd == "check") o = cmd_check(*session);
    else if (cmd == "dual-basis") o = cmd_dual_basis(*session);
    else if (cmd == "nakayama") o = cmd_nakayama(*session);
    else if (cmd == "radical") o = cmd_radical(*session);
    else if (cmd == "pims") o = cmd_pims(*session);
    else if (cmd == "adapt") o = cmd_adapt(*session);
    else if (cmd == "c-tensor") o = cmd_c_tensor(*session, opt, seed);
    else if (cmd == "fs-verify") o = cmd_fs_verify(*session, opt, seed);
    else if (cmd == "idempotents") o = cmd_idempotents(*session, opt);
    else if (cmd == "gaschutz") o = cmd_gaschutz(*session, opt);
    else if (cmd == "decomp") o = cmd_decomp(*session, opt, seed);
    else if (cmd == "reciprocity") o = cmd_reciprocity(*session, opt, seed);
    else if (cmd == "criteria") o = cmd_criteria(*session, opt, seed);
    else if (cmd == "hecke") o = cmd_hecke(opt);
    else if (cmd == "james-check") o = cmd_james(opt, seed);
    else if (cmd == "examples") o = cmd_examples(opt);

    Json manifest{{"tool", "frobenia"}, {"version", kVersion}, {"command", cmd}, {"seed", seed}, {"inputs", inputs}};
    if (opt.timing)
      manifest["wall_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (opt.table && !o.table.empty()) {
      out << o.table;
      if (opt.timing) out << "wall time " << manifest["wall_ms"].get<double>() << " ms\n";
    } else {
      o.json["manifest"] = manifest;
      out << dump(o.json);
    }
    return o.failed ? 1 : 0;
  } catch (const Error& e) {
    err << dump(Json{{"error", std::string(errc_name(e.code()))}, {"message", e.what()}});
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << dump(Json{{"error", "Internal"}, {"message", e.what()}});
    return 2;
  }
}

}  // namespace frobenia
