#include "frobenia/io.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

namespace frobenia {

namespace {

template <class F>
auto guarded(const std::string& what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(Errc::InvalidInput, what + ": " + e.what());
  }
}

void require(bool ok, const std::string& msg) {
  if (!ok) fail(Errc::InvalidInput, msg);
}

}  // namespace

Json field_to_json(const Field& f) {
  Json j;
  switch (f.kind()) {
    case FieldKind::Rationals:
      j["kind"] = "rationals";
      break;
    case FieldKind::PrimeField:
      j["kind"] = "prime";
      j["p"] = f.p();
      break;
    case FieldKind::ExtField:
      j["kind"] = "extension";
      j["p"] = f.p();
      j["modulus"] = f.modulus();
      break;
    case FieldKind::Cyclotomic: {
      j["kind"] = "cyclotomic";
      j["e"] = f.root_order();
      Json mp = Json::array();
      for (const auto& c : f.min_poly()) mp.push_back(c.get_str());
      j["min_poly"] = mp;
      break;
    }
  }
  return j;
}

Field field_from_json(const Json& j) {
  return guarded("field", [&] {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "rationals") return Field::rationals();
    if (kind == "prime") return Field::prime(j.at("p").get<std::uint64_t>());
    if (kind == "extension") return Field::extension(j.at("p").get<std::uint64_t>(), j.at("modulus").get<std::vector<std::uint64_t>>());
    if (kind == "cyclotomic") {
      const unsigned e = j.at("e").get<unsigned>();
      if (!j.contains("min_poly")) return Field::cyclotomic(e);
      std::vector<mpq_class> mp;
      for (const auto& c : j.at("min_poly")) {
        mpq_class q(c.get<std::string>());
        q.canonicalize();
        mp.push_back(q);
      }
      return Field::cyclotomic(e, mp);
    }
    fail(Errc::InvalidInput, "unknown field kind " + kind);
  });
}

Json vec_to_json(const Vec& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(x.to_string());
  return j;
}

Vec vec_from_json(const Field& f, const Json& j) {
  return guarded("vector", [&] {
    require(j.is_array(), "vector must be an array of scalar strings");
    Vec v;
    for (const auto& x : j) v.push_back(f.parse(x.is_string() ? x.get<std::string>() : x.dump()));
    return v;
  });
}

Json mat_to_json(const Mat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vec_to_json(m.row(i)));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

Mat mat_from_json(const Field& f, const Json& j) {
  return guarded("matrix", [&] {
    const std::size_t r = j.at("rows").get<std::size_t>(), c = j.at("cols").get<std::size_t>();
    const Json& e = j.at("entries");
    require(e.is_array() && e.size() == r, "matrix has the wrong number of rows");
    std::vector<Vec> rows;
    for (const auto& row : e) {
      Vec v = vec_from_json(f, row);
      require(v.size() == c, "matrix row has the wrong length");
      rows.push_back(std::move(v));
    }
    return r == 0 ? Mat(f, 0, c) : Mat::from_rows(f, rows, c);
  });
}

Json algebra_to_json(const Algebra& A) {
  Json st = Json::array();
  for (const auto& e : A.structure()) st.push_back(Json::array({e.i, e.j, e.k, e.coeff.to_string()}));
  Json j;
  j["name"] = A.name();
  j["field"] = field_to_json(A.field());
  j["dim"] = A.dim();
  j["basis_labels"] = A.labels();
  j["unit"] = vec_to_json(A.unit());
  j["tau"] = vec_to_json(A.tau());
  j["structure"] = st;
  return j;
}

AlgebraPtr algebra_from_json(const Json& j) {
  return guarded("algebra", [&] {
    const Field f = field_from_json(j.at("field"));
    const std::size_t n = j.at("dim").get<std::size_t>();
    std::vector<std::string> labels;
    if (j.contains("basis_labels"))
      labels = j.at("basis_labels").get<std::vector<std::string>>();
    else
      for (std::size_t i = 0; i < n; ++i) labels.push_back("B" + std::to_string(i + 1));
    require(labels.size() == n, "basis_labels must have dim entries");
    std::vector<StructureEntry> st;
    for (const auto& e : j.at("structure")) {
      require(e.is_array() && e.size() == 4, "structure entries are [i, j, k, scalar]");
      const std::size_t a = e[0].get<std::size_t>(), b = e[1].get<std::size_t>(), c = e[2].get<std::size_t>();
      require(a < n && b < n && c < n, "structure index out of range");
      st.push_back({a, b, c, f.parse(e[3].is_string() ? e[3].get<std::string>() : e[3].dump())});
    }
    Vec unit = vec_from_json(f, j.at("unit")), tau = vec_from_json(f, j.at("tau"));
    require(unit.size() == n && tau.size() == n, "unit and tau must have dim entries");
    return std::make_shared<const Algebra>(j.value("name", std::string("algebra")), f, labels, st, unit, tau);
  });
}

Json module_to_json(const RightModule& M) {
  Json act = Json::array();
  for (const auto& R : M.actions()) act.push_back(mat_to_json(R));
  return Json{{"algebra", M.algebra().name()}, {"dim", M.dim()}, {"action", act}};
}

RightModule module_from_json(const AlgebraPtr& A, const Json& j) {
  return guarded("module", [&] {
    if (j.contains("algebra") && j.at("algebra").get<std::string>() != A->name())
      fail(Errc::AlgebraMismatch, "module is over " + j.at("algebra").get<std::string>() + ", not " + A->name());
    const std::size_t d = j.at("dim").get<std::size_t>();
    const Json& act = j.at("action");
    require(act.is_array() && act.size() == A->dim(), "module needs one action matrix per basis element");
    std::vector<Mat> mats;
    for (const auto& m : act) {
      Mat R = mat_from_json(A->field(), m);
      require(R.rows() == d && R.cols() == d, "action matrices must be dim x dim");
      mats.push_back(std::move(R));
    }
    return RightModule(A, std::move(mats), true);
  });
}

Json adapted_pim_to_json(const AdaptedPim& P) {
  Json j = module_to_json(P.adapted);
  j["d"] = P.d;
  j["m"] = P.m;
  j["basis_change"] = mat_to_json(P.basis_change);
  j["c"] = P.c.to_string();
  return j;
}

Json prime_to_json(const PrimeSpec& p) {
  Json j{{"ell", p.ell}};
  j["residue_factor"] = p.residue_factor;
  j["ramified"] = p.ramified;
  return j;
}

Json decomposition_to_json(const DecompositionMatrix& d) {
  Json j;
  j["rows"] = d.rows;
  j["cols"] = d.cols;
  j["matrix"] = d.entries;
  j["prime"] = prime_to_json(d.prime);
  j["residue_field"] = d.residue_field;
  return j;
}

std::string format_element(const Algebra& A, const Vec& x) {
  const Field& f = A.field();
  const bool plain = f.kind() == FieldKind::Rationals || f.kind() == FieldKind::PrimeField;
  std::optional<std::size_t> unit_index;
  for (std::size_t w = 0; w < A.dim(); ++w)
    if (A.unit() == A.basis_vec(w)) unit_index = w;
  std::string out;
  for (std::size_t w = 0; w < x.size(); ++w) {
    if (x[w].is_zero()) continue;
    std::string c = x[w].to_string();
    bool neg = false;
    if (plain && c[0] == '-') {
      neg = true;
      c = c.substr(1);
    }
    if (!plain) c = "(" + c + ")";
    std::string term;
    if (unit_index == w)
      term = c;
    else if (c == "1")
      term = A.labels()[w];
    else
      term = c + "*" + A.labels()[w];
    if (out.empty())
      out = (neg ? "-" : "") + term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::InvalidInput, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json read_json_file(const std::string& path) {
  const std::string text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    fail(Errc::InvalidInput, path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::InvalidInput, "cannot write " + path);
  out << text;
  if (!out) fail(Errc::InvalidInput, "write to " + path + " failed");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag) {
  if (const char* env = std::getenv("FROBENIA_SEED"); env && *env) {
    try {
      std::size_t pos = 0;
      const auto v = std::stoull(env, &pos);
      if (pos == std::string(env).size()) return v;
    } catch (...) {
    }
    fail(Errc::InvalidInput, std::string("FROBENIA_SEED is not an unsigned integer: ") + env);
  }
  return flag.value_or(1);
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) fail(Errc::VerificationFailed, "SHA-256 failed");
  std::ostringstream s;
  for (unsigned i = 0; i < len; ++i) s << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return s.str();
}

}  // namespace frobenia
