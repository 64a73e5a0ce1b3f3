#include "frobenia/hecke.hpp"

#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "frobenia/decomp.hpp"

namespace frobenia {

namespace {

constexpr std::size_t kUndef = static_cast<std::size_t>(-1);

// Coset enumeration (HLT with coincidences) over the trivial subgroup. All
// generators are involutions, so a generator is its own inverse.
class CosetTable {
 public:
  CosetTable(std::size_t gens, std::size_t limit) : r_(gens), limit_(limit) { new_coset(); }

  std::size_t define(std::size_t c, std::size_t g) {
    const std::size_t d = new_coset();
    table_[c][g] = d;
    table_[d][g] = c;
    return d;
  }

  void scan_and_fill(std::size_t c, const std::vector<int>& rel) {
    std::size_t f = c, b = c;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(rel.size()) - 1;
    for (;;) {
      while (i <= j && table_[f][rel[i]] != kUndef) f = table_[f][rel[i++]];
      if (i > j) {
        if (f != c) coincidence(f, c);
        return;
      }
      while (j >= i && table_[b][rel[j]] != kUndef) b = table_[b][rel[j--]];
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        table_[f][rel[i]] = b;
        table_[b][rel[i]] = f;
        return;
      }
      define(f, rel[i]);
      if (!alive(c)) return;
    }
  }

  bool alive(std::size_t c) const { return parent_[c] == c; }
  std::size_t size() const { return table_.size(); }
  std::size_t live() const { return live_; }
  std::size_t at(std::size_t c, std::size_t g) const { return table_[c][g]; }
  std::size_t target(std::size_t c, std::size_t g) { return rep(table_[c][g]); }

 private:
  std::size_t new_coset() {
    if (table_.size() >= limit_) fail(Errc::GroupTooLarge, "coset enumeration exceeded " + std::to_string(limit_) + " cosets");
    table_.emplace_back(r_, kUndef);
    parent_.push_back(table_.size() - 1);
    ++live_;
    return table_.size() - 1;
  }

  std::size_t rep(std::size_t c) {
    std::size_t r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      const std::size_t n = parent_[c];
      parent_[c] = r;
      c = n;
    }
    return r;
  }

  void merge(std::size_t a, std::size_t b, std::deque<std::size_t>& q) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    --live_;
    q.push_back(b);
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::deque<std::size_t> q;
    merge(a, b, q);
    while (!q.empty()) {
      const std::size_t e = q.front();
      q.pop_front();
      for (std::size_t g = 0; g < r_; ++g) {
        const std::size_t f = table_[e][g];
        if (f == kUndef) continue;
        if (table_[f][g] == e) table_[f][g] = kUndef;
        const std::size_t e1 = rep(e), f1 = rep(f);
        if (table_[e1][g] != kUndef)
          merge(f1, table_[e1][g], q);
        else if (table_[f1][g] != kUndef)
          merge(e1, table_[f1][g], q);
        else {
          table_[e1][g] = f1;
          table_[f1][g] = e1;
        }
      }
    }
  }

  std::size_t r_, limit_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> parent_;
  std::size_t live_ = 0;
};

}  // namespace

std::size_t CoxeterGroup::element(const std::vector<int>& word) const {
  std::size_t w = 0;
  for (int s : word) {
    if (s < 0 || static_cast<std::size_t>(s) >= rank()) fail(Errc::InvalidInput, "generator index out of range");
    w = rmul[w][s];
  }
  return w;
}

std::size_t CoxeterGroup::inverse(std::size_t w) const {
  std::vector<int> rev(words[w].rbegin(), words[w].rend());
  return element(rev);
}

std::string CoxeterGroup::label(std::size_t w) const {
  if (words[w].empty()) return "1";
  std::string out;
  for (int s : words[w]) out += "s" + std::to_string(s + 1);
  return out;
}

CoxeterGroup build_coxeter(const CoxeterMatrix& m, const std::string& type, std::size_t cap) {
  const std::size_t r = m.size();
  if (r == 0) fail(Errc::InvalidMatrix, "empty Coxeter matrix");
  for (std::size_t i = 0; i < r; ++i) {
    if (m[i].size() != r) fail(Errc::InvalidMatrix, "Coxeter matrix is not square");
    for (std::size_t j = 0; j < r; ++j) {
      if (m[i][j] != m[j][i]) fail(Errc::InvalidMatrix, "Coxeter matrix is not symmetric");
      if (i == j && m[i][j] != 1) fail(Errc::InvalidMatrix, "Coxeter matrix diagonal must be 1");
      if (i != j && m[i][j] < 2) fail(Errc::InvalidMatrix, "off-diagonal Coxeter entries must be >= 2");
    }
  }
  std::vector<std::vector<int>> rels;
  for (std::size_t s = 0; s < r; ++s)
    for (std::size_t t = s + 1; t < r; ++t) {
      std::vector<int> rel;
      for (int k = 0; k < m[s][t]; ++k) {
        rel.push_back(static_cast<int>(s));
        rel.push_back(static_cast<int>(t));
      }
      rels.push_back(rel);
    }

  CosetTable T(r, std::max<std::size_t>(64 * cap, 100000));
  for (std::size_t c = 0; c < T.size(); ++c) {
    if (!T.alive(c)) continue;
    for (const auto& rel : rels) {
      T.scan_and_fill(c, rel);
      if (!T.alive(c)) break;
    }
    if (!T.alive(c)) continue;
    for (std::size_t g = 0; g < r; ++g)
      if (T.at(c, g) == kUndef) T.define(c, g);
  }
  if (T.live() > cap) fail(Errc::GroupTooLarge, "group has more than " + std::to_string(cap) + " elements");

  // ShortLex order: breadth first from the identity, generators in order
  CoxeterGroup G;
  G.type = type;
  G.matrix = m;
  std::map<std::size_t, std::size_t> index;
  std::vector<std::size_t> cosets{0};
  index[0] = 0;
  G.words.push_back({});
  G.lengths.push_back(0);
  for (std::size_t k = 0; k < cosets.size(); ++k)
    for (std::size_t g = 0; g < r; ++g) {
      const std::size_t d = T.target(cosets[k], g);
      if (index.count(d)) continue;
      index[d] = cosets.size();
      cosets.push_back(d);
      auto w = G.words[k];
      w.push_back(static_cast<int>(g));
      G.words.push_back(w);
      G.lengths.push_back(G.lengths[k] + 1);
    }
  if (cosets.size() != T.live()) fail(Errc::VerificationFailed, "coset table is not connected");
  G.rmul.assign(cosets.size(), std::vector<std::size_t>(r));
  for (std::size_t k = 0; k < cosets.size(); ++k)
    for (std::size_t g = 0; g < r; ++g) G.rmul[k][g] = index.at(T.target(cosets[k], g));

  for (std::size_t w = 0; w < G.order(); ++w)
    for (std::size_t g = 0; g < r; ++g) {
      const long dl = static_cast<long>(G.lengths[G.rmul[w][g]]) - static_cast<long>(G.lengths[w]);
      if (dl != 1 && dl != -1) fail(Errc::VerificationFailed, "length function is inconsistent");
    }
  return G;
}

CoxeterMatrix coxeter_matrix(const std::string& type) {
  auto chain = [](std::size_t n) {
    CoxeterMatrix m(n, std::vector<int>(n, 2));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) m[i][i + 1] = m[i + 1][i] = 3;
    return m;
  };
  if (type.rfind("I2:", 0) == 0) {
    int k = 0;
    try {
      k = std::stoi(type.substr(3));
    } catch (...) {
      fail(Errc::InvalidInput, "bad dihedral type " + type);
    }
    if (k < 2) fail(Errc::InvalidInput, "dihedral order parameter must be >= 2");
    return {{1, k}, {k, 1}};
  }
  if (type.size() < 2) fail(Errc::InvalidInput, "unknown Coxeter type " + type);
  const char family = type[0];
  int n = 0;
  try {
    std::size_t pos = 0;
    n = std::stoi(type.substr(1), &pos);
    if (pos + 1 != type.size()) throw std::invalid_argument(type);
  } catch (...) {
    fail(Errc::InvalidInput, "unknown Coxeter type " + type);
  }
  switch (family) {
    case 'A':
      if (n < 1 || n > 6) break;
      return chain(n);
    case 'B': {
      if (n < 2 || n > 4) break;
      auto m = chain(n);
      m[0][1] = m[1][0] = 4;
      return m;
    }
    case 'D': {
      if (n < 4 || n > 5) break;
      auto m = chain(n);
      m[n - 2][n - 1] = m[n - 1][n - 2] = 2;
      m[n - 3][n - 1] = m[n - 1][n - 3] = 3;
      return m;
    }
    case 'H': {
      if (n != 3 && n != 4) break;
      auto m = chain(n);
      m[0][1] = m[1][0] = 5;
      return m;
    }
    default:
      break;
  }
  fail(Errc::InvalidInput, "unsupported Coxeter type " + type);
}

std::optional<std::size_t> known_order(const std::string& type) {
  auto fact = [](std::size_t n) {
    std::size_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f;
  };
  if (type.rfind("I2:", 0) == 0) return 2 * static_cast<std::size_t>(std::stoi(type.substr(3)));
  if (type.size() < 2) return std::nullopt;
  const std::size_t n = std::stoul(type.substr(1));
  switch (type[0]) {
    case 'A': return fact(n + 1);
    case 'B': return (std::size_t{1} << n) * fact(n);
    case 'D': return (std::size_t{1} << (n - 1)) * fact(n);
    case 'H': return n == 3 ? 120 : 14400;
    default: return std::nullopt;
  }
}

CoxeterGroup coxeter_group(const std::string& type) {
  auto G = build_coxeter(coxeter_matrix(type), type);
  if (auto k = known_order(type); k && *k != G.order())
    fail(Errc::VerificationFailed, type + " enumerated " + std::to_string(G.order()) + " elements, expected " + std::to_string(*k));
  return G;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(s, &pos);
    if (pos != s.size() || v < 0) throw std::invalid_argument(s);
    return static_cast<std::uint64_t>(v);
  } catch (...) {
    fail(Errc::InvalidInput, "bad " + what + ": '" + s + "'");
  }
}

}  // namespace

HeckeParam parse_hecke_param(const std::string& text) {
  if (text == "one") return {Field::rationals(), Field::rationals().one(), text};
  const auto colon = text.find(':');
  if (colon == std::string::npos) fail(Errc::InvalidInput, "bad Hecke parameter '" + text + "'");
  const std::string kind = text.substr(0, colon), rest = text.substr(colon + 1);
  if (kind == "root") {
    const auto e = parse_u64(rest, "root order");
    if (e < 1 || e > 1000) fail(Errc::InvalidInput, "root order out of range");
    Field K = Field::cyclotomic(static_cast<unsigned>(e));
    return {K, K.generator(), text};
  }
  if (kind == "fp") {
    const auto parts = split(rest, ',');
    if (parts.size() != 2) fail(Errc::InvalidInput, "fp parameter needs p,q");
    Field F = Field::prime(parse_u64(parts[0], "prime"));
    const Scalar v = F.from_residues({parse_u64(parts[1], "parameter")});
    if (v.is_zero()) fail(Errc::InvalidInput, "Hecke parameter must be invertible");
    return {F, v, text};
  }
  if (kind == "fq") {
    const auto parts = split(rest, ',');
    if (parts.size() != 3) fail(Errc::InvalidInput, "fq parameter needs p,modulus,value");
    const auto p = parse_u64(parts[0], "prime");
    std::vector<std::uint64_t> mod, val;
    for (const auto& c : split(parts[1], ';')) mod.push_back(parse_u64(c, "modulus coefficient"));
    for (const auto& c : split(parts[2], ';')) val.push_back(parse_u64(c, "parameter coefficient"));
    Field F = Field::extension(p, mod);
    const Scalar v = F.from_residues(val);
    if (v.is_zero()) fail(Errc::InvalidInput, "Hecke parameter must be invertible");
    return {F, v, text};
  }
  fail(Errc::InvalidInput, "bad Hecke parameter '" + text + "'");
}

HeckeAlgebra build_hecke(const CoxeterGroup& G, const Scalar& v, const std::string& name) {
  const std::size_t n = G.order();
  if (n > 1152) fail(Errc::GroupTooLarge, "Hecke algebras are limited to |W| <= 1152");
  const Field f = v.field();
  if (v.is_zero()) fail(Errc::InvalidInput, "Hecke parameter must be invertible");
  const Scalar delta = v - v.inv();

  // prod[x] holds T_x T_y for the current y, sparse
  using Sparse = std::map<std::size_t, Scalar>;
  auto times_s = [&](const Sparse& x, std::size_t s) {
    Sparse out;
    auto add = [&](std::size_t k, const Scalar& c) {
      auto it = out.find(k);
      if (it == out.end())
        out.emplace(k, c);
      else
        it->second += c;
    };
    for (const auto& [w, c] : x) {
      const std::size_t ws = G.rmul[w][s];
      add(ws, c);
      if (G.lengths[ws] < G.lengths[w] && !delta.is_zero()) add(w, c * delta);
    }
    for (auto it = out.begin(); it != out.end();)
      it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
  };

  // products T_x T_y with y built up along its ShortLex word
  std::vector<std::vector<Sparse>> table(n, std::vector<Sparse>(n));
  std::vector<std::size_t> parent(n, 0);
  for (std::size_t y = 1; y < n; ++y) {
    auto w = G.words[y];
    w.pop_back();
    parent[y] = G.element(w);
  }
  for (std::size_t x = 0; x < n; ++x) {
    table[x][0] = Sparse{{x, f.one()}};
    for (std::size_t y = 1; y < n; ++y) table[x][y] = times_s(table[x][parent[y]], static_cast<std::size_t>(G.words[y].back()));
  }
  std::vector<StructureEntry> st;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (const auto& [k, c] : table[x][y]) st.push_back({x, y, k, c});
  std::vector<std::string> labels;
  for (std::size_t w = 0; w < n; ++w) labels.push_back("T" + (w == 0 ? std::string("1") : G.label(w)));
  Vec unit = unit_vec(f, n, 0), tau = unit_vec(f, n, 0);
  auto A = std::make_shared<const Algebra>(name.empty() ? "hecke-" + G.type : name, f, labels, st, unit, tau);

  const auto chk = check_frobenius(*A);
  if (!chk.is_frobenius || !chk.is_symmetric) fail(Errc::VerificationFailed, "Hecke algebra is not symmetric Frobenius");
  const DualBasis D = dual_basis(*A);
  for (std::size_t w = 0; w < n; ++w)
    if (D.vector(w) != unit_vec(f, n, G.inverse(w))) fail(Errc::VerificationFailed, "dual of T_" + G.label(w) + " is not T_{w^-1}");
  return {G, v, A};
}

HeckeAlgebra specialize(const HeckeAlgebra& H, const PrimeSpec& p) {
  const Field k = residue_field(H.v.field(), p);
  const Scalar q = reduce_mod(H.v, p, k);
  AlgebraPtr reduced = reduce_algebra(*H.algebra, p);
  HeckeAlgebra direct = build_hecke(H.group, q, H.algebra->name() + "@" + p.describe());
  const auto a = reduced->structure(), b = direct.algebra->structure();
  bool same = a.size() == b.size() && reduced->unit() == direct.algebra->unit() && reduced->tau() == direct.algebra->tau();
  for (std::size_t t = 0; same && t < a.size(); ++t)
    same = a[t].i == b[t].i && a[t].j == b[t].j && a[t].k == b[t].k && a[t].coeff == b[t].coeff;
  if (!same) fail(Errc::VerificationFailed, "specialization does not commute with building the Hecke algebra");
  return direct;
}

}  // namespace frobenia
