#include "frobenia/examples.hpp"

#include "frobenia/hecke.hpp"

namespace frobenia {

namespace {

AlgebraPtr cyclic2(const std::string& name, const Field& f) {
  const Scalar one = f.one();
  std::vector<StructureEntry> st{{0, 0, 0, one}, {0, 1, 1, one}, {1, 0, 1, one}, {1, 1, 0, one}};
  return std::make_shared<const Algebra>(name, f, std::vector<std::string>{"1", "g"}, st, Vec{one, f.zero()}, Vec{one, f.zero()});
}

AlgebraPtr qs3() {
  const HeckeAlgebra H = build_hecke(coxeter_group("A2"), Field::rationals().one(), "QS3");
  std::vector<std::string> labels;
  for (const auto& l : H.algebra->labels()) labels.push_back(l == "T1" ? "1" : l.substr(1));
  const Algebra& A = *H.algebra;
  return std::make_shared<const Algebra>("QS3", A.field(), labels, A.structure(), A.unit(), A.tau());
}

// Basis e1, e2, a, b with a = e1 a e2, b = e2 b e1 and J^2 = 0.
AlgebraPtr nakayama2() {
  const Field Q = Field::rationals();
  const Scalar one = Q.one(), zero = Q.zero();
  enum { E1, E2, A, B };
  std::vector<StructureEntry> st{{E1, E1, E1, one}, {E2, E2, E2, one}, {E1, A, A, one},
                                 {A, E2, A, one},   {E2, B, B, one},   {B, E1, B, one}};
  return std::make_shared<const Algebra>("nakayama2", Q, std::vector<std::string>{"e1", "e2", "a", "b"}, st, Vec{one, one, zero, zero},
                                         Vec{zero, zero, one, one});
}

AlgebraPtr hecke_at_root(const std::string& type, unsigned e, const std::string& name) {
  const Field K = Field::cyclotomic(e);
  return build_hecke(coxeter_group(type), K.generator(), name).algebra;
}

}  // namespace

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names{"qc2", "f2c2", "qs3", "nakayama2", "hecke-a1-i", "hecke-a2-zeta3"};
  return names;
}

AlgebraPtr example_algebra(const std::string& name) {
  if (name == "qc2") return cyclic2("QC2", Field::rationals());
  if (name == "f2c2") return cyclic2("F2C2", Field::prime(2));
  if (name == "qs3") return qs3();
  if (name == "nakayama2") return nakayama2();
  if (name == "hecke-a1-i") return hecke_at_root("A1", 4, "hecke-A1-i");
  if (name == "hecke-a2-zeta3") return hecke_at_root("A2", 3, "hecke-A2-zeta3");
  fail(Errc::InvalidInput, "unknown example " + name);
}

}  // namespace frobenia
