// Copyright 2026 The ipskit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ipskit/zoo.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace ipskit {

std::string to_string(Source s) {
  switch (s) {
    case Source::kExample: return "example";
    case Source::kConstruction: return "construction";
    case Source::kComputed: return "computed";
  }
  return "unknown";
}

Operator pauli(int i) {
  Operator p(2, 2);
  const Complex I(0.0, 1.0);
  switch (i) {
    case 0: p << 1, 0, 0, 1; break;
    case 1: p << 0, 1, 1, 0; break;
    case 2: p << 0, -I, I, 0; break;
    case 3: p << 1, 0, 0, -1; break;
    default: throw InputError("pauli index must be 0..3");
  }
  return p;
}

Operator pauli_string(const std::string& word) {
  Operator out = Operator::Identity(1, 1);
  for (char c : word) {
    int i = 0;
    switch (c) {
      case 'I': i = 0; break;
      case 'X': i = 1; break;
      case 'Y': i = 2; break;
      case 'Z': i = 3; break;
      default: throw InputError("pauli letters are I, X, Y, Z");
    }
    out = kron(out, pauli(i));
  }
  return out;
}

Operator five_qubit_code_projector() {
  Operator p = identity(32);
  for (const char* g : {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}) p = p * (identity(32) + pauli_string(g)) * 0.5;
  return p;
}

Operator example_unitary() {
  Operator u = Operator::Zero(2, 2);
  u(0, 0) = std::exp(Complex(0.0, -0.7));
  u(1, 1) = std::exp(Complex(0.0, 0.7));
  return u;
}

QuantumChannel amplitude_damping(double gamma) {
  Operator k0(2, 2), k1(2, 2);
  k0 << 1, 0, 0, std::sqrt(1.0 - gamma);
  k1 << 0, std::sqrt(gamma), 0, 0;
  return make_channel({k0, k1});
}

QuantumChannel dephasing(const Operator& basis, double strength) {
  std::vector<Operator> ks;
  const auto d = basis.rows();
  if (strength < 1.0) ks.push_back(std::sqrt(1.0 - strength) * identity(d));
  for (Eigen::Index j = 0; j < d; ++j) ks.push_back(std::sqrt(strength) * basis.col(j) * basis.col(j).adjoint());
  return make_channel(ks);
}

namespace {

Vector ket(int d, int i) {
  Vector v = Vector::Zero(d);
  v(i) = 1.0;
  return v;
}

Operator proj(const Vector& v) { return v * v.adjoint() / v.squaredNorm(); }

Vector plus() { return (ket(2, 0) + ket(2, 1)) / std::sqrt(2.0); }
Vector minus() { return (ket(2, 0) - ket(2, 1)) / std::sqrt(2.0); }
Vector plus_i() { return (ket(2, 0) + Complex(0, 1) * ket(2, 1)) / std::sqrt(2.0); }

std::vector<Vector> qubit_tetrad() { return {ket(2, 0), ket(2, 1), plus(), plus_i()}; }

Vector embed(const Vector& v, int d) {
  Vector out = Vector::Zero(d);
  out.head(v.size()) = v;
  return out;
}

QuantumChannel depolarize_b(const Operator& u) {
  std::vector<Operator> ks;
  for (int j = 0; j < 4; ++j) ks.push_back(0.5 * kron(u, pauli(j)));
  return make_channel(ks);
}

QuantumChannel five_qubit_channel() {
  std::vector<Operator> ks;
  ks.push_back(0.5 * identity(32));
  const double w = std::sqrt(1.0 / 20.0);
  for (int q = 0; q < 5; ++q)
    for (char c : std::string("XYZ")) {
      std::string word(5, 'I');
      word[static_cast<std::size_t>(q)] = c;
      ks.push_back(w * pauli_string(word));
    }
  return make_channel(ks);
}

QuantumChannel qutrit_half_fail() {
  Operator p01 = basis_projector(3, {0, 1});
  Operator a = Operator::Zero(3, 3), b = Operator::Zero(3, 3);
  a(0, 2) = std::sqrt(0.5);
  b(1, 2) = std::sqrt(0.5);
  return make_channel({p01, a, b});
}

QuantumChannel ucp_d3() {
  std::vector<Operator> ks = {basis_projector(3, {0, 1})};
  for (int j = 0; j < 3; ++j) {
    Operator k = Operator::Zero(3, 3);
    k(j, 2) = std::sqrt(1.0 / 3.0);
    ks.push_back(k);
  }
  return make_channel(ks);
}

QuantumChannel if_control() {
  Operator k0 = basis_projector(4, {0, 1});
  Operator k1 = ket_bra(4, 2, 2);
  Operator k2 = ket_bra(4, 2, 3);
  return make_channel({k0, k1, k2});
}

QuantumChannel cond_dephase_flip() {
  Operator p0 = ket_bra(2, 0, 0), p1 = ket_bra(2, 1, 1), flip = ket_bra(2, 0, 1);
  return make_channel({kron(identity(2), p0), kron(p0, flip), kron(p1, flip)});
}

QuantumChannel measure_then_depolarize() {
  std::vector<Operator> ks;
  for (int j = 0; j < 4; ++j) ks.push_back(0.5 * kron(identity(2), pauli(j) * ket_bra(2, 0, 0)));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) ks.push_back(0.25 * kron(pauli(i), pauli(j) * ket_bra(2, 1, 1)));
  return make_channel(ks);
}

std::vector<FixtureDescriptor> build_catalog() {
  using S = Source;
  auto sh = [](std::vector<int> d, std::vector<int> n, S s) { return ExpectedShape{std::move(d), std::move(n), s}; };
  std::vector<FixtureDescriptor> c;
  c.push_back({"identity_qubit", "channel", "identity on one qubit", sh({2}, {1}, S::kConstruction),
               sh({2}, {1}, S::kConstruction), sh({2}, {1}, S::kConstruction)});
  c.push_back({"dephasing_qubit", "channel", "complete dephasing in the computational basis",
               sh({1, 1}, {1, 1}, S::kExample), sh({1, 1}, {1, 1}, S::kComputed), sh({1, 1}, {1, 1}, S::kComputed)});
  c.push_back({"amplitude_damping", "channel", "amplitude damping towards |0>, gamma = 0.3",
               sh({1}, {1}, S::kComputed), std::nullopt, std::nullopt});
  c.push_back({"cyclic_four", "stochastic", "k -> k or k+1 mod 4 with probability 1/2",
               sh({1}, {4}, S::kComputed), sh({1}, {4}, S::kComputed), sh({1}, {4}, S::kComputed)});
  c.push_back({"squash_three", "stochastic", "fixes 0 and 1, maps 2 -> 1", sh({1, 1}, {1, 1}, S::kComputed),
               std::nullopt, std::nullopt});
  c.push_back({"qutrit_half_fail", "channel", "identity on span{0,1}, |2><2| -> (|0><0| + |1><1|)/2",
               sh({2}, {1}, S::kComputed), std::nullopt, std::nullopt});
  c.push_back({"depolarize_B", "channel", "identity on qubit A, full depolarization of qubit B",
               sh({2}, {2}, S::kExample), sh({2}, {2}, S::kComputed), sh({2}, {2}, S::kComputed)});
  c.push_back({"cond_dephase_flip", "channel",
               "measure B; on 1 dephase A and reset B to |0>", sh({2}, {1}, S::kExample), std::nullopt,
               std::nullopt});
  c.push_back({"two_code_classical", "stochastic", "0->{0,1}, 1->{2,3}, 2->{0,2}, 3->{1,3}",
               std::nullopt, std::nullopt, std::nullopt});
  c.push_back({"unitary_A_depolarize_B", "channel", "U = exp(-0.7 i Z) on A, depolarize B",
               sh({1, 1}, {2, 2}, S::kExample), sh({2}, {2}, S::kExample), std::nullopt});
  c.push_back({"measure_then_depolarize", "channel", "measure B; on 0 depolarize B, on 1 depolarize both",
               std::nullopt, std::nullopt, std::nullopt});
  c.push_back({"five_qubit_depolarize_one", "channel", "depolarize one of five qubits chosen uniformly",
               sh({1}, {32}, S::kExample), std::nullopt, std::nullopt});
  c.push_back({"ucp_d3", "channel", "identity on span{0,1}, |2> -> maximally mixed",
               sh({2}, {1}, S::kComputed), std::nullopt, sh({1}, {3}, S::kComputed)});
  c.push_back({"uncond_classical", "stochastic", "columns (1,0,0,0) (1,0,0,0) (0,1/2,1/2,0) (0,0,1/2,1/2)",
               std::nullopt, std::nullopt, sh({1, 1}, {2, 2}, S::kExample)});
  c.push_back({"if_control", "channel", "dephase span{0,1} against |2>, |3> -> |2>", sh({2, 1}, {1, 1}, S::kConstruction),
               std::nullopt, std::nullopt});
  c.push_back({"ns_vs_code", "code", "{|psi>|psi>} for psi in {0, 1, +, +i}", std::nullopt, std::nullopt,
               std::nullopt});
  return c;
}

}  // namespace

const std::vector<FixtureDescriptor>& fixture_catalog() {
  static const std::vector<FixtureDescriptor> catalog = build_catalog();
  return catalog;
}

const FixtureDescriptor& describe(const std::string& name) {
  for (const auto& f : fixture_catalog())
    if (f.name == name) return f;
  throw InputError("unknown fixture: " + name);
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& f : fixture_catalog()) out.push_back(f.name);
  return out;
}

StochasticChannel stochastic_fixture(const std::string& name) {
  if (name == "cyclic_four")
    return stochastic_from_columns({{0.5, 0.5, 0, 0}, {0, 0.5, 0.5, 0}, {0, 0, 0.5, 0.5}, {0.5, 0, 0, 0.5}});
  if (name == "squash_three") return stochastic_from_columns({{1, 0, 0}, {0, 1, 0}, {0, 1, 0}});
  if (name == "two_code_classical")
    return stochastic_from_columns({{0.5, 0.5, 0, 0}, {0, 0, 0.5, 0.5}, {0.5, 0, 0.5, 0}, {0, 0.5, 0, 0.5}});
  if (name == "uncond_classical")
    return stochastic_from_columns({{1, 0, 0, 0}, {1, 0, 0, 0}, {0, 0.5, 0.5, 0}, {0, 0, 0.5, 0.5}});
  throw InputError("unknown stochastic fixture: " + name);
}

Fixture fixture(const std::string& name) {
  const auto& desc = describe(name);
  if (desc.kind == "stochastic") return stochastic_fixture(name);
  if (desc.kind == "code") return code_fixture(name);
  if (name == "identity_qubit") return identity_channel(2);
  if (name == "dephasing_qubit") return make_channel({ket_bra(2, 0, 0), ket_bra(2, 1, 1)});
  if (name == "amplitude_damping") return amplitude_damping(0.3);
  if (name == "qutrit_half_fail") return qutrit_half_fail();
  if (name == "depolarize_B") return depolarize_b(identity(2));
  if (name == "cond_dephase_flip") return cond_dephase_flip();
  if (name == "unitary_A_depolarize_B") return depolarize_b(example_unitary());
  if (name == "measure_then_depolarize") return measure_then_depolarize();
  if (name == "five_qubit_depolarize_one") return five_qubit_channel();
  if (name == "ucp_d3") return ucp_d3();
  if (name == "if_control") return if_control();
  throw InputError("unknown fixture: " + name);
}

QuantumChannel quantum_fixture(const std::string& name) {
  Fixture f = fixture(name);
  if (auto* q = std::get_if<QuantumChannel>(&f)) return *q;
  if (auto* s = std::get_if<StochasticChannel>(&f)) return embed_classical(*s);
  throw InputError("fixture is not a channel: " + name);
}

namespace {

struct CodeEntry {
  std::string name;
  std::string channel;
};

const std::vector<CodeEntry>& code_entries() {
  static const std::vector<CodeEntry> e = {
      {"dephasing_cbit", "dephasing_qubit"},
      {"dephasing_plusminus", "dephasing_qubit"},
      {"dephasing_full_qubit", "dephasing_qubit"},
      {"cyclic_four_02", "cyclic_four"},
      {"squash_three_segment", "squash_three"},
      {"qutrit_half_fail_code", "qutrit_half_fail"},
      {"depolarize_B_pure", "depolarize_B"},
      {"depolarize_B_fixed", "depolarize_B"},
      {"unitary_A_code", "unitary_A_depolarize_B"},
      {"ucp_d3_subspace", "ucp_d3"},
      {"two_code_01", "two_code_classical"},
      {"two_code_23", "two_code_classical"},
      {"five_qubit_code", "five_qubit_depolarize_one"},
      {"ns_vs_code", "depolarize_B"},
  };
  return e;
}

std::vector<Vector> diag_kets(int d, const std::vector<int>& idx) {
  std::vector<Vector> out;
  for (int i : idx) out.push_back(ket(d, i));
  return out;
}

Code product_code(const std::vector<Vector>& a, const Operator& b) {
  std::vector<Operator> states;
  for (const auto& v : a) states.push_back(kron(proj(v), b));
  return make_code(states);
}

}  // namespace

std::vector<std::string> code_fixture_names() {
  std::vector<std::string> out;
  for (const auto& e : code_entries()) out.push_back(e.name);
  return out;
}

std::string code_fixture_channel(const std::string& name) {
  for (const auto& e : code_entries())
    if (e.name == name) return e.channel;
  throw InputError("unknown code fixture: " + name);
}

Code code_fixture(const std::string& name) {
  if (name == "dephasing_cbit") return code_from_vectors({ket(2, 0), ket(2, 1)});
  if (name == "dephasing_plusminus") return code_from_vectors({plus(), minus()});
  if (name == "dephasing_full_qubit") return code_from_vectors(qubit_tetrad());
  if (name == "cyclic_four_02") return code_from_vectors(diag_kets(4, {0, 2}));
  if (name == "two_code_01") return code_from_vectors(diag_kets(4, {0, 1}));
  if (name == "two_code_23") return code_from_vectors(diag_kets(4, {2, 3}));
  if (name == "squash_three_segment") {
    auto diag = [](double a, double b, double c) {
      Operator r = Operator::Zero(3, 3);
      r(0, 0) = a;
      r(1, 1) = b;
      r(2, 2) = c;
      return r;
    };
    return make_code({diag(1.0 / 6, 1.0 / 2, 1.0 / 3), diag(1.0 / 3, 1.0 / 3, 1.0 / 3),
                      diag(1.0 / 2, 1.0 / 3, 1.0 / 6)});
  }
  if (name == "qutrit_half_fail_code") {
    std::vector<Operator> states;
    for (const auto& v : qubit_tetrad()) states.push_back(0.5 * (proj(embed(v, 3)) + ket_bra(3, 2, 2)));
    return make_code(states);
  }
  if (name == "depolarize_B_pure") return product_code(qubit_tetrad(), ket_bra(2, 0, 0));
  if (name == "depolarize_B_fixed" || name == "unitary_A_code") return product_code(qubit_tetrad(), 0.5 * identity(2));
  if (name == "ucp_d3_subspace") {
    std::vector<Vector> kets;
    for (const auto& v : qubit_tetrad()) kets.push_back(embed(v, 3));
    return code_from_vectors(kets);
  }
  if (name == "ns_vs_code") {
    std::vector<Operator> states;
    for (const auto& v : qubit_tetrad()) states.push_back(kron(proj(v), proj(v)));
    return make_code(states);
  }
  if (name == "five_qubit_code") {
    Operator q = projector_range(five_qubit_code_projector(), 1e-6);
    std::vector<Vector> kets;
    for (const auto& v : qubit_tetrad()) kets.push_back(q * v);
    return code_from_vectors(kets);
  }
  throw InputError("unknown code fixture: " + name);
}

QuantumChannel random_cptp(int d, int kraus_count, std::uint64_t seed) {
  if (d < 1 || kraus_count < 1) throw InputError("random_cptp needs d >= 1 and at least one Kraus operator");
  Rng rng(seed);
  Operator v = random_isometry(static_cast<Eigen::Index>(d) * kraus_count, d, rng);
  std::vector<Operator> ks;
  for (int i = 0; i < kraus_count; ++i) ks.push_back(v.middleRows(static_cast<Eigen::Index>(i) * d, d));
  return make_channel(ks);
}

QuantumChannel random_unital_channel(int d, int unitaries, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> w;
  double total = 0.0;
  for (int i = 0; i < unitaries; ++i) {
    const double x = std::abs(standard_normal(rng)) + 0.1;
    w.push_back(x);
    total += x;
  }
  std::vector<Operator> ks;
  for (int i = 0; i < unitaries; ++i) ks.push_back(std::sqrt(w[i] / total) * random_unitary(d, rng));
  return make_channel(ks);
}

PlantedChannel random_structured_channel(const std::vector<PlantedSector>& sectors, int complement_dim,
                                         int kraus_count, std::uint64_t seed) {
  if (sectors.empty() || kraus_count < 1 || complement_dim < 0) throw InputError("invalid planted structure");
  Rng rng(seed);
  int planted = 0;
  for (const auto& s : sectors) planted += s.d * s.n;
  const int dim = planted + complement_dim;
  std::vector<Operator> ks(static_cast<std::size_t>(kraus_count), Operator::Zero(dim, dim));
  std::vector<Operator> local_isos;
  int off = 0;
  for (const auto& s : sectors) {
    Operator v = random_isometry(static_cast<Eigen::Index>(s.n) * kraus_count, s.n, rng);
    for (int i = 0; i < kraus_count; ++i)
      ks[i].block(off, off, s.d * s.n, s.d * s.n) = kron(identity(s.d), v.middleRows(static_cast<Eigen::Index>(i) * s.n, s.n));
    Operator iso = Operator::Zero(dim, s.d * s.n);
    iso.block(off, 0, s.d * s.n, s.d * s.n) = identity(s.d * s.n);
    local_isos.push_back(iso);
    off += s.d * s.n;
  }
  if (complement_dim > 0) {
    Operator v = random_isometry(static_cast<Eigen::Index>(dim) * kraus_count, complement_dim, rng);
    for (int i = 0; i < kraus_count; ++i) {
      Operator k = Operator::Zero(dim, dim);
      k.rightCols(complement_dim) = v.middleRows(static_cast<Eigen::Index>(i) * dim, dim);
      ks.push_back(k);
    }
  }
  Operator w = random_unitary(dim, rng);
  PlantedChannel out;
  std::vector<Operator> rotated;
  for (const auto& k : ks) rotated.push_back(w * k * w.adjoint());
  out.channel = make_channel(rotated);
  out.code_projector = Operator::Zero(dim, dim);
  for (const auto& iso : local_isos) {
    out.sector_isometries.push_back(w * iso);
    out.code_projector += w * iso * iso.adjoint() * w.adjoint();
  }
  std::vector<PlantedSector> sorted = sectors;
  std::stable_sort(sorted.begin(), sorted.end(), [](const PlantedSector& a, const PlantedSector& b) {
    return a.d != b.d ? a.d > b.d : a.n > b.n;
  });
  for (const auto& s : sorted) {
    out.shape.dims.push_back(s.d);
    out.shape.cofactor_dims.push_back(s.n);
  }
  return out;
}

QuantumChannel random_dfs_channel(int d, int dfs_dim, std::uint64_t seed) {
  if (dfs_dim < 1 || dfs_dim > d) throw InputError("dfs dimension must lie in [1, d]");
  return random_structured_channel({{dfs_dim, 1}}, d - dfs_dim, 3, seed).channel;
}

Operator random_dfs_projector(int d, int dfs_dim, std::uint64_t seed) {
  if (dfs_dim < 1 || dfs_dim > d) throw InputError("dfs dimension must lie in [1, d]");
  return random_structured_channel({{dfs_dim, 1}}, d - dfs_dim, 3, seed).code_projector;
}

QuantumChannel random_qubit_channel(std::uint64_t seed) {
  Rng rng(seed);
  const auto family = seed % 5;
  const std::uint64_t sub = rng();
  switch (family) {
    case 0: return random_cptp(2, 1 + static_cast<int>(sub % 4), sub);
    case 1: return unitary_channel(random_unitary(2, rng));
    case 2: {
      const double s = 0.1 + 0.9 * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
      return dephasing(random_unitary(2, rng), s);
    }
    case 3: return random_unital_channel(2, 2 + static_cast<int>(sub % 2), sub);
    default: {
      const double g = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
      Operator w = random_unitary(2, rng);
      QuantumChannel ad = amplitude_damping(g);
      std::vector<Operator> ks;
      for (const auto& k : ad.kraus) ks.push_back(w * k * w.adjoint());
      return make_channel(ks);
    }
  }
}

}  // namespace ipskit
