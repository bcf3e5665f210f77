// Copyright 2026 The ecsynth Authors
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

#include "ecsynth/tableau/tableau.hpp"

#include <bit>

#include "ecsynth/error.hpp"
#include "ecsynth/tableau/two_qubit.hpp"

namespace ecsynth {

namespace {

using f2::BitVector;

// Power of i picked up, summed over qubits, when (x1, z1) multiplies
// (x2, z2) from the left.
long phase_exponent(const BitVector& x1, const BitVector& z1, const BitVector& x2,
                    const BitVector& z2) {
  long plus = 0;
  long minus = 0;
  const auto a = x1.words();
  const auto b = z1.words();
  const auto c = x2.words();
  const auto d = z2.words();
  for (std::size_t w = 0; w < a.size(); ++w) {
    const f2::Word xa = a[w], za = b[w], xb = c[w], zb = d[w];
    plus += std::popcount((xa & ~za & zb & xb) | (xa & za & zb & ~xb) | (~xa & za & xb & ~zb));
    minus += std::popcount((xa & ~za & zb & ~xb) | (xa & za & xb & ~zb) | (~xa & za & xb & zb));
  }
  return plus - minus;
}

bool combine_sign(bool rh, bool ri, long exponent) {
  const long total = ((2 * static_cast<long>(rh) + 2 * static_cast<long>(ri) + exponent) % 4 + 4) % 4;
  if (total % 2 != 0) throw Error("tableau rows do not commute");
  return total == 2;
}

BitVector erase_bit(const BitVector& v, std::size_t q) {
  BitVector out(v.size() - 1);
  for (std::size_t i = 0, j = 0; i < v.size(); ++i) {
    if (i == q) continue;
    out.set(j++, v.get(i));
  }
  return out;
}

}  // namespace

Tableau Tableau::plus_state(std::size_t n) {
  Tableau t;
  t.n_ = n;
  t.x_.assign(n, BitVector(n));
  t.z_.assign(n, BitVector(n));
  t.r_.assign(n, false);
  for (std::size_t i = 0; i < n; ++i) t.x_[i].set(i);
  return t;
}

Tableau Tableau::zero_state(std::size_t n) {
  Tableau t = plus_state(n);
  std::swap(t.x_, t.z_);
  return t;
}

Tableau Tableau::graph_state(const Graph& g) {
  Tableau t = plus_state(g.order());
  for (Vertex v = 0; v < g.order(); ++v) t.z_[v] = g.neighbourhood(v);
  return t;
}

Tableau Tableau::from_generators(const f2::BitMatrix& gen, const f2::BitVector& signs) {
  if (gen.cols() % 2 != 0) throw PreconditionError("generator matrix needs 2n columns");
  if (signs.size() != gen.rows()) throw PreconditionError("one sign per generator row");
  Tableau t;
  t.n_ = gen.cols() / 2;
  for (std::size_t r = 0; r < gen.rows(); ++r) {
    BitVector x(t.n_), z(t.n_);
    for (std::size_t q = 0; q < t.n_; ++q) {
      x.set(q, gen.get(r, q));
      z.set(q, gen.get(r, t.n_ + q));
    }
    t.x_.push_back(std::move(x));
    t.z_.push_back(std::move(z));
    t.r_.push_back(signs.get(r));
  }
  return t;
}

f2::BitMatrix Tableau::generators() const {
  f2::BitMatrix m(rows(), 2 * n_);
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t q = 0; q < n_; ++q) {
      m.set(r, q, x_[r].get(q));
      m.set(r, n_ + q, z_[r].get(q));
    }
  }
  return m;
}

BitVector Tableau::signs() const {
  BitVector s(rows());
  for (std::size_t r = 0; r < rows(); ++r) s.set(r, r_[r]);
  return s;
}

void Tableau::check(std::size_t q) const {
  if (q >= n_) {
    throw PreconditionError("qubit " + std::to_string(q) + " out of range for " +
                            std::to_string(n_) + " qubits");
  }
}

void Tableau::h(std::size_t q) {
  check(q);
  for (std::size_t r = 0; r < rows(); ++r) {
    const bool xv = x_[r].get(q), zv = z_[r].get(q);
    if (xv && zv) r_[r] = !r_[r];
    x_[r].set(q, zv);
    z_[r].set(q, xv);
  }
}

void Tableau::s(std::size_t q) {
  check(q);
  for (std::size_t r = 0; r < rows(); ++r) {
    const bool xv = x_[r].get(q), zv = z_[r].get(q);
    if (xv && zv) r_[r] = !r_[r];
    z_[r].set(q, zv != xv);
  }
}

void Tableau::sdg(std::size_t q) {
  check(q);
  for (std::size_t r = 0; r < rows(); ++r) {
    const bool xv = x_[r].get(q), zv = z_[r].get(q);
    if (xv && !zv) r_[r] = !r_[r];
    z_[r].set(q, zv != xv);
  }
}

void Tableau::pauli_x(std::size_t q) {
  check(q);
  for (std::size_t r = 0; r < rows(); ++r) {
    if (z_[r].get(q)) r_[r] = !r_[r];
  }
}

void Tableau::pauli_y(std::size_t q) {
  check(q);
  for (std::size_t r = 0; r < rows(); ++r) {
    if (x_[r].get(q) != z_[r].get(q)) r_[r] = !r_[r];
  }
}

void Tableau::pauli_z(std::size_t q) {
  check(q);
  for (std::size_t r = 0; r < rows(); ++r) {
    if (x_[r].get(q)) r_[r] = !r_[r];
  }
}

void Tableau::cz(std::size_t a, std::size_t b) {
  check(a);
  check(b);
  if (a == b) throw PreconditionError("CZ needs two distinct qubits");
  for (std::size_t r = 0; r < rows(); ++r) {
    const bool xa = x_[r].get(a), xb = x_[r].get(b);
    if (xa && xb && (z_[r].get(a) != z_[r].get(b))) r_[r] = !r_[r];
    if (xb) z_[r].flip(a);
    if (xa) z_[r].flip(b);
  }
}

void Tableau::swap(std::size_t a, std::size_t b) {
  check(a);
  check(b);
  for (std::size_t r = 0; r < rows(); ++r) {
    const bool xa = x_[r].get(a), za = z_[r].get(a);
    x_[r].set(a, x_[r].get(b));
    z_[r].set(a, z_[r].get(b));
    x_[r].set(b, xa);
    z_[r].set(b, za);
  }
}

void Tableau::apply(const Gate& g) {
  switch (g.kind) {
    case GateKind::H: return h(g.a);
    case GateKind::S: return s(g.a);
    case GateKind::Sdg: return sdg(g.a);
    case GateKind::X: return pauli_x(g.a);
    case GateKind::Y: return pauli_y(g.a);
    case GateKind::Z: return pauli_z(g.a);
    case GateKind::CZ: return cz(g.a, g.b);
    case GateKind::SWAP: return swap(g.a, g.b);
    case GateKind::Clifford2: {
      check(g.a);
      check(g.b);
      const Circuit local = decompose_two_qubit(Symplectic2Q::from_key(g.matrix));
      for (Gate inner : local.gates) {
        inner.a = inner.a == 0 ? g.a : g.b;
        if (inner.two_qubit()) inner.b = inner.b == 0 ? g.a : g.b;
        apply(inner);
      }
      return;
    }
    default:
      throw PreconditionError("apply: '" + to_string(g) + "' is not a unitary gate");
  }
}

void Tableau::rowsum(std::size_t h, std::size_t i) {
  r_[h] = combine_sign(r_[h], r_[i], phase_exponent(x_[i], z_[i], x_[h], z_[h]));
  x_[h] ^= x_[i];
  z_[h] ^= z_[i];
}

namespace {

std::optional<BitVector> combination_for(const f2::BitMatrix& gen, const BitVector& x,
                                         const BitVector& z) {
  const std::size_t n = x.size();
  BitVector target(2 * n);
  for (std::size_t q = 0; q < n; ++q) {
    target.set(q, x.get(q));
    target.set(n + q, z.get(q));
  }
  return f2::solve(gen.transpose(), target);
}

}  // namespace

std::optional<bool> Tableau::sign_of(const BitVector& x, const BitVector& z) const {
  if (x.size() != n_ || z.size() != n_) throw PreconditionError("sign_of: size mismatch");
  const auto c = combination_for(generators(), x, z);
  if (!c) return std::nullopt;
  BitVector px(n_), pz(n_);
  bool r = false;
  for (std::size_t i : c->ones()) {
    r = combine_sign(r, r_[i], phase_exponent(x_[i], z_[i], px, pz));
    px ^= x_[i];
    pz ^= z_[i];
  }
  return r;
}

MeasureOutcome Tableau::measure_z(std::size_t q, MeasurePolicy policy, std::mt19937_64* rng) {
  check(q);
  if (rows() != n_) throw PreconditionError("measure_z needs a state tableau");
  MeasureOutcome out;
  std::size_t p = rows();
  for (std::size_t i = 0; i < rows(); ++i) {
    if (x_[i].get(q)) {
      p = i;
      break;
    }
  }
  BitVector zq(n_);
  zq.set(q);
  if (p < rows()) {
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i != p && x_[i].get(q)) rowsum(i, p);
    }
    switch (policy) {
      case MeasurePolicy::ForceZero: out.outcome = false; break;
      case MeasurePolicy::ForceOne: out.outcome = true; break;
      case MeasurePolicy::Random:
        if (rng == nullptr) throw PreconditionError("random measurement needs a generator");
        out.outcome = ((*rng)() & 1) != 0;
        break;
    }
    x_[p] = BitVector(n_);
    z_[p] = zq;
    r_[p] = out.outcome;
  } else {
    out.deterministic = true;
    const auto c = combination_for(generators(), BitVector(n_), zq);
    if (!c) throw Error("measure_z: Z commutes with every row but is not in the group");
    const auto sign = sign_of(BitVector(n_), zq);
    out.outcome = *sign;
    p = c->first_set();
    x_[p] = BitVector(n_);
    z_[p] = zq;
    r_[p] = out.outcome;
  }
  // Every other row now commutes with Z_q; strip their Z_q factors.
  for (std::size_t i = 0; i < rows(); ++i) {
    if (i != p && z_[i].get(q)) rowsum(i, p);
  }
  x_.erase(x_.begin() + static_cast<std::ptrdiff_t>(p));
  z_.erase(z_.begin() + static_cast<std::ptrdiff_t>(p));
  r_.erase(r_.begin() + static_cast<std::ptrdiff_t>(p));
  for (std::size_t i = 0; i < rows(); ++i) {
    x_[i] = erase_bit(x_[i], q);
    z_[i] = erase_bit(z_[i], q);
  }
  --n_;
  return out;
}

bool Tableau::valid() const {
  if (rows() != n_) return false;
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = i + 1; j < rows(); ++j) {
      if (x_[i].dot(z_[j]) != z_[i].dot(x_[j])) return false;
    }
  }
  return f2::rank(generators()) == n_;
}

}  // namespace ecsynth
