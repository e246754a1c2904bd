#include "frobcx/twistedop.hpp"

#include "frobcx/errors.hpp"

namespace frobcx {
namespace {

void same_ring(const QRing& a, const QRing& b) {
  if (!(a == b)) throw InvalidArgument("elements of different rings");
}

}  // namespace

QRing::QRing(Prime prime, std::uint32_t length) : p(prime), N(length) {
  if (N < 1) throw InvalidArgument("QRing: N must be >= 1");
}

QElem::QElem(const QRing& ring, std::vector<std::uint32_t> coeffs)
    : ring_(ring), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() > ring_.N) {
    throw InvalidArgument("QElem: more than N coefficients");
  }
  coeffs_.resize(ring_.N, 0);
  for (auto& c : coeffs_) c %= ring_.p.value();
}

QElem QElem::monomial(const QRing& ring, std::uint32_t k) {
  std::vector<std::uint32_t> c(ring.N, 0);
  if (k < ring.N) c[k] = 1;
  return QElem(ring, std::move(c));
}

bool QElem::is_zero() const noexcept {
  for (auto c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

std::string QElem::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!out.empty()) out += "+";
    const bool show_coeff = coeffs_[i] != 1 || i == 0;
    if (show_coeff) out += std::to_string(coeffs_[i]);
    if (i > 0) {
      if (show_coeff) out += "*";
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

QElem qadd(const QElem& a, const QElem& b) {
  same_ring(a.ring(), b.ring());
  const auto& ring = a.ring();
  std::vector<std::uint32_t> c(ring.N);
  for (std::uint32_t i = 0; i < ring.N; ++i) {
    c[i] = (a[i] + b[i]) % ring.p.value();
  }
  return QElem(ring, std::move(c));
}

QElem qmul(const QElem& a, const QElem& b) {
  same_ring(a.ring(), b.ring());
  const auto& ring = a.ring();
  const std::uint64_t p = ring.p.value();
  std::vector<std::uint64_t> acc(ring.N, 0);
  for (std::uint32_t i = 0; i < ring.N; ++i) {
    if (a[i] == 0) continue;
    for (std::uint32_t j = 0; i + j < ring.N; ++j) {
      acc[i + j] = (acc[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    }
  }
  return QElem(ring, std::vector<std::uint32_t>(acc.begin(), acc.end()));
}

QElem qfrob(const QElem& a, std::uint32_t e) {
  const auto& ring = a.ring();
  const std::uint64_t p = ring.p.value();
  QElem cur = a;
  // After p^k >= N only the constant term survives and further steps fix it.
  for (std::uint32_t step = 0; step < e; ++step) {
    std::vector<std::uint32_t> c(ring.N, 0);
    for (std::uint64_t i = 0; i * p < ring.N; ++i) c[i * p] = cur[i];
    QElem next(ring, std::move(c));
    if (next == cur) break;
    cur = std::move(next);
  }
  return cur;
}

QMatrix identity(const QRing& ring, std::size_t r) {
  return scalar_matrix(QElem::one(ring), r);
}

QMatrix zero_matrix(const QRing& ring, std::size_t r) {
  return QMatrix(r, r, QElem::zero(ring));
}

QMatrix scalar_matrix(const QElem& s, std::size_t r) {
  QMatrix m(r, r, QElem::zero(s.ring()));
  for (std::size_t i = 0; i < r; ++i) m(i, i) = s;
  return m;
}

QMatrix matmul(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows() || a.rows() == 0) {
    throw InvalidArgument("matmul: size mismatch");
  }
  const QRing& ring = a(0, 0).ring();
  QMatrix out(a.rows(), b.cols(), QElem::zero(ring));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      QElem s = QElem::zero(ring);
      for (std::size_t l = 0; l < a.cols(); ++l) s = s + a(i, l) * b(l, j);
      out(i, j) = std::move(s);
    }
  }
  return out;
}

QMatrix bracket(const QMatrix& b, std::uint32_t e) {
  QMatrix out = b;
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = qfrob(b(i, j), e);
  }
  return out;
}

TwistedOperator compose(const TwistedOperator& f, const TwistedOperator& g) {
  return {matmul(f.A, bracket(g.A, f.e)), f.e + g.e};
}

std::uint32_t min_frobenius_level(const QRing& ring) {
  std::uint32_t e0 = 0;
  std::uint64_t q = 1;
  while (q < ring.N) {
    q *= ring.p.value();
    ++e0;
  }
  return e0;
}

FactorizationTrace factorization_trace(const QMatrix& a, std::uint32_t e,
                                       std::uint32_t e0) {
  if (a.rows() == 0 || !a.square()) {
    throw InvalidArgument("factorization: matrix must be square and nonempty");
  }
  const QRing& ring = a(0, 0).ring();
  const std::uint32_t floor_level = min_frobenius_level(ring);
  if (e0 < floor_level) {
    throw InvalidArgument("factorization needs e0 >= " +
                          std::to_string(floor_level) +
                          " so that Frobenius kills the maximal ideal");
  }
  if (e < e0) throw InvalidArgument("factorization needs e >= e0");

  const std::size_t r = a.rows();
  const QMatrix id = identity(ring, r);
  FactorizationTrace t;
  t.e0 = e0;
  t.e = e;
  t.direct = {a, e};
  t.factored = compose({a, e0}, {id, e - e0});

  // I^(e-e0) = (I^(e0))^k I^(c); e0 may be 0 when N = 1.
  const std::uint32_t rest = e - e0;
  const std::uint32_t k = e0 == 0 ? 0 : rest / e0;
  const std::uint32_t c = e0 == 0 ? rest : rest % e0;
  for (std::uint32_t i = 0; i < k; ++i) t.identity_chain.push_back({id, e0});
  t.identity_chain.push_back({id, c});
  t.chain_product = {id, 0};
  for (const auto& link : t.identity_chain) {
    t.chain_product = compose(t.chain_product, link);
  }

  QMatrix ideal_part = a;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      std::vector<std::uint32_t> coeffs(ring.N);
      for (std::uint32_t n = 1; n < ring.N; ++n) coeffs[n] = a(i, j)[n];
      ideal_part(i, j) = QElem(ring, std::move(coeffs));
    }
  }
  t.maximal_ideal_killed = bracket(ideal_part, e0) == zero_matrix(ring, r);

  t.holds = t.factored == t.direct &&
            t.chain_product == TwistedOperator{id, rest} &&
            t.maximal_ideal_killed;
  return t;
}

bool factorization_check(const QMatrix& a, std::uint32_t e, std::uint32_t e0) {
  return factorization_trace(a, e, e0).holds;
}

QMatrix random_matrix(const QRing& ring, std::size_t r, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> coeff(0, ring.p.value() - 1);
  QMatrix m(r, r, QElem::zero(ring));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      std::vector<std::uint32_t> c(ring.N);
      for (auto& v : c) v = coeff(rng);
      m(i, j) = QElem(ring, std::move(c));
    }
  }
  return m;
}

}  // namespace frobcx
