#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "frobcx/basep.hpp"
#include "frobcx/matrix.hpp"

namespace frobcx {

/// The Artinian ring F_p[x]/(x^N).
struct QRing {
  Prime p;
  std::uint32_t N;

  QRing(Prime prime, std::uint32_t length);
  friend bool operator==(const QRing&, const QRing&) = default;
};

/// Element of F_p[x]/(x^N), coefficients ascending.
class QElem {
 public:
  /// Coefficients are reduced mod p; missing ones are 0. Throws if more than
  /// N coefficients are given.
  QElem(const QRing& ring, std::vector<std::uint32_t> coeffs);

  static QElem zero(const QRing& ring) { return QElem(ring, {}); }
  static QElem one(const QRing& ring) { return QElem(ring, {1}); }
  /// x^k, which is 0 once k >= N.
  static QElem monomial(const QRing& ring, std::uint32_t k);

  const QRing& ring() const noexcept { return ring_; }
  std::uint32_t operator[](std::size_t i) const { return coeffs_[i]; }
  bool is_zero() const noexcept;
  /// Zero constant term, i.e. the element lies in the maximal ideal (x).
  bool in_maximal_ideal() const noexcept { return coeffs_[0] == 0; }

  std::string to_string() const;

  friend bool operator==(const QElem&, const QElem&) = default;

 private:
  QRing ring_;
  std::vector<std::uint32_t> coeffs_;  // exactly N entries
};

/// Ring operations. Mismatched rings throw InvalidArgument.
QElem qadd(const QElem& a, const QElem& b);
QElem qmul(const QElem& a, const QElem& b);
/// a^(p^e). In characteristic p this sends sum a_i x^i to sum a_i x^(i p^e).
QElem qfrob(const QElem& a, std::uint32_t e);

inline QElem operator+(const QElem& a, const QElem& b) { return qadd(a, b); }
inline QElem operator*(const QElem& a, const QElem& b) { return qmul(a, b); }

using QMatrix = Matrix<QElem>;

QMatrix identity(const QRing& ring, std::size_t r);
QMatrix zero_matrix(const QRing& ring, std::size_t r);
QMatrix scalar_matrix(const QElem& s, std::size_t r);
QMatrix matmul(const QMatrix& a, const QMatrix& b);

/// B^[p^e]: every entry raised to the p^e-th power.
QMatrix bracket(const QMatrix& b, std::uint32_t e);

/// The operator A^(e): the map given by matrix A in Frobenius degree e.
struct TwistedOperator {
  QMatrix A;
  std::uint32_t e = 0;

  friend bool operator==(const TwistedOperator&,
                         const TwistedOperator&) = default;
};

/// (A^(e)) (B^(e')) = (A B^[p^e])^(e + e').
TwistedOperator compose(const TwistedOperator& f, const TwistedOperator& g);

/// Smallest e0 with p^e0 >= N, so that x^[p^e0] = 0.
std::uint32_t min_frobenius_level(const QRing& ring);

/// Every step used to rewrite A^(e) as A^(e0) I^(e-e0).
struct FactorizationTrace {
  std::uint32_t e0 = 0;
  std::uint32_t e = 0;
  TwistedOperator direct;    // (A, e)
  TwistedOperator factored;  // (A, e0) o (I, e - e0)
  /// k copies of (I, e0) followed by (I, c), with e - e0 = k e0 + c.
  std::vector<TwistedOperator> identity_chain;
  TwistedOperator chain_product;
  /// bracket of the maximal-ideal part of A at level e0 vanishes.
  bool maximal_ideal_killed = false;
  bool holds = false;
};

/// Throws InvalidArgument unless e >= e0 >= min_frobenius_level(ring).
FactorizationTrace factorization_trace(const QMatrix& a, std::uint32_t e,
                                       std::uint32_t e0);
bool factorization_check(const QMatrix& a, std::uint32_t e, std::uint32_t e0);

/// Uniform r x r matrix over the ring.
QMatrix random_matrix(const QRing& ring, std::size_t r, std::mt19937_64& rng);

}  // namespace frobcx
