#include "frobcx/transfer.hpp"

#include "frobcx/errors.hpp"

namespace frobcx {

namespace {

void require_transfer_dimension(std::uint32_t d) {
  if (d < 3) {
    throw InvalidArgument(
        "transfer system needs d >= 3; for d <= 2, c_{d,e} = 0 when e >= 2 "
        "and c_{d,1} = binom(d+p-2, p-1)");
  }
}

}  // namespace

TransferSystem build_system(const PoincareTable& table) {
  const std::uint32_t d = table.dimension();
  require_transfer_dimension(d);
  const std::int64_t p = table.prime().value();
  const std::size_t n = d - 2;
  TransferSystem sys{table.prime(), d, CountMatrix(n, n), {}, {}};
  sys.x0.reserve(n);
  sys.weights.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto i = static_cast<std::int64_t>(r) + 1;
    for (std::size_t c = 0; c < n; ++c) {
      const auto j = static_cast<std::int64_t>(c) + 1;
      sys.U(r, c) = table.md(p * i - j + p - 1);
    }
    sys.x0.push_back(table.md(p * i + p - 1));
    sys.weights.push_back(table.md(p - i - 1));
  }
  return sys;
}

TransferSystem build_system(Prime p, std::uint32_t d) {
  require_transfer_dimension(d);
  return build_system(PoincareTable(p, d));
}

std::vector<Count> state(const TransferSystem& sys, std::uint32_t e) {
  std::vector<Count> x = sys.x0;
  for (std::uint32_t step = 0; step < e; ++step) {
    x = multiply<Count>(sys.U, x);
  }
  return x;
}

Count first_level_count(Prime p, std::uint32_t d) {
  if (d < 1) throw InvalidArgument("d must be >= 1");
  return binomial(Count(d + p.value() - 2), p.value() - 1);
}

Count c_de(Prime p, std::uint32_t d, std::uint32_t e) {
  if (d < 1) throw InvalidArgument("d must be >= 1");
  if (e == 0) return 0;
  if (e == 1) return first_level_count(p, d);
  if (d <= 2) return 0;
  const TransferSystem sys = build_system(p, d);
  const auto x = state(sys, e - 2);
  Count total = 0;
  for (std::size_t i = 0; i < x.size(); ++i) total += sys.weights[i] * x[i];
  return total;
}

ComplexityReport ComplexityReport::from_counts(Prime p, std::uint32_t d,
                                               std::string engine,
                                               std::vector<Count> c) {
  if (c.empty()) throw InvariantViolation("empty complexity sequence");
  if (c[0] != 0) throw InvariantViolation("c_0 must be 0");
  ComplexityReport report{p, d, std::move(engine), std::move(c), {}};
  report.k.reserve(report.c.size());
  Count running = 0;
  for (const auto& ce : report.c) {
    if (ce < 0) throw InvariantViolation("negative complexity count");
    running += ce;
    report.k.push_back(running);
  }
  return report;
}

ComplexityReport complexity_sequence(const TransferSystem& sys,
                                     std::uint32_t emax) {
  std::vector<Count> c(emax + 1, Count(0));
  if (emax >= 1) c[1] = first_level_count(sys.p, sys.d);
  std::vector<Count> x = sys.x0;
  for (std::uint32_t e = 2; e <= emax; ++e) {
    if (e > 2) x = multiply<Count>(sys.U, x);
    for (std::size_t i = 0; i < x.size(); ++i) c[e] += sys.weights[i] * x[i];
  }
  return ComplexityReport::from_counts(sys.p, sys.d, "transfer", std::move(c));
}

ComplexityReport complexity_sequence(Prime p, std::uint32_t d,
                                     std::uint32_t emax) {
  if (d < 1) throw InvalidArgument("d must be >= 1");
  if (d <= 2) {
    std::vector<Count> c(emax + 1, Count(0));
    if (emax >= 1) c[1] = first_level_count(p, d);
    return ComplexityReport::from_counts(p, d, "transfer", std::move(c));
  }
  return complexity_sequence(build_system(p, d), emax);
}

}  // namespace frobcx
