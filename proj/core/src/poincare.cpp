#include "frobcx/poincare.hpp"

#include "frobcx/errors.hpp"

namespace frobcx {
namespace {

const Count kZero = 0;

}  // namespace

PoincareTable::PoincareTable(Prime p, std::uint32_t d) : p_(p), d_(d) {
  if (d == 0) throw InvalidArgument("PoincareTable: d must be >= 1");
  const std::uint32_t width = p.value();
  coeffs_.assign(width, Count(1));
  for (std::uint32_t round = 1; round < d; ++round) {
    std::vector<Count> next(coeffs_.size() + width - 1, Count(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      for (std::uint32_t j = 0; j < width; ++j) next[i + j] += coeffs_[i];
    }
    coeffs_ = std::move(next);
  }
}

const Count& PoincareTable::md(std::int64_t m) const noexcept {
  if (m < 0 || m > top_degree()) return kZero;
  return coeffs_[static_cast<std::size_t>(m)];
}

}  // namespace frobcx
