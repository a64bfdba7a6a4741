#include "euler_forge/euler_mod.hpp"

#include <stdexcept>
#include <string>

namespace euler_forge {

std::string_view to_string(EulerModMethod method) {
  switch (method) {
    case EulerModMethod::ExactReduction: return "exact-reduction";
    case EulerModMethod::Recurrence: return "recurrence";
    case EulerModMethod::CharSum: return "charsum";
  }
  return "unknown";
}

ModularEulerTable euler_mod_by_reduction(const EulerCache& cache, const PrimeContext& ctx,
                                         std::size_t limit) {
  if (!cache.covers(limit)) {
    throw std::out_of_range("euler_mod_by_reduction: limit " + std::to_string(limit) +
                            " exceeds cache max_index " + std::to_string(cache.max_index()));
  }
  ModularEulerTable table{ctx.p(), EulerModMethod::ExactReduction, {}};
  table.residues.reserve(limit + 1);
  for (std::size_t k = 0; k <= limit; ++k) table.residues.push_back(ctx.residue(cache[k]));
  return table;
}

ModularEulerTable euler_mod_by_recurrence(const PrimeContext& ctx, std::size_t limit) {
  if (limit >= ctx.p()) {
    throw std::out_of_range("euler_mod_by_recurrence: limit " + std::to_string(limit) +
                            " must be below p = " + std::to_string(ctx.p()));
  }
  ModularEulerTable table{ctx.p(), EulerModMethod::Recurrence,
                          std::vector<Residue>(limit + 1, ctx.residue(0))};
  auto& r = table.residues;
  r[0] = ctx.residue(1);
  for (std::size_t n = 2; n <= limit; n += 2) {
    Residue acc = ctx.residue(0);
    for (std::size_t k = 2; k <= n; k += 2) acc = acc + ctx.binomial(n, k) * r[n - k];
    r[n] = -acc;
  }
  return table;
}

Residue euler_mod_by_charsum(const PrimeContext& ctx, std::uint64_t k) {
  if (k % 2 != 0) {
    throw std::invalid_argument("euler_mod_by_charsum: k must be even, got " + std::to_string(k));
  }
  Residue sum = ctx.residue(0);
  for (std::uint64_t j = 1; j < ctx.p(); j += 2) {
    const Residue term = mod_pow(ctx.residue(static_cast<std::int64_t>(j)), k);
    sum = chi_minus_one(j) > 0 ? sum + term : sum - term;
  }
  Residue result = ctx.residue(2) * sum;
  if (k == 0) result = result + ctx.residue(ctx.chi());
  return result;
}

ModularEulerTable euler_mod_table_by_charsum(const PrimeContext& ctx, std::size_t limit) {
  ModularEulerTable table{ctx.p(), EulerModMethod::CharSum,
                          std::vector<Residue>(limit + 1, ctx.residue(0))};
  for (std::size_t k = 0; k <= limit; k += 2) table.residues[k] = euler_mod_by_charsum(ctx, k);
  return table;
}

Residue euler_mod_any(const EulerCache& cache, const PrimeContext& ctx, std::uint64_t k) {
  if (k % 2 != 0) return ctx.residue(0);
  if (cache.covers(k)) return ctx.residue(cache[k]);
  return euler_mod_by_charsum(ctx, k);
}

}  // namespace euler_forge
