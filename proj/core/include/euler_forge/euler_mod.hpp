#pragma once

/**
 * @file euler_mod.hpp
 * @brief Euler numbers modulo an odd prime by three independent routes.
 *
 *  - exact reduction of the EulerCache values,
 *  - the even-binomial recurrence run in Z/pZ (indices below p only),
 *  - the character sum: for even k,
 *
 *        E_k == 2 * sum_{odd j < p} (-1/j) j^k + [k == 0] (-1/p)   (mod p).
 *
 * The three routes share no code beyond Residue arithmetic, so agreement
 * between them is a real check.
 */

#include <cstdint>
#include <string_view>
#include <vector>

#include "euler_forge/euler_exact.hpp"
#include "euler_forge/modular_arith.hpp"

namespace euler_forge {

enum class EulerModMethod { ExactReduction, Recurrence, CharSum };

std::string_view to_string(EulerModMethod method);

/// residues[k] = E_k mod p for 0 <= k <= limit.
struct ModularEulerTable {
  std::uint64_t prime = 0;
  EulerModMethod method = EulerModMethod::ExactReduction;
  std::vector<Residue> residues;

  std::size_t limit() const noexcept { return residues.size() - 1; }
};

/// Throws std::out_of_range if limit > cache.max_index().
ModularEulerTable euler_mod_by_reduction(const EulerCache& cache, const PrimeContext& ctx,
                                         std::size_t limit);

/// Binomials come from the factorial tables, so limit < p is required
/// (std::out_of_range otherwise).
ModularEulerTable euler_mod_by_recurrence(const PrimeContext& ctx, std::size_t limit);

/// Right-hand side of the character-sum congruence. Throws
/// std::invalid_argument for odd k.
Residue euler_mod_by_charsum(const PrimeContext& ctx, std::uint64_t k);

/// Table built from euler_mod_by_charsum for even k, zero for odd k.
ModularEulerTable euler_mod_table_by_charsum(const PrimeContext& ctx, std::size_t limit);

/// E_k mod p: zero for odd k, exact reduction when the cache covers k,
/// character sum otherwise. Never uses E_{p-1+2k} == E_{2k}.
Residue euler_mod_any(const EulerCache& cache, const PrimeContext& ctx, std::uint64_t k);

}  // namespace euler_forge
