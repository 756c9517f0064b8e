#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vizing/classify.hpp"
#include "vizing/domination.hpp"
#include "vizing/graph.hpp"
#include "vizing/product.hpp"
#include "vizing/rational.hpp"

namespace vizing {

/// ½γ(G)γ(H) + ½min{γ(G), γ(H)}. Holds for every pair.
Rational suen_tarr_bound(std::size_t gamma_g, std::size_t gamma_h);

/// π/(2π−1)·γ(G)γ(H). Holds for every pair. Throws DomainError when π = 0.
Rational power_bound(std::size_t pi_g, std::size_t gamma_g, std::size_t gamma_h);

/// (⌊d/3⌋ + 1)·γ(H) for G of diameter d.
Rational diameter_bound(std::size_t diam_g, std::size_t gamma_h);

/// max{γ(G)γ_F(H), γ_F(G)γ(H)}.
Rational fair_bound(std::size_t gamma_g, std::size_t gamma_f_g, std::size_t gamma_h,
                    std::size_t gamma_f_h);

/// Whether γ(G□H) ≥ (γ(G) − √γ(G))·γ(H), decided without floating point.
bool sqrt_deficit_satisfied(std::size_t gamma_g, std::size_t gamma_h, std::size_t gamma_product);

enum class BoundKind {
  proven,         ///< a theorem; a violation is a solver bug
  conjecture,     ///< Vizing's inequality itself, reported only
  informational,  ///< shown for context, never enforced
};

std::string_view bound_kind_name(BoundKind kind);

struct BoundRow {
  std::string name;
  BoundKind kind = BoundKind::proven;
  bool applicable = false;
  /// Exact value; absent for the irrational sqrt_deficit row or when the
  /// inputs it needs were not computed.
  std::optional<Rational> value;
  /// Human-readable form of the value and the parameters it was evaluated at.
  std::string detail;
  bool satisfied = false;
};

/// Forbidden-subgraph corollary rows for G:
///   corollary_triangle_star: triangle-free and K_{1,r}-free, smallest such r,
///     value r/(2r−1)·γγ
///   corollary_kr_p5: P_5-free and K_r-free with r = max(4, smallest such r),
///     value (r−1)/(2r−3)·γγ
/// `satisfied` is left false; check_pair fills it in.
std::vector<BoundRow> class_bounds(const ClassProfile& profile, std::size_t gamma_g,
                                   std::size_t gamma_h);

struct PairOptions {
  SearchBudget budget;
  std::size_t product_cap = kDefaultProductCap;
  std::size_t r_max = kDefaultRMax;
  /// Compute γ_F by brute force when both factors have at most 7 vertices.
  bool with_fair = false;
  /// User asserts G lies in a class where γ(G□H) ≥ (γ(G) − √γ(G))·γ(H) is
  /// known; adds an informational row.
  bool assert_sqrt_deficit_class = false;
};

struct BoundReport {
  std::string g_id;
  std::string h_id;
  std::size_t gamma_g = 0;
  std::size_t gamma_h = 0;
  std::optional<std::size_t> gamma_product;
  std::optional<std::size_t> pi_g;
  std::optional<std::size_t> diam_g;
  std::optional<std::size_t> gamma_f_g;
  std::optional<std::size_t> gamma_f_h;
  std::vector<BoundRow> bounds;
  /// γ(G□H) / (γ(G)γ(H)).
  std::optional<Rational> vizing_ratio;
  /// False when some solver ran out of budget; the affected rows say so.
  bool exact = true;
  std::vector<std::string> notes;

  const BoundRow* find(std::string_view name) const;
  /// min over applicable proven rows of γ(G□H) − value.
  std::optional<Rational> worst_proven_margin() const;
};

/// Computes every quantity for the pair and evaluates every bound row.
/// Throws IntegrityError (with the report as JSON in dump()) if an applicable
/// proven bound fails.
BoundReport check_pair(const Graph& g, const Graph& h, const PairOptions& options = {},
                       std::string g_id = "", std::string h_id = "");

}  // namespace vizing
