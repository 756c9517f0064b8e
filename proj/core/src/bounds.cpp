#include "vizing/bounds.hpp"

#include <algorithm>
#include <string>

#include "vizing/error.hpp"
#include "vizing/fair_reception.hpp"
#include "vizing/graph6.hpp"
#include "vizing/metrics.hpp"
#include "vizing/serialize.hpp"

namespace vizing {

namespace {

Rational product_of(std::size_t gamma_g, std::size_t gamma_h) {
  return Rational(static_cast<std::int64_t>(gamma_g * gamma_h));
}

std::string graph_id(const Graph& g) {
  return g.order() <= kGraph6MaxOrder ? encode_graph6(g) : "n=" + std::to_string(g.order());
}

}  // namespace

Rational suen_tarr_bound(std::size_t gamma_g, std::size_t gamma_h) {
  return Rational(1, 2) * product_of(gamma_g, gamma_h) +
         Rational(static_cast<std::int64_t>(std::min(gamma_g, gamma_h)), 2);
}

Rational power_bound(std::size_t pi_g, std::size_t gamma_g, std::size_t gamma_h) {
  if (pi_g == 0) throw DomainError("power must be at least 1");
  auto pi = static_cast<std::int64_t>(pi_g);
  return Rational(pi, 2 * pi - 1) * product_of(gamma_g, gamma_h);
}

Rational diameter_bound(std::size_t diam_g, std::size_t gamma_h) {
  return Rational(static_cast<std::int64_t>((diam_g / 3 + 1) * gamma_h));
}

Rational fair_bound(std::size_t gamma_g, std::size_t gamma_f_g, std::size_t gamma_h,
                    std::size_t gamma_f_h) {
  return Rational(static_cast<std::int64_t>(std::max(gamma_g * gamma_f_h, gamma_f_g * gamma_h)));
}

bool sqrt_deficit_satisfied(std::size_t gamma_g, std::size_t gamma_h, std::size_t gamma_product) {
  // gp >= (g - sqrt(g)) h  <=>  sqrt(g) * h >= g*h - gp  <=>  (rhs <= 0 or g*h^2 >= rhs^2)
  const auto g = static_cast<std::int64_t>(gamma_g);
  const auto h = static_cast<std::int64_t>(gamma_h);
  const std::int64_t rhs = g * h - static_cast<std::int64_t>(gamma_product);
  return rhs <= 0 || g * h * h >= rhs * rhs;
}

std::string_view bound_kind_name(BoundKind kind) {
  switch (kind) {
    case BoundKind::proven: return "proven";
    case BoundKind::conjecture: return "conjecture";
    case BoundKind::informational: return "informational";
  }
  return "?";
}

std::vector<BoundRow> class_bounds(const ClassProfile& profile, std::size_t gamma_g,
                                   std::size_t gamma_h) {
  const Rational gg = product_of(gamma_g, gamma_h);
  std::vector<BoundRow> rows;

  BoundRow star{"corollary_triangle_star", BoundKind::proven, false, std::nullopt,
                "needs triangle-free and K_1,r-free", false};
  if (auto r = profile.smallest_star_free(); r && profile.triangle_free) {
    auto rr = static_cast<std::int64_t>(*r);
    star.applicable = true;
    star.value = Rational(rr, 2 * rr - 1) * gg;
    star.detail = "r=" + std::to_string(*r) + ": " + std::to_string(rr) + "/" +
                  std::to_string(2 * rr - 1) + "*gamma_g*gamma_h";
  }
  rows.push_back(std::move(star));

  BoundRow clique{"corollary_kr_p5", BoundKind::proven, false, std::nullopt,
                  "needs P_5-free and K_r-free for some r <= r_max", false};
  if (auto r = profile.smallest_k_free(); r && profile.path_free.at(5)) {
    auto rr = static_cast<std::int64_t>(std::max<std::size_t>(4, *r));
    clique.applicable = true;
    clique.value = Rational(rr - 1, 2 * rr - 3) * gg;
    clique.detail = "r=" + std::to_string(rr) + ": " + std::to_string(rr - 1) + "/" +
                    std::to_string(2 * rr - 3) + "*gamma_g*gamma_h";
  }
  rows.push_back(std::move(clique));
  return rows;
}

const BoundRow* BoundReport::find(std::string_view name) const {
  auto it = std::find_if(bounds.begin(), bounds.end(), [&](const auto& r) { return r.name == name; });
  return it == bounds.end() ? nullptr : &*it;
}

std::optional<Rational> BoundReport::worst_proven_margin() const {
  if (!gamma_product) return std::nullopt;
  std::optional<Rational> worst;
  for (const auto& row : bounds) {
    if (row.kind != BoundKind::proven || !row.applicable || !row.value) continue;
    Rational margin = Rational(static_cast<std::int64_t>(*gamma_product)) - *row.value;
    if (!worst || margin < *worst) worst = margin;
  }
  return worst;
}

BoundReport check_pair(const Graph& g, const Graph& h, const PairOptions& options,
                       std::string g_id, std::string h_id) {
  BoundReport report;
  report.g_id = g_id.empty() ? graph_id(g) : std::move(g_id);
  report.h_id = h_id.empty() ? graph_id(h) : std::move(h_id);

  // Factor domination numbers are needed by every row; without them there is
  // nothing to report, so budget failures here propagate.
  report.gamma_g = domination_number(g, options.budget).gamma;
  report.gamma_h = domination_number(h, options.budget).gamma;
  const ClassProfile profile = classify(g, options.r_max);

  if (is_connected(g)) {
    report.diam_g = diameter(g);
  } else {
    report.notes.push_back("G is disconnected: no diameter");
  }
  try {
    report.pi_g = power(g, options.budget).power;
  } catch (const Error& e) {
    if (e.code() != "inexact" && e.code() != "cap_exceeded") throw;
    report.exact = false;
    report.notes.push_back("pi(G) " + e.code() + ": " + e.what());
  }

  const Graph product = cartesian_product(g, h, options.product_cap);
  try {
    report.gamma_product = domination_number(product, options.budget).gamma;
  } catch (const BudgetExhausted& e) {
    report.exact = false;
    report.notes.push_back(std::string("gamma(GxH) inexact: ") + e.what());
  }

  if (options.with_fair) {
    if (g.order() <= kFairBruteForceMaxOrder && h.order() <= kFairBruteForceMaxOrder) {
      try {
        report.gamma_f_g = fair_domination_number_bruteforce(g, options.budget).gamma_f;
        report.gamma_f_h = fair_domination_number_bruteforce(h, options.budget).gamma_f;
      } catch (const BudgetExhausted& e) {
        report.gamma_f_g.reset();
        report.gamma_f_h.reset();
        report.exact = false;
        report.notes.push_back(std::string("gamma_F inexact: ") + e.what());
      }
    } else {
      report.notes.push_back("gamma_F skipped: factor above brute-force size");
    }
  }

  const std::size_t gg = report.gamma_g;
  const std::size_t gh = report.gamma_h;
  const Rational vizing = product_of(gg, gh);
  if (report.gamma_product) report.vizing_ratio = Rational(static_cast<std::int64_t>(*report.gamma_product)) / vizing;

  auto add = [&](std::string name, BoundKind kind, bool applicable, std::optional<Rational> value,
                 std::string detail) {
    BoundRow row{std::move(name), kind, applicable, value, std::move(detail), false};
    if (applicable && value && report.gamma_product) {
      row.satisfied = Rational(static_cast<std::int64_t>(*report.gamma_product)) >= *value;
    }
    report.bounds.push_back(std::move(row));
  };

  add("vizing", BoundKind::conjecture, true, vizing, "gamma_g*gamma_h");
  add("suen_tarr", BoundKind::proven, true, suen_tarr_bound(gg, gh),
      "gamma_g*gamma_h/2 + min(gamma_g,gamma_h)/2");
  if (report.pi_g) {
    add("power", BoundKind::proven, true, power_bound(*report.pi_g, gg, gh),
        "pi=" + std::to_string(*report.pi_g) + ": pi/(2pi-1)*gamma_g*gamma_h");
  } else {
    add("power", BoundKind::proven, false, std::nullopt, "pi(G) not computed");
  }
  for (auto& row : class_bounds(profile, gg, gh)) {
    add(std::move(row.name), row.kind, row.applicable, row.value, std::move(row.detail));
  }
  if (report.diam_g) {
    add("diameter", BoundKind::proven, true, diameter_bound(*report.diam_g, gh),
        "d=" + std::to_string(*report.diam_g) + ": (floor(d/3)+1)*gamma_h");
  } else {
    add("diameter", BoundKind::proven, false, std::nullopt, "G is disconnected");
  }
  if (report.gamma_f_g && report.gamma_f_h) {
    add("fair", BoundKind::proven, true,
        fair_bound(gg, *report.gamma_f_g, gh, *report.gamma_f_h),
        "max(gamma_g*gammaF_h, gammaF_g*gamma_h)");
  } else {
    add("fair", BoundKind::proven, false, std::nullopt, "gamma_F not computed");
  }
  add("claw_p6", BoundKind::proven, profile.claw_free && profile.path_free.at(6), vizing,
      "G claw-free and P_6-free");
  add("k4_p5", BoundKind::proven, profile.k_free.at(4) && profile.path_free.at(5), vizing,
      "G K_4-free and P_5-free");
  add("cograph", BoundKind::proven, profile.path_free.at(4), vizing, "G P_4-free");
  add("gamma_le_3", BoundKind::proven, gg <= 3, vizing, "gamma(G) <= 3");
  add("claw_free_two_thirds", BoundKind::informational,
      profile.claw_free && report.pi_g && *report.pi_g <= 2, Rational(2, 3) * vizing,
      "claw-free with pi(G) <= 2: 2/3*gamma_g*gamma_h");
  if (options.assert_sqrt_deficit_class) {
    BoundRow row{"sqrt_deficit", BoundKind::informational, true, std::nullopt,
                 "(gamma_g - sqrt(gamma_g))*gamma_h, class membership asserted by user", false};
    if (report.gamma_product) row.satisfied = sqrt_deficit_satisfied(gg, gh, *report.gamma_product);
    report.bounds.push_back(std::move(row));
  }

  for (const auto& row : report.bounds) {
    if (row.kind == BoundKind::proven && row.applicable && row.value && report.gamma_product &&
        !row.satisfied) {
      throw IntegrityError("proven bound '" + row.name + "' violated for G=" + report.g_id +
                               " H=" + report.h_id,
                           to_json(report).dump());
    }
  }
  return report;
}

}  // namespace vizing
