#pragma once

#include <string>
#include <vector>

#include "defring/charts.hpp"

namespace defring::monodromy {

using charts::Gauge;
using charts::GaugeChart;
using charts::MultiChart;
using charts::PMode;

// le30: all weights up to (3,0); w21, w30: the two fixed weights.
enum class Level { le30, w21, w30 };

std::string level_name(Level l);  // "le30", "21", "30"
Level parse_level(const std::string& text);

struct Config {
  long p = 23;
  long kappa = 7;
  int depth = 5;
  bool symbolic_p = false;

  PMode pmode() const { return {p, symbolic_p}; }
  // Throws std::invalid_argument: p must be a prime > 5, depth >= 5 and
  // kappa mod p outside {0, +-1, ..., +-depth}.
  void validate() const;
};

bool is_prime(long n);
bool kappa_generic(long kappa, long p, int depth);

// The scalar in diag(k, 0): kappa for t21, t12s, t30, t03s and 1 - kappa for
// t12, t03, t21s (the partners under conjugation).
Rational kappa_op(Gauge g, long kappa);

// u^0, u^1, u^2 coefficients of det A; the u^3 coefficient must be a nonzero
// constant.
std::vector<Polynomial> det_condition_generators(const GaugeChart& chart);
Ideal det_condition_ideal(const GaugeChart& chart);

// (v dA/du - A diag(k, 0)) adj(A).
MatrixPoly monodromy_operator(const GaugeChart& chart, const Rational& k);

// Generators before any p handling.
std::vector<Polynomial> raw_generators(const GaugeChart& chart, const Rational& k, Level level);

// Divides out the largest power of the variable p dividing f.
Polynomial strip_p_content(const Polynomial& f);

// Derived ideal for level le30 or w21 with an explicit scalar k. The
// derivation always runs with p symbolic, strips p-content, then either
// specializes p (numeric mode) or saturates by p (symbolic mode).
Ideal derive_with_op(Gauge g, Level level, const Rational& k, const PMode& mode);
Ideal derive_le_ideal(Gauge g, Level level, const Config& cfg);
// The (3,0) component: the le30 ideal saturated by the derived (2,1) ideal
// (le30 itself when the shape is not of weight (2,1)).
Ideal derive_weight30(Gauge g, const Config& cfg);
// Dispatches on the level.
Ideal derive_ideal(Gauge g, Level level, const Config& cfg);

// Tabulated ideals (corrected forms unless `verbatim`), as expressions in the
// gauge variables, p and k.
struct TableEntry {
  std::vector<std::string> le30, w21, w30;
};
const TableEntry& reference_table(Gauge g, bool verbatim = false);
Ideal table_ideal(Gauge g, Level level, const Config& cfg, bool verbatim = false);

struct ConsistencyResult {
  bool le30_matches = false;        // derived le30 == table le30
  bool w21_matches = false;         // derived w21 == table w21
  bool w30_matches = false;         // derived (3,0) component == table w30
  bool decomposition_holds = false; // le30 == w21 cap w30, or le30 == w30
  std::string detail;
  bool pass() const { return le30_matches && w21_matches && w30_matches && decomposition_holds; }
};
ConsistencyResult fixed_weight_consistency(Gauge g, const Config& cfg);

// derive(partner, 1 - k) equals the relabeled derive(g, k).
bool conjugation_coherent(Gauge g, Level level, const Config& cfg);

// K-ideals: preimage of the tabulated ideal of `target` along the chart's
// projection, with kappa the structure constant of the target type.
Ideal k_ideal(const MultiChart& chart, Gauge target, Level level, const Config& cfg);

// Displayed K-ideals, by case name: "1", "2_30", "2_21", "3", "4", "4b", "5",
// "6". `verbatim` keeps the uncorrected sign in "2_30".
struct KDisplay {
  std::string name;
  Gauge base;
  Gauge target;
  Level level;
};
const std::vector<KDisplay>& k_displays();
Ideal k_display_ideal(const std::string& name, const Config& cfg, bool verbatim = false);

// Coefficients forcing det(Psi v^3) = c v^3 (v+p)^3 with c the leading
// constant of the determinant.
Ideal det_condition_on_chart(const MultiChart& chart);

}  // namespace defring::monodromy
