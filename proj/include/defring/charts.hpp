#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "defring/ideal.hpp"
#include "defring/matrix_poly.hpp"
#include "defring/weyl.hpp"

namespace defring::charts {

// The seven shapes of Adm(3,0) at one embedding.
enum class Gauge { t21, t12, t12s, t30, t03, t03s, t21s };

const std::vector<Gauge>& all_gauges();
std::string gauge_name(Gauge g);                  // "t21", "t12s", ...
std::optional<Gauge> parse_gauge(std::string_view text);  // "t21" or "t(2,1)" forms
weyl::Factor gauge_factor(Gauge g);
std::optional<Gauge> gauge_of(const weyl::Factor& x);
bool in_adm21(Gauge g);
// Partner under conjugation by the Iwahori normalizer s t_(1,0).
Gauge paired_gauge(Gauge g);

// How p enters the coefficient ring: a nonzero integer, or the extra ring
// variable "p" placed last in every roster.
struct PMode {
  long p = 23;
  bool symbolic = false;
};

RosterPtr with_p(const std::vector<std::string>& names, const PMode& mode);
Polynomial p_value(const RosterPtr& roster, const PMode& mode);
// Q[vars, p] -> Q[vars] sending p to its numeric value.
RingMap specialize_p(const RosterPtr& symbolic, long p);

struct GaugeChart {
  Gauge label = Gauge::t21;
  weyl::Weight lambda{3, 0};
  PMode pmode;
  RosterPtr roster;
  MatrixPoly matrix;

  Polynomial p() const { return p_value(roster, pmode); }
};

// Throws std::invalid_argument for an unsupported weight.
GaugeChart build_gauge(Gauge g, weyl::Weight lambda = {3, 0}, PMode mode = {});
// Variable names of the gauge without the p variable.
std::vector<std::string> gauge_variables(Gauge g);

// deg A_ik <= nu_k - [i < z(k)] for the factor z t_nu.
bool degree_bounds_hold(const GaugeChart& chart);

// X -> Pi X Pi^-1 with Pi = [[0,1],[v,0]], v = u - p.
MatrixPoly conjugate_matrix(const MatrixPoly& m, const Polynomial& p);
// Renaming a_i <-> d_i, b_i <-> c_i between a gauge and its partner.
RingMap conjugation_relabel(const RosterPtr& from, const RosterPtr& to);
GaugeChart conjugate_gauge(const GaugeChart& chart);

// A * z^-1 * v^3 as a polynomial matrix.
MatrixPoly gauge_over_factor_v3(const GaugeChart& chart);

struct Projection {
  Gauge target;
  int shift = 0;  // 0, +1 or -1 multiple of the simple root
  RingMap map;    // chart ring -> gauge ring
};

// Multi-type chart around a shape of Adm(2,1) at one embedding.
struct MultiChart {
  Gauge base = Gauge::t21;
  PMode pmode;
  RosterPtr roster;
  MatrixPoly psi_v3;
  std::vector<Projection> table;

  const Projection& projection(Gauge target) const;
  const Projection& projection_by_shift(int shift) const;
  Polynomial p() const { return p_value(roster, pmode); }
};

// base must be t21, t12 or t12s; the t12 chart is the conjugate of t21's.
MultiChart build_multichart(Gauge base, PMode mode = {});
std::vector<std::string> chart_variables(Gauge base);

// pr(Psi v^3) == A z^-1 v^3 for this projection.
bool projection_identity_holds(const MultiChart& chart, const Projection& pr);

}  // namespace defring::charts
