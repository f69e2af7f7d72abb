#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace defring::weyl {

using Weight = std::pair<int, int>;

// One embedding's factor z * t_nu of the extended affine Weyl group of GL2,
// z = s when `flip` is set.
struct Factor {
  bool flip = false;
  int nu1 = 0;
  int nu2 = 0;

  static Factor translation(int a, int b) { return {false, a, b}; }
  static Factor reflection() { return {true, 0, 0}; }
  // The element written t_(a,b)s, i.e. t_(a,b) * s = s * t_(b,a).
  static Factor translation_then_s(int a, int b) { return {true, b, a}; }

  Factor operator*(const Factor& o) const;
  Factor inverse() const;
  // Right multiplication by t_(a,b).
  Factor shifted(int a, int b) const { return {flip, nu1 + a, nu2 + b}; }
  // Index of the coset of the affine Weyl group (determinant degree).
  int omega() const { return nu1 + nu2; }

  // "t(2,1)" or "t(1,2)s".
  std::string str() const;
  static Factor parse(std::string_view text);

  auto operator<=>(const Factor&) const = default;
};

// Length: number of walls separating the base alcove from its image.
int length(const Factor& x);

// Letters: 0 is the affine reflection, 1 is s. x = omega^k * r[0] * ... * r[n-1].
std::vector<int> reduced_word(const Factor& x);
Factor simple_reflection(int letter);
Factor omega_power(int k);

bool bruhat_leq(const Factor& x, const Factor& y);

// Product over embeddings.
struct Element {
  std::vector<Factor> factors;

  std::size_t size() const { return factors.size(); }
  Element operator*(const Element& o) const;
  Element inverse() const;
  Element shifted(std::size_t j, int a, int b) const;
  std::string str() const;  // factors joined by ';'
  static Element parse(std::string_view text);
  static Element identity(std::size_t f);
  auto operator<=>(const Element&) const = default;
};

bool is_supported_weight(const Weight& lambda);

// Exact admissible set of one embedding; lambda must be (0,0), (2,1) or (3,0).
std::vector<Factor> admissible_set(const Weight& lambda);
std::vector<Element> admissible_product(const std::vector<Weight>& lambdas);

// Shape data of the residual representation that matters combinatorially.
struct RhoBarShape {
  std::vector<bool> unipotent_nontrivial;  // N_j
  std::vector<bool> frak_w;                // flips of the presentation
  std::vector<Weight> mu;
  int depth = 0;
  bool reducible = false;

  std::size_t f() const { return unipotent_nontrivial.size(); }
  // Throws std::invalid_argument on inconsistent data.
  void validate(int p) const;
};

std::vector<Factor> adm_rho_factor(const Weight& lambda, bool unipotent_nontrivial);
std::vector<Element> adm_rho(const std::vector<Weight>& lambdas, const RhoBarShape& shape);
bool in_adm_rho(const Element& x, const std::vector<Weight>& lambdas, const RhoBarShape& shape);

struct HypercubeResult {
  bool pass = true;
  std::size_t checks = 0;
  std::vector<std::string> failures;
};

// Componentwise hypercube property of Adm_rho(2,1).
HypercubeResult hypercube_check(const std::vector<bool>& unipotent_nontrivial);

// A lowest alcove presentation (w, nu) of a tame type.
struct Presentation {
  std::vector<bool> w;
  std::vector<Weight> nu;
};

// depth < <nu+eta, alpha^vee> < p - depth at every embedding.
bool in_lowest_alcove(const std::vector<Weight>& nu, int p, int depth);

Element w_star(const Presentation& tau, int p, int depth);
Element w_star_rho(const RhoBarShape& shape);
Element w_star_rho_tau(const RhoBarShape& shape, const Presentation& tau, int p, int depth);
// Condition that the shape-relative element lies in Adm_rho(lambda).
bool type_lifts(const RhoBarShape& shape, const Presentation& tau, const std::vector<Weight>& lambdas, int p,
                int depth);

}  // namespace defring::weyl
