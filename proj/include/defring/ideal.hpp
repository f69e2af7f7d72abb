#pragma once

#include <memory>
#include <string>
#include <vector>

#include "defring/groebner.hpp"

namespace defring {

// Immutable ideal with a lazily filled, thread-safe Groebner basis cache.
class Ideal {
 public:
  explicit Ideal(RosterPtr roster, std::vector<Polynomial> generators = {});

  const RosterPtr& roster() const { return roster_; }
  const std::vector<Polynomial>& generators() const { return generators_; }

  // Default order: grevlex in roster order.
  TermOrder default_order() const;
  const GroebnerBasis& basis() const;
  const GroebnerBasis& basis(const TermOrder& order) const;

  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;
  bool is_unit() const;
  bool is_zero() const;

  // Generators of the reduced basis under the default order.
  std::vector<Polynomial> reduced_generators() const { return basis().elements(); }

  Ideal with(const std::vector<Polynomial>& extra) const;
  Ideal with(const Polynomial& extra) const { return with(std::vector<Polynomial>{extra}); }
  Ideal transport(const RosterPtr& target) const;

  std::string str() const;

 private:
  struct Cache;
  RosterPtr roster_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

bool member(const Polynomial& f, const Ideal& I);
bool ideal_equal(const Ideal& I, const Ideal& J);
Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
Ideal ideal_intersect(const Ideal& I, const Ideal& J);
Ideal ideal_saturate(const Ideal& I, const Polynomial& f);
// Drops the named variables: I intersected with the subring on the rest.
Ideal eliminate(const Ideal& I, const std::vector<std::string>& vars);

// Ring homomorphism Q[source] -> Q[target] given by images of the source
// variables. Copies share the kernel cache.
class RingMap {
 public:
  RingMap(RosterPtr source, RosterPtr target, std::vector<Polynomial> images);
  // Images given by name; every source variable must be listed.
  static RingMap from_pairs(RosterPtr source, RosterPtr target,
                            const std::vector<std::pair<std::string, Polynomial>>& pairs);
  // Rename variables; names absent from `renames` keep their name.
  static RingMap relabel(RosterPtr source, RosterPtr target,
                         const std::vector<std::pair<std::string, std::string>>& renames);

  const RosterPtr& source() const { return source_; }
  const RosterPtr& target() const { return target_; }
  const Polynomial& image(std::size_t i) const { return images_.at(i); }
  const Polynomial& image(std::string_view name) const { return images_.at(source_->index(name)); }

  Polynomial operator()(const Polynomial& f) const;
  Ideal operator()(const Ideal& I) const;  // ideal generated by the image

  // Kernel, computed once by graph-ideal elimination.
  const Ideal& kernel() const;
  // Some g with map(g) == f; throws when the map is not surjective.
  Polynomial lift(const Polynomial& f) const;
  bool surjective() const;

 private:
  struct Graph;
  const Graph& graph() const;

  RosterPtr source_, target_;
  std::vector<Polynomial> images_;
  std::shared_ptr<Graph> graph_;
};

Polynomial substitute(const Polynomial& f, const RingMap& map);
Ideal preimage_ideal(const RingMap& pr, const Ideal& I);

}  // namespace defring
