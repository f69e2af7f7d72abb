#include "defring/ideal.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace defring {

struct Ideal::Cache {
  std::mutex mu;
  std::map<std::string, std::shared_ptr<const GroebnerBasis>> bases;
};

Ideal::Ideal(RosterPtr roster, std::vector<Polynomial> generators)
    : roster_(std::move(roster)), cache_(std::make_shared<Cache>()) {
  if (!roster_) throw AlgebraError("ideal: missing roster");
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    require_same_roster(roster_, g.roster(), "ideal");
    generators_.push_back(std::move(g));
  }
}

TermOrder Ideal::default_order() const { return TermOrder::grevlex(*roster_); }

const GroebnerBasis& Ideal::basis() const { return basis(default_order()); }

const GroebnerBasis& Ideal::basis(const TermOrder& order) const {
  const std::string key = order.describe(*roster_);
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->bases.find(key);
    if (it != cache_->bases.end()) return *it->second;
  }
  auto computed = std::make_shared<const GroebnerBasis>(groebner(roster_, generators_, order));
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto [it, inserted] = cache_->bases.emplace(key, std::move(computed));
  return *it->second;
}

bool Ideal::contains(const Polynomial& f) const {
  require_same_roster(roster_, f.roster(), "member");
  return basis().reduces_to_zero(f);
}

bool Ideal::contains(const Ideal& other) const {
  require_same_roster(roster_, other.roster_, "ideal containment");
  for (const auto& g : other.generators_)
    if (!contains(g)) return false;
  return true;
}

bool Ideal::is_unit() const { return basis().is_unit(); }
bool Ideal::is_zero() const { return generators_.empty(); }

Ideal Ideal::with(const std::vector<Polynomial>& extra) const {
  std::vector<Polynomial> gens = generators_;
  gens.insert(gens.end(), extra.begin(), extra.end());
  return Ideal(roster_, std::move(gens));
}

Ideal Ideal::transport(const RosterPtr& target) const {
  std::vector<Polynomial> gens;
  for (const auto& g : generators_) gens.push_back(g.transport(target));
  return Ideal(target, std::move(gens));
}

std::string Ideal::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) os << (i ? ", " : "") << generators_[i].str();
  os << ")";
  return os.str();
}

bool member(const Polynomial& f, const Ideal& I) { return I.contains(f); }

bool ideal_equal(const Ideal& I, const Ideal& J) {
  require_same_roster(I.roster(), J.roster(), "ideal_equal");
  return I.contains(J) && J.contains(I);
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  require_same_roster(I.roster(), J.roster(), "ideal_sum");
  return I.with(J.generators());
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  require_same_roster(I.roster(), J.roster(), "ideal_product");
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators())
    for (const auto& g : J.generators()) gens.push_back(f * g);
  return Ideal(I.roster(), std::move(gens));
}

namespace {

std::string fresh_name(const Roster& roster, std::string base) {
  while (roster.contains(base)) base = "~" + base;
  return base;
}

RosterPtr prepend(const Roster& roster, const std::vector<std::string>& extra) {
  std::vector<std::string> names = extra;
  names.insert(names.end(), roster.names().begin(), roster.names().end());
  return Roster::make(std::move(names));
}

}  // namespace

Ideal eliminate(const Ideal& I, const std::vector<std::string>& vars) {
  // Work with the homogenized generators: the block order then behaves like a
  // graded order and rational coefficient growth stays small. An element whose
  // leading term avoids the eliminated block avoids it entirely, so dehomogenizing
  // the surviving elements generates the elimination ideal.
  const Roster& r = *I.roster();
  const std::string hname = fresh_name(r, "~h");
  std::vector<std::string> names = r.names();
  names.push_back(hname);
  auto ext = Roster::make(names);
  const std::size_t hi = ext->index(hname);
  std::vector<Polynomial> homog;
  for (const auto& g : I.generators()) {
    const unsigned d = g.total_degree();
    Polynomial f(ext);
    for (const auto& [m, c] : g.terms()) {
      Monomial e;
      for (std::size_t i = 0; i < r.size(); ++i) e.set(i, m[i]);
      e.set(hi, d - m.degree());
      f.add_term(e, c);
    }
    homog.push_back(std::move(f));
  }
  std::vector<std::size_t> drop;
  for (const auto& v : vars) drop.push_back(ext->index(v));
  std::vector<std::string> keep;
  std::vector<std::size_t> keep_at;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (std::find(drop.begin(), drop.end(), i) == drop.end()) {
      keep.push_back(r.name(i));
      keep_at.push_back(i);
    }
  auto target = Roster::make(keep);
  const GroebnerBasis gb = groebner(ext, homog, TermOrder::elimination(*ext, vars));
  std::vector<Polynomial> gens;
  for (const auto& g : gb.elements()) {
    bool uses = false;
    for (auto d : drop) uses = uses || g.involves(d);
    if (uses) continue;
    Polynomial f(target);
    for (const auto& [m, c] : g.terms()) {
      Monomial e;
      for (std::size_t k = 0; k < keep_at.size(); ++k) e.set(k, m[keep_at[k]]);
      f.add_term(e, c);
    }
    gens.push_back(std::move(f));
  }
  return Ideal(target, std::move(gens));
}

Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
  require_same_roster(I.roster(), J.roster(), "ideal_intersect");
  const std::string tag = fresh_name(*I.roster(), "~t");
  auto ext = prepend(*I.roster(), {tag});
  Polynomial t = Polynomial::variable(ext, tag);
  Polynomial one_minus_t = Polynomial(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators()) gens.push_back(t * f.transport(ext));
  for (const auto& g : J.generators()) gens.push_back(one_minus_t * g.transport(ext));
  Ideal big(ext, std::move(gens));
  return eliminate(big, {tag}).transport(I.roster());
}

Ideal ideal_saturate(const Ideal& I, const Polynomial& f) {
  require_same_roster(I.roster(), f.roster(), "ideal_saturate");
  if (f.is_zero()) throw AlgebraError("ideal_saturate: cannot saturate by zero");
  const std::string tag = fresh_name(*I.roster(), "~t");
  auto ext = prepend(*I.roster(), {tag});
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g.transport(ext));
  gens.push_back(Polynomial::variable(ext, tag) * f.transport(ext) - Rational(1));
  Ideal big(ext, std::move(gens));
  return eliminate(big, {tag}).transport(I.roster());
}

// ---- RingMap ----

struct RingMap::Graph {
  std::once_flag once;
  RosterPtr combined;
  std::size_t ntarget = 0;
  std::shared_ptr<const GroebnerBasis> gb;
  std::unique_ptr<Ideal> kernel;
  bool surjective = false;
};

RingMap::RingMap(RosterPtr source, RosterPtr target, std::vector<Polynomial> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)),
      graph_(std::make_shared<Graph>()) {
  if (images_.size() != source_->size()) throw AlgebraError("ring map: image count does not match source roster");
  for (const auto& im : images_) {
    if (im.roster()) require_same_roster(target_, im.roster(), "ring map");
  }
  for (auto& im : images_)
    if (!im.roster()) im = Polynomial(target_);
}

RingMap RingMap::from_pairs(RosterPtr source, RosterPtr target,
                            const std::vector<std::pair<std::string, Polynomial>>& pairs) {
  std::vector<Polynomial> images(source->size());
  std::vector<bool> seen(source->size(), false);
  for (const auto& [name, img] : pairs) {
    auto i = source->index(name);
    if (seen[i]) throw AlgebraError("ring map: variable mapped twice: " + name);
    seen[i] = true;
    images[i] = img;
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) throw AlgebraError("ring map: unmapped variable " + source->name(i));
  return RingMap(std::move(source), std::move(target), std::move(images));
}

RingMap RingMap::relabel(RosterPtr source, RosterPtr target,
                         const std::vector<std::pair<std::string, std::string>>& renames) {
  std::vector<Polynomial> images;
  for (const auto& name : source->names()) {
    std::string to = name;
    for (const auto& [a, b] : renames)
      if (a == name) to = b;
    images.push_back(Polynomial::variable(target, to));
  }
  return RingMap(std::move(source), std::move(target), std::move(images));
}

Polynomial RingMap::operator()(const Polynomial& f) const {
  require_same_roster(source_, f.roster(), "ring map apply");
  Polynomial out(target_);
  std::map<std::pair<std::size_t, unsigned>, Polynomial> powers;
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto key = std::make_pair(i, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, images_[i].pow(e)).first;
    return it->second;
  };
  for (const auto& [m, c] : f.terms()) {
    Polynomial t(target_, c);
    for (std::size_t i = 0; i < source_->size() && !t.is_zero(); ++i)
      if (m[i]) t = t * power(i, m[i]);
    out += t;
  }
  return out;
}

Ideal RingMap::operator()(const Ideal& I) const {
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back((*this)(g));
  return Ideal(target_, std::move(gens));
}

namespace {

Polynomial shift_into(const Polynomial& f, const RosterPtr& combined, std::size_t offset) {
  Polynomial out(combined);
  for (const auto& [m, c] : f.terms()) {
    Monomial s;
    for (std::size_t i = 0; i + offset < kMaxVars && i < f.roster()->size(); ++i)
      if (m[i]) s.set(i + offset, m[i]);
    out.add_term(s, c);
  }
  return out;
}

bool uses_prefix(const Polynomial& f, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (f.involves(i)) return true;
  return false;
}

Polynomial shift_out(const Polynomial& f, const RosterPtr& target, std::size_t offset) {
  Polynomial out(target);
  for (const auto& [m, c] : f.terms()) {
    Monomial s;
    for (std::size_t i = 0; i < target->size(); ++i)
      if (m[i + offset]) s.set(i, m[i + offset]);
    out.add_term(s, c);
  }
  return out;
}

}  // namespace

const RingMap::Graph& RingMap::graph() const {
  std::call_once(graph_->once, [this] {
    Graph& g = *graph_;
    std::vector<std::string> names;
    for (const auto& n : target_->names()) {
      std::string m = "~" + n;
      while (source_->contains(m)) m = "~" + m;
      names.push_back(m);
    }
    std::vector<std::string> eliminated = names;
    names.insert(names.end(), source_->names().begin(), source_->names().end());
    g.combined = Roster::make(names);
    g.ntarget = target_->size();
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < source_->size(); ++i) {
      Monomial m;
      m.set(g.ntarget + i, 1);
      gens.push_back(Polynomial::term(g.combined, m, Rational(1)) - shift_into(images_[i], g.combined, 0));
    }
    g.gb = std::make_shared<const GroebnerBasis>(
        groebner(g.combined, gens, TermOrder::elimination(*g.combined, eliminated)));
    std::vector<Polynomial> kernel_gens;
    for (const auto& e : g.gb->elements())
      if (!uses_prefix(e, g.ntarget)) kernel_gens.push_back(shift_out(e, source_, g.ntarget));
    g.kernel = std::make_unique<Ideal>(source_, std::move(kernel_gens));
    g.surjective = true;
    for (std::size_t i = 0; i < g.ntarget && g.surjective; ++i) {
      Monomial m;
      m.set(i, 1);
      if (uses_prefix(g.gb->normal_form(Polynomial::term(g.combined, m, Rational(1))), g.ntarget))
        g.surjective = false;
    }
  });
  return *graph_;
}

const Ideal& RingMap::kernel() const { return *graph().kernel; }

bool RingMap::surjective() const { return graph().surjective; }

Polynomial RingMap::lift(const Polynomial& f) const {
  require_same_roster(target_, f.roster(), "ring map lift");
  const Graph& g = graph();
  Polynomial nf = g.gb->normal_form(shift_into(f, g.combined, 0));
  if (uses_prefix(nf, g.ntarget)) throw AlgebraError("ring map lift: map is not surjective onto " + target_->str());
  return shift_out(nf, source_, g.ntarget);
}

Polynomial substitute(const Polynomial& f, const RingMap& map) { return map(f); }

Ideal preimage_ideal(const RingMap& pr, const Ideal& I) {
  require_same_roster(pr.target(), I.roster(), "preimage_ideal");
  if (!pr.surjective()) throw AlgebraError("preimage_ideal: map is not surjective");
  std::vector<Polynomial> gens = pr.kernel().generators();
  for (const auto& g : I.generators()) gens.push_back(pr.lift(g));
  return Ideal(pr.source(), std::move(gens));
}

}  // namespace defring
