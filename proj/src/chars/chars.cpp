#include "defring/chars.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace defring::chars {

namespace {

using i128 = __int128;

std::int64_t mod(i128 x, std::int64_t m) {
  i128 r = x % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

std::int64_t ipow(std::int64_t b, std::size_t e) {
  i128 r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    r *= b;
    if (r > (static_cast<i128>(1) << 62)) throw std::overflow_error("p^e too large for exponent arithmetic");
  }
  return static_cast<std::int64_t>(r);
}

Vec2 swap(const Vec2& v) { return {v[1], v[0]}; }

}  // namespace

std::string to_string(Torus t) { return t == Torus::split ? "split" : "nonsplit"; }

WeightVector zero_weight(std::size_t f) { return WeightVector(f, Vec2{0, 0}); }

WeightVector root(std::size_t j, std::size_t f, int sign) {
  WeightVector r = zero_weight(f);
  r.at(j) = {sign, -sign};
  return r;
}

std::vector<WeightVector> roots(std::size_t f) {
  std::vector<WeightVector> out;
  for (int sign : {1, -1})
    for (std::size_t j = 0; j < f; ++j) out.push_back(root(j, f, sign));
  return out;
}

WeightVector operator+(const WeightVector& a, const WeightVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("weight vectors of different length");
  WeightVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = {a[i][0] + b[i][0], a[i][1] + b[i][1]};
  return r;
}

WeightVector operator-(const WeightVector& a) { return -1 * a; }

WeightVector operator*(std::int64_t k, const WeightVector& a) {
  WeightVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = {k * a[i][0], k * a[i][1]};
  return r;
}

std::int64_t Context::q() const { return ipow(p, f); }

std::int64_t Context::modulus() const { return torus == Torus::split ? q() - 1 : ipow(p, 2 * f) - 1; }

CharacterClass CharacterClass::operator+(const CharacterClass& o) const {
  if (torus != o.torus || modulus != o.modulus) throw std::invalid_argument("adding classes of different groups");
  CharacterClass r = *this;
  for (std::size_t i = 0; i < residues.size(); ++i) r.residues[i] = mod(static_cast<i128>(residues[i]) + o.residues[i], modulus);
  return r;
}

std::string CharacterClass::str() const {
  std::ostringstream os;
  os << to_string(torus) << ":(";
  for (std::size_t i = 0; i < residues.size(); ++i) os << (i ? "," : "") << residues[i];
  os << ") mod " << modulus;
  return os.str();
}

CharacterClass char_class(const WeightVector& mu, const Context& ctx) {
  if (mu.size() != ctx.f) throw std::invalid_argument("char_class: weight has wrong number of embeddings");
  CharacterClass c;
  c.torus = ctx.torus;
  c.modulus = ctx.modulus();
  i128 s1 = 0, s2 = 0, pw = 1;
  for (std::size_t i = 0; i < ctx.f; ++i) {
    s1 += pw * mu[i][0];
    s2 += pw * mu[i][1];
    pw *= ctx.p;
  }
  if (ctx.torus == Torus::split) {
    c.residues = {mod(s1, c.modulus), mod(s2, c.modulus)};
  } else {
    const i128 q = ctx.q();
    std::int64_t r = mod(s1 + q * mod(s2, c.modulus), c.modulus);
    if (ctx.conjugate) r = mod(static_cast<i128>(r) * q, c.modulus);
    c.residues = {r};
  }
  return c;
}

WeightVector frobenius_relation(const WeightVector& nu, const Context& ctx) {
  const std::size_t f = ctx.f;
  WeightVector r(f);
  for (std::size_t i = 0; i < f; ++i) {
    Vec2 next = nu[(i + 1) % f];
    if (i + 1 == f && ctx.torus == Torus::nonsplit) next = swap(next);
    r[i] = {ctx.p * next[0] - nu[i][0], ctx.p * next[1] - nu[i][1]};
  }
  return r;
}

bool regular(const CharacterClass& chi, const Context& ctx) {
  if (chi.torus == Torus::split) return chi.residues[0] != chi.residues[1];
  return mod(static_cast<i128>(chi.residues[0]) * ctx.q(), chi.modulus) != chi.residues[0];
}

ProductsResult check_products_of_embeddings(const Context& ctx) {
  ProductsResult res;
  std::vector<int> n(ctx.f, -2);
  while (true) {
    ++res.tuples;
    WeightVector mu = zero_weight(ctx.f);
    bool zero = true;
    for (std::size_t j = 0; j < ctx.f; ++j) {
      mu[j] = {n[j], -n[j]};
      zero = zero && n[j] == 0;
    }
    CharacterClass c = char_class(mu, ctx);
    bool trivial = std::all_of(c.residues.begin(), c.residues.end(), [](std::int64_t r) { return r == 0; });
    if (trivial && !zero) {
      res.ok = false;
      res.violations.push_back(mu);
    }
    std::size_t k = 0;
    while (k < ctx.f && n[k] == 2) n[k++] = -2;
    if (k == ctx.f) break;
    ++n[k];
  }
  return res;
}

GradedPieces graded_pieces(const CharacterClass& chi, const Context& ctx) {
  GradedPieces g;
  const std::size_t f = ctx.f;
  const auto rs = roots(f);
  g.degree[0].push_back(chi);
  for (const auto& a : rs) g.degree[1].push_back(chi + char_class(a, ctx));
  for (std::size_t i = 0; i < 2 * f; ++i) g.degree[2].push_back(chi);
  for (const auto& a : rs) g.degree[2].push_back(chi + char_class(2 * a, ctx));
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t k = i + 1; k < rs.size(); ++k) {
      if (i % f == k % f) continue;  // beta = -alpha
      g.degree[2].push_back(chi + char_class(rs[i] + rs[k], ctx));
    }
  return g;
}

std::size_t pbw_dimension(std::size_t f) {
  const std::size_t gens = 2 * f;
  return 1 + gens + gens * (gens + 1) / 2 + f;
}

AuditResult multiplicity_audit(const CharacterClass& chi, const Context& ctx) {
  AuditResult res;
  const GradedPieces g = graded_pieces(chi, ctx);
  std::map<CharacterClass, int> deg2, all;
  for (const auto& c : g.degree[2]) ++deg2[c];
  for (const auto& d : g.degree)
    for (const auto& c : d) ++all[c];
  std::ostringstream os;
  for (const auto& [c, m] : deg2) {
    if (c == chi) {
      if (m != static_cast<int>(2 * ctx.f)) {
        res.isotypic_size_ok = false;
        os << "isotypic part has size " << m << "; ";
      }
    } else if (m != 1) {
      res.complement_multiplicity_free = false;
      os << c.str() << " has multiplicity " << m << "; ";
    }
  }
  for (const auto& a : roots(ctx.f)) {
    CharacterClass c = chi + char_class(a, ctx);
    if (all[c] != 1) {
      res.shifts_multiplicity_one = false;
      os << "shift " << c.str() << " has multiplicity " << all[c] << "; ";
    }
  }
  res.detail = os.str();
  return res;
}

bool TauExponents::same_type(const TauExponents& o) const {
  if (d != o.d || modulus != o.modulus) return false;
  return (e[0] == o.e[0] && e[1] == o.e[1]) || (e[0] == o.e[1] && e[1] == o.e[0]);
}

std::string TauExponents::str() const {
  std::ostringstream os;
  os << "d=" << d << " {" << e[0] << "," << e[1] << "} mod " << modulus;
  return os.str();
}

std::vector<bool> torus_flips(Torus t, std::size_t f) {
  std::vector<bool> s(f, false);
  if (t == Torus::nonsplit) s.at(0) = true;
  return s;
}

TauExponents tau_exponents(const std::vector<bool>& flips, const WeightVector& mu, int p) {
  const std::size_t f = flips.size();
  if (mu.size() != f) throw std::invalid_argument("tau_exponents: size mismatch");
  const bool odd = std::count(flips.begin(), flips.end(), true) % 2 == 1;
  TauExponents t;
  t.d = static_cast<int>(odd ? 2 * f : f);
  t.modulus = ipow(p, t.d) - 1;
  WeightVector cur = mu;
  i128 e0 = 0, e1 = 0;
  for (int i = 0; i < t.d; ++i) {
    e0 += cur[0][0];
    e1 += cur[0][1];
    WeightVector next(f);
    for (std::size_t k = 0; k < f; ++k) {
      Vec2 v = cur[(k + 1) % f];
      if (flips[(k + 1) % f]) v = swap(v);
      next[k] = {mod(static_cast<i128>(p) * v[0], t.modulus), mod(static_cast<i128>(p) * v[1], t.modulus)};
    }
    cur = std::move(next);
  }
  t.e = {mod(e0, t.modulus), mod(e1, t.modulus)};
  return t;
}

namespace {

WeightVector to_weight(const std::vector<weyl::Weight>& nu, bool add_eta) {
  WeightVector r;
  for (const auto& [a, b] : nu) r.push_back({a + (add_eta ? 1 : 0), b});
  return r;
}

}  // namespace

WeightVector character_weight(const weyl::Presentation& pres, const Context& ctx) {
  TauExponents t = tau_exponents(pres.w, to_weight(pres.nu, true), ctx.p);
  WeightVector mu = zero_weight(ctx.f);
  if (ctx.torus == Torus::split)
    mu[0] = {t.e[0], t.e[1]};
  else
    mu[0] = {t.e[0], 0};
  return mu;
}

ShiftResult inertial_jl_shift(const weyl::Presentation& pres, const WeightVector& alpha, const Context& ctx,
                              int depth) {
  if (pres.w.size() != ctx.f || pres.nu.size() != ctx.f || alpha.size() != ctx.f)
    throw std::invalid_argument("inertial_jl_shift: embedding count mismatch");
  const bool odd = std::count(pres.w.begin(), pres.w.end(), true) % 2 == 1;
  if (odd != (ctx.torus == Torus::nonsplit))
    throw std::invalid_argument("inertial_jl_shift: presentation does not match the torus");
  ShiftResult r;
  r.mu = character_weight(pres, ctx);
  const std::vector<bool> wh = torus_flips(ctx.torus, ctx.f);
  if (!tau_exponents(wh, r.mu, ctx.p).same_type(tau_exponents(pres.w, to_weight(pres.nu, true), ctx.p)))
    throw std::logic_error("inertial_jl_shift: torus-side weight does not reproduce the type");
  if (!regular(char_class(r.mu, ctx), ctx)) throw std::invalid_argument("inertial_jl_shift: character is not regular");

  const WeightVector nu_eta = to_weight(pres.nu, true);
  r.target = tau_exponents(wh, r.mu + alpha, ctx.p);
  r.plus = tau_exponents(pres.w, nu_eta + alpha, ctx.p);
  r.minus = tau_exponents(pres.w, nu_eta + (-alpha), ctx.p);
  r.plus_ok = r.target.same_type(r.plus);
  r.minus_ok = r.target.same_type(r.minus);
  auto shifted_nu = [&](int eps) {
    std::vector<weyl::Weight> out = pres.nu;
    for (std::size_t j = 0; j < ctx.f; ++j) {
      out[j].first += static_cast<int>(eps * alpha[j][0]);
      out[j].second += static_cast<int>(eps * alpha[j][1]);
    }
    return out;
  };
  r.plus_in_alcove = weyl::in_lowest_alcove(shifted_nu(1), ctx.p, depth > 0 ? depth - 2 : 0);
  r.minus_in_alcove = weyl::in_lowest_alcove(shifted_nu(-1), ctx.p, depth > 0 ? depth - 2 : 0);

  const bool alpha_zero = std::all_of(alpha.begin(), alpha.end(), [](const Vec2& v) { return v[0] == 0 && v[1] == 0; });
  if (alpha_zero) {
    r.valid = true;
    r.epsilon = 1;
    r.message = "trivial shift";
  } else if (r.plus_ok && r.minus_ok) {
    r.message = "both signs agree";
  } else if (!r.plus_ok && !r.minus_ok) {
    r.message = "no sign agrees: target " + r.target.str() + ", +: " + r.plus.str() + ", -: " + r.minus.str();
  } else {
    r.epsilon = r.plus_ok ? 1 : -1;
    r.valid = r.epsilon == 1 ? r.plus_in_alcove : r.minus_in_alcove;
    r.message = r.valid ? "ok" : "shifted presentation leaves the lowest alcove";
  }
  return r;
}

weyl::Presentation random_presentation(std::mt19937_64& rng, const Context& ctx, int depth) {
  if (ctx.p - 2 * depth < 3) throw std::invalid_argument("random_presentation: depth too large for p");
  weyl::Presentation pres;
  std::uniform_int_distribution<int> coin(0, 1), low(-3, 3), pair(depth + 1, ctx.p - depth - 1);
  for (std::size_t j = 0; j < ctx.f; ++j) pres.w.push_back(coin(rng) == 1);
  const bool odd = std::count(pres.w.begin(), pres.w.end(), true) % 2 == 1;
  if (odd != (ctx.torus == Torus::nonsplit)) pres.w[0] = !pres.w[0];
  for (std::size_t j = 0; j < ctx.f; ++j) {
    const int b = low(rng);
    pres.nu.push_back({b - 1 + pair(rng), b});
  }
  return pres;
}

}  // namespace defring::chars
