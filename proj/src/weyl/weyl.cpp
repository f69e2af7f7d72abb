#include "defring/weyl.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace defring::weyl {

namespace {

Weight act(bool flip, int a, int b) { return flip ? Weight{b, a} : Weight{a, b}; }

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t')) --e;
  return std::string(s.substr(b, e - b));
}

int parse_int(std::string_view s, std::string_view whole) {
  std::string t = trim(s);
  int v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
    throw std::invalid_argument("bad Weyl element: " + std::string(whole));
  return v;
}

}  // namespace

Factor Factor::operator*(const Factor& o) const {
  // (z1 t_a)(z2 t_b) = z1 z2 t_{z2^{-1} a + b}
  Weight a = act(o.flip, nu1, nu2);
  return {flip != o.flip, a.first + o.nu1, a.second + o.nu2};
}

Factor Factor::inverse() const {
  Weight a = act(flip, nu1, nu2);
  return {flip, -a.first, -a.second};
}

std::string Factor::str() const {
  if (!flip) return "t(" + std::to_string(nu1) + "," + std::to_string(nu2) + ")";
  return "t(" + std::to_string(nu2) + "," + std::to_string(nu1) + ")s";
}

Factor Factor::parse(std::string_view text) {
  std::string t = trim(text);
  if (t.size() < 5 || t[0] != 't' || t[1] != '(') throw std::invalid_argument("bad Weyl element: " + t);
  auto close = t.find(')');
  if (close == std::string::npos) throw std::invalid_argument("bad Weyl element: " + t);
  std::string rest = trim(std::string_view(t).substr(close + 1));
  bool flip = false;
  if (rest == "s")
    flip = true;
  else if (!rest.empty())
    throw std::invalid_argument("bad Weyl element: " + t);
  std::string_view inner = std::string_view(t).substr(2, close - 2);
  auto comma = inner.find(',');
  if (comma == std::string_view::npos) throw std::invalid_argument("bad Weyl element: " + t);
  int a = parse_int(inner.substr(0, comma), t);
  int b = parse_int(inner.substr(comma + 1), t);
  return flip ? translation_then_s(a, b) : translation(a, b);
}

int length(const Factor& x) {
  // Base alcove: -1 < x1 - x2 < 0.
  return x.flip ? std::abs(x.nu2 - x.nu1 + 1) : std::abs(x.nu1 - x.nu2);
}

Factor simple_reflection(int letter) {
  if (letter == 1) return {true, 0, 0};
  if (letter == 0) return {true, 1, -1};
  throw std::invalid_argument("simple_reflection: letter must be 0 or 1");
}

Factor omega_power(int k) {
  const Factor omega{true, 1, 0};
  Factor r;
  Factor step = k >= 0 ? omega : omega.inverse();
  for (int i = 0; i < std::abs(k); ++i) r = r * step;
  return r;
}

std::vector<int> reduced_word(const Factor& x) {
  std::vector<int> word;
  Factor cur = x;
  int l = length(cur);
  while (l > 0) {
    bool found = false;
    for (int letter : {0, 1}) {
      Factor next = cur * simple_reflection(letter);
      if (length(next) < l) {
        word.push_back(letter);
        cur = next;
        --l;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("reduced_word: no right descent");
  }
  std::reverse(word.begin(), word.end());
  return word;
}

bool bruhat_leq(const Factor& x, const Factor& y) {
  if (x.omega() != y.omega()) return false;
  std::vector<int> u = reduced_word(x), v = reduced_word(y);
  // Subword criterion.
  std::size_t i = 0;
  for (std::size_t k = 0; k < v.size() && i < u.size(); ++k)
    if (v[k] == u[i]) ++i;
  return i == u.size();
}

Element Element::operator*(const Element& o) const {
  if (size() != o.size()) throw std::invalid_argument("Weyl product: embedding count mismatch");
  Element r;
  for (std::size_t j = 0; j < size(); ++j) r.factors.push_back(factors[j] * o.factors[j]);
  return r;
}

Element Element::inverse() const {
  Element r;
  for (const auto& x : factors) r.factors.push_back(x.inverse());
  return r;
}

Element Element::shifted(std::size_t j, int a, int b) const {
  Element r = *this;
  r.factors.at(j) = r.factors.at(j).shifted(a, b);
  return r;
}

std::string Element::str() const {
  std::string out;
  for (std::size_t j = 0; j < size(); ++j) {
    if (j) out += ";";
    out += factors[j].str();
  }
  return out;
}

Element Element::parse(std::string_view text) {
  Element r;
  std::size_t start = 0;
  while (true) {
    auto semi = text.find(';', start);
    r.factors.push_back(Factor::parse(text.substr(start, semi == std::string_view::npos ? semi : semi - start)));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return r;
}

Element Element::identity(std::size_t f) { return Element{std::vector<Factor>(f)}; }

bool is_supported_weight(const Weight& lambda) {
  return lambda == Weight{0, 0} || lambda == Weight{2, 1} || lambda == Weight{3, 0};
}

std::vector<Factor> admissible_set(const Weight& lambda) {
  if (!is_supported_weight(lambda))
    throw std::invalid_argument("unsupported weight (" + std::to_string(lambda.first) + "," +
                                std::to_string(lambda.second) + ")");
  const Factor top1 = Factor::translation(lambda.first, lambda.second);
  const Factor top2 = Factor::translation(lambda.second, lambda.first);
  const int d = top1.omega();
  const int bound = length(top1) + 2 + std::abs(d);
  std::vector<Factor> out;
  for (bool flip : {false, true})
    for (int a = -bound; a <= bound; ++a) {
      Factor x{flip, a, d - a};
      if (bruhat_leq(x, top1) || bruhat_leq(x, top2)) out.push_back(x);
    }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<Element> product_of(const std::vector<std::vector<Factor>>& sets) {
  std::vector<Element> out{Element{}};
  for (const auto& s : sets) {
    std::vector<Element> next;
    for (const auto& e : out)
      for (const auto& x : s) {
        Element n = e;
        n.factors.push_back(x);
        next.push_back(std::move(n));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<Element> admissible_product(const std::vector<Weight>& lambdas) {
  std::vector<std::vector<Factor>> sets;
  for (const auto& l : lambdas) sets.push_back(admissible_set(l));
  return product_of(sets);
}

void RhoBarShape::validate(int p) const {
  const std::size_t n = unipotent_nontrivial.size();
  if (n == 0) throw std::invalid_argument("shape: no embeddings");
  if (frak_w.size() != n || mu.size() != n) throw std::invalid_argument("shape: per-embedding sizes differ");
  if (reducible && std::any_of(frak_w.begin(), frak_w.end(), [](bool b) { return b; }))
    throw std::invalid_argument("shape: presentation must be trivial for a reducible representation");
  if (!in_lowest_alcove(mu, p, depth)) throw std::invalid_argument("shape: mu is not deep enough in the lowest alcove");
}

std::vector<Factor> adm_rho_factor(const Weight& lambda, bool unipotent_nontrivial) {
  std::vector<Factor> base = admissible_set(lambda);
  if (!unipotent_nontrivial || lambda == Weight{0, 0}) return base;
  const Factor excluded = Factor::translation(lambda.second, lambda.first);
  base.erase(std::remove(base.begin(), base.end(), excluded), base.end());
  return base;
}

std::vector<Element> adm_rho(const std::vector<Weight>& lambdas, const RhoBarShape& shape) {
  if (lambdas.size() != shape.f()) throw std::invalid_argument("adm_rho: embedding count mismatch");
  std::vector<std::vector<Factor>> sets;
  for (std::size_t j = 0; j < lambdas.size(); ++j)
    sets.push_back(adm_rho_factor(lambdas[j], shape.unipotent_nontrivial[j]));
  return product_of(sets);
}

bool in_adm_rho(const Element& x, const std::vector<Weight>& lambdas, const RhoBarShape& shape) {
  if (x.size() != lambdas.size() || x.size() != shape.f()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    auto s = adm_rho_factor(lambdas[j], shape.unipotent_nontrivial[j]);
    if (std::find(s.begin(), s.end(), x.factors[j]) == s.end()) return false;
  }
  return true;
}

HypercubeResult hypercube_check(const std::vector<bool>& unipotent_nontrivial) {
  const std::size_t f = unipotent_nontrivial.size();
  HypercubeResult res;
  std::vector<std::vector<Factor>> sets;
  for (std::size_t j = 0; j < f; ++j) sets.push_back(adm_rho_factor({2, 1}, unipotent_nontrivial[j]));
  const auto elems = product_of(sets);
  std::set<Element> adm(elems.begin(), elems.end());

  // Roots as (embedding, sign); alpha_j = (1,-1) at embedding j.
  std::vector<std::pair<std::size_t, int>> roots;
  for (std::size_t j = 0; j < f; ++j) {
    roots.push_back({j, 1});
    roots.push_back({j, -1});
  }
  auto fail = [&](const std::string& msg) {
    res.pass = false;
    res.failures.push_back(msg);
  };
  for (const auto& u : elems) {
    for (const auto& [j, s] : roots) {
      ++res.checks;
      Element v = u.shifted(j, 2 * s, -2 * s);
      if (adm.count(v)) fail(u.str() + " * t_2a(" + std::to_string(j) + "," + std::to_string(s) + ") admissible");
    }
    for (std::size_t a = 0; a < roots.size(); ++a)
      for (std::size_t b = a + 1; b < roots.size(); ++b) {
        const auto [j1, s1] = roots[a];
        const auto [j2, s2] = roots[b];
        if (j1 == j2) continue;  // proportional roots
        ++res.checks;
        Element both = u.shifted(j1, s1, -s1).shifted(j2, s2, -s2);
        if (!adm.count(both)) continue;
        if (!adm.count(u.shifted(j1, s1, -s1)) || !adm.count(u.shifted(j2, s2, -s2)))
          fail(u.str() + ": sum of roots admissible but a summand is not");
      }
  }
  return res;
}

bool in_lowest_alcove(const std::vector<Weight>& nu, int p, int depth) {
  for (const auto& [a, b] : nu) {
    const int pairing = a - b + 1;  // <nu + eta, alpha^vee>, eta = (1,0)
    if (!(depth < pairing && pairing < p - depth)) return false;
  }
  return true;
}

Element w_star(const Presentation& tau, int p, int depth) {
  if (tau.w.size() != tau.nu.size()) throw std::invalid_argument("presentation: per-embedding sizes differ");
  if (!in_lowest_alcove(tau.nu, p, depth)) throw std::invalid_argument("presentation not in the lowest alcove");
  Element r;
  for (std::size_t j = 0; j < tau.w.size(); ++j)
    r.factors.push_back(Factor{tau.w[j], tau.nu[j].first + 1, tau.nu[j].second});
  return r;
}

Element w_star_rho(const RhoBarShape& shape) {
  Element r;
  for (std::size_t j = 0; j < shape.f(); ++j)
    r.factors.push_back(Factor{shape.frak_w[j], shape.mu[j].first + 1, shape.mu[j].second});
  return r;
}

Element w_star_rho_tau(const RhoBarShape& shape, const Presentation& tau, int p, int depth) {
  return w_star_rho(shape) * w_star(tau, p, depth).inverse();
}

bool type_lifts(const RhoBarShape& shape, const Presentation& tau, const std::vector<Weight>& lambdas, int p,
                int depth) {
  return in_adm_rho(w_star_rho_tau(shape, tau, p, depth), lambdas, shape);
}

}  // namespace defring::weyl
