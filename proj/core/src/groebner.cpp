#include "eulercg/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "eulercg/errors.hpp"

namespace ecg {

namespace {

struct Elem {
  Poly p;
  std::vector<Poly> cof;
};

// Full reduction of f by gs. The remainder is kept in an ordered map so each
// step costs |g| log |f| rather than a pass over all of f. Quotient terms are
// appended to quot[k] when quot is given.
Poly reduce_by(const Poly& f, const std::vector<const Poly*>& gs,
               std::vector<std::vector<Term>>* quot) {
  const MonomialOrder ord = f.order();
  auto desc = [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) > 0; };
  std::map<Monomial, Rational, decltype(desc)> rem(desc);
  for (const auto& t : f.terms()) rem.emplace(t.m, t.c);
  std::vector<Term> out;
  while (!rem.empty()) {
    auto top = rem.begin();
    int hit = -1;
    for (std::size_t k = 0; k < gs.size(); ++k)
      if (divides(gs[k]->lead().m, top->first)) {
        hit = static_cast<int>(k);
        break;
      }
    if (hit < 0) {
      out.push_back({top->first, std::move(top->second)});
      rem.erase(top);
      continue;
    }
    const Poly& g = *gs[hit];
    Rational c = top->second / g.lead().c;
    Monomial m = quotient(top->first, g.lead().m);
    rem.erase(top);
    for (std::size_t i = 1; i < g.size(); ++i) {
      const Term& t = g.terms()[i];
      auto [it, fresh] = rem.try_emplace(product(t.m, m), -c * t.c);
      if (!fresh) {
        it->second -= c * t.c;
        if (it->second == 0) rem.erase(it);
      }
    }
    if (quot) (*quot)[hit].push_back({std::move(m), std::move(c)});
  }
  return Poly::from_terms(f.nvars(), std::move(out), ord);
}

// Full reduction of f by the listed elements. Returns the remainder and,
// when tracking, its cofactor vector.
Elem reduce_tracked(const Elem& f, const std::vector<Elem>& G,
                    const std::vector<int>& active, bool track) {
  std::vector<const Poly*> gs;
  for (int k : active) gs.push_back(&G[k].p);
  std::vector<std::vector<Term>> q(active.size());
  Poly p = reduce_by(f.p, gs, track ? &q : nullptr);
  std::vector<std::vector<Term>> quot(G.size());
  for (std::size_t i = 0; i < active.size(); ++i) quot[active[i]] = std::move(q[i]);
  Elem out{p, {}};
  if (track) {
    out.cof = f.cof;
    for (std::size_t k = 0; k < G.size(); ++k) {
      if (quot[k].empty()) continue;
      Poly q = Poly::from_terms(p.nvars(), std::move(quot[k]), p.order());
      for (std::size_t j = 0; j < out.cof.size(); ++j)
        if (!G[k].cof[j].is_zero()) out.cof[j] -= q * G[k].cof[j];
    }
  }
  return out;
}

void make_monic(Elem& e, bool track) {
  Rational inv = 1 / e.p.lead().c;
  if (inv == 1) return;
  e.p = e.p.scaled(inv);
  if (track)
    for (auto& c : e.cof) c = c.scaled(inv);
}

struct PairKey {
  Monomial lcm;
  int i, j;
};

}  // namespace

GroebnerBasis buchberger(const std::vector<Poly>& input,
                         const MonomialOrder& order, bool track) {
  GroebnerBasis out;
  out.order = order;
  out.tracked = track;
  int m = static_cast<int>(input.size());
  for (const auto& f : input) out.input.push_back(f.with_order(order));
  if (m == 0) return out;
  int nv = input[0].nvars();

  auto pair_less = [&order](const PairKey& a, const PairKey& b) {
    int c = order.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::set<PairKey, decltype(pair_less)> queue(pair_less);
  std::set<std::pair<int, int>> pending;
  std::vector<Elem> G;
  std::vector<int> active;
  int unit_at = -1;

  auto add = [&](Elem e) {
    make_monic(e, track);
    int idx = static_cast<int>(G.size());
    for (int k : active) {
      queue.insert({lcm(G[k].p.lead().m, e.p.lead().m), k, idx});
      pending.insert({k, idx});
    }
    G.push_back(std::move(e));
    active.push_back(idx);
    if (G[idx].p.is_constant()) unit_at = idx;
  };

  for (int j = 0; j < m && unit_at < 0; ++j) {
    Elem e{out.input[j], {}};
    if (track) {
      e.cof.assign(m, Poly(nv, order));
      e.cof[j] = Poly::constant(nv, 1).with_order(order);
    }
    if (e.p.is_zero()) continue;
    Elem r = reduce_tracked(e, G, active, track);
    if (!r.p.is_zero()) add(std::move(r));
  }

  while (!queue.empty() && unit_at < 0) {
    PairKey pk = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({pk.i, pk.j});
    const Elem& a = G[pk.i];
    const Elem& b = G[pk.j];
    if (coprime(a.p.lead().m, b.p.lead().m)) continue;
    bool chain = false;
    for (int k : active) {
      if (k == pk.i || k == pk.j) continue;
      if (!divides(G[k].p.lead().m, pk.lcm)) continue;
      auto ik = std::minmax(pk.i, k);
      auto jk = std::minmax(pk.j, k);
      if (!pending.count({ik.first, ik.second}) &&
          !pending.count({jk.first, jk.second})) {
        chain = true;
        break;
      }
    }
    if (chain) continue;
    Monomial ma = quotient(pk.lcm, a.p.lead().m);
    Monomial mb = quotient(pk.lcm, b.p.lead().m);
    Elem s;
    s.p = a.p.mul_term(ma, 1) - b.p.mul_term(mb, 1);
    if (track) {
      s.cof.resize(m);
      for (int j = 0; j < m; ++j)
        s.cof[j] = a.cof[j].mul_term(ma, 1) - b.cof[j].mul_term(mb, 1);
    }
    Elem r = reduce_tracked(s, G, active, track);
    if (!r.p.is_zero()) add(std::move(r));
  }

  std::vector<Elem> fin;
  if (unit_at >= 0) {
    fin.push_back(G[unit_at]);
  } else {
    // Minimize: drop elements whose lead is divisible by another kept lead.
    std::vector<int> keep;
    for (int k : active) {
      bool redundant = false;
      for (int l : active) {
        if (l == k) continue;
        const Monomial& lk = G[k].p.lead().m;
        const Monomial& ll = G[l].p.lead().m;
        if (divides(ll, lk) && (ll != lk || l < k)) {
          redundant = true;
          break;
        }
      }
      if (!redundant) keep.push_back(k);
    }
    for (int k : keep) {
      std::vector<int> others;
      for (int l : keep)
        if (l != k) others.push_back(l);
      // Lead is irreducible by the others, so full reduction only touches
      // the tail.
      Elem r = reduce_tracked(G[k], G, others, track);
      make_monic(r, track);
      fin.push_back(std::move(r));
    }
    std::sort(fin.begin(), fin.end(), [&](const Elem& x, const Elem& y) {
      return order.compare(x.p.lead().m, y.p.lead().m) < 0;
    });
  }
  for (auto& e : fin) {
    out.basis.push_back(std::move(e.p));
    if (track) out.cofactors.push_back(std::move(e.cof));
  }
  return out;
}

NormalForm normal_form(const Poly& f, const GroebnerBasis& gb) {
  int nb = static_cast<int>(gb.basis.size());
  std::vector<const Poly*> gs;
  for (const auto& b : gb.basis) gs.push_back(&b);
  std::vector<std::vector<Term>> quot(nb);
  Poly p = nb == 0 ? f.with_order(gb.order) : reduce_by(f.with_order(gb.order), gs, &quot);
  NormalForm nf;
  nf.remainder = p;
  for (int k = 0; k < nb; ++k)
    nf.quotients.push_back(Poly::from_terms(f.nvars(), std::move(quot[k]), gb.order));
  return nf;
}

Poly reduce(const Poly& f, const GroebnerBasis& gb) {
  if (gb.basis.empty()) return f;
  std::vector<const Poly*> gs;
  for (const auto& b : gb.basis) gs.push_back(&b);
  return reduce_by(f.with_order(gb.order), gs, nullptr);
}

Ideal::Ideal(Ring ring, std::vector<Poly> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    if (g.nvars() != ring_->nvars())
      throw PreconditionError("generator variable count differs from ring");
    gens_.push_back(g.with_order(MonomialOrder::grevlex()));
  }
}

const GroebnerBasis& Ideal::gb() const {
  std::call_once(cache_->once, [this] {
    std::vector<Poly> input = gens_;
    for (const auto& m : ring_->modulus()) input.push_back(m);
    cache_->gb = buchberger(input, MonomialOrder::grevlex(), true);
  });
  return cache_->gb;
}

bool Ideal::contains(const Ideal& o) const {
  for (const auto& g : o.gens())
    if (!contains(g)) return false;
  return true;
}

Ideal Ideal::operator+(const Ideal& o) const {
  std::vector<Poly> g = gens_;
  g.insert(g.end(), o.gens_.begin(), o.gens_.end());
  return Ideal(ring_, g);
}

Ideal Ideal::operator*(const Ideal& o) const {
  std::vector<Poly> g;
  for (const auto& a : gens_)
    for (const auto& b : o.gens_) g.push_back(ring_->reduce(a * b));
  return Ideal(ring_, g);
}

Ideal Ideal::pow(int k) const {
  Ideal r = unit(ring_);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

Ideal Ideal::with(const std::vector<Poly>& extra) const {
  std::vector<Poly> g = gens_;
  g.insert(g.end(), extra.begin(), extra.end());
  return Ideal(ring_, g);
}

std::optional<MembershipCertificate> ideal_member(const Poly& f, const Ideal& I) {
  const GroebnerBasis& gb = I.gb();
  NormalForm nf = normal_form(f, gb);
  if (!nf.remainder.is_zero()) return std::nullopt;
  std::size_t ng = I.gens().size();
  MembershipCertificate cert{f, I, std::vector<Poly>(ng, I.ring()->zero())};
  for (std::size_t k = 0; k < gb.basis.size(); ++k) {
    if (nf.quotients[k].is_zero()) continue;
    for (std::size_t j = 0; j < ng; ++j)
      if (!gb.cofactors[k][j].is_zero())
        cert.cofactors[j] += nf.quotients[k] * gb.cofactors[k][j];
  }
  for (auto& c : cert.cofactors) c = I.ring()->reduce(c).with_order(MonomialOrder::grevlex());
  return cert;
}

bool verify_membership(const MembershipCertificate& c) {
  const Ring& ring = c.ideal.ring();
  if (c.cofactors.size() != c.ideal.gens().size()) return false;
  Poly sum = ring->zero();
  for (std::size_t i = 0; i < c.cofactors.size(); ++i) {
    if (c.cofactors[i].nvars() != ring->nvars()) return false;
    sum += c.cofactors[i] * c.ideal.gens()[i];
  }
  return ring->equal(sum, c.element);
}

bool radical_member(const Poly& f, const Ideal& I) {
  const Ring& ring = I.ring();
  int n = ring->nvars();
  std::vector<Poly> input;
  for (const auto& g : I.gens()) input.push_back(extend_poly(g, n + 1));
  for (const auto& g : ring->modulus()) input.push_back(extend_poly(g, n + 1));
  Poly w = Poly::variable(n + 1, n);
  input.push_back(Poly::constant(n + 1, 1) - w * extend_poly(f, n + 1));
  return buchberger(input, MonomialOrder::grevlex(), false).is_unit();
}

Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
  const Ring& ring = I.ring();
  if (!ring->same_as(*J.ring()))
    throw PreconditionError("intersection of ideals over different rings");
  int n = ring->nvars();
  std::vector<int> up(n);
  for (int i = 0; i < n; ++i) up[i] = i + 1;
  Poly t = Poly::variable(n + 1, 0);
  Poly one_minus_t = Poly::constant(n + 1, 1) - t;
  std::vector<Poly> input;
  for (const auto& g : I.gens()) input.push_back(t * g.remap(n + 1, up));
  for (const auto& g : J.gens()) input.push_back(one_minus_t * g.remap(n + 1, up));
  for (const auto& g : ring->modulus()) input.push_back(g.remap(n + 1, up));
  GroebnerBasis gb = buchberger(input, MonomialOrder::elimination(1), false);
  std::vector<Poly> out;
  for (const auto& b : gb.basis) {
    if (b.degree_in(0) > 0) continue;
    std::vector<Term> ts;
    for (const auto& term : b.terms())
      ts.push_back({Monomial(term.m.begin() + 1, term.m.end()), term.c});
    Poly p = Poly::from_terms(n, std::move(ts));
    if (!ring->is_zero(p)) out.push_back(p);
  }
  return Ideal(ring, out);
}

std::optional<ComaximalityCertificate> comaximal(const Ideal& I, const Ideal& J) {
  const Ring& ring = I.ring();
  if (!ring->same_as(*J.ring()))
    throw PreconditionError("comaximality of ideals over different rings");
  std::vector<Poly> input = I.gens();
  input.insert(input.end(), J.gens().begin(), J.gens().end());
  for (const auto& g : ring->modulus()) input.push_back(g);
  GroebnerBasis gb = buchberger(input, MonomialOrder::grevlex(), true);
  if (!gb.is_unit()) return std::nullopt;
  const auto& row = gb.cofactors[0];
  Rational inv = 1 / gb.basis[0].lead().c;
  std::size_t ni = I.gens().size(), nj = J.gens().size();
  ComaximalityCertificate c;
  c.u = ring->zero();
  std::vector<Poly> cu(ni), cv(nj);
  for (std::size_t i = 0; i < ni; ++i) {
    cu[i] = ring->reduce(row[i].scaled(inv)).with_order(MonomialOrder::grevlex());
    c.u += cu[i] * I.gens()[i];
  }
  for (std::size_t j = 0; j < nj; ++j)
    cv[j] = ring->reduce(row[ni + j].scaled(inv)).with_order(MonomialOrder::grevlex());
  c.v = ring->one() - c.u;
  c.u_in_i = {c.u, I, cu};
  c.v_in_j = {c.v, J, cv};
  return c;
}

bool verify_comaximal(const ComaximalityCertificate& c) {
  const Ring& ring = c.u_in_i.ideal.ring();
  return c.u_in_i.element == c.u && c.v_in_j.element == c.v &&
         verify_membership(c.u_in_i) && verify_membership(c.v_in_j) &&
         c.u + c.v == ring->one();
}

int krull_dimension(const Ideal& I) {
  const GroebnerBasis& gb = I.gb();
  if (gb.is_unit()) return -1;
  int n = I.nvars();
  std::vector<unsigned> supports;
  for (const auto& b : gb.basis) {
    unsigned s = 0;
    for (int i = 0; i < n; ++i)
      if (b.lead().m[i] > 0) s |= 1u << i;
    supports.push_back(s);
  }
  int best = 0;
  for (unsigned u = 0; u < (1u << n); ++u) {
    int size = __builtin_popcount(u);
    if (size <= best) continue;
    bool independent = true;
    for (unsigned s : supports)
      if ((s & ~u) == 0) {
        independent = false;
        break;
      }
    if (independent) best = size;
  }
  return best;
}

int height(const Ideal& I) {
  if (!I.ring()->is_domain())
    throw PreconditionError("height needs a ring flagged equidimensional");
  int d = krull_dimension(I);
  if (d < 0) throw PreconditionError("height of the unit ideal");
  return I.ring()->asserted_dimension() - d;
}

bool height_at_least(const Ideal& I, int n) {
  if (I.is_unit()) return true;
  return height(I) >= n;
}

IdealEquality equal_ideals(const Ideal& I, const Ideal& J) {
  IdealEquality e;
  const auto& a = I.gb().basis;
  const auto& b = J.gb().basis;
  if (a.size() != b.size()) return e;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return e;
  for (const auto& g : I.gens()) e.forward.push_back(*ideal_member(g, J));
  for (const auto& g : J.gens()) e.backward.push_back(*ideal_member(g, I));
  e.equal = true;
  return e;
}

bool verify_equality(const IdealEquality& e) {
  if (!e.equal) return false;
  for (const auto& c : e.forward)
    if (!verify_membership(c)) return false;
  for (const auto& c : e.backward)
    if (!verify_membership(c)) return false;
  return true;
}

std::vector<Poly> square_generators(const std::vector<Poly>& gens) {
  std::vector<Poly> out;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i; j < gens.size(); ++j) out.push_back(gens[i] * gens[j]);
  return out;
}

}  // namespace ecg
