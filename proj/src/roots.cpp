#include "qheun/roots.hpp"

#include <algorithm>
#include <deque>

namespace qheun {

std::vector<UPoly> sturm_chain(const UPoly& p) {
  std::vector<UPoly> chain;
  chain.push_back(p);
  if (p.degree() < 1) return chain;
  chain.push_back(p.derivative());
  while (chain.back().degree() >= 1) {
    UPoly r = chain[chain.size() - 2].mod(chain.back());
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

static int sign_variations(const std::vector<UPoly>& chain, const Rat& x) {
  int v = 0, prev = 0;
  for (const auto& q : chain) {
    int s = q.eval(x).sign();
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

int sturm_count(const std::vector<UPoly>& chain, const Rat& a, const Rat& b) {
  return sign_variations(chain, a) - sign_variations(chain, b);
}

Rat cauchy_root_bound(const UPoly& p) {
  if (p.degree() < 1) return Rat(0);
  Rat m(0);
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, p.coeff(i).abs());
  return Rat(1) + m / p.leading().abs();
}

Rat simplest_rational_in(const Rat& lo, const Rat& hi) {
  if (hi < lo) return simplest_rational_in(hi, lo);
  if (lo.sign() <= 0 && hi.sign() >= 0) return Rat(0);
  if (hi.sign() < 0) return -simplest_rational_in(-hi, -lo);
  // 0 < lo <= hi
  Rat c(mpz_class(lo.ceil()));
  if (c <= hi) return c;
  Rat fl(mpz_class(lo.floor()));
  Rat inner = simplest_rational_in((hi - fl).inv(), (lo - fl).inv());
  return fl + inner.inv();
}

namespace {

// Working state shared by the isolation passes.
struct Isolator {
  const UPoly& g;  // squarefree part
  std::vector<UPoly> chain;

  bool is_root(const Rat& x) const { return g.eval(x).is_zero(); }

  // A split point in (a, b) that is not a root of g.
  Rat nonroot_split(const Rat& a, const Rat& b) const {
    Rat mid = (a + b) * Rat(1, 2);
    if (!is_root(mid)) return mid;
    Rat d = (b - a) * Rat(1, 4);
    for (;;) {
      Rat cand = mid + d;
      if (cand < b && !is_root(cand)) return cand;
      cand = mid - d;
      if (cand > a && !is_root(cand)) return cand;
      d = d * Rat(1, 2);
    }
  }
};

}  // namespace

std::vector<RootInterval> isolate_roots(const UPoly& p, const Rat& lo_in,
                                        const Rat& hi_in) {
  if (p.is_zero()) fail(Errc::ZeroPolynomial, "cannot isolate roots of the zero polynomial");
  std::vector<RootInterval> out;
  if (p.degree() < 1) return out;
  Rat lo = lo_in, hi = hi_in;
  if (hi < lo) std::swap(lo, hi);
  if (lo == hi) return out;

  std::vector<UPoly> sf = p.squarefree_decomposition();
  UPoly g = p.squarefree_part();
  Isolator iso{g, sturm_chain(g)};

  // Endpoint roots are nudged inward; the shift is safe when the deflated
  // polynomial has no root in the skipped slice.
  auto nudge = [&](Rat e, bool from_low) -> Rat {
    if (!iso.is_root(e)) return e;
    UPoly q = g.divmod(UPoly(g.var(), {-e, Rat(1)}));
    auto qchain = sturm_chain(q);
    Rat delta = (hi - lo) * Rat(1, 4);
    for (;;) {
      Rat shifted = from_low ? e + delta : e - delta;
      if (!iso.is_root(shifted) && !q.eval(shifted).is_zero()) {
        int skipped = from_low ? sturm_count(qchain, e, shifted)
                               : sturm_count(qchain, shifted, e);
        if (skipped == 0) return shifted;
      }
      delta = delta * Rat(1, 2);
    }
  };
  lo = nudge(lo, true);
  hi = nudge(hi, false);
  if (lo >= hi) return out;

  struct Seg { Rat a, b; int count; };
  std::deque<Seg> work;
  int total = sturm_count(iso.chain, lo, hi);
  if (total > 0) work.push_back({lo, hi, total});

  while (!work.empty()) {
    Seg s = work.front();
    work.pop_front();
    if (s.count == 1) {
      RootInterval iv{s.a, s.b, std::nullopt, 1};
      Rat probe = simplest_rational_in(s.a, s.b);
      if (iso.is_root(probe)) {
        iv.lo = iv.hi = probe;
        iv.exact = probe;
      }
      out.push_back(std::move(iv));
      continue;
    }
    Rat m = iso.nonroot_split(s.a, s.b);
    int left = sturm_count(iso.chain, s.a, m);
    if (left > 0) work.push_back({s.a, m, left});
    if (s.count - left > 0) work.push_back({m, s.b, s.count - left});
  }

  // Multiplicities from the square-free decomposition.
  for (auto& iv : out) {
    for (size_t i = 0; i < sf.size(); ++i) {
      if (sf[i].degree() < 1) continue;
      if (iv.exact) {
        if (sf[i].eval(*iv.exact).is_zero()) { iv.multiplicity = static_cast<int>(i) + 1; break; }
      } else {
        auto fchain = sturm_chain(sf[i]);
        if (sturm_count(fchain, iv.lo, iv.hi) == 1) {
          iv.multiplicity = static_cast<int>(i) + 1;
          break;
        }
      }
    }
  }

  std::sort(out.begin(), out.end(),
            [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  return out;
}

RootInterval refine_root(const UPoly& p, RootInterval iv, const Rat& width) {
  if (iv.exact) return iv;
  UPoly g = p.squarefree_part();
  if (g.eval(iv.lo).is_zero()) {
    iv.exact = iv.lo;
    iv.hi = iv.lo;
    return iv;
  }
  int slo = g.eval(iv.lo).sign();
  for (;;) {
    Rat probe = simplest_rational_in(iv.lo, iv.hi);
    if (g.eval(probe).is_zero()) {
      iv.exact = probe;
      iv.lo = iv.hi = probe;
      return iv;
    }
    if (iv.hi - iv.lo <= width) return iv;
    Rat m = (iv.lo + iv.hi) * Rat(1, 2);
    Rat gm = g.eval(m);
    if (gm.is_zero()) {
      iv.exact = m;
      iv.lo = iv.hi = m;
      return iv;
    }
    if (gm.sign() == slo) {
      iv.lo = m;
    } else {
      iv.hi = m;
    }
  }
}

std::vector<Rat> rational_roots(const UPoly& p, const Rat& lo, const Rat& hi,
                                const Rat& width) {
  std::vector<Rat> out;
  for (auto& iv : isolate_roots(p, lo, hi)) {
    RootInterval r = refine_root(p, iv, width);
    if (r.exact) out.push_back(*r.exact);
  }
  return out;
}

}  // namespace qheun
