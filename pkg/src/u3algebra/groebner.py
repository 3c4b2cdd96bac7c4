"""Buchberger's algorithm in the weighted graded-revlex order, leading-term
ideals, standard-monomial censuses and the lattice count f(n)."""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .poly import Exps, Poly, Ring, mono_divides, mono_lcm, mono_text


class GroebnerDegreeCap(RuntimeError):
    """Raised when an S-pair exceeds the requested degree cap."""


@dataclass
class MonomialIdeal:
    ring: Ring
    gens: List[Exps]

    def __post_init__(self):
        self.gens = minimalize(self.gens, self.ring)

    def contains(self, m: Exps) -> bool:
        return any(mono_divides(g, m) for g in self.gens)

    def texts(self) -> List[str]:
        return [mono_text(g, self.ring) or "1" for g in self.gens]


def minimalize(monos: Iterable[Exps], ring: Ring) -> List[Exps]:
    """Minimal generators, sorted descending in the monomial order."""
    uniq = sorted(set(monos), key=ring.degree)
    out: List[Exps] = []
    for m in uniq:
        if not any(mono_divides(g, m) for g in out):
            out.append(m)
    return sorted(out, key=ring.key, reverse=True)


@dataclass
class Census:
    finite: bool
    count: Optional[int]
    monomials: List[Exps] = field(default_factory=list)
    witness: Optional[str] = None


def _nkey(ring: Ring, e: Exps) -> tuple:
    # heap key: smallest tuple = largest monomial
    return tuple(-x for x in ring.key(e))


def _reduce_dict(terms: Dict[Exps, object], basis: Sequence[Poly], ring: Ring) -> Dict[Exps, object]:
    """Full normal form of `terms` modulo the monic `basis`."""
    p = dict(terms)
    lms = [b.lm() for b in basis]
    heap = [(_nkey(ring, e), e) for e in p]
    heapq.heapify(heap)
    rem: Dict[Exps, object] = {}
    while heap:
        _, e = heapq.heappop(heap)
        c = p.pop(e, None)
        if c is None:
            continue
        for lm, b in zip(lms, basis):
            if all(x <= y for x, y in zip(lm, e)):
                shift = tuple(y - x for x, y in zip(lm, e))
                for m, v in b.terms.items():
                    if m == lm:
                        continue
                    t = tuple(x + y for x, y in zip(shift, m))
                    old = p.get(t)
                    if old is None:
                        p[t] = -c * v
                        heapq.heappush(heap, (_nkey(ring, t), t))
                    else:
                        new = old - c * v
                        if new:
                            p[t] = new
                        else:
                            del p[t]
                break
        else:
            rem[e] = c
    return rem


def _monic(p: Poly) -> Poly:
    c = p.lc()
    if c == 1:
        return p
    return p.scale(1 / c if not hasattr(c, "inverse") else c.inverse())


def reduce(p: Poly, basis: Sequence[Poly]) -> Poly:
    """Normal form of p: no remaining monomial is divisible by a basis LM."""
    if not basis:
        raise ValueError("reduce needs a non-empty basis")
    monic = [_monic(b) for b in basis if b]
    return Poly(p.ring, _reduce_dict(p.terms, monic, p.ring))


def s_polynomial(f: Poly, g: Poly) -> Poly:
    (ef, cf), (eg, cg) = f.leading_term(), g.leading_term()
    l = mono_lcm(ef, eg)
    a = tuple(x - y for x, y in zip(l, ef))
    b = tuple(x - y for x, y in zip(l, eg))
    return f.mul_term(a, 1 / cf) - g.mul_term(b, 1 / cg)


def canonical_sort(gens: Iterable[Poly]) -> List[Poly]:
    gens = [g for g in gens if g]
    if not gens:
        return []
    ring = gens[0].ring
    return sorted(gens, key=lambda g: (tuple(-x for x in ring.key(g.lm())), g.text()))


@dataclass
class GroebnerBasis:
    ring: Ring
    generators: List[Poly]
    basis: List[Poly]
    lt_ideal: MonomialIdeal
    order: str = "weighted graded revlex"
    stats: dict = field(default_factory=dict)

    def reduce(self, p: Poly) -> Poly:
        if not self.basis:
            return p
        return Poly(p.ring, _reduce_dict(p.terms, self.basis, self.ring))

    def contains(self, p: Poly) -> bool:
        return not self.reduce(p)


def buchberger(gens: Iterable[Poly], degree_cap: Optional[int] = None) -> GroebnerBasis:
    """Reduced Groebner basis by Buchberger's algorithm.

    Pairs are processed in increasing order of their lcm (normal strategy).
    Pair bookkeeping follows the Gebauer-Moeller update, which applies the
    coprime criterion and the chain criterion and retires basis elements
    whose leading monomial becomes redundant.
    """
    inputs = canonical_sort(gens)
    if not inputs:
        raise ValueError("buchberger needs at least one nonzero generator")
    ring = inputs[0].ring
    for g in inputs:
        if g.ring != ring:
            raise ValueError("generators live in different rings")

    G: List[Poly] = []
    lms: List[Exps] = []
    active: List[int] = []
    pairs: Dict[Tuple[int, int], Exps] = {}
    heap: list = []
    stats = {"pairs": 0, "zero": 0, "added": 0}

    def coprime(a: Exps, b: Exps) -> bool:
        return all(not (x and y) for x, y in zip(a, b))

    def update(h: Poly):
        hi = len(G)
        G.append(h)
        hl = h.lm()
        lms.append(hl)
        cand = [(g, mono_lcm(hl, lms[g])) for g in active]
        keep = []
        for idx, (g1, l1) in enumerate(cand):
            if coprime(hl, lms[g1]):
                keep.append((g1, l1))
                continue
            others = cand[idx + 1:]
            if any(mono_divides(l2, l1) for _, l2 in others) or any(mono_divides(l2, l1) for _, l2 in keep):
                continue
            keep.append((g1, l1))
        for (a, b), l in list(pairs.items()):
            if mono_divides(hl, l) and mono_lcm(lms[a], hl) != l and mono_lcm(lms[b], hl) != l:
                del pairs[(a, b)]
        for g1, l1 in keep:
            if not coprime(hl, lms[g1]):
                pairs[(g1, hi)] = l1
                heapq.heappush(heap, (_nkey(ring, l1), g1, hi))
        active[:] = [g for g in active if not mono_divides(hl, lms[g])] + [hi]

    def reducers() -> List[Poly]:
        return [G[i] for i in active]

    for g in inputs:
        r = Poly(ring, _reduce_dict(g.terms, reducers(), ring)) if active else g
        if r:
            update(_monic(r))

    while heap:
        _, i, j = heapq.heappop(heap)
        l = pairs.pop((i, j), None)
        if l is None:
            continue
        if degree_cap is not None and ring.degree(l) > degree_cap:
            raise GroebnerDegreeCap(f"S-pair degree {ring.degree(l)} exceeds cap {degree_cap}")
        stats["pairs"] += 1
        r = _reduce_dict(s_polynomial(G[i], G[j]).terms, reducers(), ring)
        if not r:
            stats["zero"] += 1
            continue
        stats["added"] += 1
        update(_monic(Poly(ring, r)))

    basis = _interreduce(reducers(), ring)
    lt = MonomialIdeal(ring, [b.lm() for b in basis])
    stats["basis_size"] = len(basis)
    return GroebnerBasis(ring, inputs, basis, lt, stats=stats)


def _interreduce(G: List[Poly], ring: Ring) -> List[Poly]:
    keep: List[Poly] = []
    for idx, g in enumerate(G):
        lm = g.lm()
        redundant = False
        for jdx, h in enumerate(G):
            if jdx == idx:
                continue
            hl = h.lm()
            if mono_divides(hl, lm) and (hl != lm or jdx < idx):
                redundant = True
                break
        if not redundant:
            keep.append(g)
    out = []
    for idx, g in enumerate(keep):
        others = keep[:idx] + keep[idx + 1:]
        r = Poly(ring, _reduce_dict(g.terms, others, ring)) if others else g
        out.append(_monic(r))
    return sorted(out, key=lambda p: ring.key(p.lm()), reverse=True)


def standard_monomials(gb: GroebnerBasis) -> Census:
    ring = gb.ring
    gens = gb.lt_ideal.gens
    bounds = []
    for i, name in enumerate(ring.names):
        pure = [g[i] for g in gens if g[i] and not any(x for k, x in enumerate(g) if k != i)]
        if not pure:
            return Census(False, None, [], witness=name)
        bounds.append(min(pure))
    out = [e for e in itertools.product(*(range(b) for b in bounds)) if not gb.lt_ideal.contains(e)]
    out.sort(key=ring.key, reverse=True)
    return Census(True, len(out), out)


def lt_contains(gb: GroebnerBasis, target: MonomialIdeal) -> Dict[Exps, bool]:
    """For each minimal generator of target, whether it lies in LT(gb)."""
    return {m: gb.lt_ideal.contains(m) for m in target.gens}


def lattice_count(n: int, mode: str = "closed_form") -> int:
    """f(n) = #{(i, j) >= 0 : 2i + 3j < n}; zero for n <= 0."""
    if mode == "brute_force":
        return sum(1 for j in range(max(n, 0)) for i in range(max(n, 0)) if 2 * i + 3 * j < n)
    if mode != "closed_form":
        raise ValueError(f"unknown mode {mode!r}")
    if n <= 0:
        return 0
    k, r = divmod(n, 6)
    base = {0: 0, 1: 1}.get(r, r - 1)
    return (n * n - r * r) // 12 + 2 * k + base


def lt_gen_ideal(g: int, ring: Ring) -> MonomialIdeal:
    """Monomials a2^i a3^j b2^k with k <= 2 and 2i+3j+2k >= 4g-2, plus b2^3."""
    bound = 4 * g - 2
    monos = [ring.monomial(b2=3)]
    for k in range(3):
        for j in range(0, max(bound - 2 * k, 0) // 3 + 2):
            i = max(0, -(-(bound - 3 * j - 2 * k) // 2))
            monos.append(ring.monomial(a2=i, a3=j, b2=k))
    return MonomialIdeal(ring, monos)


def i0_target(n: int, ring: Ring) -> MonomialIdeal:
    """Monomials a2^i a3^j with 2i + 3j >= 2n."""
    monos = []
    for j in range(0, (2 * n) // 3 + 2):
        i = max(0, -(-(2 * n - 3 * j) // 2))
        monos.append(ring.monomial(a2=i, a3=j))
    return MonomialIdeal(ring, monos)
