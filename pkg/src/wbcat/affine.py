"""Rewriting engine: products and regular normal forms, exactly.

Every element is a Fraction-linear combination of regular monomials
(diagram + bottom dots gamma + top dots eta, with dots homed at bottom
through/arc-right and top arc-left positions only). All computation is
driven by one primitive: apply a single generator token on top of a
regular monomial. The closed forms used are

  crossing over stored dots (a dots at x, b at x+1):
    s_x  y_x^a y_{x+1}^b = y_x^b y_{x+1}^a s_x - D(y_x^a y_{x+1}^b)
    sh_x y_x^a y_{x+1}^b = y_x^b y_{x+1}^a sh_x
                           + (-1)^a sum_{l=1}^{a+b} (-1)^l y_x^{a+b-l} eh_x y_x^{l-1}
  with D the divided difference, D(y1^a y2^b) = sum_{k=b}^{a-1} y1^k y2^{a+b-1-k}
  for a > b (antisymmetric, 0 for a = b);

  single-dot exchange across one crossing (both directions of travel):
    y_{i+1} s_i = s_i y_i + 1        y_i s_i  = s_i y_{i+1} - 1
    y_{i+1} sh_i = sh_i y_i - eh_i   y_i sh_i = sh_i y_{i+1} + eh_i
    s_i y_i  = y_{i+1} s_i - 1       s_i y_{i+1} = y_i s_i + 1
    sh_i y_i = y_{i+1} sh_i + eh_i   sh_i y_{i+1} = y_i sh_i - eh_i

  arc flips: (y_i + y_{i+1}) edot_i = 0 = edot_i (y_i + y_{i+1}),
  applied through the factorization of any diagram with the relevant arc;

  contraction: edot_x y_x^k edot_x' = w_coeff(B, x, k) x (single cap-cup),
  where the coefficient polynomial in y_1..y_{x-1} comes from the W-series
  calculus below.

The W-series is handled in the coordinates S(u) = (W(u) + u)/u, where the
three inductive steps are exact at every truncation order:
  prefix (1):            S = 1 + sum_k omega_k u^{-k-1}
  last two entries equal: S(P) = S(P[:-1]) / (1 - h^2), h = 1/(u - y_{i-1})
  last two entries differ: S(P) = 1 / S(P', -u) with P' flipping the last entry
(the last line is the series involution f -> f(-u)/(1 - u^{-1} f(-u))
rewritten in S-coordinates).

Transports of dots along strands descend or ascend the cached canonical
generator word of the diagram one crossing at a time; the main term
travels with coefficient +1 and every correction consumes the dot, so
all recursion is on strictly fewer dots.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .diagrams import (
    DecoratedElement,
    Monomial,
    WBDiagram,
    compose_diagrams,
    identity_diagram,
    orseq,
    sort_word,
    token_diagram,
    word_for_diagram,
    word_for_monomial,
)
from .exact import LaurentSeries, MultiPoly, rat, series_div, series_negate_u
from .relations import instances as relation_instances
from .relations import resolve_coeff

# ---------------------------------------------------------------------------
# Parameter sequences.


class OmegaRangeError(ValueError):
    pass


@lru_cache(maxsize=None)
def _omega_mn(m: int, n: int, delta: int, k: int) -> Fraction:
    if k == 0:
        return Fraction(m + n)
    if k == 1:
        return Fraction(-delta * m) + Fraction((m + n) ** 2, 2)
    b1 = Fraction(-delta) + Fraction(m + n, 2)
    b2 = Fraction(n - m, 2)
    return (b1 + b2) * _omega_mn(m, n, delta, k - 1) - b1 * b2 * _omega_mn(
        m, n, delta, k - 2
    )


@dataclass(frozen=True)
class OmegaSpec:
    """The parameter sequence omega_k: explicit list, (m,n,delta)-derived,
    or the trivial-module values N (N/2)^k."""

    kind: str
    values: tuple = ()
    m: int = 0
    n: int = 0
    delta: int = 0
    N: int = 0

    @classmethod
    def from_list(cls, values) -> "OmegaSpec":
        return cls("list", tuple(rat(v) for v in values))

    @classmethod
    def from_mn_delta(cls, m: int, n: int, delta: int) -> "OmegaSpec":
        return cls("mn_delta", m=m, n=n, delta=delta)

    @classmethod
    def trivial(cls, N: int) -> "OmegaSpec":
        return cls("trivial", N=N)

    def __call__(self, k: int) -> Fraction:
        if k < 0:
            raise ValueError("omega index must be nonnegative")
        if self.kind == "list":
            if k >= len(self.values):
                raise OmegaRangeError(
                    f"omega_{k} requested but only {len(self.values)} values given"
                )
            return self.values[k]
        if self.kind == "mn_delta":
            return _omega_mn(self.m, self.n, self.delta, k)
        if self.kind == "trivial":
            return self.N * Fraction(self.N, 2) ** k
        raise ValueError(f"unknown omega kind {self.kind!r}")

    def to_json(self) -> dict:
        if self.kind == "list":
            return {"kind": "list", "values": [str(v) for v in self.values]}
        if self.kind == "mn_delta":
            return {"kind": "mn_delta", "m": self.m, "n": self.n, "delta": self.delta}
        return {"kind": "trivial", "N": self.N}

    @classmethod
    def from_json(cls, obj: dict) -> "OmegaSpec":
        kind = obj["kind"]
        if kind == "list":
            return cls.from_list(obj["values"])
        if kind == "mn_delta":
            return cls.from_mn_delta(obj["m"], obj["n"], obj["delta"])
        if kind == "trivial":
            return cls.trivial(obj["N"])
        raise ValueError(f"unknown omega kind {kind!r}")


# ---------------------------------------------------------------------------
# W-series calculus in S = (W + u)/u coordinates.


def _series_one_minus_h2(nvars: int, order: int, yindex: int) -> LaurentSeries:
    """1 - h^2 with h = 1/(u - y_yindex) = sum_k y^k u^{-k-1}."""
    coeffs = [MultiPoly.const(nvars, 1), MultiPoly.zero(nvars)]
    y = MultiPoly.var(nvars, yindex)
    ypow = MultiPoly.const(nvars, 1)
    for c in range(2, order + 1):
        coeffs.append(ypow.scale(-(c - 1)))
        ypow = ypow * y
    return LaurentSeries(nvars, coeffs[: order + 1])


def _series_star_S(S: LaurentSeries) -> LaurentSeries:
    """S*(u) = 1 / S(-u)."""
    one = LaurentSeries(
        S.nvars,
        [MultiPoly.const(S.nvars, 1)] + [MultiPoly.zero(S.nvars)] * S.order,
    )
    return series_div(one, series_negate_u(S))


@lru_cache(maxsize=None)
def _w_series(prefix: tuple, order: int, omega: OmegaSpec) -> LaurentSeries:
    """S-series for the given orientation prefix, to the given order."""
    i = len(prefix)
    nv = i - 1
    if i == 1:
        if prefix[0] == 1:
            coeffs = [MultiPoly.const(0, 1)] + [
                MultiPoly.const(0, omega(k)) for k in range(order)
            ]
            return LaurentSeries(0, coeffs)
        return _series_star_S(_w_series((1,), order, omega))
    if prefix[-1] == prefix[-2]:
        base = _w_series(prefix[:-1], order, omega)
        ext = LaurentSeries(nv, [c.extend(nv) for c in base.coeffs])
        return series_div(ext, _series_one_minus_h2(nv, order, i - 1))
    flipped = prefix[:-1] + (prefix[-2],)
    return _series_star_S(_w_series(flipped, order, omega))


def _w_poly(B, x: int, k: int, omega: OmegaSpec) -> MultiPoly:
    """u^{-k-1} coefficient of S for the length-x prefix of B, i.e. the
    contraction coefficient of edot_x y_x^k edot_x: a polynomial in
    y_1..y_{x-1}."""
    prefix = tuple(B[:x])
    return _w_series(prefix, k + 1, omega)[k + 1]


def w_coeff(A, i: int, k: int, omega: OmegaSpec) -> MultiPoly:
    A = orseq(A)
    if not 1 <= i <= len(A) - 1 or A[i - 1] == A[i]:
        raise ValueError("w_coeff needs opposite orientations at i, i+1")
    if k < 0:
        raise ValueError("negative series index")
    return _w_poly(A, i, k, omega)


# ---------------------------------------------------------------------------
# Dot transport machinery.


def _divided_difference(a: int, b: int):
    """D(y1^a y2^b) as a list of (k, l, sign) with k+l = a+b-1."""
    if a == b:
        return []
    if a > b:
        return [(k, a + b - 1 - k, 1) for k in range(b, a)]
    return [(k, a + b - 1 - k, -1) for k in range(a, b)]


def _descend_step(s_variant: bool, pos: int, i: int):
    """Dot above crossing i travels down; (new_pos, corr_sign, corr_has_cap)."""
    if pos == i + 1:
        return i, (1 if s_variant else -1), not s_variant
    return i + 1, (-1 if s_variant else 1), not s_variant


def _ascend_step(s_variant: bool, pos: int, i: int):
    """Dot below crossing i travels up; (new_pos, corr_sign, corr_has_cap)."""
    if pos == i:
        return i + 1, (-1 if s_variant else 1), not s_variant
    return i, (1 if s_variant else -1), not s_variant


def _fold_above(tokens, base: WBDiagram):
    """Compose tokens over base as pure matchings; (loops, diagram)."""
    loops = 0
    cur = base
    for tok in tokens:
        l, cur = compose_diagrams(token_diagram(tok, cur.top), cur)
        loops += l
    return loops, cur


@lru_cache(maxsize=None)
def _prefixes(D: WBDiagram):
    """(word, prefix diagrams P_0..P_L) of the canonical word of D."""
    word = word_for_diagram(D)
    pres = [identity_diagram(D.bottom)]
    for tok in word:
        loops, nxt = compose_diagrams(token_diagram(tok, pres[-1].top), pres[-1])
        assert loops == 0
        pres.append(nxt)
    return word, tuple(pres)


def _add_at(vec, p: int, k: int = 1):
    return vec[: p - 1] + (vec[p - 1] + k,) + vec[p:]


def _zero_at(vec, p: int):
    return vec[: p - 1] + (0,) + vec[p:]


_MAX_DEPTH = 400
_depth = 0


def _push_through(p: int, m: Monomial, omega: OmegaSpec) -> DecoratedElement:
    """y_p on top of m where top position p continues to the bottom."""
    D = m.diagram
    word, pres = _prefixes(D)
    out = DecoratedElement.zero(D.bottom, D.top)
    pos = p
    for l in range(len(word), 0, -1):
        kind, i = word[l - 1]
        if kind in ("e", "eh"):
            assert pos not in (i, i + 1), "through-strand descent met a cap"
            continue
        if pos not in (i, i + 1):
            continue
        below = pres[l - 1].top
        s_variant = below[i - 1] == below[i]
        pos, sign, has_cap = _descend_step(s_variant, pos, i)
        repl = [("eh", i)] if has_cap else []
        loops, C = _fold_above(repl + list(word[l:]), pres[l - 1])
        out = out + normalize_mono(Monomial(C, m.gamma, m.eta), omega).scale(
            sign * omega(0) ** loops
        )
    main = Monomial(D, _add_at(m.gamma, pos), m.eta)
    return out + DecoratedElement.from_monomial(main)


@lru_cache(maxsize=None)
def _arc_transport(D: WBDiagram, p: int):
    x = D.partner("t", p)[1]
    assert x < p - 1

    def remap(j):
        if j == p:
            return x + 1
        if x + 1 <= j <= p - 1:
            return j + 1
        return j

    n = D.n
    newtop = [0] * n
    for j in range(1, n + 1):
        newtop[remap(j) - 1] = D.top[j - 1]
    pairs = []
    for (s1, i1), (s2, i2) in D.pairs:
        q1 = (s1, remap(i1) if s1 == "t" else i1)
        q2 = (s2, remap(i2) if s2 == "t" else i2)
        pairs.append((q1, q2))
    Dh = WBDiagram(D.bottom, newtop, pairs)
    # T routes slot x+1 -> p, sliding x+2..p down by one
    arr = [0] * n
    for j in range(1, n + 1):
        # dest of slot j under T
        if j == x + 1:
            dest = p
        elif x + 2 <= j <= p:
            dest = j - 1
        else:
            dest = j
        arr[dest - 1] = j - 1
    tword = tuple(sort_word(arr))
    assert all(x + 1 <= i <= p - 1 for _, i in tword)
    pres = [Dh]
    for tok in tword:
        loops, nxt = compose_diagrams(token_diagram(tok, pres[-1].top), pres[-1])
        assert loops == 0
        pres.append(nxt)
    assert pres[-1] == D
    return tword, tuple(pres)


def _arc_far_parts(p: int, m: Monomial, omega: OmegaSpec):
    """y_p on top of m with a far top arc {x, p}: returns (main, corrections)
    with main = -(D, gamma, eta + delta_x) and corrections an element."""
    D = m.diagram
    x = D.partner("t", p)[1]
    tword, pres = _arc_transport(D, p)
    corr = DecoratedElement.zero(D.bottom, D.top)
    pos = p
    for l in range(len(tword), 0, -1):
        _, i = tword[l - 1]
        if pos not in (i, i + 1):
            continue
        below = pres[l - 1].top
        s_variant = below[i - 1] == below[i]
        pos, sign, has_cap = _descend_step(s_variant, pos, i)
        repl = [("eh", i)] if has_cap else []
        loops, C = _fold_above(repl + list(tword[l:]), pres[l - 1])
        corr = corr + normalize_mono(Monomial(C, m.gamma, m.eta), omega).scale(
            sign * omega(0) ** loops
        )
    assert pos == x + 1
    main = Monomial(D, m.gamma, _add_at(m.eta, x))
    return main, corr


def push_dot(p: int, m: Monomial, omega: OmegaSpec) -> DecoratedElement:
    """Regular form of y_p . m (dot entering from the top)."""
    D = m.diagram
    kind = D.top_kind(p)
    if kind == "arcL":
        return DecoratedElement.from_monomial(Monomial(D, m.gamma, _add_at(m.eta, p)))
    if kind == "arcR":
        x = D.partner("t", p)[1]
        if x == p - 1:
            return DecoratedElement.from_monomial(
                Monomial(D, m.gamma, _add_at(m.eta, x)), -1
            )
        main, corr = _arc_far_parts(p, m, omega)
        return corr + DecoratedElement.from_monomial(main, -1)
    return _push_through(p, m, omega)


def push_dot_bottom(p: int, m: Monomial, omega: OmegaSpec) -> DecoratedElement:
    """Regular form of m . y_p (dot entering from the bottom)."""
    D = m.diagram
    kind = D.bottom_kind(p)
    if kind in ("through", "arcR"):
        return DecoratedElement.from_monomial(Monomial(D, _add_at(m.gamma, p), m.eta))
    v = D.partner("b", p)[1]
    if v == p + 1:
        return DecoratedElement.from_monomial(
            Monomial(D, _add_at(m.gamma, v), m.eta), -1
        )
    # far bottom arc {p, v}: D = Dh o T' with the arc moved to {v-1, v}
    tword, pres, Dh = _bottom_arc_transport(D, p)
    out = DecoratedElement.zero(D.bottom, D.top)
    pos = p
    for l in range(1, len(tword) + 1):
        _, i = tword[l - 1]
        if pos not in (i, i + 1):
            continue
        below = pres[l - 1].top
        s_variant = below[i - 1] == below[i]
        pos, sign, has_cap = _ascend_step(s_variant, pos, i)
        repl = [("eh", i)] if has_cap else []
        loops1, upper = _fold_above(repl + list(tword[l:]), pres[l - 1])
        loops2, C = compose_diagrams(Dh, upper)
        out = out + normalize_mono(Monomial(C, m.gamma, m.eta), omega).scale(
            sign * omega(0) ** (loops1 + loops2)
        )
    assert pos == v - 1
    main = Monomial(D, _add_at(m.gamma, v), m.eta)
    return out + DecoratedElement.from_monomial(main, -1)


@lru_cache(maxsize=None)
def _bottom_arc_transport(D: WBDiagram, p: int):
    v = D.partner("b", p)[1]
    assert v > p + 1

    def remap(j):
        if j == p:
            return v - 1
        if p + 1 <= j <= v - 1:
            return j - 1
        return j

    n = D.n
    newbot = [0] * n
    for j in range(1, n + 1):
        newbot[remap(j) - 1] = D.bottom[j - 1]
    pairs = []
    for (s1, i1), (s2, i2) in D.pairs:
        q1 = (s1, remap(i1) if s1 == "b" else i1)
        q2 = (s2, remap(i2) if s2 == "b" else i2)
        pairs.append((q1, q2))
    Dh = WBDiagram(newbot, D.top, pairs)
    # T' routes bottom p up to position v-1, sliding p+1..v-1 down
    arr = [0] * n
    for j in range(1, n + 1):
        arr[remap(j) - 1] = j - 1
    tword = tuple(sort_word(arr))
    assert all(p <= i <= v - 2 for _, i in tword)
    pres = [identity_diagram(D.bottom)]
    for tok in tword:
        loops, nxt = compose_diagrams(token_diagram(tok, pres[-1].top), pres[-1])
        assert loops == 0
        pres.append(nxt)
    loops, whole = compose_diagrams(Dh, pres[-1])
    assert loops == 0 and whole == D
    return tword, tuple(pres), Dh


def normalize_mono(m: Monomial, omega: OmegaSpec) -> DecoratedElement:
    """Re-home every illegally stored dot; regular monomials pass through."""
    D = m.diagram
    bad_bottom = [
        i for i in range(1, D.n + 1)
        if m.gamma[i - 1] and D.bottom_kind(i) == "arcL"
    ]
    bad_top = [
        i for i in range(1, D.n + 1)
        if m.eta[i - 1] and D.top_kind(i) != "arcL"
    ]
    if not bad_bottom and not bad_top:
        return DecoratedElement.from_monomial(m)
    gamma, eta = list(m.gamma), list(m.eta)
    strip_b = {i: gamma[i - 1] for i in bad_bottom}
    strip_t = {i: eta[i - 1] for i in bad_top}
    for i in bad_bottom:
        gamma[i - 1] = 0
    for i in bad_top:
        eta[i - 1] = 0
    el = DecoratedElement.from_monomial(Monomial(D, gamma, eta))
    for i, k in strip_t.items():
        for _ in range(k):
            el = _map_terms(el, lambda mm: push_dot(i, mm, omega))
    for i, k in strip_b.items():
        for _ in range(k):
            el = _map_terms(el, lambda mm: push_dot_bottom(i, mm, omega))
    return el


def _map_terms(el: DecoratedElement, fn) -> DecoratedElement:
    out = None
    for m, c in el.terms.items():
        part = fn(m).scale(c)
        out = part if out is None else out + part
    if out is None:
        return el
    return out


# ---------------------------------------------------------------------------
# Generator tokens on monomials.


def _crossing(x: int, m: Monomial, omega: OmegaSpec) -> DecoratedElement:
    D = m.diagram
    B = D.top
    s_variant = B[x - 1] == B[x]
    a, b = m.eta[x - 1], m.eta[x]
    eta_rest = _zero_at(_zero_at(m.eta, x), x + 1)
    loops, S = compose_diagrams(token_diagram(("c", x), B), D)
    assert loops == 0
    out = DecoratedElement.zero(D.bottom, S.top)
    if s_variant:
        main_eta = _add_at(_add_at(eta_rest, x, b), x + 1, a)
        out = out + DecoratedElement.from_monomial(Monomial(S, m.gamma, main_eta))
        for k, l, sgn in _divided_difference(a, b):
            corr = Monomial(D, m.gamma, _add_at(_add_at(eta_rest, x, k), x + 1, l))
            out = out + normalize_mono(corr, omega).scale(-sgn)
        return out
    own_arc = D.partner("t", x) == ("t", x + 1)
    if own_arc:
        assert b == 0
        main = Monomial(S, m.gamma, _add_at(eta_rest, x, a))
        out = out + DecoratedElement.from_monomial(main, Fraction(-1) ** a)
    else:
        main_eta = _add_at(_add_at(eta_rest, x, b), x + 1, a)
        out = out + DecoratedElement.from_monomial(Monomial(S, m.gamma, main_eta))
    base = Monomial(D, m.gamma, eta_rest)
    for l in range(1, a + b + 1):
        el = DecoratedElement.from_monomial(base)
        for _ in range(l - 1):
            el = _map_terms(el, lambda mm: push_dot(x, mm, omega))
        el = _map_terms(el, lambda mm: _edot("eh", x, mm, omega))
        for _ in range(a + b - l):
            el = _map_terms(el, lambda mm: push_dot(x, mm, omega))
        out = out + el.scale(Fraction(-1) ** (a + l))
    return out


def _edot(kind: str, x: int, m: Monomial, omega: OmegaSpec) -> DecoratedElement:
    D = m.diagram
    B = D.top
    if B[x - 1] == B[x]:
        raise ValueError("generator does not exist for this object")
    if D.partner("t", x) == ("t", x + 1):
        # contraction: the cap closes over the top arc {x, x+1}
        k = m.eta[x - 1]
        assert m.eta[x] == 0
        loops, C = compose_diagrams(token_diagram((kind, x), B), D)
        assert loops == 1
        base = Monomial(C, m.gamma, _zero_at(m.eta, x))
        poly = _w_poly(B, x, k, omega)
        out = DecoratedElement.zero(D.bottom, C.top)
        for exp, c in poly.coeffs.items():
            el = DecoratedElement.from_monomial(base, c)
            for j in range(len(exp), 0, -1):
                for _ in range(exp[j - 1]):
                    el = _map_terms(el, lambda mm: push_dot(j, mm, omega))
            out = out + el
        return out
    if m.eta[x - 1] > 0:
        return _edot_preclear(kind, x, x, m, omega)
    if m.eta[x] > 0:
        return _edot_preclear(kind, x, x + 1, m, omega)
    loops, C = compose_diagrams(token_diagram((kind, x), B), D)
    assert loops == 0
    return normalize_mono(Monomial(C, m.gamma, m.eta), omega)


def _edot_preclear(kind, x, at, m, omega) -> DecoratedElement:
    """Move one stored dot off position `at` (x or x+1) before contracting:
    with P the arc partner of `at`, m = Corr - y_P . m1 where m1 drops one
    dot, and y_P commutes past the cap."""
    D = m.diagram
    P = D.partner("t", at)[1]
    assert P not in (x, x + 1)
    m1 = Monomial(D, m.gamma, _add_at(m.eta, at, -1))
    if P == at + 1:
        # adjacent arc {at, P}: y_P . m1 = -m with no corrections
        corr = DecoratedElement.zero(D.bottom, D.top)
    else:
        _, corr = _arc_far_parts(P, m1, omega)
    t1 = apply_element_token((kind, x), corr, omega)
    t2 = _map_terms(
        _edot(kind, x, m1, omega), lambda mm: push_dot(P, mm, omega)
    )
    return t1 - t2


def tok_mono(tok, m: Monomial, omega: OmegaSpec) -> DecoratedElement:
    global _depth
    _depth += 1
    try:
        assert _depth < _MAX_DEPTH, "rewriting recursion exceeded bound"
        kind, i = tok
        if kind == "y":
            return push_dot(i, m, omega)
        if kind == "c":
            return _crossing(i, m, omega)
        if kind in ("e", "eh"):
            return _edot(kind, i, m, omega)
        raise ValueError(f"unknown token {tok!r}")
    finally:
        _depth -= 1


def apply_element_token(tok, el: DecoratedElement, omega: OmegaSpec):
    out = None
    for m, c in el.terms.items():
        part = tok_mono(tok, m, omega).scale(c)
        out = part if out is None else out + part
    if out is not None:
        return out
    # zero element: only the boundary changes
    newtop = el.top if tok[0] == "y" else token_diagram(tok, el.top).top
    return DecoratedElement.zero(el.bottom, newtop)


def apply_word(word, el: DecoratedElement, omega: OmegaSpec) -> DecoratedElement:
    for tok in word:
        el = apply_element_token(tok, el, omega)
    return el


# ---------------------------------------------------------------------------
# Public algebra operations.


def multiply(x: DecoratedElement, y: DecoratedElement, omega: OmegaSpec):
    """x . y (y applied first; its top must match x's bottom)."""
    if x.bottom != y.top:
        raise ValueError("boundary mismatch in product")
    out = DecoratedElement.zero(y.bottom, x.top)
    for m, c in x.terms.items():
        out = out + apply_word(word_for_monomial(m), y, omega).scale(c)
    return out


def reduce(el: DecoratedElement, omega: OmegaSpec) -> DecoratedElement:
    """Regular normal form of an arbitrary decorated element."""
    out = DecoratedElement.zero(el.bottom, el.top)
    for m, c in el.terms.items():
        out = out + normalize_mono(m, omega).scale(c)
    return out


def element_for_word(word, A, omega: OmegaSpec) -> DecoratedElement:
    return apply_word(word, DecoratedElement.unit(orseq(A)), omega)


def check_relation(A, relation_id: str, omega: OmegaSpec) -> bool:
    """True iff every instance of the relation on A reduces to equality."""
    A = orseq(A)
    insts = relation_instances(relation_id, A)
    if not insts:
        raise ValueError(f"relation {relation_id!r} has no instances on {A}")
    unit = DecoratedElement.unit(A)
    for lhs, rhs in insts:
        left = apply_word(lhs, unit, omega)
        right = None
        for coeff, word in rhs:
            part = apply_word(word, unit, omega).scale(resolve_coeff(coeff, omega))
            right = part if right is None else right + part
        if left != right:
            return False
    return True
