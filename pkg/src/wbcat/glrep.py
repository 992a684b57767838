"""Exact gl_N tensor-space oracle.

Vectors live in M (x) V^{a_1} (x) ... (x) V^{a_n} where V is the vector
representation with basis v_1..v_N, V^{-1} its dual, and M is either the
trivial module or the parabolic highest-weight module with one-dimensional
highest weight space of weight -delta(eps_1+...+eps_m) for the two-block
parabolic gl_m + gl_n + (upper right). The negative nilradical
u^- = span{E_ij : i > m >= j} is abelian, so PBW monomials x^mu z in the
symbols x_ij form a basis of M; module vectors are finite exact Fraction
combinations of keys (mu, slots).

Generators act by: crossings swap adjacent slots; cap-cups are the delta
maps v_c (x) v*_d -> delta_cd sum_k (k, k) (hatted: exchanging the two
orientations); y_i = sum_{0<=k<i} Omega_{ki} + N/2 with the split Casimir
Omega = sum_{a,b} E_ab (x) E_ba applied between factor k and slot i. The
elementary action on a slot is E_ab v_c = delta_bc v_a on V and
E_ab v*_c = -delta_ac v*_b on V^-1; on the module factor E_ab commutes
past the x-symbols via [E_ab, E_ij] = delta_bi E_aj - delta_ja E_ib down
to E_aa z = -delta z (a <= m) and E u^- multiplication.

This module is the independent route against which the diagrammatic
engines are checked: represent() pushes a decorated element through its
generator word and must satisfy every defining relation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, product

from .diagrams import DecoratedElement, orseq, swap_seq, word_for_monomial
from .exact import rref


@dataclass(frozen=True)
class GlContext:
    kind: str  # 'trivial' | 'parabolic'
    N: int
    m: int = 0
    n: int = 0
    delta: int = 0

    def __post_init__(self):
        if self.kind not in ("trivial", "parabolic"):
            raise ValueError(f"unknown module kind {self.kind!r}")
        if self.kind == "parabolic":
            if self.m < 1 or self.n < 1:
                raise ValueError("parabolic kind needs m, n >= 1")
            if self.N != self.m + self.n:
                raise ValueError("parabolic kind needs N = m + n")

    @classmethod
    def trivial(cls, N: int) -> "GlContext":
        return cls("trivial", N)

    @classmethod
    def parabolic(cls, m: int, n: int, delta: int) -> "GlContext":
        return cls("parabolic", m + n, m, n, delta)


@lru_cache(maxsize=None)
def _module_action(m: int, delta: int, a: int, b: int, mu: tuple):
    """E_ab acting on x^mu z in the parabolic module: ((coeff, mu'), ...)."""
    if not mu:
        if a > m >= b:
            return ((Fraction(1), ((a, b),)),)
        if a == b and a <= m:
            return ((Fraction(-delta), ()),) if delta else ()
        return ()
    (i, j) = mu[0]
    rest = mu[1:]
    acc = {}

    def bump(c, nu):
        if c:
            acc[nu] = acc.get(nu, Fraction(0)) + c

    for c, nu in _module_action(m, delta, a, b, rest):
        bump(c, tuple(sorted(nu + ((i, j),))))
    if b == i:
        for c, nu in _module_action(m, delta, a, j, rest):
            bump(c, nu)
    if j == a:
        for c, nu in _module_action(m, delta, i, b, rest):
            bump(-c, nu)
    return tuple((c, nu) for nu, c in acc.items() if c)


class ModuleVector:
    """Exact vector in M (x) V^{(x)A}: keys (mu, slots) -> Fraction."""

    __slots__ = ("ctx", "A", "terms")

    def __init__(self, ctx: GlContext, A, terms=None):
        self.ctx = ctx
        self.A = orseq(A)
        clean = {}
        if terms:
            for key, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[key] = c
        self.terms = clean

    @classmethod
    def basis_vector(cls, ctx, A, slots, mu=()) -> "ModuleVector":
        A = orseq(A)
        slots = tuple(slots)
        if len(slots) != len(A):
            raise ValueError("slot count mismatch")
        if not all(1 <= s <= ctx.N for s in slots):
            raise ValueError("slot index out of range")
        if mu and ctx.kind == "trivial":
            raise ValueError("trivial module has no x-symbols")
        return cls(ctx, A, {(tuple(sorted(mu)), slots): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, mu, slots) -> Fraction:
        return self.terms.get((tuple(sorted(mu)), tuple(slots)), Fraction(0))

    def __add__(self, other) -> "ModuleVector":
        if self.A != other.A:
            raise ValueError("object mismatch")
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, Fraction(0)) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        v = ModuleVector.__new__(ModuleVector)
        v.ctx, v.A, v.terms = self.ctx, self.A, out
        return v

    def __sub__(self, other) -> "ModuleVector":
        return self + other.scale(-1)

    def scale(self, c) -> "ModuleVector":
        c = Fraction(c)
        v = ModuleVector.__new__(ModuleVector)
        v.ctx, v.A = self.ctx, self.A
        v.terms = {k: c * x for k, x in self.terms.items()} if c else {}
        return v

    def __eq__(self, other):
        if isinstance(other, ModuleVector):
            return (
                self.ctx == other.ctx
                and self.A == other.A
                and self.terms == other.terms
            )
        return NotImplemented

    def __repr__(self):
        if not self.terms:
            return "ModuleVector(0)"
        bits = ", ".join(
            f"{c}*x{list(mu)}z(x){list(slots)}"
            for (mu, slots), c in sorted(self.terms.items())
        )
        return f"ModuleVector({bits})"


def zero_vector(ctx, A) -> ModuleVector:
    return ModuleVector(ctx, A)


def apply_E_at(ctx, a: int, b: int, v: ModuleVector, pos: int) -> ModuleVector:
    """E_ab acting on factor `pos` (0 = module, k >= 1 = slot k) only."""
    out = {}

    def add(key, c):
        s = out.get(key, Fraction(0)) + c
        if s:
            out[key] = s
        else:
            out.pop(key, None)

    for (mu, slots), coeff in v.terms.items():
        if pos == 0:
            if ctx.kind == "trivial":
                continue
            for c2, nu in _module_action(ctx.m, ctx.delta, a, b, mu):
                add((nu, slots), coeff * c2)
        else:
            e = slots[pos - 1]
            if v.A[pos - 1] == 1:
                if b == e:
                    add((mu, slots[: pos - 1] + (a,) + slots[pos:]), coeff)
            else:
                if a == e:
                    add((mu, slots[: pos - 1] + (b,) + slots[pos:]), -coeff)
    return ModuleVector(ctx, v.A, out)


def apply_E(ctx, a: int, b: int, v: ModuleVector) -> ModuleVector:
    """Coproduct action of E_ab on the whole tensor product."""
    out = zero_vector(ctx, v.A)
    for pos in range(len(v.A) + 1):
        out = out + apply_E_at(ctx, a, b, v, pos)
    return out


def omega_pair(v: ModuleVector, j: int, k: int) -> ModuleVector:
    """Omega_{jk}: the split Casimir between factors j < k (0 = module)."""
    if j > k:
        j, k = k, j
    if j == k or k == 0:
        raise ValueError("need two distinct factors, at least one slot")
    ctx = v.ctx
    N = ctx.N
    out = {}

    def add(key, c):
        s = out.get(key, Fraction(0)) + c
        if s:
            out[key] = s
        else:
            out.pop(key, None)

    for (mu, slots), coeff in v.terms.items():
        c = slots[k - 1]
        up = v.A[k - 1] == 1
        for d in range(1, N + 1):
            # E_ba at slot k constrains (a, b); E_ab goes to factor j
            if up:
                a, b, sgn = c, d, 1
            else:
                a, b, sgn = d, c, -1
            ns = slots[: k - 1] + (d,) + slots[k:]
            if j == 0:
                if ctx.kind == "trivial":
                    continue
                for c2, nu in _module_action(ctx.m, ctx.delta, a, b, mu):
                    add((nu, ns), sgn * coeff * c2)
            else:
                e = ns[j - 1]
                if v.A[j - 1] == 1:
                    if b == e:
                        add((mu, ns[: j - 1] + (a,) + ns[j:]), sgn * coeff)
                else:
                    if a == e:
                        add((mu, ns[: j - 1] + (b,) + ns[j:]), -sgn * coeff)
    return ModuleVector(ctx, v.A, out)


def y_apply(v: ModuleVector, i: int) -> ModuleVector:
    """y_i = sum_{0 <= k < i} Omega_{ki} + N/2."""
    if not 1 <= i <= len(v.A):
        raise ValueError("dot index out of range")
    out = v.scale(Fraction(v.ctx.N, 2))
    for k in range(i):
        out = out + omega_pair(v, k, i)
    return out


def apply_token(tok, v: ModuleVector) -> ModuleVector:
    """Apply one generator word token (see diagrams.word_for_monomial)."""
    kind, i = tok
    ctx, A = v.ctx, v.A
    n = len(A)
    if kind == "y":
        return y_apply(v, i)
    if not 1 <= i <= n - 1:
        raise ValueError("token index out of range")
    if kind == "c":
        newA = swap_seq(A, i)
        terms = {}
        for (mu, slots), c in v.terms.items():
            ns = list(slots)
            ns[i - 1], ns[i] = ns[i], ns[i - 1]
            terms[(mu, tuple(ns))] = c
        return ModuleVector(ctx, newA, terms)
    if kind in ("e", "eh"):
        if A[i - 1] == A[i]:
            raise ValueError("generator does not exist for this object")
        newA = A if kind == "e" else swap_seq(A, i)
        out = {}
        for (mu, slots), c in v.terms.items():
            if slots[i - 1] != slots[i]:
                continue
            for d in range(1, ctx.N + 1):
                key = (mu, slots[: i - 1] + (d, d) + slots[i + 1 :])
                s = out.get(key, Fraction(0)) + c
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return ModuleVector(ctx, newA, out)
    raise ValueError(f"unknown token {tok!r}")


def apply_word(word, v: ModuleVector) -> ModuleVector:
    for tok in word:
        v = apply_token(tok, v)
    return v


def apply_generator(kind: str, i: int, v: ModuleVector) -> ModuleVector:
    """Named generator (s/e/sh/eh/y) with orientation preconditions."""
    kind = {"ŝ": "sh", "ê": "eh"}.get(kind, kind)
    A = v.A
    if kind == "y":
        return y_apply(v, i)
    eq = A[i - 1] == A[i]
    if (kind == "s" and not eq) or (kind in ("sh", "e", "eh") and eq):
        raise ValueError("generator does not exist for this object")
    tok = ("c", i) if kind in ("s", "sh") else (kind, i)
    return apply_token(tok, v)


def represent(x: DecoratedElement, v: ModuleVector) -> ModuleVector:
    """Push a decorated element through its generator word."""
    if x.bottom != v.A:
        raise ValueError("boundary mismatch")
    out = zero_vector(v.ctx, x.top)
    for m, c in x.terms.items():
        out = out + apply_word(word_for_monomial(m), v).scale(c)
    return out


# ---------------------------------------------------------------------------
# Derived quantities.


def extract_omega(ctx: GlContext, k: int) -> Fraction:
    """omega_k of the module: coefficient of z (x) v_1 (x) v*_1 in
    e_1 y_1^k e_1 applied to that same vector on A = (1, -1)."""
    A = (1, -1)
    v = ModuleVector.basis_vector(ctx, A, (1, 1))
    v = apply_token(("e", 1), v)
    for _ in range(k):
        v = y_apply(v, 1)
    v = apply_token(("e", 1), v)
    return v.coeff((), (1, 1))


def u_minus_generators(ctx: GlContext):
    return [
        (i, j)
        for i in range(ctx.m + 1, ctx.N + 1)
        for j in range(1, ctx.m + 1)
    ]


def basis_weight(ctx: GlContext, A, key):
    """gl_N weight of a basis tensor key (mu, slots): the highest-weight
    line plus eps_i - eps_j per x_{ij} and +-eps_{slot} per tensor slot."""
    mu, slots = key
    w = [0] * ctx.N
    if ctx.kind == "parabolic":
        for a in range(ctx.m):
            w[a] -= ctx.delta
        for i, j in mu:
            w[i - 1] += 1
            w[j - 1] -= 1
    for k, a in enumerate(orseq(A)):
        w[slots[k] - 1] += a
    return tuple(w)


def module_monomials(ctx: GlContext, max_deg: int):
    """PBW monomials of u^- of degree <= max_deg (just () for trivial)."""
    if ctx.kind == "trivial":
        return [()]
    gens = u_minus_generators(ctx)
    out = [()]
    for d in range(1, max_deg + 1):
        out.extend(tuple(sorted(c)) for c in combinations_with_replacement(gens, d))
    return out


def spanning_vectors(ctx: GlContext, A, max_deg: int = 2):
    """Spanning set of the degree <= max_deg part of M (x) V^{(x)A}."""
    A = orseq(A)
    for mu in module_monomials(ctx, max_deg):
        for slots in product(range(1, ctx.N + 1), repeat=len(A)):
            yield ModuleVector.basis_vector(ctx, A, slots, mu)


def y1_minimal_poly(ctx: GlContext, orientation: int):
    """Monic minimal polynomial of y_1 on the degree <= 2 part of M (x) V^{or}.

    Returned as a coefficient tuple, lowest degree first, last entry 1.
    """
    if ctx.kind != "parabolic":
        raise ValueError("minimal polynomial probe needs the parabolic module")
    A = (orientation,)
    data = []
    for v in spanning_vectors(ctx, A, max_deg=2):
        v1 = y_apply(v, 1)
        v2 = y_apply(v1, 1)
        data.append((v, v1, v2))

    # degree 1: y v = -c0 v for a single constant c0
    c0 = None
    ok = True
    for v, v1, _ in data:
        keys = set(v.terms) | set(v1.terms)
        for key in keys:
            a = v.terms.get(key, Fraction(0))
            b = v1.terms.get(key, Fraction(0))
            if a == 0:
                if b != 0:
                    ok = False
                continue
            ratio = -b / a
            if c0 is None:
                c0 = ratio
            elif c0 != ratio:
                ok = False
        if not ok:
            break
    if ok and c0 is not None:
        return (c0, Fraction(1))

    # degree 2: v2 + c1 v1 + c0 v = 0
    rows = []
    for v, v1, v2 in data:
        keys = set(v.terms) | set(v1.terms) | set(v2.terms)
        for key in keys:
            rows.append(
                [
                    v.terms.get(key, Fraction(0)),
                    v1.terms.get(key, Fraction(0)),
                    -v2.terms.get(key, Fraction(0)),
                ]
            )
    sol = rref(rows)
    if len(sol) != 2 or sol[0][:2] != [Fraction(1), Fraction(0)] or sol[1][:2] != [
        Fraction(0),
        Fraction(1),
    ]:
        raise ArithmeticError("no monic quadratic annihilates the test span")
    c0, c1 = sol[0][2], sol[1][2]
    # verify: the system was overdetermined, residual must vanish
    for v, v1, v2 in data:
        if not (v2 + v1.scale(c1) + v.scale(c0)).is_zero():
            raise ArithmeticError("quadratic solution fails on a test vector")
    return (c0, c1, Fraction(1))


def faithfulness_rank(A, params) -> int:
    """Rank of basis-monomial images on all tensor inputs z (x) v_beta.

    `params` provides m, n, delta (the cyclotomic parameter triple).
    """
    from .diagrams import cyclotomic_monomials

    A = orseq(A)
    ctx = GlContext.parabolic(params.m, params.n, params.delta)
    monos = cyclotomic_monomials(A)
    rows = []
    for mono in monos:
        el = DecoratedElement.from_monomial(mono)
        row = {}
        for beta in product(range(1, ctx.N + 1), repeat=len(A)):
            v = ModuleVector.basis_vector(ctx, A, beta)
            w = represent(el, v)
            for key, c in w.terms.items():
                row[(beta, key)] = c
        rows.append(row)
    from .exact import sparse_rank

    return sparse_rank(rows)


# ---------------------------------------------------------------------------
# Operator-identity report.


def _vec_key(v: ModuleVector):
    (key,) = list(v.terms)[:1] or [None]
    return key


def verify_section8(ctx: GlContext, A, max_deg: int = 2) -> dict:
    """Check the operator identities behind the representation, per id:
    each is verified on the full tensor basis (trivial) or the
    degree <= max_deg spanning set (parabolic)."""
    A = orseq(A)
    n = len(A)
    vectors = list(spanning_vectors(ctx, A, max_deg))
    report = {}

    def run(check_id, instance_iter):
        count = 0
        failures = []
        for label, fn in instance_iter:
            for v in vectors:
                count += 1
                if not fn(v):
                    failures.append(f"{label} on {_vec_key(v)}")
        report[check_id] = {"instances": count, "failures": failures}

    def crossing_slides():
        for i in range(1, n):
            for j in range(0, n + 1):
                for k in range(j + 1, n + 1):
                    def fn(v, i=i, j=j, k=k):
                        si = lambda x: x if x == 0 else (
                            i + 1 if x == i else i if x == i + 1 else x
                        )
                        lhs = apply_token(("c", i), omega_pair(v, j, k))
                        rhs = omega_pair(apply_token(("c", i), v), si(j), si(k))
                        return lhs == rhs
                    yield f"i={i},j={j},k={k}", fn

    run("crossing_slides_casimir", crossing_slides())

    def far_dots():
        for i in range(1, n):
            for j in range(1, n + 1):
                if j in (i, i + 1):
                    continue
                def fn(v, i=i, j=j):
                    return apply_token(("c", i), y_apply(v, j)) == y_apply(
                        apply_token(("c", i), v), j
                    )
                yield f"i={i},j={j}", fn

    run("crossing_commutes_far_dots", far_dots())

    def contraction_kills_casimir_sum():
        for i in range(1, n):
            if A[i - 1] == A[i]:
                continue
            for j in range(1, n + 1):
                if j in (i, i + 1):
                    continue
                def post(v, i=i, j=j):
                    w = apply_token(("e", i), v)
                    return (omega_pair(w, i, j) + omega_pair(w, i + 1, j)).is_zero()
                def pre(v, i=i, j=j):
                    w = omega_pair(v, i, j) + omega_pair(v, i + 1, j)
                    return apply_token(("e", i), w).is_zero()
                yield f"post i={i},j={j}", post
                yield f"pre i={i},j={j}", pre

    run("contraction_kills_casimir_sum", contraction_kills_casimir_sum())

    def disjoint():
        for quad in combinations_with_replacement(range(1, n + 1), 4):
            i, j, k, l = quad
            if len(set(quad)) != 4:
                continue
            def fn(v, i=i, j=j, k=k, l=l):
                lhs = omega_pair(omega_pair(v, k, l), i, j)
                rhs = omega_pair(omega_pair(v, i, j), k, l)
                return lhs == rhs
            yield f"[{i}{j},{k}{l}]", fn

    run("casimir_disjoint_commute", disjoint())

    def triple():
        for i in range(0, n + 1):
            for j in range(i + 1, n + 1):
                for k in range(j + 1, n + 1):
                    def fn(v, i=i, j=j, k=k):
                        a = omega_pair(omega_pair(v, i, k), i, j) + omega_pair(
                            omega_pair(v, i, k), j, k
                        )
                        b = omega_pair(
                            omega_pair(v, i, j) + omega_pair(v, j, k), i, k
                        )
                        return a == b
                    yield f"({i},{j},{k})", fn

    run("casimir_triple_commutator", triple())

    def dots_commute():
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                def fn(v, i=i, j=j):
                    return y_apply(y_apply(v, i), j) == y_apply(y_apply(v, j), i)
                yield f"y{i}y{j}", fn

    run("dots_commute", dots_commute())

    def flip():
        for i in range(1, n):
            if A[i - 1] != A[i]:
                continue
            def fn(v, i=i):
                return apply_token(("c", i), v) == omega_pair(v, i, i + 1)
            yield f"i={i}", fn

    run("flip_equals_casimir", flip())

    def contraction():
        for i in range(1, n):
            if A[i - 1] == A[i]:
                continue
            def fn(v, i=i):
                return apply_token(("e", i), v) == omega_pair(v, i, i + 1).scale(-1)
            yield f"i={i}", fn

    run("contraction_equals_minus_casimir", contraction())

    def dot_crossing():
        for i in range(1, n):
            if A[i - 1] != A[i]:
                continue
            def one(v, i=i):
                lhs = apply_token(("c", i), y_apply(v, i)) - y_apply(
                    apply_token(("c", i), v), i + 1
                )
                return lhs == v.scale(-1)
            def two(v, i=i):
                lhs = apply_token(("c", i), y_apply(v, i + 1)) - y_apply(
                    apply_token(("c", i), v), i
                )
                return lhs == v
            yield f"s{i} y{i}", one
            yield f"s{i} y{i+1}", two

    run("dot_crossing_commutator", dot_crossing())

    def hat_dot_crossing():
        for i in range(1, n):
            if A[i - 1] == A[i]:
                continue
            def one(v, i=i):
                lhs = apply_token(("c", i), y_apply(v, i)) - y_apply(
                    apply_token(("c", i), v), i + 1
                )
                return lhs == apply_token(("eh", i), v)
            def two(v, i=i):
                lhs = apply_token(("c", i), y_apply(v, i + 1)) - y_apply(
                    apply_token(("c", i), v), i
                )
                return lhs == apply_token(("eh", i), v).scale(-1)
            yield f"sh{i} y{i}", one
            yield f"sh{i} y{i+1}", two

    run("hat_dot_crossing_commutator", hat_dot_crossing())

    def contraction_kills_dot_sum():
        for i in range(1, n):
            if A[i - 1] == A[i]:
                continue
            for kind in ("e", "eh"):
                def post(v, i=i, kind=kind):
                    return apply_token(
                        (kind, i), y_apply(v, i) + y_apply(v, i + 1)
                    ).is_zero()
                def pre(v, i=i, kind=kind):
                    w = apply_token((kind, i), v)
                    return (y_apply(w, i) + y_apply(w, i + 1)).is_zero()
                yield f"{kind}{i} post", post
                yield f"{kind}{i} pre", pre

    run("contraction_kills_dot_sum", contraction_kills_dot_sum())

    return report
