"""Construction of the primitive idempotent families of F2[G].

Three group shapes are supported directly: C_p x C_q for a pair of odd primes,
C_{p^m} x C_{q^n} for prime powers, and C_{p1} x C_{p2} x C_{p3} for three
primes.  The general two-factor machinery (an abelian p-group times an abelian
q-group) is exposed as well and drives the first two shapes.

Every family construction validates itself: each member must square to itself,
distinct members must annihilate each other, the members must sum to 1, and
their number must equal the number of squaring orbits of G.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .cyclotomic import class_count, class_sum, cyclotomic_classes
from .gf2 import gf2_rank, gray_flip_sequence, independent_row_indices
from .group_algebra import AbelianGroup, AlgebraElement, GroupElement, Subgroup
from .number_theory import (
    ConsistencyError,
    HypothesisError,
    factorize,
    is_odd_prime,
    multiplicative_order,
    validate_hypotheses,
)


@dataclass(frozen=True)
class UVBlock:
    """A cube root of a component unity, built from quadratic-residue exponents.

    `element` is the printed form: the subgroup hat times the sum of base
    powers with residue exponents, plus 1 inside the parenthesis when the
    prime is 3 mod 4.  `conjugate` is its square and `unity` is the component
    unity hat(H) + hat(H*); the three satisfy element + conjugate = unity and
    element**3 = unity.
    """

    base: GroupElement
    prime: int
    residue_class_mod_4: int
    element: AlgebraElement
    conjugate: AlgebraElement
    unity: AlgebraElement


def uv_block(
    group: AbelianGroup,
    base: GroupElement,
    prime: int,
    level_subgroup: Subgroup | None = None,
) -> UVBlock:
    """Build the u (or v, or w) block for `base`, one index-p level above H.

    H is `level_subgroup` (trivial when omitted); base must generate the
    unique subgroup H* with [H* : H] = p.  The even powers of 2 mod p are
    exactly the nonzero quadratic residues, so the inner sum runs over them.
    """
    if not is_odd_prime(prime):
        raise ValueError(f"{prime} is not an odd prime")
    h = level_subgroup or Subgroup.trivial(group)
    star = Subgroup.from_generators(group, h.generators + (group.reduce(base),))
    if star.order != prime * h.order:
        raise ConsistencyError(
            f"base element does not step the subgroup by index {prime}"
        )
    exponents = sorted({pow(2, 2 * k, prime) for k in range((prime - 1) // 2)})
    terms = [group.scale(group.reduce(base), r) for r in exponents]
    if prime % 4 == 3:
        terms.append(group.identity())
    inner = AlgebraElement.from_terms(group, terms)
    u = h.hat() * inner if h.order > 1 else inner
    u2 = u.frobenius()
    unity = h.hat() + star.hat()
    if u + u2 != unity:
        raise ConsistencyError("block element plus its conjugate is not the component unity")
    if u * u2 != unity:
        raise ConsistencyError("block element cubed is not the component unity")
    if u.augmentation() != 0:
        raise ConsistencyError("block element has odd support size")
    return UVBlock(
        base=group.reduce(base),
        prime=prime,
        residue_class_mod_4=prime % 4,
        element=u,
        conjugate=u2,
        unity=unity,
    )


def split_pair(
    e_h: AlgebraElement,
    e_k: AlgebraElement,
    ub: UVBlock,
    vb: UVBlock,
) -> tuple[AlgebraElement, AlgebraElement]:
    """Split the product idempotent e_H * e_K into its two primitive halves."""
    u, u2 = ub.element, ub.conjugate
    v, v2 = vb.element, vb.conjugate
    f1 = u * v + u2 * v2
    f2 = u * v2 + u2 * v
    zero = AlgebraElement.zero(e_h.group)
    if f1 * f1 != f1 or f2 * f2 != f2:
        raise ConsistencyError("split produced a non-idempotent element")
    if f1 * f2 != zero:
        raise ConsistencyError("split halves are not orthogonal")
    if f1 + f2 != e_h * e_k:
        raise ConsistencyError("split halves do not sum to the product idempotent")
    return f1, f2


@dataclass
class IdempotentFamily:
    """A complete labeled set of primitive idempotents for one group shape."""

    group: AbelianGroup
    shape: str
    labels: tuple[str, ...]
    elements: dict[str, AlgebraElement]
    predicted_dims: dict[str, int]
    params: dict[str, object] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if set(self.labels) != set(self.elements) or set(self.labels) != set(
            self.predicted_dims
        ):
            raise ValueError("labels, elements and predicted dimensions disagree")
        if sum(self.predicted_dims.values()) != self.group.order:
            raise ConsistencyError("predicted dimensions do not sum to the group order")

    def __iter__(self):
        return iter(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def verify_axioms(self) -> list[dict]:
        """Idempotency, pairwise orthogonality, partition of unity, orbit count."""
        checks = []
        bad = [lab for lab in self.labels if self.elements[lab] ** 2 != self.elements[lab]]
        checks.append(
            {
                "name": "each member squares to itself",
                "passed": not bad,
                "detail": f"failing labels: {bad}" if bad else f"{len(self.labels)} members",
            }
        )
        zero = AlgebraElement.zero(self.group)
        bad_pairs = []
        for i, la in enumerate(self.labels):
            for lb in self.labels[i + 1 :]:
                if self.elements[la] * self.elements[lb] != zero:
                    bad_pairs.append((la, lb))
        checks.append(
            {
                "name": "distinct members annihilate each other",
                "passed": not bad_pairs,
                "detail": f"failing pairs: {bad_pairs}" if bad_pairs else "all pairs checked",
            }
        )
        total = AlgebraElement.zero(self.group)
        for lab in self.labels:
            total = total + self.elements[lab]
        ok_sum = total == AlgebraElement.one(self.group)
        checks.append(
            {
                "name": "members sum to 1",
                "passed": ok_sum,
                "detail": "" if ok_sum else f"sum has weight {total.weight}",
            }
        )
        n_classes = class_count(self.group)
        checks.append(
            {
                "name": "member count equals squaring-orbit count",
                "passed": len(self.labels) == n_classes,
                "detail": f"{len(self.labels)} members, {n_classes} orbits",
            }
        )
        return checks

    def to_json(self) -> dict:
        return {
            "shape": self.shape,
            "factor_orders": list(self.group.factor_orders),
            "order": self.group.order,
            "parameters": {k: v for k, v in sorted(self.params.items())},
            "idempotents": {
                lab: {
                    "support_ranks": self.elements[lab].support_ranks(),
                    "hex": self.elements[lab].to_hex(),
                    "weight": self.elements[lab].weight,
                    "predicted_dimension": self.predicted_dims[lab],
                }
                for lab in self.labels
            },
        }


def _pq_class_sum_forms(
    group: AbelianGroup, p: int, q: int
) -> tuple[AlgebraElement, AlgebraElement]:
    """The orbit-sum forms of the two split idempotents of C_p x C_q."""
    s_g = class_sum(group, (1, 1))
    s_b = class_sum(group, (0, p % q))
    s_a = class_sum(group, (q % p, 0))
    if p % 4 == 3:
        e3 = s_g + s_b + s_a
        e4 = class_sum(group, (q % p, p % q)) + s_b + s_a
    else:
        e3 = s_g + s_a
        e4 = class_sum(group, (p - 1, q - 1)) + s_a
    return e3, e4


def family_pq(p: int, q: int, *, override: bool = False) -> IdempotentFamily:
    """The five primitive idempotents of F2[C_p x C_q].

    The pair is normalized so q == 3 (mod 4); e1 = hat(a)(1 + hat(b)) and
    e2 = (1 + hat(a))hat(b) refer to the normalized labels.  e3 is the split
    member whose support contains the generator g = (1, 1); e4 is the other.
    """
    p_in, q_in = p, q
    pair = validate_hypotheses(p, q, normalize=True, override=override)
    p, q = pair.p, pair.q
    group = AbelianGroup([p, q])
    a, b = group.generator(0), group.generator(1)
    one = AlgebraElement.one(group)
    a_hat = Subgroup.from_generators(group, [a]).hat()
    b_hat = Subgroup.from_generators(group, [b]).hat()

    e0 = AlgebraElement.all_ones(group)
    e1 = a_hat * (one + b_hat)
    e2 = (one + a_hat) * b_hat
    ub = uv_block(group, a, p)
    vb = uv_block(group, b, q)
    f1, f2 = split_pair(one + a_hat, one + b_hat, ub, vb)
    e3, e4 = (f1, f2) if f1.contains((1, 1)) else (f2, f1)

    case = None
    if pair.validated:
        case = "a" if p % 4 == 3 else "b"
        expect3, expect4 = _pq_class_sum_forms(group, p, q)
        if e3 != expect3 or e4 != expect4:
            raise ConsistencyError("split idempotents disagree with their orbit-sum forms")

    half = (p - 1) * (q - 1) // 2
    labels = ("e0", "e1", "e2", "e3", "e4")
    return IdempotentFamily(
        group=group,
        shape="pq",
        labels=labels,
        elements={"e0": e0, "e1": e1, "e2": e2, "e3": e3, "e4": e4},
        predicted_dims={"e0": 1, "e1": q - 1, "e2": p - 1, "e3": half, "e4": half},
        params={
            "p": p,
            "q": q,
            "m": 1,
            "n": 1,
            "case": case,
            "input_order": [p_in, q_in],
            "hypothesis_warnings": list(pair.warnings),
        },
    )


def _split_label(i: int, j: int, m: int, n: int) -> str:
    if m > 9 or n > 9:
        return f"I{i},{j}"
    return f"I{i}{j}"


def family_prime_power(
    p: int, m: int, q: int, n: int, *, override: bool = False
) -> IdempotentFamily:
    """The 1 + m + n + 2mn primitive idempotents of F2[C_{p^m} x C_{q^n}].

    Labels keep the caller's (p, q) order: I0 is the all-ones hat, I0j and Ii0
    step down one subgroup level in a single factor, and each (i, j) level
    splits into Iij* and Iij** through the u, v blocks with their hat factors.
    """
    pair = validate_hypotheses(p, q, m, n, normalize=False, override=override)
    group = AbelianGroup([p**m, q**n])
    a, b = group.generator(0), group.generator(1)

    def a_level(i: int) -> Subgroup:
        return Subgroup.from_generators(group, [group.scale(a, p**i)])

    def b_level(j: int) -> Subgroup:
        return Subgroup.from_generators(group, [group.scale(b, q**j)])

    a_hats = [a_level(i).hat() for i in range(m + 1)]
    b_hats = [b_level(j).hat() for j in range(n + 1)]

    labels: list[str] = ["I0"]
    elements: dict[str, AlgebraElement] = {"I0": AlgebraElement.all_ones(group)}
    dims: dict[str, int] = {"I0": 1}

    for j in range(1, n + 1):
        lab = _split_label(0, j, m, n)
        labels.append(lab)
        elements[lab] = a_hats[0] * (b_hats[j] + b_hats[j - 1])
        dims[lab] = q ** (j - 1) * (q - 1)
    for i in range(1, m + 1):
        lab = _split_label(i, 0, m, n)
        labels.append(lab)
        elements[lab] = (a_hats[i] + a_hats[i - 1]) * b_hats[0]
        dims[lab] = p ** (i - 1) * (p - 1)

    for i in range(1, m + 1):
        for j in range(1, n + 1):
            ub = uv_block(group, group.scale(a, p ** (i - 1)), p, a_level(i))
            vb = uv_block(group, group.scale(b, q ** (j - 1)), q, b_level(j))
            f1, f2 = split_pair(
                a_hats[i] + a_hats[i - 1], b_hats[j] + b_hats[j - 1], ub, vb
            )
            half = p ** (i - 1) * (p - 1) * q ** (j - 1) * (q - 1) // 2
            star, star2 = _split_label(i, j, m, n) + "*", _split_label(i, j, m, n) + "**"
            labels.extend((star, star2))
            elements[star], elements[star2] = f1, f2
            dims[star] = dims[star2] = half

    return IdempotentFamily(
        group=group,
        shape="prime_power",
        labels=tuple(labels),
        elements=elements,
        predicted_dims=dims,
        params={
            "p": p,
            "q": q,
            "m": m,
            "n": n,
            "hypothesis_warnings": list(pair.warnings),
        },
    )


def validate_triple(p1: int, p2: int, p3: int, *, override: bool = False) -> tuple[str, ...]:
    """Admissibility of a prime triple: pairwise gcd of p-1 equal to 2, and 2
    generating the units modulo each prime."""
    failures = []
    primes = (p1, p2, p3)
    if len(set(primes)) != 3 or not all(is_odd_prime(r) for r in primes):
        failures.append(f"{primes} is not a triple of distinct odd primes")
        return tuple(failures)
    for i in range(3):
        for j in range(i + 1, 3):
            g = math.gcd(primes[i] - 1, primes[j] - 1)
            if g != 2:
                failures.append(
                    f"gcd({primes[i]}-1, {primes[j]}-1) = {g}, expected 2"
                )
    for r in primes:
        order = multiplicative_order(2, r)
        if order != r - 1:
            failures.append(f"2 has order {order} mod {r}, expected {r - 1}")
    if failures and not override:
        raise HypothesisError(failures)
    return tuple(failures)


def family_three_primes(
    p1: int, p2: int, p3: int, *, override: bool = False
) -> IdempotentFamily:
    """The fourteen primitive idempotents of F2[C_p1 x C_p2 x C_p3].

    e0..e3 come from the factor hats, e4..e9 from the three pairwise splits
    multiplied by the remaining hat, and e10..e13 are the four components of
    (1 + hat(a))(1 + hat(b))(1 + hat(c)), written through the u, v, w blocks.
    """
    warnings = validate_triple(p1, p2, p3, override=override)
    group = AbelianGroup([p1, p2, p3])
    a, b, c = group.generator(0), group.generator(1), group.generator(2)
    one = AlgebraElement.one(group)
    a_hat = Subgroup.from_generators(group, [a]).hat()
    b_hat = Subgroup.from_generators(group, [b]).hat()
    c_hat = Subgroup.from_generators(group, [c]).hat()
    ma, mb, mc = one + a_hat, one + b_hat, one + c_hat

    u = uv_block(group, a, p1).element
    v = uv_block(group, b, p2).element
    w = uv_block(group, c, p3).element
    u2, v2, w2 = u.frobenius(), v.frobenius(), w.frobenius()

    deep = ma * mb * mc
    elements = {
        "e0": a_hat * b_hat * c_hat,
        "e1": a_hat * b_hat * mc,
        "e2": a_hat * mb * c_hat,
        "e3": ma * b_hat * c_hat,
        "e4": (u * v + u2 * v2) * c_hat,
        "e5": (u2 * v + u * v2) * c_hat,
        "e6": (u * w + u2 * w2) * b_hat,
        "e7": (u2 * w + u * w2) * b_hat,
        "e8": (v * w + v2 * w2) * a_hat,
        "e9": (v2 * w + v * w2) * a_hat,
        "e10": deep + u2 * v2 * w + u * v * w2,
        "e11": deep + u2 * v2 * w2 + u * v * w,
        # The twelfth member expands from its split derivation as
        # deep + u^2 v w + u v^2 w^2; only this form makes the four deep
        # members sum to deep, which the identity check below enforces.
        "e12": deep + u2 * v * w + u * v2 * w2,
        "e13": deep + u * v2 * w + u2 * v * w2,
    }
    four_sum = elements["e10"] + elements["e11"] + elements["e12"] + elements["e13"]
    if four_sum != deep:
        raise ConsistencyError(
            "the four deep split idempotents do not sum to the triple-complement unity"
        )

    d12 = (p1 - 1) * (p2 - 1) // 2
    d13 = (p1 - 1) * (p3 - 1) // 2
    d23 = (p2 - 1) * (p3 - 1) // 2
    d123 = (p1 - 1) * (p2 - 1) * (p3 - 1) // 4
    dims = {
        "e0": 1,
        "e1": p3 - 1,
        "e2": p2 - 1,
        "e3": p1 - 1,
        "e4": d12,
        "e5": d12,
        "e6": d13,
        "e7": d13,
        "e8": d23,
        "e9": d23,
        "e10": d123,
        "e11": d123,
        "e12": d123,
        "e13": d123,
    }
    labels = tuple(f"e{i}" for i in range(14))
    return IdempotentFamily(
        group=group,
        shape="three_primes",
        labels=labels,
        elements=elements,
        predicted_dims=dims,
        params={"primes": [p1, p2, p3], "hypothesis_warnings": list(warnings)},
    )


def all_subgroups(group: AbelianGroup) -> list[Subgroup]:
    """Every subgroup, found by closing generator sets to a fixpoint.

    Fine at desk scale; the p-group constructions only ever see small groups.
    """
    by_ranks: dict[tuple[int, ...], Subgroup] = {}
    trivial = Subgroup.trivial(group)
    frontier = [trivial]
    by_ranks[trivial.element_ranks] = trivial
    table = list(group.elements())
    while frontier:
        sub = frontier.pop()
        members = set(sub.element_ranks)
        for r, e in enumerate(table):
            if r in members:
                continue
            bigger = Subgroup.from_generators(group, sub.generators + (e,))
            if bigger.element_ranks not in by_ranks:
                by_ranks[bigger.element_ranks] = bigger
                frontier.append(bigger)
    return sorted(by_ranks.values(), key=lambda s: (s.order, s.element_ranks))


def quotient_is_cyclic(group: AbelianGroup, sub: Subgroup) -> bool:
    """Whether G / H is cyclic: some coset must have order [G : H]."""
    index = group.order // sub.order
    members = set(sub.element_ranks)
    for e in group.elements():
        k, x = 1, e
        while group.rank(x) not in members:
            x = group.add(x, e)
            k += 1
        if k == index:
            return True
    return False


@dataclass(frozen=True)
class PGroupIdempotent:
    """One primitive idempotent of F2[A] for an abelian p-group A."""

    label: str
    subgroup: Subgroup
    cover: Subgroup | None
    element: AlgebraElement
    predicted_dim: int


def p_group_idempotents(
    factor_orders: Sequence[int], *, override: bool = False
) -> list[PGroupIdempotent]:
    """Primitive idempotents of an abelian p-group: the full hat, plus
    hat(H) + hat(H*) for every H with nontrivial cyclic quotient.

    H* is the unique subgroup one index-p step above H; the ideal generated by
    hat(H) + hat(H*) has dimension p**(r-1) * (p-1) where [A : H] = p**r.
    """
    factors = factorize(math.prod(factor_orders))
    if len(factors) != 1:
        raise ValueError("factor orders must all be powers of one prime")
    p = next(iter(factors))
    if p == 2:
        raise ValueError("the prime must be odd")
    order_mod_p2 = multiplicative_order(2, p * p)
    if order_mod_p2 != p * (p - 1) and not override:
        raise HypothesisError(
            [f"2 has order {order_mod_p2} mod {p}**2, expected {p * (p - 1)}"]
        )
    group = AbelianGroup(factor_orders)
    subgroups = all_subgroups(group)
    by_ranks = {s.element_ranks: s for s in subgroups}
    whole = Subgroup.whole(group)

    out = [
        PGroupIdempotent(
            label="hat",
            subgroup=whole,
            cover=None,
            element=whole.hat(),
            predicted_dim=1,
        )
    ]
    member_sets = {s.element_ranks: set(s.element_ranks) for s in subgroups}
    for sub in (s for s in subgroups if s.order < group.order):
        if not quotient_is_cyclic(group, sub):
            continue
        covers = [
            t
            for t in subgroups
            if t.order == p * sub.order
            and member_sets[sub.element_ranks] <= member_sets[t.element_ranks]
        ]
        if len(covers) != 1:
            raise ConsistencyError(
                f"subgroup of order {sub.order} has {len(covers)} index-{p} covers"
            )
        cover = covers[0]
        index, r = group.order // sub.order, 0
        while index > 1:
            index //= p
            r += 1
        out.append(
            PGroupIdempotent(
                label=f"H{len(out)}",
                subgroup=sub,
                cover=cover,
                element=sub.hat() + cover.hat(),
                predicted_dim=p ** (r - 1) * (p - 1),
            )
        )
    if sum(rec.predicted_dim for rec in out) != group.order:
        raise ConsistencyError("p-group idempotent dimensions do not sum to the order")
    return out


def _embed(x: AlgebraElement, target: AbelianGroup, offset: int) -> AlgebraElement:
    """Reinterpret an element of a factor group inside a product group."""
    pad_left = (0,) * offset
    pad_right = (0,) * (len(target.factor_orders) - offset - len(x.group.factor_orders))
    terms = [pad_left + e + pad_right for e in x.support()]
    return AlgebraElement.from_terms(target, terms)


def _embed_subgroup(s: Subgroup, target: AbelianGroup, offset: int) -> Subgroup:
    pad_left = (0,) * offset
    pad_right = (0,) * (len(target.factor_orders) - offset - len(s.group.factor_orders))
    return Subgroup.from_generators(target, [pad_left + g + pad_right for g in s.generators])


def family_two_factor(
    p_factors: Sequence[int],
    q_factors: Sequence[int],
    *,
    override: bool = False,
) -> IdempotentFamily:
    """Primitive idempotents of F2[G_p x G_q] for abelian p- and q-groups.

    The members are hat(G_p)hat(G_q); hat(G_p) times each q-side idempotent;
    each p-side idempotent times hat(G_q); and for every (H, K) pair the two
    halves of e_H e_K split through the u and v blocks built from coset
    generators of H* / H and K* / K.
    """
    p = next(iter(factorize(math.prod(p_factors))))
    q = next(iter(factorize(math.prod(q_factors))))
    pair = validate_hypotheses(p, q, normalize=False, override=override)
    p_side = p_group_idempotents(p_factors, override=override)
    q_side = p_group_idempotents(q_factors, override=override)

    group = AbelianGroup(tuple(p_factors) + tuple(q_factors))
    offset_q = len(p_factors)

    labels: list[str] = []
    elements: dict[str, AlgebraElement] = {}
    dims: dict[str, int] = {}

    def put(label: str, element: AlgebraElement, dim: int) -> None:
        labels.append(label)
        elements[label] = element
        dims[label] = dim

    gp_hat = _embed(p_side[0].element, group, 0)
    gq_hat = _embed(q_side[0].element, group, offset_q)
    put("e_hat_hat", gp_hat * gq_hat, 1)
    for krec in q_side[1:]:
        put(
            f"e_hat_{krec.label}",
            gp_hat * _embed(krec.element, group, offset_q),
            krec.predicted_dim,
        )
    for hrec in p_side[1:]:
        put(
            f"e_{hrec.label}_hat",
            _embed(hrec.element, group, 0) * gq_hat,
            hrec.predicted_dim,
        )
    for hrec in p_side[1:]:
        h_sub = _embed_subgroup(hrec.subgroup, group, 0)
        h_base = next(
            e for e in _embed_subgroup(hrec.cover, group, 0).elements()
            if not h_sub.contains_rank(group.rank(e))
        )
        ub = uv_block(group, h_base, p, h_sub)
        e_h = _embed(hrec.element, group, 0)
        for krec in q_side[1:]:
            k_sub = _embed_subgroup(krec.subgroup, group, offset_q)
            k_base = next(
                e for e in _embed_subgroup(krec.cover, group, offset_q).elements()
                if not k_sub.contains_rank(group.rank(e))
            )
            vb = uv_block(group, k_base, q, k_sub)
            e_k = _embed(krec.element, group, offset_q)
            f1, f2 = split_pair(e_h, e_k, ub, vb)
            half = hrec.predicted_dim * krec.predicted_dim // 2
            put(f"e_{hrec.label}_{krec.label}_1", f1, half)
            put(f"e_{hrec.label}_{krec.label}_2", f2, half)

    return IdempotentFamily(
        group=group,
        shape="two_factor_general",
        labels=tuple(labels),
        elements=elements,
        predicted_dims=dims,
        params={
            "p": p,
            "q": q,
            "p_factors": list(p_factors),
            "q_factors": list(q_factors),
            "hypothesis_warnings": list(pair.warnings),
        },
    )


def _ideal_dimension(e: AlgebraElement) -> int:
    group = e.group
    return gf2_rank([group.translate_bits(e.bits, g) for g in group.elements()])


def _ideal_basis_bits(e: AlgebraElement) -> list[int]:
    group = e.group
    rows = [group.translate_bits(e.bits, g) for g in group.elements()]
    return [rows[i] for i in independent_row_indices(rows)]


def verify_primitivity(
    e: AlgebraElement,
    predicted_dim: int | None = None,
    *,
    budget: int = 1 << 20,
    family_size: int | None = None,
) -> dict:
    """Check that an idempotent generates a minimal ideal.

    When 2**dim fits the budget, every element of the ideal is enumerated and
    tested for idempotency (in characteristic 2 an element is idempotent
    exactly when the doubling permutation fixes its support, so the test is a
    per-orbit mask comparison).  Exactly two idempotents, 0 and e itself, mean
    the ideal is minimal.  Beyond the budget the family-level certificate is
    used: a partition of unity whose size equals the number of squaring orbits
    consists of primitive members only.
    """
    if e * e != e:
        raise ValueError("element is not idempotent")
    dim = _ideal_dimension(e)
    report: dict[str, object] = {
        "dimension": dim,
        "predicted_dimension": predicted_dim,
        "dimension_matches": predicted_dim is None or dim == predicted_dim,
    }
    if (1 << dim) <= budget:
        masks = []
        for cls in cyclotomic_classes(e.group):
            m = 0
            for r in cls.member_ranks:
                m |= 1 << r
            masks.append(m)
        rows = _ideal_basis_bits(e)
        found = 1  # the zero element
        word = 0
        for flip in gray_flip_sequence(dim):
            word ^= rows[flip]
            for m in masks:
                inter = word & m
                if inter and inter != m:
                    break
            else:
                found += 1
        report.update(
            method="exhaustive-scan",
            idempotents_found=found,
            primitive=found == 2,
            detail=f"scanned {1 << dim} ideal elements",
        )
    elif family_size is not None:
        n_classes = class_count(e.group)
        report.update(
            method="component-count",
            idempotents_found=None,
            primitive=family_size == n_classes,
            detail=f"family size {family_size} vs {n_classes} squaring orbits",
        )
    else:
        report.update(
            method="inconclusive",
            idempotents_found=None,
            primitive=None,
            detail=f"2**{dim} exceeds the budget and no family context was given",
        )
    return report


__all__ = [
    "UVBlock",
    "IdempotentFamily",
    "PGroupIdempotent",
    "uv_block",
    "split_pair",
    "family_pq",
    "family_prime_power",
    "family_three_primes",
    "family_two_factor",
    "validate_triple",
    "all_subgroups",
    "quotient_is_cyclic",
    "p_group_idempotents",
    "verify_primitivity",
]
