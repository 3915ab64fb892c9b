"""Exhaustive small-case verification harness.

Every structural statement the package relies on is re-checked here by
brute force: exhaustive sweeps where the search space is small (under 10^6
points), seeded samples otherwise.  Each check runs per (p, f) configuration
and reports one outcome; a failing outcome carries the first counterexample
in sorted scan order.
"""

from __future__ import annotations

import itertools
import math
import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import d0 as d0_mod
from . import envelope, graph, lattice
from . import weights as weights_mod
from .errors import (
    CardinalityError,
    MultiplicityError,
    MultiplicityViolation,
    PresentationError,
    PreconditionViolation,
)
from .lattice import (
    ExtAffineElement,
    LambdaWElement,
    Params,
    SerreWeightClass,
    Weight,
    WeylElement,
    eta,
)


@dataclass(frozen=True)
class SuiteConfig:
    """Sweep configuration; the seed fully determines any sampled sweep."""

    p_list: tuple[int, ...] = (5, 7)
    f_list: tuple[int, ...] = (1, 2)
    depth: int = 1
    radius: int = 2
    cases: int = 10000
    seed: int = 0


@dataclass(frozen=True)
class SuiteOutcome:
    name: str
    config: str
    passed: bool
    counterexample: str | None = None


def _rng(cfg: SuiteConfig, params: Params, salt: int) -> random.Random:
    return random.Random(cfg.seed * 1_000_003 + params.p * 10_007 + params.f * 101 + salt)


def _conf(params: Params) -> str:
    return f"p={params.p} f={params.f}"


def _ok(name: str, params: Params) -> list[SuiteOutcome]:
    return [SuiteOutcome(name, _conf(params), True)]


def _fail(name: str, params: Params, ce: str) -> list[SuiteOutcome]:
    return [SuiteOutcome(name, _conf(params), False, ce)]


# --- sweep helpers ---


def pairing_vectors(params: Params, depth: int):
    """All pairing vectors whose weights are depth-deep, in sorted order."""
    return itertools.product(range(depth + 1, params.p - depth), repeat=params.f)


def mu_of(vector) -> Weight:
    return Weight(tuple((m, 0) for m in vector))


def all_weyl(f: int) -> list[WeylElement]:
    return [WeylElement(flags) for flags in itertools.product((False, True), repeat=f)]


def hypercube(f: int) -> list[LambdaWElement]:
    return [LambdaWElement(c) for c in itertools.product((-1, 0, 1), repeat=f)]


def one_generic_params(params: Params):
    """Parameters passing the concrete criterion at mu, all Weyl elements."""
    for v in pairing_vectors(params, 1):
        mu = mu_of(v)
        for w in all_weyl(params.f):
            t = weights_mod.TameParam(w, mu, params)
            if weights_mod.is_one_generic(t):
                yield t


def pair_generic_params(params: Params):
    """Parameters generic at every recentred presentation weight."""
    for t in one_generic_params(params):
        if weights_mod.is_one_generic_pair(t):
            yield t


def feasible_generic_params(params: Params):
    """Generic parameters whose presentations are all 1-deep; a superset of
    the pair-generic sweep on which every block construction is defined."""
    for t in one_generic_params(params):
        if weights_mod.presentations_feasible(t):
            yield t


def _rand_weight(rng: random.Random, f: int, lo: int = -6, hi: int = 6) -> Weight:
    return Weight(tuple((rng.randint(lo, hi), rng.randint(lo, hi)) for _ in range(f)))


def _rand_ext(rng: random.Random, f: int) -> ExtAffineElement:
    return ExtAffineElement(
        _rand_weight(rng, f, -4, 4),
        WeylElement(tuple(rng.randint(0, 1) == 1 for _ in range(f))),
    )


# --- core lattice checks ---


def check_p_dot_action(params: Params, cfg: SuiteConfig) -> list[SuiteOutcome]:
    """p_dot is a left action of the extended affine Weyl group."""
    name = "p_dot_action"
    rng = _rng(cfg, params, 1)
    ident = ExtAffineElement.identity(params.f)
    for _ in range(min(cfg.cases, 1000)):
        g, h = _rand_ext(rng, params.f), _rand_ext(rng, params.f)
        x = _rand_weight(rng, params.f)
        if lattice.p_dot(params, ident, x) != x:
            return _fail(name, params, f"identity moved {x.coords}")
        lhs = lattice.p_dot(params, g * h, x)
        rhs = lattice.p_dot(params, g, lattice.p_dot(params, h, x))
        if lhs != rhs:
            return _fail(name, params, f"g={g}, h={h}, x={x.coords}")
    return _ok(name, params)


def check_ext_affine_group(params: Params, cfg: SuiteConfig) -> list[SuiteOutcome]:
    """Associativity, inverses, and the ordinary affine action."""
    name = "ext_affine_group"
    rng = _rng(cfg, params, 2)
    ident = ExtAffineElement.identity(params.f)
    for _ in range(min(cfg.cases, 1000)):
        g, h, k = (_rand_ext(rng, params.f) for _ in range(3))
        if (g * h) * k != g * (h * k):
            return _fail(name, params, f"associativity: {g}, {h}, {k}")
        if g * g.inverse() != ident or g.inverse() * g != ident:
            return _fail(name, params, f"inverse: {g}")
        x = _rand_weight(rng, params.f)
        if (g * h).act(x) != g.act(h.act(x)):
            return _fail(name, params, f"action: {g}, {h}, {x.coords}")
    return _ok(name, params)


def check_frobenius_order(params: Params, cfg: SuiteConfig) -> list[SuiteOutcome]:
    name = "frobenius_order"
    rng = _rng(cfg, params, 3)
    for _ in range(200):
        x = _rand_weight(rng, params.f)
        y = x
        for _ in range(params.f):
            y = y.frobenius()
        if y != x:
            return _fail(name, params, f"frobenius^f moved {x.coords}")
        if x.frobenius().frobenius_inverse() != x:
            return _fail(name, params, f"inverse shift failed on {x.coords}")
    return _ok(name, params)


def check_serre_class_orbit(params: Params, cfg: SuiteConfig) -> list[SuiteOutcome]:
    """The class is constant along (p - pi)-shifts of the central lattice."""
    name = "serre_class_orbit"
    rng = _rng(cfg, params, 4)
    p, f = params.p, params.f
    for _ in range(min(cfg.cases, 500)):
        r = [rng.randint(0, p - 1) for _ in range(f)]
        b = [rng.randint(-8, 8) for _ in range(f)]
        w = Weight(tuple((ri + bi, bi) for ri, bi in zip(r, b)))
        m = [rng.randint(-3, 3) for _ in range(f)]
        shift = tuple(p * m[i] - m[(i - 1) % f] for i in range(f))
        w2 = w + lattice.central_shift_vector(f, shift)
        if lattice.serre_class(params, w) != lattice.serre_class(params, w2):
            return _fail(name, params, f"w={w.coords}, shift={shift}")
    return _ok(name, params)


def check_serre_class_injective(params: Params, cfg: SuiteConfig) -> list[SuiteOutcome]:
    """Equal classes force congruence mod (p - pi)X0(T); exhaustive at p=5."""
    name = "serre_class_injective"
    if params.p != 5 or params.f > 2:
        return []
    p, f = params.p, params.f
    for r in itertools.product(range(p), repeat=f):
        entries = []
        for b in itertools.product(range(p), repeat=f):
            w = Weight(tuple((ri + bi, bi) for ri, bi in zip(r, b)))
            entries.append((b, lattice.serre_class(params, w)))
        for (b1, c1), (b2, c2) in itertools.combinations(entries, 2):
            diff = tuple(x - y for x, y in zip(b1, b2))
            congruent = lattice.in_p_minus_pi_central(params, diff)
            if (c1 == c2) != congruent:
                return _fail(name, params, f"r={r}, b1={b1}, b2={b2}")
    return _ok(name, params)


def check_deepness_monotone(params: Params, cfg: SuiteConfig) -> list[SuiteOutcome]:
    name = "deepness_monotone"
    for v in itertools.product(range(0, 2 * params.p), repeat=params.f):
        w = mu_of(v)
        for n in range(1, params.p // 2 + 1):
            if lattice.is_deep(params, w, n) and not lattice.is_deep(params, w, n - 1):
                return _fail(name, params, f"pairings={v}, n={n}")
    return _ok(name, params)


def check_generic_implies_deep(params: Params, cfg: SuiteConfig) -> list[SuiteOutcome]:
    name = "generic_implies_deep"
    e = eta(params.f)
    for v in itertools.product(range(0, params.p + 1), repeat=params.f):
        w = mu_of(v)
        if lattice.is_generic_char(params, w):
            if not all(1 < m < params.p - 1 for m in v):
                return _fail(name, params, f"pairings={v}")
            if not lattice.is_deep(params, w - e, 1):
                return _fail(name, params, f"pairings={v} not 1-deep after shift")
    return _ok(name, params)


def check_omega_uniqueness(params: Params, cfg: SuiteConfig) -> list[SuiteOutcome]:
    """The stabiliser search succeeds once per mask, matches the closed form,
    and produces 2^f distinct elements."""
    name = "omega_uniqueness"
    f = params.f
    seen = set()
    for mask in range(1 << f):
        try:
            om = graph.omega_element(params, mask)
        except CardinalityError as exc:
            return _fail(name, params, f"mask={mask:#b}: {exc}")
        g = om.element
        if not lattice.stabilizes_base_alcove(params, g):
            return _fail(name, params, f"mask={mask:#b} does not stabilise")
        expected = tuple(bool(mask >> ((i + 1) % f) & 1) for i in range(f))
        if g.weyl.flags != expected:
            return _fail(name, params, f"mask={mask:#b}: flags {g.weyl.flags}")
        if any(g.translation.pairing(i) not in (0, 1) for i in range(f)):
            return _fail(name, params, f"mask={mask:#b}: translation pairings")
        seen.add(g)
    if len(seen) != 1 << f:
        return _fail(name, params, f"only {len(seen)} distinct elements")
    return _ok(name, params)


# --- extension graph checks ---


def check_graph_injectivity(params: Params, cfg: SuiteConfig) -> list[SuiteOutcome]:
    """For every depth-compliant pairing vector, all graph points in the box
    have pairwise distinct quotient invariants, and the signed hypercube is
    contained in the graph (the non-vacuity floor)."""
    name = "graph_injectivity"
    f, radius = params.f, cfg.radius
    for v in pairing_vectors(params, cfg.depth):
        mu = mu_of(v)
        seen: dict[tuple, tuple] = {}
        members = set()
        for coeffs in itertools.product(range(-radius, radius + 1), repeat=f):
            w = LambdaWElement(coeffs)
            if not graph.in_graph(params, mu, w):
                continue
            members.add(coeffs)
            inv = graph.quotient_invariant(params, mu, w)
            if inv in seen:
                return _fail(
                    name, params, f"mu pairings {v}: {seen[inv]} and {coeffs} collide"
                )
            seen[inv] = coeffs
        if radius >= 1 and cfg.depth >= 1:
            for coeffs in itertools.product((-1, 0, 1), repeat=f):
                if coeffs not in members:
                    return _fail(
                        name, params, f"mu pairings {v}: hypercube point {coeffs} not a member"
                    )
    return _ok(name, params)


def check_graph_symmetry(params: Params, cfg: SuiteConfig) -> list[SuiteOutcome]:
    """Recentring identity over all hypercube pairs; needs 2-deep weights so
    that every pair stays inside both graphs."""
    name = "graph_symmetry"
    if params.p < 7:
        return []
    box = hypercube(params.f)
    for v in pairing_vectors(params, 2):
        mu = mu_of(v)
        for w0pt in box:
            for wprime in box:
                if not graph.recenter_check(params, mu, w0pt, wprime):
                    return _fail(
                        name,
                        params,
                        f"mu pairings {v}: w0={w0pt.coeffs}, w'={wprime.coeffs}",
                    )
    return _ok(name, params)


def check_ext_predictor(params: Params, cfg: SuiteConfig) -> list[SuiteOutcome]:
    """Symmetry and the adjacency characterisation of the predictor."""
    name = "ext_predictor"
    if params.p < 7:
        return []
    box = hypercube(params.f)
    for v in pairing_vectors(params, 2):
        mu = mu_of(v)
        for w1 in box:
            for w2 in box:
                d12 = graph.ext1_dim(params, mu, w1, w2)
                d21 = graph.ext1_dim(params, mu, w2, w1)
                expect = 1 if graph.adjacent(w1, w2) else 0
                if not (d12 == d21 == expect and d12 <= 1):
                    return _fail(
                        name, params, f"mu pairings {v}: {w1.coeffs} vs {w2.coeffs}"
                    )
                if w1 == w2 and d12 != 0:
                    return _fail(name, params, f"self-extension at {w1.coeffs}")
    return _ok(name, params)


def check_herzig_bijection(params: Params, cfg: SuiteConfig) -> list[SuiteOutcome]:
    """The reflection is a bijection of regular classes; round-trips hold."""
    name = "herzig_bijection"
    if params.p > 7 or params.f > 2:
        return []
    p, f, q = params.p, params.f, params.q
    images = set()
    count = 0
    for r in itertools.product(range(p - 1), repeat=f):
        for d in range(q - 1):
            c = SerreWeightClass(r, d)
            image = lattice.herzig_reflect(params, c)
            if any(x > p - 2 for x in image.r):
                return _fail(name, params, f"image of {c} not regular")
            if lattice.herzig_reflect_inv(params, image) != c:
                return _fail(name, params, f"round trip failed at {c}")
            if lattice.herzig_reflect(params, lattice.herzig_reflect_inv(params, c)) != c:
                return _fail(name, params, f"inverse round trip failed at {c}")
            images.add(image)
            count += 1
    if len(images) != count:
        return _fail(name, params, "reflection not injective on regular classes")
    return _ok(name, params)


# --- weight set checks ---


def check_wq_cardinality(params: Params, cfg: SuiteConfig) -> list[SuiteOutcome]:
    name = "wq_cardinality"
    # consistency tautology: the signed set determines the Weyl element, so
    # dependence on w only through it carries no extra content here
    signs_seen = {weights_mod.s_w(w): w for w in all_weyl(params.f)}
    if len(signs_seen) != 1 << params.f:
        return _fail(name, params, "signed sets do not separate Weyl elements")
    for t in one_generic_params(params):
        try:
            wq = weights_mod.w_question(t)
        except CardinalityError as exc:
            return _fail(name, params, f"{t.mu.pairings()} w={t.w.flags}: {exc}")
        if len(wq) != 1 << params.f:
            return _fail(name, params, f"{t.mu.pairings()} w={t.w.flags}")
    return _ok(name, params)


def check_wq_genericity(params: Params, cfg: SuiteConfig) -> list[SuiteOutcome]:
    """Every predicted weight has a generic representative after the eta
    shift; holds on the pair-generic sweep."""
    name = "wq_genericity"
    e = eta(params.f)
    for t in pair_generic_params(params):
        for c in weights_mod.w_question(t):
            rep = lattice.restricted_lift(params, c)
            if not lattice.is_generic_char(params, rep + e):
                return _fail(
                    name, params, f"{t.mu.pairings()} w={t.w.flags}: class {c}"
                )
    return _ok(name, params)


def check_jh_roundtrip(params: Params, cfg: SuiteConfig) -> list[SuiteOutcome]:
    """Reflection round-trip between the reduction constituents and the
    predicted set; constituents stay regular (0-deep)."""
    name = "jh_roundtrip"
    for t in one_generic_params(params):
        wq = weights_mod.w_question(t)
        jh = weights_mod.jh_dl_reduction(t)
        if len(jh) != 1 << params.f:
            return _fail(name, params, f"{t.mu.pairings()} w={t.w.flags}: size")
        back = tuple(sorted(lattice.herzig_reflect(params, c) for c in jh))
        if back != wq:
            return _fail(name, params, f"{t.mu.pairings()} w={t.w.flags}: round trip")
        if any(x > params.p - 2 for c in jh for x in c.r):
            return _fail(name, params, f"{t.mu.pairings()} w={t.w.flags}: not regular")
    return _ok(name, params)


def check_presentations_valid(params: Params, cfg: SuiteConfig) -> list[SuiteOutcome]:
    name = "presentations_valid"
    for t in feasible_generic_params(params):
        try:
            pres = weights_mod.presentations(t)
        except PresentationError as exc:
            return _fail(name, params, f"{t.mu.pairings()} w={t.w.flags}: {exc}")
        if len(pres) != 1 << params.f:
            return _fail(name, params, f"{t.mu.pairings()} w={t.w.flags}: count")
        if len({p.sigma for p in pres}) != 1 << params.f:
            return _fail(name, params, f"{t.mu.pairings()} w={t.w.flags}: sigma repeat")
        base = pres[0]
        if base.lam != t.mu or base.w_sigma != t.w:
            return _fail(name, params, f"{t.mu.pairings()} w={t.w.flags}: empty label")
        strict = weights_mod.is_one_generic_pair(t)
        target = weights_mod.w_question(t)
        for p in pres:
            cand = weights_mod.TameParam(p.w_sigma, p.lam, params)
            if weights_mod.w_question(cand) != target:
                return _fail(
                    name, params, f"{t.mu.pairings()} w={t.w.flags}: label {p.label}"
                )
            # strict pair genericity means each presentation is itself generic
            if strict and not weights_mod.is_one_generic(cand):
                return _fail(
                    name, params, f"{t.mu.pairings()} w={t.w.flags}: label {p.label}"
                )
    return _ok(name, params)


# --- envelope checks ---


def check_envelope_dimensions(params: Params, cfg: SuiteConfig) -> list[SuiteOutcome]:
    """Total dimension (2p)^f, and the per-coordinate factor dimensions
    m_i, 2(p - m_i), m_i with the depth-one piece of size 2p - m_i."""
    name = "envelope_dimensions"
    p, f = params.p, params.f
    for v in pairing_vectors(params, 1):
        mu = mu_of(v)
        rep = envelope.graded_pieces(params, mu)
        total = sum(rep.dims.values())
        if total != (2 * p) ** f:
            return _fail(name, params, f"pairings {v}: total {total}")
        dim_of = {
            J: lattice.dim_serre(c)
            for entries in rep.by_index.values()
            for J, c in entries
        }
        side = (2 * p) ** (f - 1)
        for i in range(f):
            by_count = {0: 0, 1: 0, 2: 0}
            for J, d in dim_of.items():
                by_count[envelope.k_of(J).k[i]] += d
            m = v[i]
            expected = {0: m * side, 1: 2 * (p - m) * side, 2: m * side}
            if by_count != expected:
                return _fail(name, params, f"pairings {v}: coordinate {i} {by_count}")
            fil1 = by_count[1] + by_count[2]
            if fil1 != (2 * p - m) * side:
                return _fail(name, params, f"pairings {v}: Fil1 at {i} is {fil1}")
    return _ok(name, params)


def check_graded_multiplicity_free(params: Params, cfg: SuiteConfig) -> list[SuiteOutcome]:
    """No class collisions within an index, nor among the successors of an
    index at the next level."""
    name = "graded_multiplicity_free"
    for v in pairing_vectors(params, 1):
        mu = mu_of(v)
        try:
            rep = envelope.graded_pieces(params, mu)
        except MultiplicityError as exc:
            return _fail(name, params, f"pairings {v}: {exc}")
        class_of = {J: c for entries in rep.by_index.values() for J, c in entries}
        for k in rep.by_index:
            succ = [
                (J, c)
                for J, c in class_of.items()
                for kj in (envelope.k_of(J),)
                if k.leq(kj) and kj.total() == k.total() + 1
            ]
            seen = {}
            for J, c in succ:
                if c in seen:
                    return _fail(
                        name, params, f"pairings {v}: k={k.k}, {seen[c]} and {J}"
                    )
                seen[c] = J
        counts = {}
        for J in class_of:
            kk = envelope.k_of(J)
            counts[kk] = counts.get(kk, 0) + 1
        for k, n in counts.items():
            if n != 2 ** sum(1 for x in k.k if x == 1):
                return _fail(name, params, f"pairings {v}: count at {k.k} is {n}")
    return _ok(name, params)


def check_sigma_iff_omega(params: Params, cfg: SuiteConfig) -> list[SuiteOutcome]:
    """Constituent classes agree exactly when their lattice points agree."""
    name = "sigma_iff_omega"
    labels = envelope.all_jsets(params.f)
    for v in pairing_vectors(params, 1):
        mu = mu_of(v)
        cls = {J: envelope.sigma_label(params, mu, J) for J in labels}
        for J1, J2 in itertools.combinations(labels, 2):
            if (cls[J1] == cls[J2]) != (J1.omega() == J2.omega()):
                return _fail(name, params, f"pairings {v}: {J1} vs {J2}")
    return _ok(name, params)


def check_tensor_translate(params: Params, cfg: SuiteConfig) -> list[SuiteOutcome]:
    name = "tensor_translate"
    p, f = params.p, params.f
    for r in itertools.product(range(1, p - 1), repeat=f):
        c = SerreWeightClass(r, 0)
        for i in range(f):
            up, down = envelope.tensor_translate(params, c, i)
            if up == down:
                return _fail(name, params, f"r={r}, i={i}: outputs agree")
            if up.r[i] != r[i] + 1 or down.r[i] != r[i] - 1:
                return _fail(name, params, f"r={r}, i={i}: wrong shifts")
            if lattice.dim_serre(up) + lattice.dim_serre(down) != 2 * lattice.dim_serre(c):
                return _fail(name, params, f"r={r}, i={i}: dimension sum")
    return _ok(name, params)


def check_extension_witnesses(params: Params, cfg: SuiteConfig) -> list[SuiteOutcome]:
    """Every label cover admits an extension witness wherever the genericity
    precondition holds; depth-boundary pairs are skipped."""
    name = "extension_witnesses"
    labels = envelope.all_jsets(params.f)
    for v in pairing_vectors(params, 1):
        mu = mu_of(v)
        for J in labels:
            for Jp in J.covers():
                try:
                    wit = envelope.extension_witness(params, mu, J, Jp)
                except PreconditionViolation:
                    continue
                if wit.ext1 != 1:
                    return _fail(name, params, f"pairings {v}: {J} < {Jp}")
                if not (wit.k.leq(wit.kp) and wit.kp.total() == wit.k.total() + 1):
                    return _fail(name, params, f"pairings {v}: indices {wit.k}, {wit.kp}")
                if J not in dict(wit.lower) or Jp not in dict(wit.upper):
                    return _fail(name, params, f"pairings {v}: labels missing")
    return _ok(name, params)


def check_vbar_layers(params: Params, cfg: SuiteConfig) -> list[SuiteOutcome]:
    """Two-layer reports list exactly the covers, with distinct classes, and
    agree with the size-(|J|+1) slice of the generated submodule."""
    name = "vbar_layers"
    for v in pairing_vectors(params, 1):
        mu = mu_of(v)
        for J in envelope.all_jsets(params.f):
            rep = envelope.vbar_layers(params, mu, J)
            got = tuple(Jp for Jp, _ in rep.layer1)
            if got != J.covers():
                return _fail(name, params, f"pairings {v}: {J} covers")
            if len(got) != 2 * params.f - J.size():
                return _fail(name, params, f"pairings {v}: {J} cover count")
            classes = [c for _, c in rep.layer1]
            if len(set(classes)) != len(classes):
                return _fail(name, params, f"pairings {v}: {J} class repeat")
            sub = envelope.v_submodule(params, mu, J)
            slice_labels = tuple(
                sorted(Jp for Jp in sub.jh if Jp.size() == J.size() + 1)
            )
            if slice_labels != got:
                return _fail(name, params, f"pairings {v}: {J} submodule slice")
    return _ok(name, params)


def check_submodule_lattice(params: Params, cfg: SuiteConfig) -> list[SuiteOutcome]:
    """Reverse-inclusion order and label containment of generated submodules."""
    name = "submodule_lattice"
    labels = envelope.all_jsets(params.f)
    v = next(iter(pairing_vectors(params, 1)))
    mu = mu_of(v)
    jh = {J: envelope.v_submodule(params, mu, J).jh for J in labels}
    for J1 in labels:
        if not envelope.submodule_leq(J1, J1):
            return _fail(name, params, f"{J1} not reflexive")
        for J2 in labels:
            if J1.issubset(J2) and not jh[J2] <= jh[J1]:
                return _fail(name, params, f"{J1} < {J2}: containment")
            if envelope.submodule_leq(J1, J2) != J2.issubset(J1):
                return _fail(name, params, f"{J1}, {J2}: order mismatch")
            if (
                envelope.submodule_leq(J1, J2)
                and envelope.submodule_leq(J2, J1)
                and J1 != J2
            ):
                return _fail(name, params, f"{J1}, {J2}: antisymmetry")
    return _ok(name, params)


def _antichains(f: int) -> list[frozenset]:
    points = [envelope.MultiIndex(k) for k in itertools.product((0, 1, 2), repeat=f)]
    out = [frozenset()]
    for subset_bits in range(1, 1 << len(points)):
        chosen = [points[i] for i in range(len(points)) if subset_bits >> i & 1]
        if all(
            not (a != b and a.leq(b)) for a in chosen for b in chosen
        ):
            out.append(frozenset(chosen))
    return out


def _min_prune(indices) -> frozenset:
    return frozenset(
        k for k in indices if not any(o != k and o.leq(k) for o in indices)
    )


def check_filtration_lattice(params: Params, cfg: SuiteConfig) -> list[SuiteOutcome]:
    """Closure identity for intersections of filtration sums: exhaustive
    over antichain pairs for f <= 2, seeded samples at f = 3."""
    name = "filtration_lattice"
    f = params.f
    if f <= 2:
        pool = _antichains(f)
        pairs = itertools.product(pool, pool)
    elif f == 3:
        rng = _rng(cfg, params, 5)
        points = [envelope.MultiIndex(k) for k in itertools.product((0, 1, 2), repeat=f)]
        pairs = []
        for _ in range(min(cfg.cases, 10**4)):
            s1 = _min_prune(frozenset(k for k in points if rng.random() < 0.2))
            s2 = _min_prune(frozenset(k for k in points if rng.random() < 0.2))
            pairs.append((s1, s2))
    else:
        return []
    for i1, i2 in pairs:
        got = envelope.fil_index_intersect(i1, i2)
        if got != _min_prune(got):
            return _fail(name, params, f"{sorted(i1)}, {sorted(i2)}: not an antichain")
        lhs = envelope.upward_closure(got, f)
        rhs = envelope.upward_closure(i1, f) & envelope.upward_closure(i2, f)
        if lhs != rhs:
            return _fail(name, params, f"{sorted(i1)}, {sorted(i2)}: closure mismatch")
    return _ok(name, params)


def check_hom_span(params: Params, cfg: SuiteConfig) -> list[SuiteOutcome]:
    """Hom multiplicities count labels with equal lattice points and
    partition the 4^f labels; the base class is hit 2^f times."""
    name = "hom_span"
    labels = envelope.all_jsets(params.f)
    e = eta(params.f)
    for v in pairing_vectors(params, 1):
        mu = mu_of(v)
        cls = {J: envelope.sigma_label(params, mu, J) for J in labels}
        total = 0
        for sigma in sorted(set(cls.values())):
            count, found = envelope.hom_dim(params, mu, sigma)
            j0 = found[0]
            expected = sum(1 for J in labels if J.omega() == j0.omega())
            if count != expected:
                return _fail(name, params, f"pairings {v}: class {sigma}")
            total += count
        if total != 4**params.f:
            return _fail(name, params, f"pairings {v}: total {total}")
        base, _ = envelope.hom_dim(params, mu, lattice.serre_class(params, mu - e))
        if base != 1 << params.f:
            return _fail(name, params, f"pairings {v}: base count {base}")
    return _ok(name, params)


# --- D0 checks ---


def _block_shape(rep) -> str | None:
    f = rep.param.params.f
    for block in rep.blocks:
        if len(block.constituents) != 1 << f:
            return f"block {block.sigma}: size"
        if block.cosocle != block.sigma:
            return f"block {block.sigma}: cosocle"
        for layer in range(f + 1):
            n = sum(1 for _, _, l in block.constituents if l == layer)
            if n != math.comb(f, layer):
                return f"block {block.sigma}: layer {layer} count {n}"
    return None


def check_d0_multiplicity_one(params: Params, cfg: SuiteConfig) -> list[SuiteOutcome]:
    """Global multiplicity one with 4^f constituents, block shapes, cosocles
    enumerating the predicted set, and the two label-level consistency
    checks, over the feasible generic sweep."""
    name = "d0_multiplicity_one"
    for t in feasible_generic_params(params):
        tag = f"{t.mu.pairings()} w={t.w.flags}"
        try:
            rep = d0_mod.d0_full(t)
        except (MultiplicityViolation, PresentationError) as exc:
            return _fail(name, params, f"{tag}: {exc}")
        if len(rep.all_constituents) != 4**params.f:
            return _fail(name, params, f"{tag}: {len(rep.all_constituents)} constituents")
        if tuple(sorted(b.cosocle for b in rep.blocks)) != weights_mod.w_question(t):
            return _fail(name, params, f"{tag}: cosocles")
        shape = _block_shape(rep)
        if shape:
            return _fail(name, params, f"{tag}: {shape}")
        if not d0_mod.radical_disjointness_check(rep):
            return _fail(name, params, f"{tag}: radical disjointness")
        if not d0_mod.upperbound_consistency(rep):
            return _fail(name, params, f"{tag}: upper bound consistency")
    return _ok(name, params)


def check_d0_presentation_independence(params: Params, cfg: SuiteConfig) -> list[SuiteOutcome]:
    """Recomputing the blocks from any recentred presentation yields the
    same cosocle-to-constituents map; pairwise at f <= 2."""
    name = "d0_presentation_independence"
    if params.f > 2:
        return []
    for t in feasible_generic_params(params):
        tag = f"{t.mu.pairings()} w={t.w.flags}"
        rep = d0_mod.d0_full(t)
        base = {
            b.cosocle: frozenset(c for _, c, _ in b.constituents) for b in rep.blocks
        }
        for pres in weights_mod.presentations(t):
            other = weights_mod.TameParam(pres.w_sigma, pres.lam, params)
            if not weights_mod.is_one_generic(other):
                # an all-2 style presentation is not an admissible input
                continue
            rep2 = d0_mod.d0_full(other)
            alt = {
                b.cosocle: frozenset(c for _, c, _ in b.constituents)
                for b in rep2.blocks
            }
            if alt != base:
                return _fail(name, params, f"{tag}: label {pres.label}")
    return _ok(name, params)


def check_d0_central_twist(params: Params, cfg: SuiteConfig) -> list[SuiteOutcome]:
    """Shifting mu by a central character twists every constituent residue
    uniformly and preserves everything else."""
    name = "d0_central_twist"
    shift = lattice.central_shift_vector(params.f, (1,) + (0,) * (params.f - 1))
    for t in feasible_generic_params(params):
        tag = f"{t.mu.pairings()} w={t.w.flags}"
        rep = d0_mod.d0_full(t)
        twisted = weights_mod.TameParam(t.w, t.mu + shift, params)
        rep2 = d0_mod.d0_full(twisted)
        if not rep2.multiplicity_free:
            return _fail(name, params, f"{tag}: twist broke multiplicity")
        for b1, b2 in zip(rep.blocks, rep2.blocks):
            for (j1, c1, l1), (j2, c2, l2) in zip(b1.constituents, b2.constituents):
                if j1 != j2 or l1 != l2 or c1.r != c2.r:
                    return _fail(name, params, f"{tag}: labels moved")
                if (c2.d - c1.d) % (params.q - 1) != 1:
                    return _fail(name, params, f"{tag}: residue shift at {j1}")
    return _ok(name, params)


CHECKS = (
    ("p_dot_action", check_p_dot_action),
    ("ext_affine_group", check_ext_affine_group),
    ("frobenius_order", check_frobenius_order),
    ("serre_class_orbit", check_serre_class_orbit),
    ("serre_class_injective", check_serre_class_injective),
    ("deepness_monotone", check_deepness_monotone),
    ("generic_implies_deep", check_generic_implies_deep),
    ("omega_uniqueness", check_omega_uniqueness),
    ("graph_injectivity", check_graph_injectivity),
    ("graph_symmetry", check_graph_symmetry),
    ("ext_predictor", check_ext_predictor),
    ("herzig_bijection", check_herzig_bijection),
    ("wq_cardinality", check_wq_cardinality),
    ("wq_genericity", check_wq_genericity),
    ("jh_roundtrip", check_jh_roundtrip),
    ("presentations_valid", check_presentations_valid),
    ("envelope_dimensions", check_envelope_dimensions),
    ("graded_multiplicity_free", check_graded_multiplicity_free),
    ("sigma_iff_omega", check_sigma_iff_omega),
    ("tensor_translate", check_tensor_translate),
    ("extension_witnesses", check_extension_witnesses),
    ("vbar_layers", check_vbar_layers),
    ("submodule_lattice", check_submodule_lattice),
    ("filtration_lattice", check_filtration_lattice),
    ("hom_span", check_hom_span),
    ("d0_multiplicity_one", check_d0_multiplicity_one),
    ("d0_presentation_independence", check_d0_presentation_independence),
    ("d0_central_twist", check_d0_central_twist),
)


def _worker_count() -> int:
    raw = os.environ.get("SWLAB_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run_suite(cfg: SuiteConfig) -> list[SuiteOutcome]:
    """Run every check over the configuration grid; outcomes come back in
    registry order, then (p, f) order, independent of worker count."""
    tasks = [
        (fn, Params(p, f))
        for _name, fn in CHECKS
        for p in cfg.p_list
        for f in cfg.f_list
    ]
    workers = _worker_count()
    if workers == 1:
        batches = [fn(params, cfg) for fn, params in tasks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(fn, params, cfg) for fn, params in tasks]
            batches = [fut.result() for fut in futures]
    out: list[SuiteOutcome] = []
    for batch in batches:
        out.extend(batch)
    return out


def format_outcomes(outcomes: list[SuiteOutcome]) -> str:
    name_w = max([len(o.name) for o in outcomes] + [len("check")])
    conf_w = max([len(o.config) for o in outcomes] + [len("config")])
    lines = [f"{'check'.ljust(name_w)}  {'config'.ljust(conf_w)}  status  counterexample"]
    for o in outcomes:
        status = "pass" if o.passed else "FAIL"
        ce = o.counterexample or "-"
        lines.append(f"{o.name.ljust(name_w)}  {o.config.ljust(conf_w)}  {status:6}  {ce}")
    failed = sum(1 for o in outcomes if not o.passed)
    if failed:
        lines.append(f"{failed} of {len(outcomes)} checks FAILED")
    else:
        lines.append(f"all {len(outcomes)} checks passed")
    return "\n".join(lines) + "\n"
