"""Prime scans, minimality witnesses, and group-certificate checks.

A set of rational functions locally represents Q when every rational t0 is
a Q_p-value of some member for all but finitely many p.  Scanning cannot
prove the universal statement; the operational pass criterion is that every
exceptional prime found lies in the precomputed bad set (denominators,
leading coefficients, discriminants), since outside it an exception is a
genuine Frobenius-style refutation rather than reduction noise.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import _kernel as kernel
from .exact import INF, RatFunc, primitive_int_poly, ratfunc_eval, squarefree_part
from .padic import BadPrimeSet, bad_primes, is_kp_value
from .permgroup import CoverReport, MarkedAction, block_cycle_types, minimal_covering_check
from .primes import primes_up_to
from .ramification import critical_values

# sampling recomputes branch data per call otherwise; exact discriminants
# of large transcribed fixtures are too costly for that
_cached_critical_values = lru_cache(maxsize=None)(critical_values)


@dataclass(frozen=True)
class ScanReport:
    """Outcome of scanning one value t0 over all primes up to prime_bound.

    exceptional_primes: primes where no member represents t0.
    offending: the exceptional primes outside the bad set; empty iff pass.
    """

    t0: Fraction
    prime_bound: int
    exceptional_primes: tuple[int, ...]
    bad: BadPrimeSet
    offending: tuple[int, ...]

    @property
    def verdict(self) -> str:
        return "pass" if not self.offending else "fail"

    def to_dict(self) -> dict:
        known, complete = self.bad.try_enumerate()
        return {
            "t0": str(self.t0),
            "prime_bound": self.prime_bound,
            "exceptional": list(self.exceptional_primes),
            "bad_primes_known": list(known),
            "bad_primes_complete": complete,
            "verdict": self.verdict,
            "offending": list(self.offending),
        }


@dataclass(frozen=True)
class AggregateScan:
    reports: tuple[ScanReport, ...]
    passed: bool
    failures: tuple[tuple[Fraction, int], ...]

    def to_dict(self) -> dict:
        return {
            "verdict": "pass" if self.passed else "fail",
            "failures": [{"t0": str(t0), "p": p} for t0, p in self.failures],
            "per_t0": [r.to_dict() for r in self.reports],
        }


@dataclass(frozen=True)
class MinimalityReport:
    """Drop-one refutations: entries[i] = (index, (t0, p) or None).

    A witness at index i certifies that the subset without f_i fails to
    represent t0 at the good prime p.  A missing witness is reported as
    inconclusive; it never claims the set is non-minimal or minimal."""

    entries: tuple[tuple[int, tuple[Fraction, int] | None], ...]

    @property
    def verdict(self) -> str:
        return (
            "minimal"
            if all(w is not None for _, w in self.entries)
            else "inconclusive"
        )

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "drops": [
                {
                    "index": i,
                    "witness": None if w is None else {"t0": str(w[0]), "p": w[1]},
                }
                for i, w in self.entries
            ],
        }


@dataclass(frozen=True)
class CycleTypeObservation:
    """Frobenius cycle-type data for one t0: rows (p, partitions or None).

    A row carries one partition per function, each summing to the full
    degree (a simple preimage at infinity contributes a fixed point); None
    marks a prime of bad reduction for the tuple."""

    t0: Fraction
    rows: tuple[tuple[int, tuple[tuple[int, ...], ...] | None], ...]

    def good_tuples(self) -> list[tuple[tuple[int, ...], ...]]:
        return [parts for _, parts in self.rows if parts is not None]


def default_t0_samples(fs, count: int = 25, seed: int = 0, height: int = 50):
    """Deterministic t0 list: every rational critical value of every member
    (with integer neighbors), small fixed rationals, then seeded random
    rationals of height <= height to reach count."""
    out: list[Fraction] = []

    def add(x) -> None:
        x = Fraction(x)
        if x not in out:
            out.append(x)

    # critical values always stay in the sample list, even past count
    for f in fs:
        if f.degree >= 2:
            bd = _cached_critical_values(f)
            for r in bd.rational_branch_points():
                add(r)
                add(r - 1)
                add(r + 1)
    for x in (0, 1, -1, 2, -2, 3, -3, 5, -5, 7, 10, Fraction(1, 2), Fraction(-1, 2),
              Fraction(3, 2), Fraction(2, 3), Fraction(-2, 3), Fraction(5, 7)):
        if len(out) >= count:
            break
        add(x)
    rng = random.Random(seed)
    while len(out) < count:
        add(Fraction(rng.randint(-height, height), rng.randint(1, height)))
    return out


def scan_set(fs, t0, B: int, bad: BadPrimeSet | None = None) -> ScanReport:
    """Scan all primes p <= B: is t0 a Q_p-value of some member?

    Away from the bad set the decision is one has_root call mod p on the
    squarefree fiber (plus the exact infinity check); at bad primes the
    full p-adic descent runs.  pass iff exceptional, subset of bad."""
    if B < 2:
        raise ValueError("prime bound must be at least 2")
    t0 = Fraction(t0)
    if bad is None:
        bad = bad_primes(fs, t0)
    contexts = []
    always = False
    for f in fs:
        if ratfunc_eval(f, INF) == t0:
            always = True
            break
        fiber = f.num - f.den.scale(t0)
        if fiber.degree >= 1:
            contexts.append(primitive_int_poly(squarefree_part(fiber)))
    exceptional: list[int] = []
    if not always:
        for p in primes_up_to(B):
            if bad.contains(p):
                if any(is_kp_value(f, t0, p) for f in fs):
                    continue
            else:
                if any(kernel.has_root([c % p for c in S], p) for S in contexts):
                    continue
            exceptional.append(p)
    offending = tuple(p for p in exceptional if not bad.contains(p))
    return ScanReport(t0, B, tuple(exceptional), bad, offending)


def check_locally_representing(fs, t0_samples=None, B: int = 1000) -> AggregateScan:
    """Scan every sampled t0; pass iff each scan passes."""
    if t0_samples is None:
        t0_samples = default_t0_samples(fs)
    if not t0_samples:
        raise ValueError("need at least one t0 sample")
    reports = []
    failures = []
    for t0 in t0_samples:
        rep = scan_set(fs, t0, B)
        reports.append(rep)
        for p in rep.offending:
            failures.append((rep.t0, p))
    return AggregateScan(tuple(reports), not failures, tuple(failures))


def check_minimality(
    fs, t0_samples=None, B: int = 2000, sample_count: int = 40, seed: int = 0
) -> MinimalityReport:
    """Search refutations for each drop-one subset of a passing set.

    A witness (t0, p) has p outside the subset's bad set with no remaining
    member representing t0 at p; each is re-verified through the exact
    descent before being recorded."""
    if len(fs) < 2:
        raise ValueError("minimality needs at least two functions")
    if t0_samples is None:
        t0_samples = default_t0_samples(fs, count=sample_count, seed=seed)
    entries = []
    for i in range(len(fs)):
        subset = [f for j, f in enumerate(fs) if j != i]
        witness = None
        for t0 in t0_samples:
            rep = scan_set(subset, t0, B)
            if rep.offending:
                p = rep.offending[0]
                if any(is_kp_value(f, rep.t0, p) for f in subset):
                    raise AssertionError(
                        "fast scan disagrees with the exact descent"
                    )
                witness = (rep.t0, p)
                break
        entries.append((i, witness))
    return MinimalityReport(tuple(entries))


def sample_cycle_types(fs, t0, primes) -> CycleTypeObservation:
    """Degree partitions of each fiber mod p, one row per prime.

    The partition of f_i at a good p is the multiset of irreducible factor
    degrees of the reduced fiber (the Frobenius cycle type on the fiber),
    padded with a fixed point when infinity is a simple preimage of t0, so
    every partition sums to deg f_i.  Rows where any fiber has bad
    reduction (denominator, leading-coefficient, or squarefree failure, or
    a multiple preimage at infinity) are marked None."""
    t0 = Fraction(t0)
    contexts = []
    degenerate = False
    denoms = [t0.denominator]
    for f in fs:
        fiber = f.num - f.den.scale(t0)
        for c in list(f.num.coeffs) + list(f.den.coeffs):
            denoms.append(c.denominator)
        if fiber.degree < 1:
            degenerate = True
            break
        ints = primitive_int_poly(fiber)
        e_inf = f.degree - fiber.degree
        if e_inf > 1:
            degenerate = True
            break
        contexts.append((ints, e_inf))
    rows = []
    for p in primes:
        if degenerate or any(d % p == 0 for d in denoms):
            rows.append((p, None))
            continue
        parts = []
        for ints, e_inf in contexts:
            if ints[-1] % p == 0:
                parts = None
                break
            red = [c % p for c in ints]
            if not kernel.is_squarefree(red, p):
                parts = None
                break
            part = list(kernel.distinct_degree_partition(red, p))
            part.extend([1] * e_inf)
            parts.append(tuple(sorted(part)))
        rows.append((p, tuple(parts) if parts is not None else None))
    return CycleTypeObservation(t0, tuple(rows))


def model_cycle_tuples(model: MarkedAction) -> set[tuple[tuple[int, ...], ...]]:
    """Distinct per-block cycle-type tuples over all group elements."""
    return {block_cycle_types(g, model.blocks) for g in model.group.elements}


def group_consistency(observations, model: MarkedAction) -> dict:
    """Compare observed Frobenius tuples against a group model.

    subset_ok: every observed tuple is realized by some model element
    (Lemma-style necessity); coverage: fraction of the model's distinct
    tuples observed, which approaches 1 under Chebotarev as primes grow."""
    if isinstance(observations, CycleTypeObservation):
        observations = [observations]
    block_lens = [length for _, _, length in model.blocks]
    observed: set[tuple[tuple[int, ...], ...]] = set()
    for obs in observations:
        for parts in obs.good_tuples():
            if len(parts) != len(block_lens) or any(
                sum(part) != length for part, length in zip(parts, block_lens)
            ):
                raise ValueError("observation degrees do not match model blocks")
            observed.add(parts)
    tuples = model_cycle_tuples(model)
    missing = sorted(tuples - observed)
    extra = sorted(observed - tuples)
    coverage = Fraction(len(tuples) - len(missing), len(tuples))
    return {
        "subset_ok": not extra,
        "coverage": coverage,
        "missing": missing,
        "extra": extra,
    }


def certify_with_group(model: MarkedAction) -> CoverReport:
    """Covering-plus-minimality certificate for a marked union action."""
    return minimal_covering_check(model)


def assemble_report(
    set_description: list[str],
    config: dict,
    scans: AggregateScan | None = None,
    minimality: MinimalityReport | None = None,
    certificate: CoverReport | None = None,
) -> dict:
    """Canonical report dictionary; serialization is deterministic because
    every container is built in a fixed order."""
    out: dict = {"set": list(set_description), "config": dict(config)}
    if scans is not None:
        agg = scans.to_dict()
        out["verdict"] = agg.pop("verdict")
        out["failures"] = agg.pop("failures")
        out["per_t0"] = agg["per_t0"]
    if minimality is not None:
        out["minimality"] = minimality.to_dict()
    if certificate is not None:
        out["certificate"] = certificate.to_json()
    return out
