"""Command line front end: expression parsing, job setup, report emission.

Functions are written as expressions in the single variable X with integer
literals::

    expr  := term (('+' | '-') term)*
    term  := unary (('*' | '/') unary)*
    unary := '-' unary | power
    power := atom ('^' INT)?
    atom  := INT | 'X' | '(' expr ')'

'^' binds tightest and its exponent must be a nonnegative integer literal;
unary minus sits between '^' and '*'/'/' ; binary operators associate left.
Syntax errors carry the 0-based character offset of the offending token,
and a denominator that reduces to the zero polynomial is rejected at the
offset of its '/'.

Subcommands: check (prime scan of a function set), minimal (drop-one
refutations), padic (single exact local decision), branch (ramification
summary), group (covering certificate or JSON-built group), monodromy
(Frobenius cycle types against a group model), catalog (named entries).

Exit codes: 0 the checked property holds, 1 it fails and the report holds
a witness, 2 inconclusive, 3 usage or expression error.  The code is a
function of the report alone, exposed as exit_code_from_report.

A group build spec is a JSON object {"build": ..., ...} with permutations
as image arrays: {"build": "symmetric" | "alternating" | "cyclic" |
"dihedral", "degree": n}, {"build": "agl1" | "agl1_fp2" | "agammal1",
"p": p}, {"build": "m11"}, {"build": "generators", "perms": [[...], ...]},
or {"build": "wreath", "base": spec, "copies": t, "mode": "imprimitive" |
"product"}.  An optional "subgroups": [[imagearray, ...], ...] asks for a
covering check of the built group by conjugates of the listed subgroups.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .catalog import CatalogEntry, entry, entry_names
from .exact import (
    INF,
    Poly,
    RatFunc,
    ratfunc_add,
    ratfunc_div,
    ratfunc_from_ints,
    ratfunc_mul,
    ratfunc_sub,
)
from .padic import is_kp_value
from .permgroup import (
    CapExceeded,
    GroupSpec,
    agammal1,
    agl1,
    agl1_fp2,
    alternating_group,
    cyclic_group,
    dihedral_group,
    generate,
    is_transitive,
    m11_group,
    normal_covering_check,
    symmetric_group,
    wreath_product,
)
from .primes import is_prime, primes_up_to
from .ramification import GENERIC_ALGEBRAIC, critical_values
from .verify import (
    assemble_report,
    certify_with_group,
    check_locally_representing,
    check_minimality,
    default_t0_samples,
    group_consistency,
    sample_cycle_types,
)


class ExprError(ValueError):
    """Malformed expression; position is a 0-based character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(message)
        self.position = position


def _syntax_error(message: str, position: int):
    raise ExprError(f"syntax error at offset {position}: {message}", position)


# typography aliases so pasted prose with a minus sign or middle dot parses
_ALIASES = {"−": "-", "·": "*"}


def _tokenize(text: str) -> list[tuple[str, int | None, int]]:
    tokens: list[tuple[str, int | None, int]] = []
    i, n = 0, len(text)
    while i < n:
        ch = _ALIASES.get(text[i], text[i])
        if ch.isspace():
            i += 1
            continue
        if "0" <= ch <= "9":
            j = i
            while j < n and "0" <= text[j] <= "9":
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
            continue
        if ch == "X":
            tokens.append(("X", None, i))
            i += 1
            continue
        if ch in "+-*/^()":
            tokens.append((ch, None, i))
            i += 1
            continue
        if ch == "x":
            _syntax_error("the variable is written as a capital X", i)
        _syntax_error(f"unexpected character {text[i]!r}", i)
    tokens.append(("end", None, n))
    return tokens


_X = ratfunc_from_ints([0, 1])
_ZERO = ratfunc_from_ints([0])
_ONE = ratfunc_from_ints([1])


def _ratfunc_pow(f: RatFunc, k: int) -> RatFunc:
    out, base = _ONE, f
    while k:
        if k & 1:
            out = ratfunc_mul(out, base)
        k >>= 1
        if k:
            base = ratfunc_mul(base, base)
    return out


class _Parser:
    def __init__(self, tokens: list[tuple[str, int | None, int]]):
        self.tokens = tokens
        self.i = 0

    def peek(self) -> tuple[str, int | None, int]:
        return self.tokens[self.i]

    def take(self) -> tuple[str, int | None, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expr(self) -> RatFunc:
        f = self.term()
        while self.peek()[0] in ("+", "-"):
            op, _, _ = self.take()
            g = self.term()
            f = ratfunc_add(f, g) if op == "+" else ratfunc_sub(f, g)
        return f

    def term(self) -> RatFunc:
        f = self.unary()
        while self.peek()[0] in ("*", "/"):
            op, _, pos = self.take()
            g = self.unary()
            if op == "*":
                f = ratfunc_mul(f, g)
            else:
                if g.num.is_zero():
                    raise ExprError(
                        f"division by zero polynomial at offset {pos}", pos
                    )
                f = ratfunc_div(f, g)
        return f

    def unary(self) -> RatFunc:
        if self.peek()[0] == "-":
            self.take()
            return ratfunc_sub(_ZERO, self.unary())
        return self.power()

    def power(self) -> RatFunc:
        f = self.atom()
        if self.peek()[0] == "^":
            self.take()
            kind, value, pos = self.peek()
            if kind != "int":
                _syntax_error("expected a nonnegative integer exponent", pos)
            self.take()
            f = _ratfunc_pow(f, value)
        return f

    def atom(self) -> RatFunc:
        kind, value, pos = self.take()
        if kind == "int":
            return ratfunc_from_ints([value])
        if kind == "X":
            return _X
        if kind == "(":
            f = self.expr()
            kind2, _, pos2 = self.take()
            if kind2 != ")":
                _syntax_error("expected ')'", pos2)
            return f
        if kind == "end":
            _syntax_error("unexpected end of input", pos)
        _syntax_error(f"unexpected {kind!r}", pos)


def parse_ratfunc(text: str) -> RatFunc:
    """Parse an expression in X into a reduced rational function over Q."""
    parser = _Parser(_tokenize(text))
    f = parser.expr()
    kind, _, pos = parser.peek()
    if kind != "end":
        _syntax_error(f"unexpected {kind!r}", pos)
    return f


def _coeff_str(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def format_poly(p: Poly) -> str:
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = _coeff_str(mag)
        else:
            power = "X" if k == 1 else f"X^{k}"
            body = power if mag == 1 else f"{_coeff_str(mag)}*{power}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(parts)


def format_ratfunc(f: RatFunc) -> str:
    """Reparseable text form; round-trips through parse_ratfunc exactly."""
    if f.den.degree == 0:
        # den is monic, so a degree-0 denominator is literally 1
        return format_poly(f.num)
    return f"({format_poly(f.num)})/({format_poly(f.den)})"


# ---------------------------------------------------------------------------
# argument plumbing


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _fraction_arg(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(
            f"invalid rational number {text!r}"
        ) from exc


def _functions_from(args) -> tuple[list[RatFunc], list[str], CatalogEntry | None]:
    if args.catalog and args.exprs:
        raise UsageError(
            "functions are given positionally or via --catalog, not both"
        )
    if args.catalog:
        try:
            ent = entry(args.catalog)
        except KeyError as exc:
            raise UsageError(str(exc.args[0]) if exc.args else "bad entry") from exc
        if not ent.functions:
            raise UsageError(
                f"catalog entry {ent.name!r} carries no function set; "
                "use the group subcommand"
            )
        return list(ent.functions), [format_ratfunc(f) for f in ent.functions], ent
    if not args.exprs:
        raise UsageError("no functions given (expressions or --catalog NAME)")
    return [parse_ratfunc(s) for s in args.exprs], list(args.exprs), None


def _prime_bound(args, fallback: int) -> int:
    bound = args.prime_bound if args.prime_bound is not None else fallback
    if bound < 2:
        raise UsageError("prime bound must be at least 2")
    return bound


def _sample_values(args, fs, count_fallback: int):
    """Explicit --t0 list if given, else seeded default samples."""
    if args.t0:
        return list(args.t0), "explicit"
    count = args.t0_samples if args.t0_samples is not None else count_fallback
    if count < 1:
        raise UsageError("need at least one t0 sample")
    return default_t0_samples(fs, count=count, seed=args.seed), "generated"


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if x is INF:
        return "inf"
    return x


def _text_lines(x, prefix: str = "") -> list[str]:
    lines: list[str] = []
    if isinstance(x, dict):
        for key, value in x.items():
            if isinstance(value, (dict, list)) and value:
                lines.append(f"{prefix}{key}:")
                lines.extend(_text_lines(value, prefix + "  "))
            else:
                lines.append(f"{prefix}{key}: {value}")
    elif isinstance(x, list):
        for value in x:
            if isinstance(value, (dict, list)) and value:
                lines.append(f"{prefix}-")
                lines.extend(_text_lines(value, prefix + "  "))
            else:
                lines.append(f"{prefix}- {value}")
    else:
        lines.append(f"{prefix}{x}")
    return lines


def exit_code_from_report(report: dict) -> int:
    """0 pass, 1 fail, 2 inconclusive; raises on a malformed report."""
    codes = {"pass": 0, "fail": 1, "inconclusive": 2}
    verdict = report.get("verdict")
    if verdict not in codes:
        raise ValueError(f"report lacks a recognized verdict: {verdict!r}")
    return codes[verdict]


# ---------------------------------------------------------------------------
# subcommands


def cmd_check(args) -> dict:
    fs, desc, ent = _functions_from(args)
    bound = _prime_bound(args, ent.scan_bound if ent else 1000)
    samples, source = _sample_values(
        args, fs, ent.scan_samples if ent else 25
    )
    agg = check_locally_representing(fs, samples, bound)
    config = {
        "command": "check",
        "catalog": ent.name if ent else None,
        "prime_bound": bound,
        "t0_source": source,
        "t0_count": len(samples),
        "seed": args.seed,
    }
    return assemble_report(desc, config, scans=agg)


def cmd_minimal(args) -> dict:
    fs, desc, ent = _functions_from(args)
    if len(fs) < 2:
        raise UsageError("minimality needs at least two functions")
    bound = _prime_bound(args, ent.drop_bound if ent else 2000)
    count = (
        args.t0_samples
        if args.t0_samples is not None
        else (ent.drop_samples if ent else 40)
    )
    if count < 1:
        raise UsageError("need at least one t0 sample")
    explicit = list(args.t0) if args.t0 else None
    mr = check_minimality(
        fs, t0_samples=explicit, B=bound, sample_count=count, seed=args.seed
    )
    config = {
        "command": "minimal",
        "catalog": ent.name if ent else None,
        "prime_bound": bound,
        "t0_source": "explicit" if explicit else "generated",
        "t0_count": len(explicit) if explicit else count,
        "seed": args.seed,
    }
    report = assemble_report(desc, config, minimality=mr)
    report["verdict"] = "pass" if mr.verdict == "minimal" else "inconclusive"
    return report


def cmd_padic(args) -> dict:
    fs, desc, _ = _functions_from(args)
    if not is_prime(args.p):
        raise UsageError(f"--p must be prime, got {args.p}")
    per = []
    hit = False
    for f, text in zip(fs, desc):
        ok = is_kp_value(f, args.t0, args.p)
        hit = hit or ok
        per.append({"function": text, "represents": ok})
    return {
        "set": desc,
        "config": {"command": "padic", "t0": str(args.t0), "p": args.p},
        "per_function": per,
        "verdict": "pass" if hit else "fail",
    }


def cmd_branch(args) -> dict:
    fs, desc, ent = _functions_from(args)
    per = []
    deficits = []
    for f, text in zip(fs, desc):
        if f.degree < 2:
            per.append(
                {
                    "function": text,
                    "degree": f.degree,
                    "branch_polynomial": "1",
                    "rational_branch_points": [],
                    "algebraic_branch_factors": [],
                    "infinity_partition": [1] * max(f.degree, 1),
                    "rh_deficit": 0,
                }
            )
            deficits.append(0)
            continue
        bd = critical_values(f)
        rational = []
        generic_parts = []
        for key, part in bd.partitions:
            if isinstance(key, Fraction):
                rational.append(
                    {"t0": str(key), "partition": list(part) if part else None}
                )
            elif key == GENERIC_ALGEBRAIC:
                generic_parts.append(list(part) if part else None)
        algebraic = [
            {"factor": format_poly(q), "partition": part}
            for q, part in zip(bd.algebraic_factors, generic_parts)
        ]
        deficit = bd.rh_deficit_from_disc()
        deficits.append(deficit)
        per.append(
            {
                "function": text,
                "degree": bd.degree,
                "branch_polynomial": format_poly(bd.finite_branch_polynomial),
                "rational_branch_points": rational,
                "algebraic_branch_factors": algebraic,
                "infinity_partition": list(bd.infinity_partition),
                "infinity_is_branch": bd.infinity_is_branch,
                "rh_deficit": deficit,
            }
        )
    return {
        "set": desc,
        "config": {
            "command": "branch",
            "catalog": ent.name if ent else None,
        },
        "per_function": per,
        "verdict": "pass" if all(d == 0 for d in deficits) else "fail",
    }


def _perm_from_json(item, degree: int | None) -> tuple[int, ...]:
    if not isinstance(item, list) or not all(isinstance(v, int) for v in item):
        raise UsageError("permutations must be JSON arrays of integers")
    if degree is not None and len(item) != degree:
        raise UsageError(
            f"permutation degree {len(item)} does not match {degree}"
        )
    if sorted(item) != list(range(len(item))):
        raise UsageError(f"not a permutation of 0..{len(item) - 1}: {item}")
    return tuple(item)


def _build_group(doc, cap: int | None) -> GroupSpec:
    if not isinstance(doc, dict) or "build" not in doc:
        raise UsageError('group spec must be a JSON object with a "build" key')
    build = doc["build"]
    try:
        if build in ("symmetric", "alternating", "cyclic", "dihedral"):
            degree = int(doc["degree"])
            maker = {
                "symmetric": symmetric_group,
                "alternating": alternating_group,
                "cyclic": cyclic_group,
                "dihedral": dihedral_group,
            }[build]
            return maker(degree)
        if build in ("agl1", "agl1_fp2", "agammal1"):
            p = int(doc["p"])
            maker = {
                "agl1": agl1,
                "agl1_fp2": agl1_fp2,
                "agammal1": agammal1,
            }[build]
            return maker(p)
        if build == "m11":
            return m11_group(cap)
        if build == "generators":
            perms = [_perm_from_json(item, None) for item in doc["perms"]]
            if not perms:
                raise UsageError("generators build needs at least one perm")
            if len({len(g) for g in perms}) != 1:
                raise UsageError("generator degrees differ")
            return generate(perms, cap)
        if build == "wreath":
            base = _build_group(doc["base"], cap)
            return wreath_product(
                base, int(doc["copies"]), doc.get("mode", "imprimitive"), cap
            )
    except KeyError as exc:
        raise UsageError(f"group spec is missing key {exc.args[0]!r}") from exc
    except (TypeError, ValueError) as exc:
        raise UsageError(f"bad group spec: {exc}") from exc
    raise UsageError(f"unknown build {build!r}")


def cmd_group(args) -> dict:
    if args.catalog and args.spec:
        raise UsageError("give a JSON spec or --catalog, not both")
    if args.catalog:
        try:
            ent = entry(args.catalog)
        except KeyError as exc:
            raise UsageError(str(exc.args[0]) if exc.args else "bad entry") from exc
        config = {"command": "group", "catalog": ent.name}
        model = ent.model() if ent.model is not None else None
        if model is None:
            return {
                "config": config,
                "reason": "no group model available for this entry",
                "verdict": "inconclusive",
            }
        cert = certify_with_group(model).to_json()
        covered = cert["covered"]
        minimal = cert.get("minimal")
        ok = covered and (ent.minimal is not True or minimal is True)
        return {
            "config": config,
            "group_order": model.group.order,
            "source_order": model.source.order,
            "degree": model.degree,
            "blocks": [list(b) for b in model.blocks],
            "expected_minimal": ent.minimal,
            "certificate": cert,
            "verdict": "pass" if ok else "fail",
        }
    if not args.spec:
        raise UsageError("group needs a JSON spec or --catalog NAME")
    text = args.spec
    if os.path.exists(text):
        with open(text, encoding="utf-8") as fh:
            text = fh.read()
    try:
        doc = json.loads(text)
    except ValueError as exc:
        raise UsageError(f"invalid JSON group spec: {exc}") from exc
    try:
        G = _build_group(doc, args.cap)
        report = {
            "config": {"command": "group", "build": doc.get("build")},
            "order": G.order,
            "degree": G.degree,
            "transitive": is_transitive(G),
            "generators": [list(g) for g in G.generators],
            "verdict": "pass",
        }
        subs = doc.get("subgroups")
        if subs:
            built = []
            for gens in subs:
                perms = [_perm_from_json(item, G.degree) for item in gens]
                built.append(generate(perms, args.cap))
            cover = normal_covering_check(G, built)
            report["covering"] = cover.to_json()
            report["verdict"] = "pass" if cover.covered else "fail"
        return report
    except CapExceeded as exc:
        return {
            "config": {"command": "group", "build": doc.get("build")},
            "reason": str(exc),
            "verdict": "inconclusive",
        }


def cmd_monodromy(args) -> dict:
    fs, desc, ent = _functions_from(args)
    bound = _prime_bound(args, 250)
    samples, source = _sample_values(args, fs, 8)
    primes = list(primes_up_to(bound))
    observations = [sample_cycle_types(fs, t0, primes) for t0 in samples]
    observed = sorted(
        {tup for obs in observations for tup in obs.good_tuples()}
    )
    good_rows = sum(len(obs.good_tuples()) for obs in observations)
    report = {
        "set": desc,
        "config": {
            "command": "monodromy",
            "catalog": ent.name if ent else None,
            "prime_bound": bound,
            "t0_source": source,
            "t0_count": len(samples),
            "seed": args.seed,
        },
        "good_rows": good_rows,
        "observed_tuples": [[list(part) for part in tup] for tup in observed],
    }
    model = ent.model() if ent is not None and ent.model is not None else None
    if model is not None:
        cons = group_consistency(observations, model)
        report["model"] = {
            "group_order": model.group.order,
            "subset_ok": cons["subset_ok"],
            "coverage": str(cons["coverage"]),
            "missing_count": len(cons["missing"]),
            "extra": [[list(p) for p in tup] for tup in cons["extra"]],
        }
        report["verdict"] = "pass" if cons["subset_ok"] else "fail"
    else:
        report["verdict"] = "pass" if good_rows else "inconclusive"
    return report


def cmd_catalog(args) -> dict:
    if not args.name:
        return {
            "config": {"command": "catalog"},
            "entries": entry_names(),
            "verdict": "pass",
        }
    try:
        ent = entry(args.name)
    except KeyError as exc:
        raise UsageError(str(exc.args[0]) if exc.args else "bad entry") from exc
    return {
        "config": {"command": "catalog"},
        "name": ent.name,
        "parameters": [str(p) for p in ent.params],
        "degrees": list(ent.degrees),
        "functions": [format_ratfunc(f) for f in ent.functions],
        "expected_minimal": ent.minimal,
        "checks": list(ent.checks),
        "scan": {"prime_bound": ent.scan_bound, "samples": ent.scan_samples},
        "drop": {"prime_bound": ent.drop_bound, "samples": ent.drop_samples},
        "has_model": ent.model is not None,
        "note": ent.note,
        "verdict": "pass",
    }


# ---------------------------------------------------------------------------
# parser wiring


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="locrep",
        description="verify that sets of rational functions represent "
        "every rational number over almost all completions",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    output = argparse.ArgumentParser(add_help=False)
    output.add_argument(
        "--format", choices=("text", "json"), default="text",
        help="report rendering (default text)",
    )
    output.add_argument(
        "--out", metavar="PATH", help="write the report to PATH instead of stdout"
    )

    fnset = argparse.ArgumentParser(add_help=False)
    fnset.add_argument(
        "exprs", nargs="*", metavar="EXPR",
        help="rational function expressions in X",
    )
    fnset.add_argument(
        "--catalog", metavar="NAME",
        help="use a named catalog entry instead of expressions",
    )

    sampling = argparse.ArgumentParser(add_help=False)
    sampling.add_argument(
        "--t0", action="append", type=_fraction_arg, metavar="Q",
        help="explicit rational sample value, repeatable",
    )
    sampling.add_argument(
        "--t0-samples", type=int, metavar="N",
        help="number of generated sample values",
    )
    sampling.add_argument(
        "--prime-bound", type=int, metavar="B", help="scan primes up to B"
    )
    sampling.add_argument(
        "--seed", type=int, default=0, help="seed for generated samples"
    )

    p = sub.add_parser(
        "check", parents=[fnset, sampling, output],
        help="scan sampled values over all primes up to the bound",
    )
    p.set_defaults(func=cmd_check)

    p = sub.add_parser(
        "minimal", parents=[fnset, sampling, output],
        help="search drop-one refutations certifying minimality",
    )
    p.set_defaults(func=cmd_minimal)

    p = sub.add_parser(
        "padic", parents=[fnset, output],
        help="decide exactly whether some member represents t0 over Q_p",
    )
    p.add_argument(
        "--t0", type=_fraction_arg, required=True, metavar="Q",
        help="rational value to represent",
    )
    p.add_argument("--p", type=int, required=True, help="the prime p")
    p.set_defaults(func=cmd_padic)

    p = sub.add_parser(
        "branch", parents=[fnset, output],
        help="branch points, fiber partitions, genus-0 bookkeeping",
    )
    p.set_defaults(func=cmd_branch)

    p = sub.add_parser(
        "group", parents=[output],
        help="covering certificate for a catalog model or a JSON-built group",
    )
    p.add_argument(
        "spec", nargs="?", metavar="JSON",
        help="group build spec, inline JSON or a file path",
    )
    p.add_argument("--catalog", metavar="NAME", help="certify a catalog model")
    p.add_argument(
        "--cap", type=int, help="element enumeration cap for group builds"
    )
    p.set_defaults(func=cmd_group)

    p = sub.add_parser(
        "monodromy", parents=[fnset, sampling, output],
        help="observed Frobenius cycle types, tested against a group model",
    )
    p.set_defaults(func=cmd_monodromy)

    p = sub.add_parser(
        "catalog", parents=[output],
        help="list catalog entries or show one entry in detail",
    )
    p.add_argument(
        "name", nargs="?", metavar="NAME",
        help='entry name, parameters in call syntax like "many-redei(3,2)"',
    )
    p.set_defaults(func=cmd_catalog)

    return parser


def _emit(report: dict, fmt: str, out: str | None) -> None:
    clean = _jsonable(report)
    if fmt == "json":
        text = json.dumps(clean, indent=2) + "\n"
    else:
        text = "\n".join(_text_lines(clean)) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        report = args.func(args)
    except (UsageError, ExprError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    _emit(report, args.format, args.out)
    return exit_code_from_report(report)


if __name__ == "__main__":
    sys.exit(main())
