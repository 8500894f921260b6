"""Command-line driver: ``catlab ring <SPEC> [--p P --q Q] <command> ...``."""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import galois as gal
from . import suites as S
from .qu import PairPQ, build_qu_f
from .ring import (CapExceeded, FiniteRing, admissible_pairs, make_poly_quotient, make_product,
                   make_zmod)

DEFAULT_MAX_SIZE = 64
MAX_RING_SIZE = 4096


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


_TERM = re.compile(r"([+-])?(\d+)?(\*?x(?:\^(\d+))?)?")


def parse_poly(text: str, offset: int = 0) -> list[int]:
    """Integer coefficients, lowest degree first, of a polynomial like ``x^2+3x-1``."""
    s = text.replace(" ", "")
    if not s:
        raise ParseError("empty polynomial", offset)
    coeffs: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise ParseError(f"bad polynomial term {s[pos:]!r}", offset + pos)
        if pos > 0 and m.group(1) is None:
            raise ParseError("missing sign between terms", offset + pos)
        sign = -1 if m.group(1) == "-" else 1
        c = int(m.group(2)) if m.group(2) is not None else 1
        if m.group(3) is None:
            deg = 0
        else:
            deg = int(m.group(4)) if m.group(4) is not None else 1
        coeffs[deg] = coeffs.get(deg, 0) + sign * c
        pos = m.end()
    d = max(coeffs)
    return [coeffs.get(i, 0) for i in range(d + 1)]


_ATOM = re.compile(r"Z/(\d+)(?:\[x\]/\(([^()]*)\))?")


def _estimate(spec: str) -> int:
    total = 1
    for m in _ATOM.finditer(spec.replace(" ", "")):
        n = int(m.group(1))
        if m.group(2):
            n **= max(len(parse_poly(m.group(2), m.start(2))) - 1, 1)
        total *= n
    return total


def parse_ring_spec(s: str, max_size: int = MAX_RING_SIZE) -> FiniteRing:
    """``Atom (" x " Atom)*`` with ``Atom = Z/n | Z/n[x]/(poly)``.

    Whitespace is ignored; error positions index the ring spec with whitespace removed.
    """
    compact = re.sub(r"\s+", "", s)
    if not compact:
        raise ParseError("empty ring spec", 0)
    est = _estimate(s)
    if est > max_size:
        raise CapExceeded(f"ring {s!r} would have {est} elements (cap {max_size})")
    atoms = []
    pos = 0
    while True:
        m = _ATOM.match(compact, pos)
        if m is None:
            raise ParseError(f"expected 'Z/n' or 'Z/n[x]/(poly)', got {compact[pos:]!r}", pos)
        n = int(m.group(1))
        if n < 1:
            raise ParseError("modulus must be positive", pos)
        R = make_zmod(n)
        if m.group(2) is not None:
            coeffs = parse_poly(m.group(2), m.start(2))
            try:
                R = make_poly_quotient(R, coeffs, name=f"Z/{n}[x]/({m.group(2)})")
            except ValueError as e:
                raise ParseError(str(e), m.start(2)) from None
        atoms.append(R)
        pos = m.end()
        if pos == len(compact):
            break
        if compact[pos] != "x":
            raise ParseError(f"expected ' x ', got {compact[pos]!r}", pos)
        pos += 1
    return atoms[0] if len(atoms) == 1 else make_product(atoms)


# running --------------------------------------------------------------------------------------

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(ValueError):
    pass


def resolve_element(R: FiniteRing, text: str) -> int:
    """An element label first, otherwise an integer pushed through Z -> R."""
    try:
        return R.element(text)
    except (KeyError, ValueError):
        pass
    try:
        return R.from_int(int(text))
    except ValueError:
        raise UsageError(f"{text!r} is neither an element label of {R.spec} nor an integer") from None


def resolve_pairs(R: FiniteRing, p: str | None, q: str | None):
    if (p is None) != (q is None):
        raise UsageError("--p and --q must be given together")
    if p is None:
        return [PairPQ(R, a, b) for a, b in admissible_pairs(R)]
    pe, qe = resolve_element(R, p), resolve_element(R, q)
    try:
        return [PairPQ(R, pe, qe)]
    except ValueError as e:
        raise UsageError(str(e)) from None


def _pair_json(P) -> tuple[str, str]:
    return P.R.label(P.p), P.R.label(P.q)


def _verify_one(args) -> dict:
    """Worker entry point: rebuild the ring from its spec so it can run in a child process."""
    spec, p, q, suites, galois_cap, timing = args
    R = _ring_for(spec)
    P = PairPQ(R, p, q)
    t0 = time.perf_counter()
    checks = S.run_suites(P, suites, galois_cap)
    groups = S.group_table(P)
    elapsed = round((time.perf_counter() - t0) * 1000) if timing else None
    pl, ql = _pair_json(P)
    return {"ring": R.spec, "p": pl, "q": ql, "groups": groups,
            "checks": [c.to_json() for c in checks], "timing_ms": elapsed}


_RING_CACHE: dict = {}


def _ring_for(spec: str) -> FiniteRing:
    R = _RING_CACHE.get(spec)
    if R is None:
        R = _RING_CACHE[spec] = parse_ring_spec(spec)
    return R


def _map(fn, items, jobs: int):
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(fn, items))
    return [fn(x) for x in items]


def _report_one(args) -> dict:
    spec, p, q, timing = args
    R = _ring_for(spec)
    P = PairPQ(R, p, q)
    t0 = time.perf_counter()
    groups = S.group_table(P)
    elapsed = round((time.perf_counter() - t0) * 1000) if timing else None
    pl, ql = _pair_json(P)
    return {"ring": R.spec, "p": pl, "q": ql, "groups": groups, "checks": [], "timing_ms": elapsed}


def _format_text(rep: dict) -> str:
    lines = [f"== {rep['ring']}  p={rep['p']}  q={rep['q']} =="]
    for name, inv in rep["groups"].items():
        lines.append(f"  {name:<14} {'x'.join(f'Z/{n}' for n in inv) if inv else '0'}")
    for c in rep["checks"]:
        status = c["status"].upper() if c["status"] != "skipped" else "SKIP"
        extra = c.get("witness") or c.get("reason") or ""
        if c.get("detail"):
            extra = f"{extra} [{c['detail']}]" if extra else f"[{c['detail']}]"
        lines.append(f"  {status:<5} {c['name']}" + (f": {extra}" if extra else ""))
    if rep.get("timing_ms") is not None:
        lines.append(f"  time {rep['timing_ms']} ms")
    return "\n".join(lines)


def _emit(reports: list[dict], as_json: bool, single: bool, out):
    if as_json:
        payload = reports[0] if single else reports
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        out.write("\n".join(_format_text(r) for r in reports) + "\n")


def _status(reports: list[dict]) -> int:
    failed = any(c["status"] == "fail" for r in reports for c in r["checks"])
    return EXIT_FAIL if failed else EXIT_PASS


def cmd_pairs(R: FiniteRing, pairs, a, out) -> int:
    if a.json:
        out.write(json.dumps({"ring": R.spec, "pairs": [list(_pair_json(P)) for P in pairs]}, indent=2) + "\n")
    else:
        for P in pairs:
            out.write(f"p={R.label(P.p)} q={R.label(P.q)}\n")
    return EXIT_PASS


def cmd_report(R: FiniteRing, pairs, a, out) -> int:
    reports = _map(_report_one, [(R.spec, P.p, P.q, a.timing) for P in pairs], a.jobs)
    _emit(reports, a.json, len(pairs) == 1, out)
    return EXIT_PASS


def cmd_verify(R: FiniteRing, pairs, a, out) -> int:
    suites = ("free", "galois", "stack") if a.suite == "all" else (a.suite,)
    reports = _map(_verify_one, [(R.spec, P.p, P.q, suites, a.galois_cap, a.timing) for P in pairs], a.jobs)
    _emit(reports, a.json, len(pairs) == 1, out)
    return _status(reports)


def cmd_classify(R: FiniteRing, pairs, a, out) -> int:
    if R.n > a.galois_cap:
        raise CapExceeded(f"classification over {R.spec} needs {R.n ** 6} candidates "
                          f"(|R| = {R.n} exceeds cap {a.galois_cap})")
    reports = []
    ok = True
    for P in pairs:
        Q = build_qu_f(P)
        cls = gal.classify_free_galois(P, cap=a.galois_cap, Q=Q)
        ok = ok and cls.ok
        by_class = {k: rep for rep, k in cls.class_of_component.items()}
        classes = []
        for k, members in enumerate(cls.classes):
            rep = gal.GaloisAlgebra(P, *min(members))
            obj = by_class.get(k)
            classes.append({"representative": rep.describe(), "presentations": len(members),
                            "component": Q.obj_label(obj) if obj is not None else None})
        pl, ql = _pair_json(P)
        reports.append({"ring": R.spec, "p": pl, "q": ql, "candidates": cls.candidates,
                        "stages": cls.stage_counts, "classes": classes,
                        "normal_form": not cls.normal_form_violations,
                        "matches_pi0": cls.bijective and cls.consistent})
    if a.json:
        out.write(json.dumps(reports[0] if len(reports) == 1 else reports, indent=2) + "\n")
    else:
        for r in reports:
            out.write(f"== {r['ring']}  p={r['p']}  q={r['q']} ==\n")
            out.write(f"  {r['candidates']} candidates; survivors per stage {r['stages']}\n")
            for c in r["classes"]:
                out.write(f"  [{c['component']}] {c['representative']} ({c['presentations']} presentations)\n")
            out.write(f"  normal form: {r['normal_form']}; matches pi0(Qu_f): {r['matches_pi0']}\n")
    return EXIT_PASS if ok else EXIT_FAIL


COMMANDS = {"pairs": cmd_pairs, "report": cmd_report, "verify": cmd_verify, "classify-galois": cmd_classify}


def _command_options(sp: argparse.ArgumentParser):
    sp.add_argument("--suite", choices=["free", "galois", "stack", "all"], default="all")
    sp.add_argument("--json", action="store_true", help="machine-readable output")
    sp.add_argument("--max-size", type=int, default=DEFAULT_MAX_SIZE,
                    help="largest ring accepted by the cat-group suites")
    sp.add_argument("--galois-cap", type=int, default=8,
                    help="largest ring for classification and cotensor checks")
    sp.add_argument("--jobs", type=int, default=1, help="worker processes across (p, q) pairs")
    sp.add_argument("--timing", action="store_true", help="fill in timing_ms (breaks byte-identical output)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="catlab", description=__doc__)
    top = parser.add_subparsers(dest="scope", required=True)
    ring = top.add_parser("ring", help="work with a single ring")
    ring.add_argument("spec", help='ring spec, e.g. "Z/4" or "Z/2[x]/(x^2+x+1)" or "Z/4 x Z/3"')
    ring.add_argument("--p")
    ring.add_argument("--q")
    cmds = ring.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        _command_options(cmds.add_parser(name))
    corpus = top.add_parser("corpus", help="run a command over every ring of the fixed corpus")
    ccmds = corpus.add_subparsers(dest="command", required=True)
    for name in ("pairs", "report", "verify"):
        _command_options(ccmds.add_parser(name))
    return parser


def run(argv: list[str], out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_PASS
    try:
        if a.scope == "corpus":
            return _run_corpus(a, out)
        R = parse_ring_spec(a.spec, max_size=max(a.max_size, MAX_RING_SIZE) if a.command == "pairs"
                            else a.max_size)
        pairs = resolve_pairs(R, a.p, a.q)
        return COMMANDS[a.command](R, pairs, a, out)
    except (ParseError, UsageError) as e:
        print(f"catlab: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as e:
        print(f"catlab: size cap exceeded: {e}", file=sys.stderr)
        return EXIT_CAP


def _run_corpus(a, out) -> int:
    from .corpus import CORPUS_SPECS  # the corpus module parses specs through this one

    reports = []
    code = EXIT_PASS
    for spec in CORPUS_SPECS:
        R = parse_ring_spec(spec, max_size=a.max_size)
        pairs = resolve_pairs(R, None, None)
        if a.command == "pairs":
            reports.append({"ring": R.spec, "pairs": [list(_pair_json(P)) for P in pairs]})
            continue
        if a.command == "report":
            items = [(R.spec, P.p, P.q, a.timing) for P in pairs]
            reports += _map(_report_one, items, a.jobs)
        else:
            suites = ("free", "galois", "stack") if a.suite == "all" else (a.suite,)
            items = [(R.spec, P.p, P.q, suites, a.galois_cap, a.timing) for P in pairs]
            reports += _map(_verify_one, items, a.jobs)
    if a.json:
        out.write(json.dumps(reports, indent=2) + "\n")
    elif a.command == "pairs":
        for r in reports:
            out.write(f"{r['ring']}: " + ", ".join(f"({p},{q})" for p, q in r["pairs"]) + "\n")
    else:
        out.write("\n".join(_format_text(r) for r in reports) + "\n")
    if a.command == "verify":
        code = _status(reports)
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
