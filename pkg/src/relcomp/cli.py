"""Command line surface.

Five subcommands:

* ``froberg``    -- Hilbert series of an ideal of general forms;
* ``predict``    -- closed-form resolution shapes (no linear algebra);
* ``resolve``    -- run the exact engine on a recipe and print the
  Hilbert function, Betti diagram, socle, and ghost classification;
* ``reproduce``  -- re-run the pinned worked cases and diff the results;
* ``search``     -- sweep a bounded parameter grid and evaluate an open
  predicate on every instance, reporting discoveries rather than failing.

Recipes are composable prefix expressions, mirroring the way the
interesting algebras are built: ``link(ci(4,4,4,11),
general-forms(4,4,4,4,11))`` links an ideal of general forms by a general
complete intersection chosen inside it.  ``ann(perp-pick(4, 5, ci(2)))``
picks four random degree-5 forms apolar to a general quadric and takes
the annihilator of their span.
"""

import argparse
import csv
import json
import os
import re
import sys

from . import cases as case_mod
from .betti import (
    aci_resolution,
    ghost_classify,
    mrc_resolution,
    quadric_points_resolution,
    rc_gor_even,
    rc_gor_odd_quadric,
    rc_gor_odd_shape,
)
from .engine import (
    GradedIdeal,
    annihilator_ideal,
    betti_numbers,
    ci_in,
    general_forms,
    hilbert_function,
    ideal_quotient,
    minimal_generators,
    socle,
)
from .errors import RelcompError, ParamError
from .ring import FormStream, RingCtx
from .series import froberg_prediction

__all__ = ["main", "parse_recipe", "eval_recipe"]


# ---------------------------------------------------------------------------
# recipe mini-language

_TOKEN_RE = re.compile(r"\s*([A-Za-z][A-Za-z0-9-]*|\d+|[(),])")

_KNOWN = {"general-forms", "ci", "link", "ann", "perp-pick"}


class _Node:
    def __init__(self, name, args):
        self.name = name
        self.args = args

    def text(self):
        parts = []
        for a in self.args:
            parts.append(str(a) if isinstance(a, int) else a.text())
        return "%s(%s)" % (self.name, ",".join(parts))


def _tokenize(text):
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ParamError("cannot read recipe near %r" % text[pos:])
            break
        out.append(m.group(1))
        pos = m.end()
    return out


def parse_recipe(text):
    """Parse a recipe expression into a syntax tree."""
    tokens = _tokenize(text)
    pos = [0]

    def peek():
        return tokens[pos[0]] if pos[0] < len(tokens) else None

    def take(expected=None):
        tok = peek()
        if tok is None or (expected is not None and tok != expected):
            raise ParamError("unexpected end of recipe (wanted %r)" % expected)
        pos[0] += 1
        return tok

    def expr():
        name = take()
        if name not in _KNOWN:
            raise ParamError("unknown recipe function %r" % name)
        take("(")
        args = []
        if peek() != ")":
            while True:
                if peek() and peek().isdigit():
                    args.append(int(take()))
                else:
                    args.append(expr())
                if peek() == ",":
                    take(",")
                else:
                    break
        take(")")
        return _Node(name, args)

    tree = expr()
    if pos[0] != len(tokens):
        raise ParamError("trailing text in recipe: %r"
                         % " ".join(tokens[pos[0]:]))
    return tree


def _int_args(node):
    if not node.args or not all(isinstance(a, int) for a in node.args):
        raise ParamError("%s(...) takes a list of degrees" % node.name)
    return list(node.args)


def eval_recipe(node, ring, stream):
    """Evaluate a recipe tree to a GradedIdeal (or a list of dual forms
    for perp-pick nodes)."""
    if node.name in ("general-forms", "ci"):
        return general_forms(ring, _int_args(node), stream)
    if node.name == "link":
        if len(node.args) != 2 or isinstance(node.args[1], int):
            raise ParamError("link(ci(...), <recipe>) takes two arguments")
        first, second = node.args
        ideal = eval_recipe(second, ring, stream)
        if not isinstance(ideal, GradedIdeal):
            raise ParamError("the second argument of link must build an ideal")
        if isinstance(first, _Node) and first.name == "ci":
            cideal = ci_in(ideal, _int_args(first), stream)
        else:
            cideal = eval_recipe(first, ring, stream)
        return ideal_quotient(cideal, ideal)
    if node.name == "perp-pick":
        if (len(node.args) != 3 or not isinstance(node.args[0], int)
                or not isinstance(node.args[1], int)):
            raise ParamError("perp-pick(count, degree, <recipe>)")
        count, degree, sub = node.args
        ideal = eval_recipe(sub, ring, stream)
        return case_mod.perp_picks(ideal, degree, count, stream)
    if node.name == "ann":
        forms = []
        for a in node.args:
            if isinstance(a, int):
                raise ParamError("ann(...) takes perp-pick sub-recipes")
            got = eval_recipe(a, ring, stream)
            if isinstance(got, list):
                forms.extend(got)
            else:
                raise ParamError("ann(...) arguments must produce dual forms")
        return annihilator_ideal(forms)
    raise ParamError("unknown recipe function %r" % node.name)


# ---------------------------------------------------------------------------
# output plumbing


def _emit(args, payload, text_lines):
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _write_witness(path, ring, seed, recipe, ideal):
    data = {
        "n": ring.n,
        "p": ring.p,
        "seed": seed,
        "recipe": recipe,
        "generators": [g.text() for g in ideal.gens],
    }
    with open(path, "w") as fh:
        json.dump(data, fh, indent=2, sort_keys=True)


# ---------------------------------------------------------------------------
# subcommands


def cmd_froberg(args):
    series = froberg_prediction(args.degrees, args.n, args.cap)
    _emit(args, {"hf": series.trimmed()}, [series.text()])
    return 0


def cmd_predict(args):
    kind = args.kind
    if kind == "gor-even":
        shape = rc_gor_even(args.n, args.t, args.ci or ())
    elif kind == "gor-odd":
        shape = rc_gor_odd_shape(args.n, args.t, args.ci or ())
        desc = shape.describe()
        print("\n".join(desc) if isinstance(desc, list) else desc)
        return 0
    elif kind == "quadric-points":
        hf, shape = quadric_points_resolution(args.N)
        print("h-vector: %s" % hf.text())
    elif kind == "quadric-gor":
        shape = rc_gor_odd_quadric(args.t)
    elif kind == "aci":
        shape, _ = aci_resolution(args.n, args.degrees)
    elif kind == "mrc":
        shape = mrc_resolution(args.n, args.ci or (), args.t)
    else:
        raise ParamError("unknown prediction kind %r" % kind)
    table = shape.betti_table()
    _emit(args, {"shape": shape.text(), "betti": table.to_json()["betti"]},
          [shape.text(), "", table.render()])
    return 0


def cmd_resolve(args):
    ring = RingCtx(args.n, args.p)
    stream = FormStream(ring, args.seed)
    tree = parse_recipe(args.recipe)
    ideal = eval_recipe(tree, ring, stream)
    if not isinstance(ideal, GradedIdeal):
        raise ParamError("the recipe must build an ideal")
    hf = hilbert_function(ideal, args.cap) if args.cap else hilbert_function(ideal)
    if not hf.exact:
        print("quotient is not finite within the degree window <= %d;"
              " Betti numbers are not printed" % hf.cap, file=sys.stderr)
        _emit(args, {"hf": list(hf.coeffs), "exact": False}, [hf.text()])
        return 1
    table = betti_numbers(ideal)
    prof = socle(ideal)
    twist = prof.socle_degree + ring.n if prof.is_gorenstein else None
    report = ghost_classify(table, socle_twist=twist, n=ring.n)
    payload = {
        "n": ring.n,
        "p": ring.p,
        "seed": args.seed,
        "recipe": tree.text(),
        "hf": hf.trimmed(),
        "betti": table.to_json()["betti"],
        "socle": prof.degrees,
        "ghosts": [[e.i, e.j, e.cls] for e in report.entries],
    }
    lines = ["hf: %s" % hf.text(), "", table.render(), "",
             "socle: %s" % prof.text()]
    if report.entries:
        lines.append("ghost terms:")
        lines.extend("  " + ln for ln in report.lines())
    _emit(args, payload, lines)
    if args.witness:
        _write_witness(args.witness, ring, args.seed, tree.text(), ideal)
    return 0


def cmd_reproduce(args):
    ids = case_mod.case_ids() if args.all else [args.case]
    if not args.all and args.case is None:
        raise ParamError("give a case id or --all")
    failures = 0
    for cid in ids:
        result = case_mod.run_case(cid, seed=args.seed)
        if not result.passed:
            failures += 1
        if args.format == "json":
            print(json.dumps({
                "case": cid,
                "passed": result.passed,
                "checks": [[c.name, c.tag, c.ok] for c in result.checks],
            }, sort_keys=True))
        else:
            print("\n".join(result.lines() if args.verbose or not result.passed
                            else result.lines()[:1]))
    return 1 if failures else 0


# --- search families -------------------------------------------------------


def _ghost_summary(ideal, n, socle_twist=None):
    table = betti_numbers(ideal)
    report = ghost_classify(table, socle_twist=socle_twist, n=n)
    non_koszul = [e for e in report.entries if e.cls == "NON_KOSZUL"]
    return table, report, non_koszul


def _search_grid(family, max_n, max_degree, max_socle):
    """Yield (n, ci_degrees, socle_degree, type) tuples for a family."""
    if family == "remark-4.10":
        ns = [3]
    elif family == "conj-4.8":
        ns = [n for n in (3, 4) if n <= max_n]
    else:
        ns = [n for n in (3, 4) if n <= max_n]
    for n in ns:
        if family == "conj-4.8":
            degree_lists = [(d,) * n for d in range(2, max_degree + 1)]
        else:
            degree_lists = []
            for d1 in range(2, max_degree + 1):
                for d2 in range(d1, max_degree + 1):
                    for d3 in range(d2, max_degree + 1):
                        if n == 3:
                            degree_lists.append((d1, d2, d3))
                        else:
                            for d4 in range(d3, max_degree + 1):
                                degree_lists.append((d1, d2, d3, d4))
        for ci in degree_lists:
            total = sum(ci)
            for s in range(2, min(total - n - 1, max_socle) + 1):
                cmin = 2 if n == 3 else 1
                for c in range(cmin, 4):
                    yield n, ci, s, c


def _run_search_instance(family, n, ci, s, c, p, seed):
    """Build the level-by-linkage instance and evaluate the predicate.

    Returns (verdict, ideal or None).  Instances where the construction
    does not yield a level algebra of the requested socle data are
    reported as SKIPPED (the predicate does not apply to them).
    """
    ring = RingCtx(n, p)
    stream = FormStream(ring, seed)
    try:
        cideal, big, res = case_mod.level_by_linkage(ring, ci, s, c, stream)
        prof = socle(res)
        if not prof.is_level or prof.socle_degree != s or prof.cm_type != c:
            return "SKIPPED", None
        twist = s + n if prof.is_gorenstein else None
        table, report, non_koszul = _ghost_summary(res, n, twist)
    except RelcompError:
        return "SKIPPED", None
    if family == "remark-4.10":
        return ("CONFIRMED" if not non_koszul else "DISCOVERY"), res
    if family == "conj-4.8":
        return ("CONFIRMED" if not report.entries else "DISCOVERY"), res
    if family == "conj-4.7":
        if not non_koszul:
            return "VACUOUS", None
        # two-step link: back through the complete intersection, then by
        # a complete intersection of the smallest generator degrees
        back = ideal_quotient(cideal, res)
        degs = sorted(d for d, m in minimal_generators(back) for _ in range(m))
        c2 = ci_in(back, degs[:n], stream)
        final = ideal_quotient(c2, back)
        linear = sum(m for d, m in minimal_generators(final) if d == 1)
        return ("CONFIRMED" if linear >= 2 else "DISCOVERY"), final
    raise ParamError("unknown search family %r" % family)


def cmd_search(args):
    out_dir = args.out
    os.makedirs(out_dir, exist_ok=True)
    rows = []
    budget = args.limit
    complete = True
    idx = 0
    for n, ci, s, c in _search_grid(args.family, args.max_n,
                                    args.max_degree, args.max_socle):
        if budget <= 0:
            complete = False
            break
        budget -= 1
        verdict, witness = _run_search_instance(
            args.family, n, ci, s, c, args.p, args.seed)
        params = "ci=%s;s=%d;c=%d" % (",".join(map(str, ci)), s, c)
        path = ""
        if witness is not None and verdict != "CONFIRMED":
            idx += 1
            path = os.path.join(
                out_dir, "%s-%03d.json" % (args.family, idx))
            _write_witness(path, witness.ring, args.seed,
                           witness.provenance.get("recipe"), witness)
        rows.append((args.family, n, args.p, args.seed, params, verdict, path))
    columns = ["family", "n", "p", "seed", "params", "verdict", "witness_path"]
    if args.format == "json":
        print(json.dumps([dict(zip(columns, r)) for r in rows], indent=2))
    else:
        writer = csv.writer(sys.stdout)
        writer.writerow(columns)
        writer.writerows(rows)
    if not complete:
        print("INCOMPLETE: instance budget %d exhausted before the grid"
              % args.limit, file=sys.stderr)
    return 0


# ---------------------------------------------------------------------------
# argument parsing


def _degrees(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError("expected a comma list of integers")


def build_parser():
    top = argparse.ArgumentParser(
        prog="relcomp",
        description="Hilbert functions, linkage, and resolutions of"
                    " Artinian algebras squeezed in a complete intersection",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, seeded=True):
        p.add_argument("-n", type=int, default=3, help="number of variables")
        p.add_argument("-p", type=int, default=32003, help="field size")
        if seeded:
            p.add_argument("--seed", type=int, default=1)
        p.add_argument("--cap", type=int, default=None,
                       help="degree window for non-terminating data")
        p.add_argument("--format", choices=["text", "json", "csv"],
                       default="text")

    p = sub.add_parser("froberg", help="Hilbert series of general forms")
    common(p, seeded=False)
    p.add_argument("-d", "--degrees", type=_degrees, required=True)
    p.set_defaults(func=cmd_froberg)

    p = sub.add_parser("predict", help="closed-form resolution shapes")
    common(p, seeded=False)
    p.add_argument("kind", choices=["gor-even", "gor-odd", "quadric-points",
                                    "quadric-gor", "aci", "mrc"])
    p.add_argument("-d", "--degrees", type=_degrees, default=None)
    p.add_argument("-t", type=int, default=None, help="half socle degree")
    p.add_argument("-N", type=int, default=None, help="number of points")
    p.add_argument("--ci", type=_degrees, default=None,
                   help="complete intersection degrees")
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("resolve", help="run the engine on a recipe")
    common(p)
    p.add_argument("recipe")
    p.add_argument("--split", choices=["none", "generator", "min-consistent"],
                   default="min-consistent",
                   help="mapping-cone cancellation policy (informational;"
                        " the engine computes the minimal table directly)")
    p.add_argument("--witness", default=None,
                   help="write a replayable witness JSON here")
    p.set_defaults(func=cmd_resolve)

    p = sub.add_parser("reproduce", help="re-run pinned worked cases")
    common(p)
    p.add_argument("case", nargs="?", default=None)
    p.add_argument("--all", action="store_true")
    p.add_argument("--verbose", action="store_true",
                   help="print per-check lines for passing cases too")
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("search", help="sweep a grid for an open predicate")
    common(p)
    p.add_argument("family", choices=["conj-4.7", "conj-4.8", "remark-4.10"])
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--max-degree", type=int, default=8)
    p.add_argument("--max-socle", type=int, default=14)
    p.add_argument("--limit", type=int, default=50,
                   help="instance budget")
    p.add_argument("--out", default="witnesses",
                   help="directory for witness files")
    p.set_defaults(func=cmd_search)
    return top


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except RelcompError as err:
        print("error: %s" % err, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
