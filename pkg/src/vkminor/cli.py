"""Command-line front end.

Exit codes: 0 vanishing / found / success, 3 nonvanishing (or a negative
verdict such as "not strongly edge decomposable"), 4 search budget
exhausted, 5 minor proven absent, 1 input error.
"""

from __future__ import annotations

import argparse
import logging
import os
import random
import sys
from pathlib import Path

from . import io
from .canonical import MAX_VERTICES, find_isomorphism
from .complex import SimplicialComplex
from .deleted_join import smith_class
from .deleted_product import vk_vanishes
from .generators import GENERATORS, generate, hd, random_stellar_sphere
from .minors import (ContractionStep, InadmissibleContraction, admissible_via_link_eq,
                     contract, find_minor, is_admissible, link_condition, verify_certificate)
from .spheres import h_identity_check, strongly_edge_decomposable

log = logging.getLogger("vkminor")

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NONVANISHING = 3
EXIT_BUDGET = 4
EXIT_ABSENT = 5


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def worker_cap() -> int:
    """Worker count allowed by ``VKMINOR_THREADS``; the computations run on one worker."""
    raw = os.environ.get("VKMINOR_THREADS")
    if raw is None:
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise InputError(f"VKMINOR_THREADS must be a positive integer, got {raw!r}")
    if n < 1:
        raise InputError(f"VKMINOR_THREADS must be a positive integer, got {raw!r}")
    return min(n, 1)


def _load(path):
    try:
        return io.read_complex(path)
    except io.FormatError as exc:
        raise InputError(str(exc))


def _vertex(arg: str, labels):
    if labels is None:
        try:
            return int(arg)
        except ValueError:
            raise InputError(f"vertex {arg!r} is not an integer label")
    for i, lab in enumerate(labels):
        if str(lab) == arg:
            return i
    raise InputError(f"unknown vertex {arg!r}")


def _order(arg, K: SimplicialComplex, labels):
    if arg is None:
        return None
    order = [_vertex(x.strip(), labels) for x in arg.split(",") if x.strip()]
    if sorted(order) != sorted(K.vertices) or len(set(order)) != len(order):
        raise InputError("--order must list every vertex exactly once")
    return order


def _emit(report: dict, out) -> None:
    text = io.dumps(report)
    if out:
        Path(out).write_text(text)
    sys.stdout.write(text)


def _name(args) -> str:
    return str(args.complex)


def cmd_smith(args) -> int:
    K, labels = _load(args.complex)
    if K.is_void():
        raise InputError("the complex is void")
    if args.m is None or args.m < 0:
        raise InputError("--m must be >= 0")
    rep = smith_class(K, args.m)
    _emit(rep.to_json(_name(args)), args.out)
    return EXIT_OK if rep.vanishes else EXIT_NONVANISHING


def cmd_vk(args) -> int:
    K, labels = _load(args.complex)
    if len(K.vertices) < 2:
        raise InputError("the deleted product needs at least two vertices")
    if args.m is None or args.m < 1:
        raise InputError("--m must be >= 1")
    order = _order(args.order, K, labels)
    rep = vk_vanishes(K, args.m, order)
    _emit(rep.to_json(_name(args)), args.out)
    return EXIT_OK if rep.vanishes else EXIT_NONVANISHING


def _hd_index(H: SimplicialComplex) -> int | None:
    """``d`` when ``H`` is isomorphic to ``H(d)``."""
    n = len(H.vertices)
    if n % 2 == 0 or n < 3 or n > MAX_VERTICES:
        return None
    d = (n - 1) // 2
    return d if find_isomorphism(H, hd(d)) is not None else None


def cmd_find_minor(args) -> int:
    K, _ = _load(args.complex)
    if not args.target:
        raise InputError("--target is required")
    H, _ = _load(args.target)
    if args.budget <= 0:
        raise InputError("--budget must be positive")
    try:
        res = find_minor(K, H, budget=args.budget)
    except ValueError as exc:
        raise InputError(str(exc))
    report = {"complex": str(args.complex), "target": str(args.target),
              "status": res.status, "nodes": res.nodes}
    if res.status == "found":
        cert = res.certificate
        check = verify_certificate(K, H, cert)
        report["certificate"] = cert.to_json()
        report["certificate_verified"] = check.ok
        report["degenerate"] = res.degenerate
        d = _hd_index(H)
        if d is not None and d >= 1:
            report["note"] = (f"the target is H({d}); the complex does not embed in the "
                              f"{2 * (d - 1)}-sphere")
        if args.out:
            io.write_certificate(args.out, cert)
        _emit(report, None)
        return EXIT_OK
    if res.status == "budget":
        report["note"] = "not found within budget"
        _emit(report, None)
        return EXIT_BUDGET
    report["note"] = "proven absent"
    _emit(report, None)
    return EXIT_ABSENT


def cmd_verify(args) -> int:
    K, _ = _load(args.complex)
    if not args.target or not args.certificate:
        raise InputError("--target and --certificate are required")
    H, _ = _load(args.target)
    try:
        cert = io.read_certificate(args.certificate)
    except io.FormatError as exc:
        raise InputError(str(exc))
    check = verify_certificate(K, H, cert)
    _emit({"ok": check.ok, "failed_at": check.failed_at, "reason": check.reason}, args.out)
    return EXIT_OK if check.ok else EXIT_NONVANISHING


def cmd_edge(args) -> int:
    K, labels = _load(args.complex)
    if args.u is None or args.v is None:
        raise InputError("--u and --v are required")
    u, v = _vertex(args.u, labels), _vertex(args.v, labels)
    if u == v or (u,) not in K.face_set or (v,) not in K.face_set:
        raise InputError(f"{args.u} and {args.v} must be two distinct vertices")
    admissible = is_admissible(K, u, v)
    report = {
        "complex": _name(args),
        "u": args.u,
        "v": args.v,
        "admissible": admissible,
        "admissible_link_formulation": admissible_via_link_eq(K, u, v),
        "is_edge": tuple(sorted((u, v))) in K.face_set,
        "link_condition": None,
        "h_identity": None,
        "contracted": None,
    }
    if report["is_edge"]:
        lc = link_condition(K, u, v)
        report["link_condition"] = lc
        if lc:
            report["h_identity"] = h_identity_check(K, u, v)
    if admissible or args.force:
        Kc = contract(K, ContractionStep(deleted=u, kept=v), force=args.force)
        report["contracted"] = io.complex_to_json(Kc, labels)
        if args.out:
            io.write_complex(args.out, Kc, labels)
    _emit(report, None)
    return EXIT_OK


def cmd_gen(args) -> int:
    name = args.name
    if name == "stellar_sphere":
        if args.d is None or args.n is None:
            raise InputError("stellar_sphere needs --d and --n (number of subdivisions)")
        K = random_stellar_sphere(args.d, args.n, random.Random(args.seed))
    else:
        if name not in GENERATORS:
            raise InputError(f"unknown generator {name!r}")
        params = {"d": args.d, "n": args.n, "a": args.a, "b": args.b}
        try:
            K = generate(name, **params)
        except ValueError as exc:
            raise InputError(str(exc))
    data = io.complex_to_json(K)
    if args.out:
        io.write_complex(args.out, K)
    sys.stdout.write(io.dumps(data))
    return EXIT_OK


def cmd_sed(args) -> int:
    K, _ = _load(args.complex)
    try:
        res = strongly_edge_decomposable(K, budget=args.budget)
    except ValueError as exc:
        raise InputError(str(exc))
    _emit({"complex": _name(args), "status": res.status, "calls": res.calls,
           "tree": res.tree}, args.out)
    if res.status == "sed":
        return EXIT_OK
    return EXIT_BUDGET if res.status == "budget" else EXIT_NONVANISHING


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="vkminor", description="Higher minors and embeddability obstructions.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, m=False):
        sp.add_argument("--complex", required=True, help="facet-list JSON file")
        sp.add_argument("--out", help="also write the result here")
        if m:
            sp.add_argument("--m", type=int, required=True)

    sp = sub.add_parser("smith", help="Smith class of the deleted join")
    common(sp, m=True)
    sp.set_defaults(func=cmd_smith)

    sp = sub.add_parser("vk", help="Van Kampen obstruction of the deleted product")
    common(sp, m=True)
    sp.add_argument("--order", help="comma-separated vertex order")
    sp.set_defaults(func=cmd_vk)

    sp = sub.add_parser("find-minor", help="search for a minor certificate")
    common(sp)
    sp.add_argument("--target", required=True)
    sp.add_argument("--budget", type=int, default=100_000)
    sp.set_defaults(func=cmd_find_minor)

    sp = sub.add_parser("verify", help="replay a minor certificate")
    common(sp)
    sp.add_argument("--target", required=True)
    sp.add_argument("--certificate", required=True)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("edge", help="contraction checks for a vertex pair")
    common(sp)
    sp.add_argument("--u", required=True, help="vertex to delete")
    sp.add_argument("--v", required=True, help="vertex to keep")
    sp.add_argument("--force", action="store_true", help="identify even if inadmissible")
    sp.set_defaults(func=cmd_edge)

    sp = sub.add_parser("gen", help="write a named complex")
    sp.add_argument("--name", required=True,
                    help="one of " + ", ".join(sorted(GENERATORS) + ["stellar_sphere"]))
    for flag in ("--d", "--n", "--a", "--b"):
        sp.add_argument(flag, type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("sed", help="strong edge decomposability")
    common(sp)
    sp.add_argument("--budget", type=int, default=20_000)
    sp.set_defaults(func=cmd_sed)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        log.debug("worker cap %d", worker_cap())
        return args.func(args)
    except (InputError, InadmissibleContraction) as exc:
        print(f"vkminor: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
